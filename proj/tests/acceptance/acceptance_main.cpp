// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.
//
// The CLI determinism criterion shells out to the gpd binary; set
// GPD_ACCEPT_CLI and GPD_ACCEPT_FIXTURES (ctest does) or pass them as
// argv[1] and argv[2].

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gpd/blend.hpp>
#include <gpd/constructions.hpp>
#include <gpd/io.hpp>
#include <gpd/isomorphism.hpp>
#include <gpd/slices.hpp>
#include <gpd/standard.hpp>
#include <gpd/zs_product.hpp>

#include "fixtures.hpp"

using namespace gpd;

namespace {

std::string g_cli_path;
std::string g_fixtures_dir;

struct NamedPair {
  std::string name;
  MatchedPair pair;
};

MatchedPair s3_pair() {
  Groupoid s3 = fixtures::s3();
  auto res = internal_decompose(
      s3, {s3.element("e"), s3.element("r"), s3.element("rr")},
      {s3.element("e"), s3.element("s")});
  if (!res.ok()) throw std::runtime_error("S3 decomposition failed");
  return res.decomposition->pair;
}

std::vector<NamedPair> corpus_pairs() {
  std::vector<NamedPair> out;
  out.push_back({"DIRECT", fixtures::direct()});
  out.push_back({"TRIVIAL_Z2", fixtures::trivial_z2()});
  out.push_back({"SKEWMP", fixtures::skewmp()});
  out.push_back({"S3MP", s3_pair()});
  out.push_back({"PAIR2SKEWMP", skew_matched_pair(fixtures::pair2_skew_cocycle())});
  return out;
}

std::vector<std::pair<std::string, Groupoid>> corpus_groupoids() {
  std::vector<std::pair<std::string, Groupoid>> out;
  out.emplace_back("Z2", fixtures::z2());
  out.emplace_back("Z3", fixtures::z3());
  out.emplace_back("Z4", fixtures::z4());
  out.emplace_back("Z6", fixtures::z6());
  out.emplace_back("PAIR2", fixtures::pair2());
  out.emplace_back("S3", fixtures::s3());
  out.emplace_back("TRIVIAL", fixtures::trivial());
  for (int seed = 1; seed <= 20; ++seed) {
    out.emplace_back("RANDOM" + std::to_string(seed), random_groupoid(seed));
  }
  return out;
}

MatchedPair mutate_pair(const MatchedPair& mp, bool mutate_action, Elem h, Elem g,
                        Elem new_value) {
  const Groupoid& gv = mp.vertical();
  const Groupoid& hv = mp.horizontal();
  std::vector<std::pair<Elem, Elem>> units;
  for (Elem u = 0; u < gv.size(); ++u) {
    if (mp.to_h_unit(u) != kNoElem) units.emplace_back(u, mp.to_h_unit(u));
  }
  std::vector<std::tuple<Elem, Elem, Elem>> action, restriction;
  for (Elem hh = 0; hh < hv.size(); ++hh) {
    for (Elem gg = 0; gg < gv.size(); ++gg) {
      Elem a = mp.action(hh, gg);
      Elem r = mp.restriction(hh, gg);
      if (mutate_action && hh == h && gg == g) a = new_value;
      if (!mutate_action && hh == h && gg == g) r = new_value;
      if (a != kNoElem) action.emplace_back(hh, gg, a);
      if (r != kNoElem) restriction.emplace_back(hh, gg, r);
    }
  }
  return MatchedPair(gv, hv, std::move(units), std::move(action),
                     std::move(restriction));
}

// --------------------------------------------------------------------------
// Criterion 1: validator soundness.

bool criterion_validator(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, g] : corpus_groupoids()) {
    if (!validate(g).ok()) {
      detail = name + " failed validation";
      return false;
    }
  }

  struct Corrupted {
    std::string name;
    Groupoid g;
    GroupoidAxiom axiom;
  };
  std::vector<Corrupted> bad;
  bad.push_back({"z2_bad_inverse", fixtures::z2_bad_inverse(), GroupoidAxiom::kInvolution});
  bad.push_back({"z3_bad_assoc", fixtures::z3_bad_assoc(), GroupoidAxiom::kAssociativity});
  bad.push_back({"pair2_bad_cancel", fixtures::pair2_bad_cancel(), GroupoidAxiom::kCancellation});
  for (const auto& c : bad) {
    ValidationReport rep = validate(c.g);
    bool witnessed = false;
    for (const auto& v : rep.violations) {
      if (v.axiom != c.axiom) continue;
      // Re-check the witness against the tables.
      if (c.axiom == GroupoidAxiom::kInvolution && v.witness.size() == 1) {
        witnessed = c.g.inverse(c.g.inverse(v.witness[0])) != v.witness[0];
      } else if (c.axiom == GroupoidAxiom::kAssociativity && v.witness.size() == 3) {
        Elem x = v.witness[0], y = v.witness[1], z = v.witness[2];
        Elem lhs = c.g.compose(c.g.compose(x, y), z);
        Elem rhs = c.g.compose(x, c.g.compose(y, z));
        witnessed = lhs == kNoElem || rhs == kNoElem || lhs != rhs;
      } else if (c.axiom == GroupoidAxiom::kCancellation) {
        if (v.witness.size() == 1) {
          witnessed = !c.g.composable(v.witness[0], c.g.inverse(v.witness[0]));
        } else if (v.witness.size() == 2) {
          Elem x = v.witness[0], y = v.witness[1];
          Elem xy = c.g.compose(x, y);
          witnessed = xy == kNoElem ||
                      c.g.compose(c.g.inverse(x), xy) != y ||
                      c.g.compose(xy, c.g.inverse(y)) != x;
        }
      }
      if (witnessed) break;
    }
    if (!witnessed) {
      detail = c.name + " was not rejected with a correct witness";
      return false;
    }
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) {
    detail = "runtime " + std::to_string(secs) + " s exceeds 1 s";
    return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 2: ZS axiom suite with per-axiom mutation fixtures.

bool criterion_zs_axioms(std::string& detail) {
  std::vector<NamedPair> pairs;
  pairs.push_back({"DIRECT", fixtures::direct()});
  pairs.push_back({"SKEWMP", fixtures::skewmp()});
  pairs.push_back({"S3MP", s3_pair()});
  for (const auto& [name, mp] : pairs) {
    if (!verify_matched_pair(mp).ok()) {
      detail = name + " failed ZS verification";
      return false;
    }
    if (!check_derived_identities(mp).ok()) {
      detail = name + " failed the derived identities";
      return false;
    }
  }
  // Single-entry mutations must cover all nine axioms.
  std::set<int> detected;
  for (const auto& [name, base] : pairs) {
    const Groupoid& gv = base.vertical();
    const Groupoid& hv = base.horizontal();
    for (Elem hh = 0; hh < hv.size(); ++hh) {
      for (Elem gg = 0; gg < gv.size(); ++gg) {
        if (base.action(hh, gg) == kNoElem) continue;
        for (int which = 0; which < 2; ++which) {
          const Groupoid& target = which == 0 ? gv : hv;
          for (Elem v = 0; v < target.size(); ++v) {
            Elem old = which == 0 ? base.action(hh, gg) : base.restriction(hh, gg);
            if (old == v) continue;
            ZsVerifyReport rep =
                verify_matched_pair(mutate_pair(base, which == 0, hh, gg, v));
            for (const auto& viol : rep.violations) {
              detected.insert(static_cast<int>(viol.axiom));
            }
          }
        }
      }
    }
  }
  for (int axiom = 0; axiom < 9; ++axiom) {
    if (!detected.count(axiom)) {
      detail = std::string("no mutation fixture detected for ") +
               axiom_name(static_cast<ZsAxiom>(axiom));
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 3: the product theorem.

bool criterion_product(std::string& detail) {
  for (const auto& [name, mp] : corpus_pairs()) {
    ZsGroupoid zs = build_zs_product(mp);
    if (!validate(zs.product()).ok()) {
      detail = name + ": product failed validation";
      return false;
    }
    if (zs.product().units().size() != mp.vertical().units().size()) {
      detail = name + ": product unit count differs from the common unit set";
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 4: internal/external round trip.

bool criterion_round_trip(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, mp] : corpus_pairs()) {
    ZsGroupoid zs = build_zs_product(mp);
    std::vector<Elem> g_image, h_image;
    for (Elem x = 0; x < mp.vertical().size(); ++x) g_image.push_back(zs.embed_g(x));
    for (Elem x = 0; x < mp.horizontal().size(); ++x) h_image.push_back(zs.embed_h(x));
    auto res = internal_decompose(zs.product(), g_image, h_image);
    if (!res.ok()) {
      detail = name + ": decomposition of the product failed";
      return false;
    }
    if (!find_isomorphism(res.decomposition->product.product(), zs.product())) {
      detail = name + ": extracted pair's product is not isomorphic to the original";
      return false;
    }
  }
  if (!find_isomorphism(build_zs_product(fixtures::direct()).product(), fixtures::z6())) {
    detail = "DIRECT product is not isomorphic to Z6";
    return false;
  }
  {
    Groupoid s3 = fixtures::s3();
    ZsGroupoid zs = build_zs_product(s3_pair());
    if (!find_isomorphism(zs.product(), s3)) {
      detail = "S3 decomposition does not reconstruct S3";
      return false;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 5.0) {
    detail = "runtime " + std::to_string(secs) + " s exceeds 5 s";
    return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 5: the symmetry corollary.

bool criterion_symmetry(std::string& detail) {
  for (const auto& [name, mp] : corpus_pairs()) {
    ZsGroupoid zs = build_zs_product(mp);
    for (Elem p = 0; p < zs.product().size(); ++p) {
      ReverseFactorization rf = reverse_decomposition(zs, p);
      if (!rf.recomposes || rf.candidates != 1) {
        detail = name + ": element " + zs.product().label(p) +
                 " lacks a unique reverse factorization";
        return false;
      }
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 6: the slice lemma at tolerance.

bool criterion_slice_lemma(std::string& detail) {
  std::mt19937_64 rng(0xacce57);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  Tolerance tol{1e-9, 1e-12};
  auto groupoids = corpus_groupoids();

  auto random_slice = [&](const Groupoid& g) {
    std::vector<Elem> order(g.size());
    for (Elem x = 0; x < g.size(); ++x) order[x] = x;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> r_used(g.size(), 0), s_used(g.size(), 0);
    std::vector<Elem> slice;
    for (Elem x : order) {
      if (r_used[g.range(x)] || s_used[g.source(x)]) continue;
      slice.push_back(x);
      r_used[g.range(x)] = 1;
      s_used[g.source(x)] = 1;
      if (rng() % 3 == 0) break;
    }
    return slice;
  };

  int done = 0;
  for (int i = 0; done < 200; ++i) {
    const Groupoid& g = groupoids[i % groupoids.size()].second;
    std::vector<Elem> slice = random_slice(g);
    if (slice.empty()) continue;
    GroupoidFunction xi(g);
    for (Elem x : slice) {
      Scalar v(coeff(rng), coeff(rng));
      xi.set(x, v == Scalar{0.0} ? Scalar{1.0} : v);
    }
    SliceNormReport rep = check_slice_norms(xi, tol);
    if (!rep.slice_supported || !rep.equal_within_tol) {
      detail = groupoids[i % groupoids.size()].first +
               ": slice-supported norms disagree (sup " + std::to_string(rep.sup) +
               ", I " + std::to_string(rep.i) + ", reduced " +
               std::to_string(rep.reduced) + ")";
      return false;
    }
    GroupoidFunction square = convolve(involve(xi), xi);
    for (Elem x : square.support()) {
      if (!g.is_unit(x)) {
        detail = "xi* . xi not supported on units";
        return false;
      }
    }
    ++done;
  }

  // Non-slice supports: reduced <= I within tolerance.
  done = 0;
  for (int i = 0; done < 200; ++i) {
    const Groupoid& g = groupoids[i % groupoids.size()].second;
    // Find a conflicting pair to force a non-slice support.
    Elem a = kNoElem, b = kNoElem;
    for (Elem x = 0; x < g.size() && a == kNoElem; ++x) {
      for (Elem y = x + 1; y < g.size() && a == kNoElem; ++y) {
        if (g.range(x) == g.range(y) || g.source(x) == g.source(y)) {
          a = x;
          b = y;
        }
      }
    }
    if (a == kNoElem) continue;  // every subset of this groupoid is a slice
    GroupoidFunction xi(g);
    xi.set(a, Scalar(coeff(rng), coeff(rng)) + Scalar(3.0, 0.0));
    xi.set(b, Scalar(coeff(rng), coeff(rng)) + Scalar(3.0, 0.0));
    for (Elem x = 0; x < g.size(); ++x) {
      if (rng() % 2 == 0) xi.set(x, Scalar(coeff(rng), coeff(rng)));
    }
    if (is_slice(g, xi.support())) continue;
    double r = reduced_norm(xi), i_n = i_norm(xi);
    if (r > i_n * (1.0 + tol.rel) + tol.abs) {
      detail = "reduced norm exceeds the I-norm: " + std::to_string(r) + " vs " +
               std::to_string(i_n);
      return false;
    }
    ++done;
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 7: the main theorem at finite scale.

bool criterion_blend(std::string& detail) {
  for (const auto& [name, mp] : corpus_pairs()) {
    auto start = std::chrono::steady_clock::now();
    ZsGroupoid zs = build_zs_product(mp);
    HomReport hom = check_embeddings_are_homomorphisms(zs, 100, Tolerance{1e-9, 1e-12});
    if (!hom.ok()) {
      detail = name + ": embeddings fail to be *-homomorphisms (" +
               hom.first_failure + ")";
      return false;
    }
    DensityReport den = blend_density(zs);
    if (den.span_rank != den.target_dim) {
      detail = name + ": span rank " + std::to_string(den.span_rank) + " < " +
               std::to_string(den.target_dim);
      return false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
      detail = name + ": runtime " + std::to_string(secs) + " s exceeds 10 s";
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 8: blend equivalences.

bool criterion_equivalences(std::string& detail) {
  for (const auto& [name, mp] : corpus_pairs()) {
    EquivalenceReport rep = check_blend_equivalences(build_zs_product(mp));
    if (!rep.ok()) {
      detail = name + ": AB rank " + std::to_string(rep.ab_rank) + ", BA rank " +
               std::to_string(rep.ba_rank) + ", joint " +
               std::to_string(rep.joint_rank);
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 9: the skew product chain.

bool criterion_skew(std::string& detail) {
  if (!verify_matched_pair(fixtures::skewmp()).ok()) {
    detail = "skew_matched_pair(SKEW) fails verification";
    return false;
  }
  for (const auto& [name, c] :
       {std::pair<std::string, Cocycle>{"SKEW", fixtures::skew_cocycle()},
        std::pair<std::string, Cocycle>{"PAIR2SKEW", fixtures::pair2_skew_cocycle()}}) {
    SkewIsoReport rep = semidirect_skew_isomorphism_check(c);
    if (!rep.ok) {
      detail = name + ": stage " + rep.stage + ": " + rep.detail;
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 10: star-commuting decomposition.

bool criterion_dr(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  for (const auto& [name, p] :
       {std::pair<std::string, EndoPair>{"ROT4", fixtures::rot4()},
        std::pair<std::string, EndoPair>{"IDSWAP", fixtures::idswap()}}) {
    for (int lag = 1; lag <= 3; ++lag) {
      DrDecompositionReport rep = dr_zs_decomposition_check(p, lag);
      if (!rep.ok()) {
        detail = name + " lag " + std::to_string(lag) + ": " +
                 std::to_string(rep.failures.size()) + " failures out of " +
                 std::to_string(rep.total);
        return false;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 2.0) {
    detail = "runtime " + std::to_string(secs) + " s exceeds 2 s";
    return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 11: 2-graph hypotheses.

bool criterion_two_graph(std::string& detail) {
  TwoGraphReport kg1 = validate_two_graph(fixtures::kg1());
  CoalignReport co1 = coaligned_check(fixtures::kg1());
  if (!kg1.ok() || !kg1.no_sources || !kg1.no_sinks || !co1.coaligned) {
    detail = "KG1 not certified 1-coaligned";
    return false;
  }
  CoalignReport bad = coaligned_check(fixtures::kg_bad());
  if (bad.coaligned || bad.witnesses.empty()) {
    detail = "non-coaligned fixture was not rejected";
    return false;
  }
  for (const auto& [e1, e2, count] : bad.witnesses) {
    if (count == 1) {
      detail = "witness with fill-in count 1 reported";
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------------------
// Criterion 12: CLI determinism and exit codes.

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return {-1, "popen failed"};
  std::string output;
  char buf[4096];
  size_t n;
  while ((n = ::fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, n);
  int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

bool criterion_cli(std::string& detail) {
  if (g_cli_path.empty() || g_fixtures_dir.empty()) {
    detail = "GPD_ACCEPT_CLI / GPD_ACCEPT_FIXTURES not set";
    return false;
  }
  const std::string& fx = g_fixtures_dir;
  struct Invocation {
    std::string args;
    int expected_exit;
  };
  std::vector<Invocation> runs = {
      {"validate " + fx + "/z2.json", 0},
      {"validate " + fx + "/z2.json --json", 0},
      {"validate " + fx + "/s3.json --json", 0},
      {"validate " + fx + "/z2_bad_inverse.json", 1},
      {"validate " + fx + "/z3_bad_assoc.json --json", 1},
      {"validate " + fx + "/pair2_bad_cancel.json", 1},
      {"validate " + fx + "/missing.json", 2},
      {"zs-check " + fx + "/direct.json --json", 0},
      {"zs-check " + fx + "/skewmp.json", 0},
      {"zs-check " + fx + "/s3mp.json --json", 0},
      {"decompose " + fx + "/s3_decompose.json --json", 0},
      {"blend-check " + fx + "/direct.json --json", 0},
      {"blend-check " + fx + "/skewmp.json --json", 0},
      {"norms " + fx + "/fn_z2_uniform.json", 0},
      {"norms " + fx + "/fn_pair2_slice.json --json", 0},
      {"skew-iso " + fx + "/skew.json --json", 0},
      {"dr-check " + fx + "/rot4.json --lag 2 --json", 0},
      {"dr-check " + fx + "/idswap.json --lag 3", 0},
      {"kgraph-check " + fx + "/kg1.json --json", 0},
      {"kgraph-check " + fx + "/kg_bad.json --json", 1},
      {"frobnicate", 2},
  };
  for (int seed = 1; seed <= 20; ++seed) {
    char name[64];
    std::snprintf(name, sizeof(name), "validate %s/random%02d.json --json",
                  fx.c_str(), seed);
    runs.push_back({name, 0});
  }
  for (const auto& inv : runs) {
    CliResult first = run_cli(inv.args);
    CliResult second = run_cli(inv.args);
    if (first.exit_code != inv.expected_exit) {
      detail = "`" + inv.args + "` exited " + std::to_string(first.exit_code) +
               ", expected " + std::to_string(inv.expected_exit);
      return false;
    }
    if (first.output != second.output || first.exit_code != second.exit_code) {
      detail = "`" + inv.args + "` is not byte-deterministic";
      return false;
    }
  }
  // zs-build twice: identical output files.
  CliResult b1 = run_cli("zs-build " + fx + "/skewmp.json /tmp/gpd_accept_prod1.json");
  CliResult b2 = run_cli("zs-build " + fx + "/skewmp.json /tmp/gpd_accept_prod2.json");
  if (b1.exit_code != 0 || b2.exit_code != 0) {
    detail = "zs-build failed";
    return false;
  }
  auto slurp = [](const char* p) {
    FILE* f = std::fopen(p, "rb");
    std::string s;
    char buf[4096];
    size_t n;
    while (f && (n = std::fread(buf, 1, sizeof(buf), f)) > 0) s.append(buf, n);
    if (f) std::fclose(f);
    return s;
  };
  std::string f1 = slurp("/tmp/gpd_accept_prod1.json");
  if (f1.empty() || f1 != slurp("/tmp/gpd_accept_prod2.json")) {
    detail = "zs-build output files differ between runs";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  if (argc > 2) g_fixtures_dir = argv[2];
  if (g_cli_path.empty() && std::getenv("GPD_ACCEPT_CLI")) {
    g_cli_path = std::getenv("GPD_ACCEPT_CLI");
  }
  if (g_fixtures_dir.empty() && std::getenv("GPD_ACCEPT_FIXTURES")) {
    g_fixtures_dir = std::getenv("GPD_ACCEPT_FIXTURES");
  }

  struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "groupoid-validator-soundness", criterion_validator},
      {2, "zs-axiom-suite", criterion_zs_axioms},
      {3, "product-theorem", criterion_product},
      {4, "internal-external-round-trip", criterion_round_trip},
      {5, "symmetry-corollary", criterion_symmetry},
      {6, "slice-lemma", criterion_slice_lemma},
      {7, "blend-theorem", criterion_blend},
      {8, "blend-equivalences", criterion_equivalences},
      {9, "skew-product-chain", criterion_skew},
      {10, "star-commuting-decomposition", criterion_dr},
      {11, "two-graph-hypotheses", criterion_two_graph},
      {12, "cli-determinism", criterion_cli},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[256];
    std::snprintf(line, sizeof(line), "%s %2d %-32s (%.3f s)%s%s",
                  ok ? "PASS" : "FAIL", c.id, c.name, secs,
                  detail.empty() || ok ? "" : " -- ", ok ? "" : detail.c_str());
    std::cout << line << "\n";
    if (!ok) ++failures;
  }
  if (failures == 0) {
    std::cout << "all 12 acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria failed\n";
  }
  return failures;
}
