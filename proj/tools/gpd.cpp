// File-driven command line front end: validation, Zappa-Szep verification
// and construction, convolution algebra norms, blend checks, and the example
// families. Exit codes: 0 ok, 1 violations, 2 input or structural error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <gpd/blend.hpp>
#include <gpd/constructions.hpp>
#include <gpd/io.hpp>
#include <gpd/isomorphism.hpp>
#include <gpd/zs_product.hpp>

using gpd::Elem;
using gpd::kNoElem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

struct Output {
  bool json = false;
  ordered_json report;
  std::string text;

  void field(const std::string& key, const ordered_json& value) {
    report[key] = value;
  }
  void line(const std::string& s) { text += s + "\n"; }

  int finish(const std::string& command, const std::string& status, int exit_code) {
    if (json) {
      ordered_json out;
      out["command"] = command;
      out["status"] = status;
      for (auto& [k, v] : report.items()) out[k] = v;
      out["exit_code"] = exit_code;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << text;
    }
    return exit_code;
  }
};

int run_validate(const std::string& file, Output& out) {
  gpd::Groupoid g = gpd::load_groupoid(file);
  gpd::ValidationReport rep = gpd::validate(g);
  ordered_json violations = ordered_json::array();
  for (const auto& v : rep.violations) {
    ordered_json jv;
    jv["axiom"] = gpd::axiom_name(v.axiom);
    ordered_json witness = ordered_json::array();
    for (Elem x : v.witness) witness.push_back(g.label(x));
    jv["witness"] = witness;
    jv["detail"] = v.detail;
    violations.push_back(jv);
  }
  out.field("elements", g.size());
  out.field("units", g.units().size());
  out.field("violations", violations);
  out.field("truncated", rep.truncated);
  if (rep.ok()) {
    out.line("ok: groupoid with " + std::to_string(g.size()) + " element" +
             (g.size() == 1 ? "" : "s") + ", " + std::to_string(g.units().size()) +
             " unit" + (g.units().size() == 1 ? "" : "s"));
    return out.finish("validate", "ok", 0);
  }
  out.line("violations: " + std::to_string(rep.violations.size()) +
           (rep.truncated ? " (truncated)" : ""));
  for (const auto& v : rep.violations) {
    std::string w;
    for (Elem x : v.witness) w += (w.empty() ? "" : ", ") + g.label(x);
    out.line(std::string("  ") + gpd::axiom_name(v.axiom) + " at (" + w +
             "): " + v.detail);
  }
  return out.finish("validate", "violations", 1);
}

int run_zs_check(const std::string& file, Output& out) {
  gpd::MatchedPair mp = gpd::load_matched_pair(file);
  gpd::ZsVerifyReport rep = gpd::verify_matched_pair(mp);
  ordered_json axioms;
  for (int i = 0; i < 9; ++i) {
    axioms[gpd::axiom_name(static_cast<gpd::ZsAxiom>(i))] =
        rep.axiom_ok[i] ? "ok" : "violated";
  }
  out.field("axioms", axioms);
  bool derived_ok = false;
  if (rep.ok()) {
    gpd::DerivedIdentityReport der = gpd::check_derived_identities(mp);
    derived_ok = der.ok();
    out.field("derived_identities", derived_ok ? "ok" : "violated");
  }
  if (rep.ok() && derived_ok) {
    out.line("ok: matched pair (" + std::to_string(mp.vertical().size()) + " x " +
             std::to_string(mp.horizontal().size()) + " elements, " +
             std::to_string(mp.vertical().units().size()) +
             " units); ZS1-ZS9 and derived identities hold");
    return out.finish("zs-check", "ok", 0);
  }
  ordered_json problems = ordered_json::array();
  for (const auto& p : rep.precondition_failures) problems.push_back(p);
  for (const auto& d : rep.domain_errors) problems.push_back(d);
  for (const auto& v : rep.violations) {
    problems.push_back(std::string(gpd::axiom_name(v.axiom)) + " at " + v.tuple +
                       ": lhs = " + v.lhs + ", rhs = " + v.rhs);
  }
  out.field("problems", problems);
  out.line("violations: " + std::to_string(problems.size()) +
           (rep.truncated ? " (truncated)" : ""));
  for (const auto& p : problems) out.line("  " + p.get<std::string>());
  return out.finish("zs-check", "violations", 1);
}

int run_zs_build(const std::string& file, const std::string& output, Output& out) {
  gpd::MatchedPair mp = gpd::load_matched_pair(file);
  gpd::ZsGroupoid zs = gpd::build_zs_product(mp);
  gpd::save_groupoid(zs.product(), output);
  out.field("elements", zs.product().size());
  out.field("units", zs.product().units().size());
  out.field("output", output);
  out.line("ok: wrote product groupoid (" + std::to_string(zs.product().size()) +
           " elements, " + std::to_string(zs.product().units().size()) +
           " units) to " + output);
  return out.finish("zs-build", "ok", 0);
}

int run_decompose(const std::string& file, int max_size, Output& out) {
  gpd::DecomposeInput in = gpd::load_decompose_input(file);
  if (in.groupoid.size() > max_size) {
    throw gpd::SizeGuardError("decomposition search too large: " +
                              std::to_string(in.groupoid.size()) +
                              " elements exceeds bound " + std::to_string(max_size));
  }
  gpd::InternalDecomposeResult res =
      gpd::internal_decompose(in.groupoid, in.gsub, in.hsub);
  if (!res.ok()) {
    out.field("witness", in.groupoid.label(res.witness));
    out.field("factorizations", res.factorizations);
    out.line("violations: element " + in.groupoid.label(res.witness) + " has " +
             std::to_string(res.factorizations) + " factorizations");
    return out.finish("decompose", "violations", 1);
  }
  const auto& dec = *res.decomposition;
  bool iso_ok = gpd::is_isomorphism(dec.product.product(), in.groupoid,
                                    dec.product_to_k);
  out.field("product_elements", dec.product.product().size());
  out.field("isomorphism_verified", iso_ok);
  if (!iso_ok) {
    out.line("violations: extracted product is not isomorphic to the input");
    return out.finish("decompose", "violations", 1);
  }
  out.line("ok: unique factorization; matched pair extracted; product with " +
           std::to_string(dec.product.product().size()) +
           " elements maps isomorphically onto the input");
  return out.finish("decompose", "ok", 0);
}

int run_blend_check(const std::string& file, double tol,
                    std::optional<double> rank_tol, Output& out) {
  gpd::MatchedPair mp = gpd::load_matched_pair(file);
  gpd::ZsGroupoid zs = gpd::build_zs_product(mp);
  gpd::Tolerance tolerance{tol, 1e-12};
  gpd::BlendWitness w = gpd::blend_witness(zs, 100, tolerance, rank_tol);
  out.field("span_rank", w.span_rank);
  out.field("target_dim", w.target_dim);
  out.field("dense", w.dense());
  out.field("i_hom_ok", w.i_hom_ok);
  out.field("j_hom_ok", w.j_hom_ok);
  out.field("commuting_spans_ok", w.commuting_spans_ok);
  out.line(std::string(w.ok() ? "ok" : "violations") + ": C*-blend " +
           (w.ok() ? "verified" : "checks failed"));
  out.line("  span_rank: " + std::to_string(w.span_rank));
  out.line("  target_dim: " + std::to_string(w.target_dim));
  out.line(std::string("  dense: ") + yesno(w.dense()));
  out.line(std::string("  i_hom_ok: ") + yesno(w.i_hom_ok));
  out.line(std::string("  j_hom_ok: ") + yesno(w.j_hom_ok));
  out.line(std::string("  commuting_spans_ok: ") + yesno(w.commuting_spans_ok));
  return out.finish("blend-check", w.ok() ? "ok" : "violations", w.ok() ? 0 : 1);
}

int run_norms(const std::string& file, double tol, Output& out) {
  gpd::LoadedFunction lf = gpd::load_function(file);
  gpd::SliceNormReport rep = gpd::check_slice_norms(lf.fn, gpd::Tolerance{tol, 1e-12});
  out.field("slice_supported", rep.slice_supported);
  out.field("sup", rep.sup);
  out.field("i_norm", rep.i);
  out.field("reduced", rep.reduced);
  if (rep.slice_supported) out.field("norms_agree", rep.equal_within_tol);
  out.line(std::string("slice_supported: ") + yesno(rep.slice_supported));
  out.line("sup: " + fmt12(rep.sup));
  out.line("I: " + fmt12(rep.i));
  out.line("reduced: " + fmt12(rep.reduced));
  bool ok = !rep.slice_supported || rep.equal_within_tol;
  if (rep.slice_supported) {
    out.line(std::string("norms_agree: ") + yesno(rep.equal_within_tol));
  }
  return out.finish("norms", ok ? "ok" : "violations", ok ? 0 : 1);
}

int run_skew_build(const std::string& file, const std::string& output,
                   const std::string& mp_output, Output& out) {
  gpd::Cocycle c = gpd::load_cocycle(file);
  gpd::Groupoid sk = gpd::skew_product(c);
  gpd::save_groupoid(sk, output);
  out.field("elements", sk.size());
  out.field("units", sk.units().size());
  out.field("output", output);
  out.line("ok: wrote skew product (" + std::to_string(sk.size()) + " elements, " +
           std::to_string(sk.units().size()) + " units) to " + output);
  if (!mp_output.empty()) {
    gpd::MatchedPair mp = gpd::skew_matched_pair(c);
    gpd::save_matched_pair(mp, mp_output);
    out.field("matched_pair_output", mp_output);
    out.line("ok: wrote matched pair (" + std::to_string(mp.vertical().size()) +
             " x " + std::to_string(mp.horizontal().size()) + " elements) to " +
             mp_output);
  }
  return out.finish("skew-build", "ok", 0);
}

int run_skew_iso(const std::string& file, Output& out) {
  gpd::Cocycle c = gpd::load_cocycle(file);
  gpd::SkewIsoReport rep = gpd::semidirect_skew_isomorphism_check(c);
  out.field("isomorphism", rep.ok);
  if (rep.ok) {
    out.field("elements", rep.elements);
    out.line("ok: semidirect skew product is isomorphic to the Zappa-Szep product (" +
             std::to_string(rep.elements) + " elements)");
    return out.finish("skew-iso", "ok", 0);
  }
  out.field("stage", rep.stage);
  out.field("detail", rep.detail);
  out.line("violations: stage " + rep.stage + ": " + rep.detail);
  return out.finish("skew-iso", "violations", 1);
}

int run_dr_check(const std::string& file, int lag, Output& out) {
  gpd::EndoPair p = gpd::load_endo_pair(file);
  gpd::StarCommuteReport sc = gpd::star_commuting_check(p);
  out.field("commute", sc.commute);
  out.field("star_commute", sc.star_commute);
  out.line(std::string("commute: ") + yesno(sc.commute));
  out.line(std::string("star_commute: ") + yesno(sc.star_commute));
  if (!sc.ok()) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& [x, y, count] : sc.witnesses) {
      witnesses.push_back({p.carrier[x], p.carrier[y], count});
    }
    out.field("witnesses", witnesses);
    for (const auto& [x, y, count] : sc.witnesses) {
      out.line("  fill-in count " + std::to_string(count) + " at (" + p.carrier[x] +
               ", " + p.carrier[y] + ")");
    }
    out.line("violations: the pair is not *-commuting");
    return out.finish("dr-check", "violations", 1);
  }
  gpd::DrDecompositionReport rep = gpd::dr_zs_decomposition_check(p, lag);
  out.field("lag", lag);
  out.field("windowed_elements", rep.total);
  out.field("decomposed", rep.decomposed);
  out.field("skipped_products", rep.skipped_products);
  out.line("lag: " + std::to_string(lag));
  out.line("windowed_elements: " + std::to_string(rep.total));
  out.line("decomposed: " + std::to_string(rep.decomposed));
  out.line("skipped_products: " + std::to_string(rep.skipped_products));
  if (!rep.ok()) {
    ordered_json failures = ordered_json::array();
    for (const auto& [el, count] : rep.failures) {
      failures.push_back({p.carrier[el.x], el.k1, el.k2, p.carrier[el.y], count});
    }
    out.field("failures", failures);
    out.line("violations: " + std::to_string(rep.failures.size()) +
             " windowed elements failed to decompose uniquely");
    return out.finish("dr-check", "violations", 1);
  }
  out.line("ok: unique fill-in decomposition for all windowed elements");
  return out.finish("dr-check", "ok", 0);
}

int run_kgraph_check(const std::string& file, Output& out) {
  gpd::TwoGraph tg = gpd::load_two_graph(file);
  gpd::TwoGraphReport rep = gpd::validate_two_graph(tg);
  out.field("valid", rep.ok());
  out.line(std::string("valid: ") + yesno(rep.ok()));
  if (!rep.ok()) {
    ordered_json errors = ordered_json::array();
    for (const auto& e : rep.errors) errors.push_back(e);
    out.field("errors", errors);
    for (const auto& e : rep.errors) out.line("  " + e);
    out.line("violations: not a 2-graph presentation");
    return out.finish("kgraph-check", "violations", 1);
  }
  gpd::CoalignReport co = gpd::coaligned_check(tg);
  out.field("row_finite", true);
  out.field("no_sources", rep.no_sources);
  out.field("no_sinks", rep.no_sinks);
  out.field("coaligned", co.coaligned);
  out.line("row_finite: yes");
  out.line(std::string("no_sources: ") + yesno(rep.no_sources));
  out.line(std::string("no_sinks: ") + yesno(rep.no_sinks));
  out.line(std::string("coaligned: ") + yesno(co.coaligned));
  bool certified = rep.no_sources && rep.no_sinks && co.coaligned;
  out.field("blend_hypotheses_certified", certified);
  if (!co.coaligned) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& [e1, e2, count] : co.witnesses) {
      witnesses.push_back({e1, e2, count});
    }
    out.field("witnesses", witnesses);
    for (const auto& [e1, e2, count] : co.witnesses) {
      out.line("  fill-in count " + std::to_string(count) + " at (" + e1 + ", " +
               e2 + ")");
    }
  }
  if (certified) {
    out.line("ok: 1-coaligned 2-graph; blend theorem hypotheses certified");
    return out.finish("kgraph-check", "ok", 0);
  }
  out.line("violations: blend theorem hypotheses not certified");
  return out.finish("kgraph-check", "violations", 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite groupoid products and convolution algebras"};
  app.require_subcommand(1);

  bool json = false;
  double tol = 1e-9;
  int lag = 1;
  int max_size = gpd::kDefaultSizeGuard;

  std::string in_file, out_file, mp_out;

  auto add_common = [&](CLI::App* sub, bool takes_tol = false, bool takes_lag = false,
                        bool takes_max = false) {
    sub->add_flag("--json", json, "emit a machine-readable JSON report");
    if (takes_tol) sub->add_option("--tol", tol, "relative tolerance");
    if (takes_lag) sub->add_option("--lag", lag, "lag window bound");
    if (takes_max) sub->add_option("--max-size", max_size, "exhaustive search bound");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the groupoid axioms");
  validate->add_option("file", in_file, "groupoid JSON file")->required();
  add_common(validate);

  CLI::App* zs_check =
      app.add_subcommand("zs-check", "verify the matched pair axioms ZS1-ZS9");
  zs_check->add_option("file", in_file, "matched pair JSON file")->required();
  add_common(zs_check);

  CLI::App* zs_build =
      app.add_subcommand("zs-build", "construct the Zappa-Szep product groupoid");
  zs_build->add_option("file", in_file, "matched pair JSON file")->required();
  zs_build->add_option("output", out_file, "output groupoid JSON file")->required();
  add_common(zs_build);

  CLI::App* decompose =
      app.add_subcommand("decompose", "internal Zappa-Szep decomposition");
  decompose->add_option("file", in_file, "decomposition input JSON file")->required();
  add_common(decompose, false, false, true);

  CLI::App* blend =
      app.add_subcommand("blend-check", "embeddings, density and span equivalences");
  blend->add_option("file", in_file, "matched pair JSON file")->required();
  add_common(blend, true);

  CLI::App* norms = app.add_subcommand("norms", "sup, I and reduced norms");
  norms->add_option("file", in_file, "function JSON file")->required();
  add_common(norms, true);

  CLI::App* skew_build =
      app.add_subcommand("skew-build", "construct a skew product groupoid");
  skew_build->add_option("file", in_file, "cocycle JSON file")->required();
  skew_build->add_option("output", out_file, "output groupoid JSON file")->required();
  skew_build->add_option("--matched-pair", mp_out,
                         "also write the induced matched pair");
  add_common(skew_build);

  CLI::App* skew_iso = app.add_subcommand(
      "skew-iso", "check the semidirect skew product isomorphism");
  skew_iso->add_option("file", in_file, "cocycle JSON file")->required();
  add_common(skew_iso);

  CLI::App* dr_check = app.add_subcommand(
      "dr-check", "*-commuting fill-ins and windowed decomposition");
  dr_check->add_option("file", in_file, "endomorphism pair JSON file")->required();
  add_common(dr_check, false, true);

  CLI::App* kgraph =
      app.add_subcommand("kgraph-check", "validate and coalign a finite 2-graph");
  kgraph->add_option("file", in_file, "2-graph JSON file")->required();
  add_common(kgraph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      return app.exit(e);
    }
    std::cout << "error: " << e.what() << "\n";
    return 2;
  }

  Output out;
  out.json = json;
  std::string command;
  try {
    if (validate->parsed()) return run_validate(in_file, out);
    if (zs_check->parsed()) return run_zs_check(in_file, out);
    if (zs_build->parsed()) return run_zs_build(in_file, out_file, out);
    if (decompose->parsed()) return run_decompose(in_file, max_size, out);
    if (blend->parsed()) {
      std::optional<double> rank_tol;
      if (blend->count("--tol") > 0) rank_tol = tol;
      return run_blend_check(in_file, tol, rank_tol, out);
    }
    if (norms->parsed()) return run_norms(in_file, tol, out);
    if (skew_build->parsed()) return run_skew_build(in_file, out_file, mp_out, out);
    if (skew_iso->parsed()) return run_skew_iso(in_file, out);
    if (dr_check->parsed()) return run_dr_check(in_file, lag, out);
    if (kgraph->parsed()) return run_kgraph_check(in_file, out);
  } catch (const gpd::StructuralError& e) {
    Output err;
    err.json = json;
    err.field("message", e.what());
    err.line(std::string("error: ") + e.what());
    return err.finish(app.get_subcommands().front()->get_name(), "error", 2);
  } catch (const gpd::SizeGuardError& e) {
    Output err;
    err.json = json;
    err.field("message", e.what());
    err.line(std::string("error: ") + e.what());
    return err.finish(app.get_subcommands().front()->get_name(), "error", 2);
  } catch (const gpd::Error& e) {
    // Semantic failures (preconditions) count as violations, not bad input.
    Output err;
    err.json = json;
    err.field("message", e.what());
    err.line(std::string("violations: ") + e.what());
    return err.finish(app.get_subcommands().front()->get_name(), "violations", 1);
  }
  return 2;
}
