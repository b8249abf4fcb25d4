// Regenerates the fixture corpus under fixtures/. The files are committed;
// rerun this tool after changing the constructions or the serializers.

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <gpd/io.hpp>
#include <gpd/standard.hpp>
#include <gpd/zs_product.hpp>

#include "fixtures.hpp"

using ordered_json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

void write_json(const fs::path& p, const ordered_json& j) {
  write(p, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "fixtures";
  fs::create_directories(dir);

  // Groupoids.
  gpd::save_groupoid(fixtures::z2(), dir / "z2.json");
  gpd::save_groupoid(fixtures::z3(), dir / "z3.json");
  gpd::save_groupoid(fixtures::z4(), dir / "z4.json");
  gpd::save_groupoid(fixtures::z6(), dir / "z6.json");
  gpd::save_groupoid(fixtures::pair2(), dir / "pair2.json");
  gpd::save_groupoid(fixtures::s3(), dir / "s3.json");
  gpd::save_groupoid(fixtures::trivial(), dir / "trivial.json");
  for (int seed = 1; seed <= 20; ++seed) {
    char name[32];
    std::snprintf(name, sizeof(name), "random%02d.json", seed);
    gpd::save_groupoid(gpd::random_groupoid(seed), dir / name);
  }

  // Deliberately corrupted groupoids, one per axiom.
  gpd::save_groupoid(fixtures::z2_bad_inverse(), dir / "z2_bad_inverse.json");
  gpd::save_groupoid(fixtures::z3_bad_assoc(), dir / "z3_bad_assoc.json");
  gpd::save_groupoid(fixtures::pair2_bad_cancel(), dir / "pair2_bad_cancel.json");

  // Matched pairs.
  gpd::save_matched_pair(fixtures::direct(), dir / "direct.json");
  gpd::save_matched_pair(fixtures::trivial_z2(), dir / "trivial_z2.json");
  gpd::save_matched_pair(fixtures::skewmp(), dir / "skewmp.json");
  {
    gpd::Groupoid s3 = fixtures::s3();
    auto res = gpd::internal_decompose(
        s3, {s3.element("e"), s3.element("r"), s3.element("rr")},
        {s3.element("e"), s3.element("s")});
    if (!res.ok()) throw std::runtime_error("S3 decomposition failed");
    gpd::save_matched_pair(res.decomposition->pair, dir / "s3mp.json");
  }
  gpd::save_matched_pair(gpd::skew_matched_pair(fixtures::pair2_skew_cocycle()),
                         dir / "pair2skewmp.json");

  // Cocycles.
  write_json(dir / "skew.json", {{"groupoid", "z2.json"},
                                 {"group", ordered_json::parse(gpd::groupoid_to_json(
                                               gpd::cyclic_group(2)))},
                                 {"map", {{"e", "0"}, {"a", "1"}}}});
  {
    ordered_json map;
    for (gpd::Elem x = 0; x < 4; ++x) {
      gpd::Groupoid p2 = fixtures::pair2();
      map[p2.label(x)] = p2.is_unit(x) ? "0" : "1";
    }
    write_json(dir / "pair2skew.json",
               {{"groupoid", "pair2.json"},
                {"group", ordered_json::parse(gpd::groupoid_to_json(
                              gpd::cyclic_group(2)))},
                {"map", map}});
  }

  // Endomorphism pairs.
  write_json(dir / "rot4.json",
             {{"carrier", {"0", "1", "2", "3"}},
              {"s", {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}}},
              {"t", {{"0", "2"}, {"1", "3"}, {"2", "0"}, {"3", "1"}}}});
  write_json(dir / "idswap.json", {{"carrier", {"0", "1"}},
                                   {"s", {{"0", "0"}, {"1", "1"}}},
                                   {"t", {{"0", "1"}, {"1", "0"}}}});

  // 2-graphs.
  write_json(dir / "kg1.json", {{"vertices", {"v"}},
                                {"blue", {{"f", "v", "v"}}},
                                {"red", {{"e", "v", "v"}}},
                                {"squares", {{"f", "e", "e", "f"}}}});
  {
    ordered_json squares = ordered_json::array();
    for (const auto& sq : fixtures::kg_bad().squares) {
      squares.push_back({sq[0], sq[1], sq[2], sq[3]});
    }
    write_json(dir / "kg_bad.json", {{"vertices", {"v"}},
                                     {"blue", {{"f1", "v", "v"}, {"f2", "v", "v"}}},
                                     {"red", {{"e1", "v", "v"}, {"e2", "v", "v"}}},
                                     {"squares", squares}});
  }

  // Group action: Z2 swapping two points.
  write_json(dir / "swap_action.json",
             {{"group", "z2.json"},
              {"carrier", {"1", "2"}},
              {"act",
               {{"e", "1", "1"}, {"e", "2", "2"}, {"a", "1", "2"}, {"a", "2", "1"}}}});

  // Functions for the norms subcommand.
  write_json(dir / "fn_z2_uniform.json",
             {{"groupoid", "z2.json"},
              {"coeffs", {{"e", {1.0, 0.0}}, {"a", {1.0, 0.0}}}}});
  write_json(dir / "fn_pair2_slice.json",
             {{"groupoid", "pair2.json"},
              {"coeffs", {{"(1,2)", {2.0, 0.0}}, {"(2,1)", {0.0, 1.0}}}}});

  // Decomposition input for S3.
  write_json(dir / "s3_decompose.json", {{"groupoid", "s3.json"},
                                         {"g", {"e", "r", "rr"}},
                                         {"h", {"e", "s"}}});

  std::cout << "wrote fixtures to " << dir.string() << "\n";
  return 0;
}
