#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "gpd/algebra.hpp"
#include "gpd/constructions.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/matched_pair.hpp"

namespace gpd {

// JSON formats. All loaders throw StructuralError naming the file and the
// first offending key. Serialization is canonical: fixed key order, elements
// in stable order, compose triples sorted by the factors. Identical values
// serialize to identical bytes.

Groupoid parse_groupoid(const std::string& json_text,
                        const std::string& context = "<string>");
Groupoid load_groupoid(const std::filesystem::path& file);
std::string groupoid_to_json(const Groupoid& g);
void save_groupoid(const Groupoid& g, const std::filesystem::path& file);

MatchedPair parse_matched_pair(const std::string& json_text,
                               const std::string& context = "<string>");
MatchedPair load_matched_pair(const std::filesystem::path& file);
std::string matched_pair_to_json(const MatchedPair& mp);
void save_matched_pair(const MatchedPair& mp, const std::filesystem::path& file);

// {"groupoid": <inline object or path>, "coeffs": {label: [re, im]}}.
// The loaded function keeps its base alive through the shared_ptr.
struct LoadedFunction {
  std::shared_ptr<const Groupoid> base;
  GroupoidFunction fn;
};
LoadedFunction load_function(const std::filesystem::path& file);

GroupAction load_action(const std::filesystem::path& file);
Cocycle load_cocycle(const std::filesystem::path& file);
EndoPair load_endo_pair(const std::filesystem::path& file);
TwoGraph load_two_graph(const std::filesystem::path& file);

// {"groupoid": ..., "g": [labels], "h": [labels]} for decomposition runs.
struct DecomposeInput {
  Groupoid groupoid;
  std::vector<Elem> gsub;
  std::vector<Elem> hsub;
};
DecomposeInput load_decompose_input(const std::filesystem::path& file);

}  // namespace gpd
