#include "gpd/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace gpd {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& context, const std::string& message) {
  throw StructuralError(context + ": " + message);
}

json parse_json(const std::string& text, const std::string& context) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) bad(context, "not valid JSON");
  return j;
}

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) bad(file.string(), "cannot read file");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json(text, file.string());
}

const json& need(const json& j, const char* key, const std::string& context) {
  if (!j.is_object()) bad(context, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(context, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string need_string(const json& j, const std::string& context,
                        const std::string& what) {
  if (!j.is_string()) bad(context, what + " must be a string");
  return j.get<std::string>();
}

Groupoid groupoid_from_json(const json& j, const std::string& context) {
  const json& elements = need(j, "elements", context);
  if (!elements.is_array()) bad(context, "\"elements\" must be an array");
  GroupoidBuilder b;
  try {
    for (const auto& e : elements) {
      b.add_element(need_string(e, context, "element label"));
    }
    const json& inverse = need(j, "inverse", context);
    if (!inverse.is_object()) bad(context, "\"inverse\" must be an object");
    std::map<std::string, Elem> ix;
    for (Elem i = 0; i < static_cast<Elem>(elements.size()); ++i) {
      ix[elements[i].get<std::string>()] = i;
    }
    auto lookup = [&](const std::string& label, const char* where) {
      auto it = ix.find(label);
      if (it == ix.end()) {
        bad(context, std::string("\"") + where + "\" references unknown label \"" +
                         label + "\"");
      }
      return it->second;
    };
    for (const auto& [key, value] : inverse.items()) {
      b.set_inverse(lookup(key, "inverse"),
                    lookup(need_string(value, context, "inverse value"), "inverse"));
    }
    const json& compose = need(j, "compose", context);
    if (!compose.is_array()) bad(context, "\"compose\" must be an array");
    for (const auto& triple : compose) {
      if (!triple.is_array() || triple.size() != 3) {
        bad(context, "\"compose\" entries must be [x, y, xy] triples");
      }
      b.set_compose(lookup(need_string(triple[0], context, "compose entry"), "compose"),
                    lookup(need_string(triple[1], context, "compose entry"), "compose"),
                    lookup(need_string(triple[2], context, "compose entry"), "compose"));
    }
    return b.build();
  } catch (const StructuralError& e) {
    // Re-tag builder errors with the file context.
    throw StructuralError(context + ": " + e.what());
  }
}

// "groupoid"-style values may be inline objects or a path relative to the
// referencing file.
Groupoid groupoid_from_ref(const json& j, const std::filesystem::path& base_dir,
                           const std::string& context) {
  if (j.is_string()) {
    return groupoid_from_json(read_json_file(base_dir / j.get<std::string>()),
                              (base_dir / j.get<std::string>()).string());
  }
  return groupoid_from_json(j, context);
}

}  // namespace

Groupoid parse_groupoid(const std::string& json_text, const std::string& context) {
  return groupoid_from_json(parse_json(json_text, context), context);
}

Groupoid load_groupoid(const std::filesystem::path& file) {
  return groupoid_from_json(read_json_file(file), file.string());
}

std::string groupoid_to_json(const Groupoid& g) {
  ordered_json j;
  j["elements"] = json::array();
  for (Elem x = 0; x < g.size(); ++x) j["elements"].push_back(g.label(x));
  j["inverse"] = ordered_json::object();
  for (Elem x = 0; x < g.size(); ++x) j["inverse"][g.label(x)] = g.label(g.inverse(x));
  j["compose"] = json::array();
  for (Elem x = 0; x < g.size(); ++x) {
    for (Elem y = 0; y < g.size(); ++y) {
      Elem xy = g.compose(x, y);
      if (xy != kNoElem) {
        j["compose"].push_back({g.label(x), g.label(y), g.label(xy)});
      }
    }
  }
  return j.dump(2) + "\n";
}

void save_groupoid(const Groupoid& g, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw StructuralError(file.string() + ": cannot write file");
  out << groupoid_to_json(g);
}

namespace {

MatchedPair matched_pair_from_json(const json& j,
                                   const std::filesystem::path& base_dir,
                                   const std::string& context) {
  Groupoid g = groupoid_from_ref(need(j, "g", context), base_dir, context + ": g");
  Groupoid h = groupoid_from_ref(need(j, "h", context), base_dir, context + ": h");
  auto g_lookup = [&](const std::string& label) {
    Elem x = g.element(label);
    if (x == kNoElem) bad(context, "unknown g-element \"" + label + "\"");
    return x;
  };
  auto h_lookup = [&](const std::string& label) {
    Elem x = h.element(label);
    if (x == kNoElem) bad(context, "unknown h-element \"" + label + "\"");
    return x;
  };
  const json& unit_map = need(j, "unit_map", context);
  if (!unit_map.is_object()) bad(context, "\"unit_map\" must be an object");
  std::vector<std::pair<Elem, Elem>> units;
  for (const auto& [key, value] : unit_map.items()) {
    units.emplace_back(g_lookup(key),
                       h_lookup(need_string(value, context, "unit_map value")));
  }
  auto read_table = [&](const char* key) {
    const json& table = need(j, key, context);
    if (!table.is_array()) bad(context, std::string("\"") + key + "\" must be an array");
    std::vector<std::tuple<Elem, Elem, Elem>> out;
    for (const auto& triple : table) {
      if (!triple.is_array() || triple.size() != 3) {
        bad(context, std::string("\"") + key + "\" entries must be [h, g, result]");
      }
      Elem hh = h_lookup(need_string(triple[0], context, key));
      Elem gg = g_lookup(need_string(triple[1], context, key));
      Elem res = std::string(key) == "action"
                     ? g_lookup(need_string(triple[2], context, key))
                     : h_lookup(need_string(triple[2], context, key));
      out.emplace_back(hh, gg, res);
    }
    return out;
  };
  auto action = read_table("action");
  auto restriction = read_table("restriction");
  try {
    return MatchedPair(std::move(g), std::move(h), std::move(units),
                       std::move(action), std::move(restriction));
  } catch (const StructuralError& e) {
    throw StructuralError(context + ": " + e.what());
  }
}

}  // namespace

MatchedPair parse_matched_pair(const std::string& json_text,
                               const std::string& context) {
  return matched_pair_from_json(parse_json(json_text, context), ".", context);
}

MatchedPair load_matched_pair(const std::filesystem::path& file) {
  return matched_pair_from_json(read_json_file(file), file.parent_path(),
                                file.string());
}

std::string matched_pair_to_json(const MatchedPair& mp) {
  const Groupoid& g = mp.vertical();
  const Groupoid& h = mp.horizontal();
  ordered_json j;
  j["g"] = json::parse(groupoid_to_json(g));
  j["h"] = json::parse(groupoid_to_json(h));
  j["unit_map"] = ordered_json::object();
  for (Elem u = 0; u < g.size(); ++u) {
    if (mp.to_h_unit(u) != kNoElem) {
      j["unit_map"][g.label(u)] = h.label(mp.to_h_unit(u));
    }
  }
  j["action"] = json::array();
  j["restriction"] = json::array();
  for (Elem hh = 0; hh < h.size(); ++hh) {
    for (Elem gg = 0; gg < g.size(); ++gg) {
      if (mp.action(hh, gg) != kNoElem) {
        j["action"].push_back({h.label(hh), g.label(gg), g.label(mp.action(hh, gg))});
      }
      if (mp.restriction(hh, gg) != kNoElem) {
        j["restriction"].push_back(
            {h.label(hh), g.label(gg), h.label(mp.restriction(hh, gg))});
      }
    }
  }
  return j.dump(2) + "\n";
}

void save_matched_pair(const MatchedPair& mp, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw StructuralError(file.string() + ": cannot write file");
  out << matched_pair_to_json(mp);
}

LoadedFunction load_function(const std::filesystem::path& file) {
  json j = read_json_file(file);
  const std::string context = file.string();
  auto base = std::make_shared<Groupoid>(groupoid_from_ref(
      need(j, "groupoid", context), file.parent_path(), context + ": groupoid"));
  GroupoidFunction fn(*base);
  const json& coeffs = need(j, "coeffs", context);
  if (!coeffs.is_object()) bad(context, "\"coeffs\" must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    Elem x = base->element(key);
    if (x == kNoElem) bad(context, "coeffs references unknown label \"" + key + "\"");
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
        !value[1].is_number()) {
      bad(context, "coefficient for \"" + key + "\" must be [re, im]");
    }
    fn.set(x, Scalar(value[0].get<double>(), value[1].get<double>()));
  }
  return LoadedFunction{std::move(base), std::move(fn)};
}

GroupAction load_action(const std::filesystem::path& file) {
  json j = read_json_file(file);
  const std::string context = file.string();
  GroupAction a;
  a.group = groupoid_from_ref(need(j, "group", context), file.parent_path(),
                              context + ": group");
  const json& carrier = need(j, "carrier", context);
  if (!carrier.is_array()) bad(context, "\"carrier\" must be an array");
  for (const auto& x : carrier) {
    a.carrier.push_back(need_string(x, context, "carrier entry"));
  }
  a.act.assign(static_cast<size_t>(a.group.size()) * a.carrier.size(), -1);
  const json& act = need(j, "act", context);
  if (!act.is_array()) bad(context, "\"act\" must be an array");
  for (const auto& triple : act) {
    if (!triple.is_array() || triple.size() != 3) {
      bad(context, "\"act\" entries must be [g, x, y] triples");
    }
    Elem g = a.group.element(need_string(triple[0], context, "act entry"));
    int x = a.point(need_string(triple[1], context, "act entry"));
    int y = a.point(need_string(triple[2], context, "act entry"));
    if (g == kNoElem || x < 0 || y < 0) bad(context, "\"act\" references unknown label");
    a.act[static_cast<size_t>(g) * a.carrier.size() + x] = y;
  }
  for (int v : a.act) {
    if (v < 0) bad(context, "\"act\" is not total on group x carrier");
  }
  return a;
}

Cocycle load_cocycle(const std::filesystem::path& file) {
  json j = read_json_file(file);
  const std::string context = file.string();
  Cocycle c;
  c.domain = groupoid_from_ref(need(j, "groupoid", context), file.parent_path(),
                               context + ": groupoid");
  c.target = groupoid_from_ref(need(j, "group", context), file.parent_path(),
                               context + ": group");
  const json& map = need(j, "map", context);
  if (!map.is_object()) bad(context, "\"map\" must be an object");
  c.values.assign(c.domain.size(), kNoElem);
  for (const auto& [key, value] : map.items()) {
    Elem g = c.domain.element(key);
    Elem a = c.target.element(need_string(value, context, "map value"));
    if (g == kNoElem || a == kNoElem) {
      bad(context, "\"map\" references unknown label \"" + key + "\"");
    }
    c.values[g] = a;
  }
  for (Elem v : c.values) {
    if (v == kNoElem) bad(context, "\"map\" is not total on the groupoid");
  }
  return c;
}

EndoPair load_endo_pair(const std::filesystem::path& file) {
  json j = read_json_file(file);
  const std::string context = file.string();
  EndoPair p;
  const json& carrier = need(j, "carrier", context);
  if (!carrier.is_array()) bad(context, "\"carrier\" must be an array");
  for (const auto& x : carrier) {
    p.carrier.push_back(need_string(x, context, "carrier entry"));
  }
  auto point = [&](const std::string& label) {
    for (size_t i = 0; i < p.carrier.size(); ++i) {
      if (p.carrier[i] == label) return static_cast<int>(i);
    }
    bad(context, "map references unknown point \"" + label + "\"");
  };
  auto read_map = [&](const char* key) {
    const json& m = need(j, key, context);
    if (!m.is_object()) bad(context, std::string("\"") + key + "\" must be an object");
    std::vector<int> out(p.carrier.size(), -1);
    for (const auto& [k, v] : m.items()) {
      out[point(k)] = point(need_string(v, context, key));
    }
    for (int x : out) {
      if (x < 0) bad(context, std::string("\"") + key + "\" is not total");
    }
    return out;
  };
  p.s_map = read_map("s");
  p.t_map = read_map("t");
  return p;
}

TwoGraph load_two_graph(const std::filesystem::path& file) {
  json j = read_json_file(file);
  const std::string context = file.string();
  TwoGraph tg;
  const json& vertices = need(j, "vertices", context);
  if (!vertices.is_array()) bad(context, "\"vertices\" must be an array");
  for (const auto& v : vertices) {
    tg.vertices.push_back(need_string(v, context, "vertex"));
  }
  auto read_edges = [&](const char* key) {
    const json& edges = need(j, key, context);
    if (!edges.is_array()) bad(context, std::string("\"") + key + "\" must be an array");
    std::vector<TwoGraphEdge> out;
    for (const auto& e : edges) {
      if (!e.is_array() || e.size() != 3) {
        bad(context, std::string("\"") + key + "\" entries must be [name, range, source]");
      }
      out.push_back({need_string(e[0], context, key), need_string(e[1], context, key),
                     need_string(e[2], context, key)});
    }
    return out;
  };
  tg.blue = read_edges("blue");
  tg.red = read_edges("red");
  const json& squares = need(j, "squares", context);
  if (!squares.is_array()) bad(context, "\"squares\" must be an array");
  for (const auto& s : squares) {
    if (!s.is_array() || s.size() != 4) {
      bad(context, "\"squares\" entries must be [f, e, e2, f2]");
    }
    tg.squares.push_back({need_string(s[0], context, "squares"),
                          need_string(s[1], context, "squares"),
                          need_string(s[2], context, "squares"),
                          need_string(s[3], context, "squares")});
  }
  return tg;
}

DecomposeInput load_decompose_input(const std::filesystem::path& file) {
  json j = read_json_file(file);
  const std::string context = file.string();
  DecomposeInput in;
  in.groupoid = groupoid_from_ref(need(j, "groupoid", context), file.parent_path(),
                                  context + ": groupoid");
  auto read_subset = [&](const char* key) {
    const json& arr = need(j, key, context);
    if (!arr.is_array()) bad(context, std::string("\"") + key + "\" must be an array");
    std::vector<Elem> out;
    for (const auto& l : arr) {
      Elem x = in.groupoid.element(need_string(l, context, key));
      if (x == kNoElem) {
        bad(context, std::string("\"") + key + "\" references unknown label");
      }
      out.push_back(x);
    }
    return out;
  };
  in.gsub = read_subset("g");
  in.hsub = read_subset("h");
  return in;
}

}  // namespace gpd
