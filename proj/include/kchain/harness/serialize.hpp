#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "kchain/chain_graphs.hpp"
#include "kchain/invariant_oracles.hpp"
#include "kchain/rational.hpp"
#include "kchain/spectral.hpp"

namespace kchain::harness {

using json = nlohmann::ordered_json;

/// {"n": 3, "deleted": [1, 4]}
inline json to_json(const ChainSpec& spec) {
  json deleted = json::array();
  for (int i : spec.deleted()) deleted.push_back(i);
  return json{{"n", spec.n()}, {"deleted", deleted}};
}

inline ChainSpec spec_from_json(const json& j) {
  return ChainSpec(j.at("n").get<int>(), j.at("deleted").get<std::vector<int>>());
}

/// Edge list of [u, v] pairs with u < v.
inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"num_vertices", g.num_vertices()}, {"edges", edges}};
}

/// {"value": "298/3", "display": "99.33"}
inline json rational_json(const Rational& q) { return json{{"value", to_string(q)}, {"display", display2(q)}}; }

/// Eigenvalue -> multiplicity, keys as rational strings.
inline json to_json(const Multiset& m) {
  json out = json::object();
  for (const auto& [value, count] : m) out[to_string(value)] = count;
  return out;
}

inline json to_json(const InvariantReport& r) {
  return json{{"spec", to_json(r.spec)},
              {"wiener", r.wiener.str()},
              {"gutman", r.gutman.str()},
              {"kirchhoff", rational_json(r.kirchhoff)},
              {"mult_deg_kirchhoff", rational_json(r.mult_deg_kirchhoff)},
              {"spanning_trees", r.spanning_trees.str()}};
}

/// Fixed-point text with `digits` decimals; locale-independent.
inline std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

/// Quotes a CSV field if needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace kchain::harness
