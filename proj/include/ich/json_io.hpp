#pragma once

// JSON serialization for the on-disk formats: instances, scalar and vector
// codes, geometric layouts, and augmentation-basis files.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ich/geometry.hpp"
#include "ich/instance.hpp"
#include "ich/util.hpp"
#include "ich/xorcolor.hpp"

namespace ich {

using json = nlohmann::json;

// --- instances --------------------------------------------------------------
// { "n": int, "helpers": [ { "cache": [int...], "neighborhood": [int...] } ],
//   "meta": { "seed": int|null, "source": string } }

inline json network_to_json(const HelperNetwork& net) {
  json j;
  j["n"] = net.n_users;
  j["helpers"] = json::array();
  for (const Helper& h : net.helpers)
    j["helpers"].push_back({{"cache", h.cache}, {"neighborhood", h.neighborhood}});
  j["meta"] = {{"seed", net.meta.seed ? json(*net.meta.seed) : json(nullptr)},
               {"source", net.meta.source}};
  return j;
}

inline json instance_to_json(const CanonicalInstance& canon) {
  HelperNetwork net;
  net.n_users = canon.n_users;
  net.helpers = canon.helpers;
  net.meta = canon.meta;
  return network_to_json(net);
}

inline HelperNetwork network_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("helpers"))
    throw error("instance JSON: expected object with \"n\" and \"helpers\"");
  HelperNetwork net;
  net.n_users = j.at("n").get<int>();
  for (const json& hj : j.at("helpers")) {
    Helper h;
    h.cache = hj.at("cache").get<std::vector<int>>();
    h.neighborhood = hj.at("neighborhood").get<std::vector<int>>();
    net.helpers.push_back(std::move(h));
  }
  if (j.contains("meta") && j.at("meta").is_object()) {
    const json& m = j.at("meta");
    if (m.contains("seed") && !m.at("seed").is_null())
      net.meta.seed = m.at("seed").get<long long>();
    if (m.contains("source")) net.meta.source = m.at("source").get<std::string>();
  }
  return net;
}

// Same schema as network_from_json, but the helpers are required to already
// satisfy the canonical invariants (disjoint neighborhoods, no own request in
// the serving cache, distinct caches); throws otherwise.
inline CanonicalInstance instance_from_json(const json& j) {
  HelperNetwork net = network_from_json(j);
  CanonicalInstance canon;
  canon.n_users = net.n_users;
  canon.helpers = net.helpers;
  canon.meta = net.meta;
  canon.validate();
  return canon;
}

// --- scalar codes -----------------------------------------------------------
// { "t": int, "transmissions": [ [user ids XORed together] ... ] }

inline json code_to_json(const XorCode& code) {
  json j;
  j["t"] = code.t();
  j["transmissions"] = code.transmissions;
  return j;
}

inline XorCode code_from_json(const json& j, int n_users) {
  XorCode code;
  code.n_users = n_users;
  code.transmissions = j.at("transmissions").get<std::vector<std::vector<int>>>();
  if (j.contains("t") && j.at("t").get<int>() != code.t())
    throw error("code JSON: \"t\" disagrees with transmission count");
  return code;
}

// --- vector codes -----------------------------------------------------------
// { "t": int, "p": int, "transmissions": [ [ [user, subpkt] ... ] ... ],
//   "rate": "t/p" }

inline json vector_code_to_json(const VectorXorCode& code) {
  json j;
  j["t"] = code.t();
  j["p"] = code.p;
  j["transmissions"] = json::array();
  for (const auto& row : code.transmissions) {
    json r = json::array();
    for (const auto& [user, sub] : row) r.push_back({user, sub});
    j["transmissions"].push_back(std::move(r));
  }
  j["rate"] = std::to_string(code.t()) + "/" + std::to_string(code.p);
  return j;
}

inline VectorXorCode vector_code_from_json(const json& j, int n_users) {
  VectorXorCode code;
  code.n_users = n_users;
  code.p = j.at("p").get<int>();
  for (const json& rj : j.at("transmissions")) {
    std::vector<std::pair<int, int>> row;
    for (const json& e : rj) {
      if (!e.is_array() || e.size() != 2)
        throw error("vector code JSON: each entry must be [user, subpkt]");
      row.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    code.transmissions.push_back(std::move(row));
  }
  if (j.contains("t") && j.at("t").get<int>() != code.t())
    throw error("vector code JSON: \"t\" disagrees with transmission count");
  return code;
}

// --- geometric layouts ------------------------------------------------------
// { "disks": [ { "x": real, "y": real, "r": real } ... ],
//   "users": [ [x, y] ... ], "d_ply": int }

inline json layout_to_json(const GeometricLayout& layout) {
  json j;
  j["disks"] = json::array();
  for (const Disk& d : layout.helper_disks)
    j["disks"].push_back({{"x", d.x}, {"y", d.y}, {"r", d.r}});
  j["users"] = json::array();
  for (const auto& [x, y] : layout.user_points) j["users"].push_back({x, y});
  j["d_ply"] = layout.d_ply;
  return j;
}

inline GeometricLayout layout_from_json(const json& j) {
  GeometricLayout layout;
  for (const json& dj : j.at("disks"))
    layout.helper_disks.push_back(
        {dj.at("x").get<double>(), dj.at("y").get<double>(), dj.at("r").get<double>()});
  if (j.contains("users"))
    for (const json& uj : j.at("users"))
      layout.user_points.emplace_back(uj[0].get<double>(), uj[1].get<double>());
  layout.d_ply = j.value("d_ply", 1);
  return layout;
}

// --- augmentation basis files -----------------------------------------------
// { "k": int, "cliques": [ [category indices] ... ], "elements": [ [int] ... ],
//   "delta": int, "rank": int, "enum_bound": int }
// The clique index table fixes the meaning of each coordinate of an element.

inline json graver_to_json(const CliqueSystem& cs, const GraverBasis& gb) {
  json j;
  j["k"] = cs.k;
  j["cliques"] = cs.cliques;
  j["elements"] = gb.elements;
  j["delta"] = gb.delta;
  j["rank"] = gb.rank;
  j["enum_bound"] = gb.enum_bound;
  return j;
}

inline GraverBasis graver_from_json(const json& j, const CliqueSystem& cs) {
  if (j.at("k").get<int>() != cs.k)
    throw error("basis file: helper count disagrees with the clique system");
  auto cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
  if (cliques != cs.cliques)
    throw error("basis file: clique index table disagrees with the clique system");
  GraverBasis gb;
  gb.elements = j.at("elements").get<std::vector<std::vector<int>>>();
  for (const auto& e : gb.elements)
    if (e.size() != cs.cliques.size())
      throw error("basis file: element length disagrees with the clique count");
  gb.delta = j.value("delta", 0LL);
  gb.rank = j.value("rank", 0);
  gb.enum_bound = j.value("enum_bound", 0LL);
  return gb;
}

// --- file helpers -----------------------------------------------------------

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << j.dump(2) << "\n";
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw error("cannot write " + path);
  out << text;
}

}  // namespace ich
