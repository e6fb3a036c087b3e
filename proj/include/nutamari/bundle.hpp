#pragma once

// Serializable realization bundle and the text exporters (JSON, OFF, DOT).
// Serialization is byte-deterministic for a fixed input: canonical ids,
// sorted collections, integer coordinates only.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nutamari/faces.hpp"
#include "nutamari/projection.hpp"
#include "nutamari/version.hpp"

namespace nutamari {

struct RealizationBundle {
  std::string schema = "nutamari/bundle/1";
  std::string path;
  int rank_n = 0;
  bool projected = false;  // false: raw brick vectors (non-staircase fallback)
  int dim = 0;             // length of each vertex coordinate vector

  std::vector<IntVec> vertices;  // by tree id

  struct Edge {
    int from = 0, to = 0;
    std::string dir = "up";
    friend bool operator==(const Edge& a, const Edge& b) {
      return a.from == b.from && a.to == b.to && a.dir == b.dir;
    }
  };
  std::vector<Edge> edges;

  struct FaceRec {
    int base = 0;                     // base tree id
    std::vector<std::string> ascents; // marked ascent nodes, "(x,y)"
    std::vector<int> vertex_ids;      // sorted
    int dim = 0;
    std::vector<int> polygon;         // oriented cycle for 2-faces, may be empty
    friend bool operator==(const FaceRec& a, const FaceRec& b) {
      return a.base == b.base && a.ascents == b.ascents && a.vertex_ids == b.vertex_ids &&
             a.dim == b.dim && a.polygon == b.polygon;
    }
  };
  std::vector<FaceRec> faces;

  std::vector<std::vector<int>> cone;  // rays e_i - e_j as pairs [i, j]

  std::string tool_version = kToolVersion;
  std::string conventions = kConventions;

  friend bool operator==(const RealizationBundle& a, const RealizationBundle& b) {
    return a.schema == b.schema && a.path == b.path && a.rank_n == b.rank_n &&
           a.projected == b.projected && a.dim == b.dim && a.vertices == b.vertices &&
           a.edges == b.edges && a.faces == b.faces && a.cone == b.cone &&
           a.tool_version == b.tool_version && a.conventions == b.conventions;
  }
};

namespace detail {

// Deterministic polygon cycle for a planar 2-face: angle order around the
// centroid, started at the smallest id with a fixed orientation tiebreak.
// Doubles only order the cycle; the emitted coordinates stay integral.
inline std::vector<int> polygon_cycle(const std::vector<int>& ids,
                                      const std::vector<IntVec>& coords) {
  size_t k = ids.size();
  if (k < 3) return {};
  size_t dim = coords[ids[0]].size();
  std::vector<double> centroid(dim, 0.0);
  for (int id : ids)
    for (size_t c = 0; c < dim; ++c) centroid[c] += static_cast<double>(coords[id][c]);
  for (auto& v : centroid) v /= static_cast<double>(k);

  // Orthonormal-ish plane basis from the first two independent offsets.
  std::vector<std::vector<double>> offs;
  for (int id : ids) {
    std::vector<double> o(dim);
    for (size_t c = 0; c < dim; ++c) o[c] = coords[id][c] - centroid[c];
    offs.push_back(std::move(o));
  }
  auto dot = [&](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
    return s;
  };
  std::vector<double> u = offs[0];
  double un = std::sqrt(dot(u, u));
  for (auto& v : u) v /= un;
  std::vector<double> w;
  for (size_t i = 1; i < offs.size(); ++i) {
    std::vector<double> cand = offs[i];
    double proj = dot(cand, u);
    for (size_t c = 0; c < dim; ++c) cand[c] -= proj * u[c];
    if (std::sqrt(dot(cand, cand)) > 1e-9) { w = cand; break; }
  }
  if (w.empty()) return {};
  double wn = std::sqrt(dot(w, w));
  for (auto& v : w) v /= wn;

  std::vector<std::pair<double, int>> ang;
  for (size_t i = 0; i < k; ++i)
    ang.emplace_back(std::atan2(dot(offs[i], w), dot(offs[i], u)), ids[i]);
  std::sort(ang.begin(), ang.end());
  std::vector<int> cycle;
  for (auto& [a, id] : ang) cycle.push_back(id);
  auto mn = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), mn, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back())
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace detail

inline RealizationBundle export_realization(const FerrersRegion& f,
                                            const ProjectionSpec* spec) {
  RealizationBundle b;
  b.path = f.path.str();
  b.rank_n = f.rank_n;
  b.projected = spec != nullptr;

  BoundedFaceComplex complex = bounded_faces(f);
  if (spec) {
    for (const auto& t : complex.trees) b.vertices.push_back(y_coords(t, f, *spec));
    b.dim = spec->blocks - 1;
  } else {
    b.vertices = complex.bricks;
    b.dim = f.rank_n + 1;
  }

  TamariGraph g = tamari_hasse(f);
  for (const auto& e : g.edges) b.edges.push_back({e.from, e.to, "up"});

  for (const auto& bf : complex.faces) {
    RealizationBundle::FaceRec rec;
    rec.base = bf.face.tree_id;
    for (const auto& m : bf.face.marks) rec.ascents.push_back(m.str());
    rec.vertex_ids = bf.vertex_tree_ids;
    rec.dim = bf.dim;
    if (b.projected && rec.dim == 2)
      rec.polygon = detail::polygon_cycle(rec.vertex_ids, b.vertices);
    b.faces.push_back(std::move(rec));
  }

  for (const auto& r : bruhat_cone(complex.instance)) b.cone.push_back({r.i, r.j});
  return b;
}

inline nlohmann::ordered_json to_json(const RealizationBundle& b) {
  nlohmann::ordered_json j;
  j["schema"] = b.schema;
  j["path"] = b.path;
  j["rank"] = b.rank_n;
  j["projected"] = b.projected;
  j["dim"] = b.dim;
  j["vertices"] = b.vertices;
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : b.edges) j["edges"].push_back({e.from, e.to, e.dir});
  j["faces"] = nlohmann::ordered_json::array();
  for (const auto& fc : b.faces) {
    nlohmann::ordered_json jf;
    jf["base"] = fc.base;
    jf["ascents"] = fc.ascents;
    jf["vertices"] = fc.vertex_ids;
    jf["dim"] = fc.dim;
    if (!fc.polygon.empty()) jf["polygon"] = fc.polygon;
    j["faces"].push_back(std::move(jf));
  }
  j["cone"] = b.cone;
  j["metadata"] = {{"tool", "nutamari"},
                   {"version", b.tool_version},
                   {"conventions", b.conventions}};
  return j;
}

inline RealizationBundle from_json(const nlohmann::json& j) {
  RealizationBundle b;
  b.schema = j.at("schema").get<std::string>();
  if (b.schema != "nutamari/bundle/1")
    throw std::invalid_argument("unsupported bundle schema: " + b.schema);
  b.path = j.at("path").get<std::string>();
  b.rank_n = j.at("rank").get<int>();
  b.projected = j.at("projected").get<bool>();
  b.dim = j.at("dim").get<int>();
  b.vertices = j.at("vertices").get<std::vector<IntVec>>();
  for (const auto& je : j.at("edges"))
    b.edges.push_back({je.at(0).get<int>(), je.at(1).get<int>(), je.at(2).get<std::string>()});
  for (const auto& jf : j.at("faces")) {
    RealizationBundle::FaceRec fc;
    fc.base = jf.at("base").get<int>();
    fc.ascents = jf.at("ascents").get<std::vector<std::string>>();
    fc.vertex_ids = jf.at("vertices").get<std::vector<int>>();
    fc.dim = jf.at("dim").get<int>();
    if (jf.contains("polygon")) fc.polygon = jf.at("polygon").get<std::vector<int>>();
    b.faces.push_back(std::move(fc));
  }
  b.cone = j.at("cone").get<std::vector<std::vector<int>>>();
  b.tool_version = j.at("metadata").at("version").get<std::string>();
  b.conventions = j.at("metadata").at("conventions").get<std::string>();
  return b;
}

inline std::string serialize_bundle(const RealizationBundle& b) {
  return to_json(b).dump(2) + "\n";
}

// Polygon mesh of the 2-skeleton, fan-triangulated; coordinates padded to 3D.
inline std::string write_off(const RealizationBundle& b) {
  if (!b.projected || b.dim > 3)
    throw std::invalid_argument("OFF export needs a projected bundle of dimension <= 3");
  std::vector<std::vector<int>> triangles;
  for (const auto& fc : b.faces) {
    if (fc.dim != 2 || fc.polygon.size() < 3) continue;
    for (size_t i = 1; i + 1 < fc.polygon.size(); ++i)
      triangles.push_back({fc.polygon[0], fc.polygon[i], fc.polygon[i + 1]});
  }
  std::string out = "OFF\n";
  out += std::to_string(b.vertices.size()) + " " + std::to_string(triangles.size()) + " 0\n";
  for (const auto& v : b.vertices) {
    for (int c = 0; c < 3; ++c) {
      if (c) out += " ";
      out += std::to_string(c < static_cast<int>(v.size()) ? v[c] : 0);
    }
    out += "\n";
  }
  for (const auto& t : triangles)
    out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " +
           std::to_string(t[2]) + "\n";
  return out;
}

inline std::string write_dot(const TamariGraph& g) {
  std::string out = "digraph tamari {\n";
  for (size_t i = 0; i < g.trees.size(); ++i)
    out += "  t" + std::to_string(i) + ";\n";
  for (const auto& e : g.edges)
    out += "  t" + std::to_string(e.from) + " -> t" + std::to_string(e.to) + ";\n";
  out += "}\n";
  return out;
}

// Write-temp-rename so readers never observe a partial file.
inline void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

}  // namespace nutamari
