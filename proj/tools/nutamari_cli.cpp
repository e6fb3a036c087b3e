// Command-line front end: trees, brick, lattice, faces, project, check.
// Exit codes: 0 success, 1 validation error, 2 invariant failure.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nutamari/bundle.hpp"
#include "nutamari/check.hpp"

using namespace nutamari;

namespace {

std::string fmt_vec(const IntVec& v) {
  bool nonpos = std::all_of(v.begin(), v.end(), [](long long x) { return x <= 0; });
  std::string s = nonpos ? "-(" : "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nonpos ? -v[i] : v[i]);
  }
  return s + ")";
}

void emit(const std::string& path, const std::string& content) {
  if (path == "-") std::cout << content;
  else atomic_write(path, content);
}

int cmd_trees(const std::string& path_text, const std::string& format) {
  FerrersRegion f = build_region(parse_path(path_text));
  std::vector<NuTree> trees = enumerate_trees(f);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["path"] = f.path.str();
    j["rank"] = f.rank_n;
    j["trees"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < trees.size(); ++i) {
      nlohmann::ordered_json jt;
      jt["id"] = i;
      jt["nodes"] = nlohmann::ordered_json::array();
      for (const auto& p : trees[i].nodes) jt["nodes"].push_back({p.x, p.y});
      jt["facet"] = tree_facet(trees[i], f).positions;
      j["trees"].push_back(std::move(jt));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "path " << f.path.str() << ": " << trees.size() << " trees, rank "
              << f.rank_n << "\n";
    for (size_t i = 0; i < trees.size(); ++i) {
      Facet I = tree_facet(trees[i], f);
      std::cout << "T" << i << ": " << trees[i].str() << " positions {";
      for (size_t k = 0; k < I.positions.size(); ++k)
        std::cout << (k ? "," : "") << I.positions[k];
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmd_brick(const std::string& path_text, const std::string& format) {
  FerrersRegion f = build_region(parse_path(path_text));
  SubwordInstance s = make_instance(f);
  std::vector<NuTree> trees = enumerate_trees(f);
  std::vector<Root> rays = bruhat_cone(s);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["path"] = f.path.str();
    j["w"] = s.w.window;
    j["bricks"] = nlohmann::ordered_json::array();
    for (const auto& t : trees) j["bricks"].push_back(brick_vector_fast(t, f));
    j["cone"] = nlohmann::ordered_json::array();
    for (const auto& r : rays) j["cone"].push_back({r.i, r.j});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "path " << f.path.str() << ": w = " << s.w.str() << "\n";
    for (size_t i = 0; i < trees.size(); ++i)
      std::cout << "T" << i << ": " << fmt_vec(brick_vector_fast(trees[i], f)) << "\n";
    for (const auto& r : rays) std::cout << "ray: " << r.str() << "\n";
  }
  return 0;
}

int cmd_lattice(const std::string& path_text, const std::string& dot_path) {
  FerrersRegion f = build_region(parse_path(path_text));
  TamariGraph g = tamari_hasse(f);
  if (!dot_path.empty()) {
    emit(dot_path, write_dot(g));
  } else {
    std::cout << "path " << f.path.str() << ": " << g.trees.size() << " trees, "
              << g.edges.size() << " cover relations\n";
    for (const auto& e : g.edges)
      std::cout << "T" << e.from << " -> T" << e.to << " (rotate " << e.rotated.str()
                << ")\n";
  }
  return 0;
}

int cmd_faces(const std::string& path_text, const std::string& format) {
  FerrersRegion f = build_region(parse_path(path_text));
  BoundedFaceComplex c = bounded_faces(f);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["path"] = f.path.str();
    j["faces"] = nlohmann::ordered_json::array();
    for (const auto& bf : c.faces) {
      nlohmann::ordered_json jf;
      jf["dim"] = bf.dim;
      jf["base"] = bf.face.tree_id;
      jf["ascents"] = nlohmann::ordered_json::array();
      for (const auto& m : bf.face.marks) jf["ascents"].push_back({m.x, m.y});
      jf["positions"] = bf.face.positions;
      jf["vertices"] = bf.vertex_tree_ids;
      j["faces"].push_back(std::move(jf));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "path " << f.path.str() << ": " << c.faces.size() << " bounded faces\n";
    for (const auto& bf : c.faces) {
      std::cout << "dim " << bf.dim << " base T" << bf.face.tree_id << " marks {";
      for (size_t i = 0; i < bf.face.marks.size(); ++i)
        std::cout << (i ? "," : "") << bf.face.marks[i].str();
      std::cout << "} vertices {";
      for (size_t i = 0; i < bf.vertex_tree_ids.size(); ++i)
        std::cout << (i ? "," : "") << "T" << bf.vertex_tree_ids[i];
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmd_project(const std::string& path_text, bool normalize, const std::string& off_path,
                const std::string& json_path) {
  LatticePath path = parse_path(path_text);
  if (normalize) path = normalize_path(path);
  std::string reason;
  if (!is_staircase_normal(path, &reason)) {
    bool fixable = reason != "consecutive north steps";
    throw std::invalid_argument("path " + path.str() + " is not a staircase: " + reason +
                                (fixable && !normalize ? " (pass --normalize)" : ""));
  }
  FerrersRegion f = build_region(path);
  ProjectionSpec spec = parse_staircase(f);
  RealizationBundle bundle = export_realization(f, &spec);
  if (!json_path.empty()) emit(json_path, serialize_bundle(bundle));
  if (!off_path.empty()) emit(off_path, write_off(bundle));
  if (json_path.empty() && off_path.empty()) {
    std::cout << "path " << f.path.str() << ": " << bundle.vertices.size()
              << " vertices in dimension " << bundle.dim << "\n";
    for (size_t i = 0; i < bundle.vertices.size(); ++i)
      std::cout << "y(T" << i << ") = " << fmt_vec(bundle.vertices[i]) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& path_text, int max_size) {
  FerrersRegion f = build_region(parse_path(path_text));
  if (static_cast<int>(f.points.size()) > max_size)
    throw std::invalid_argument("region has " + std::to_string(f.points.size()) +
                                " points, over the size limit " + std::to_string(max_size));
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CheckResult> rs = run_invariant_suite(f);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  bool all = true;
  for (const auto& r : rs) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass) std::cout << ": " << r.detail;
    std::cout << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "all invariants hold" : "invariant failures detected") << " ("
            << rs.size() << " checks, " << ms << " ms)\n";
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nu-Tamari lattices, brick polyhedra and associahedron realizations"};
  app.require_subcommand(1);

  std::string path_text, format = "table", dot_path, off_path, json_path;
  bool normalize = false;
  int max_size = 12;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
  };

  auto* trees = app.add_subcommand("trees", "list all nu-trees");
  trees->add_option("path", path_text, "lattice path over {N,E}")->required();
  add_format(trees);

  auto* brick = app.add_subcommand("brick", "brick vectors and Bruhat cone rays");
  brick->add_option("path", path_text)->required();
  add_format(brick);

  auto* lattice = app.add_subcommand("lattice", "rotation lattice Hasse diagram");
  lattice->add_option("path", path_text)->required();
  lattice->add_option("--dot", dot_path, "write DOT graph to file ('-' for stdout)");

  auto* faces = app.add_subcommand("faces", "bounded faces of the brick polyhedron");
  faces->add_option("path", path_text)->required();
  add_format(faces);

  auto* project = app.add_subcommand("project", "projected realization for staircase paths");
  project->add_option("path", path_text)->required();
  project->add_flag("--normalize", normalize, "prepend N / append E when missing");
  project->add_option("--off", off_path, "write OFF mesh to file");
  project->add_option("--json", json_path, "write realization bundle to file");

  auto* check = app.add_subcommand("check", "run the cross-module invariant suite");
  check->add_option("path", path_text)->required();
  check->add_option("--max-size", max_size, "largest admissible point count");

  CLI11_PARSE(app, argc, argv);

  try {
    if (trees->parsed()) return cmd_trees(path_text, format);
    if (brick->parsed()) return cmd_brick(path_text, format);
    if (lattice->parsed()) return cmd_lattice(path_text, dot_path);
    if (faces->parsed()) return cmd_faces(path_text, format);
    if (project->parsed()) return cmd_project(path_text, normalize, off_path, json_path);
    if (check->parsed()) return cmd_check(path_text, max_size);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
