// Command-line front end for the ultrametric space library.
//
// Exit codes: 0 success, 1 validation or parse failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "um/classify.hpp"
#include "um/generate.hpp"
#include "um/hausdorff.hpp"
#include "um/io.hpp"
#include "um/msp.hpp"
#include "um/space.hpp"
#include "um/tree.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) items.push_back(item);
  return items;
}

um::PointSet parse_point_list(const um::UltrametricSpace& space,
                              const std::string& csv, const char* flag) {
  std::vector<int> points;
  for (const std::string& label : split_csv(csv)) {
    const std::optional<int> p = space.index_of(label);
    if (!p)
      throw um::Error(um::errc::usage, std::string("unknown point '") + label +
                                           "' in --" + flag);
    points.push_back(*p);
  }
  if (points.empty())
    throw um::Error(um::errc::usage,
                    std::string("--") + flag + " needs at least one point");
  return um::PointSet(std::move(points));
}

std::string format_set(const um::UltrametricSpace& space,
                       const um::PointSet& set) {
  std::string out = "{";
  bool first = true;
  for (int p : set) {
    if (!first) out += ",";
    out += space.label(p);
    first = false;
  }
  return out + "}";
}

ordered_json set_json(const um::UltrametricSpace& space,
                      const um::PointSet& set) {
  ordered_json arr = ordered_json::array();
  for (int p : set) arr.push_back(space.label(p));
  return arr;
}

ordered_json balls_json(const um::UltrametricSpace& space,
                        const um::Ballean& balls) {
  ordered_json arr = ordered_json::array();
  for (const um::Ball& ball : balls) {
    ordered_json entry;
    entry["points"] = set_json(space, ball.points);
    entry["diameter"] = ball.diameter.str();
    arr.push_back(std::move(entry));
  }
  return arr;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw um::Error(um::errc::bad_input, "cannot write file: " + out_path);
  out << text;
}

struct Options {
  std::string file;
  std::string format;
  std::string output;
  std::string a_csv, b_csv;
  std::string start_label;
  std::string algorithm = "greedy";
  std::string labels_csv;
  bool counts = false;
  bool show_balls = false;
  int n = 1;
  int branching = 0;
  std::uint64_t seed = 0;
};

int run_validate(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  std::cout << "ultrametric: OK (n=" << space.size()
            << ", |Sp|=" << um::spectrum(space).size() << ")\n";
  return 0;
}

int run_spectrum(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  const um::Spectrum sp = um::spectrum(space);
  const um::Multispectrum multi = um::multispectrum(space);
  if (opt.format == "json") {
    ordered_json doc;
    ordered_json values = ordered_json::array();
    for (const um::Weight& w : sp) values.push_back(w.str());
    doc["spectrum"] = std::move(values);
    ordered_json counts = ordered_json::array();
    for (const auto& [w, count] : multi)
      counts.push_back(ordered_json::array({w.str(), count}));
    doc["counts"] = std::move(counts);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  if (opt.counts) {
    for (const auto& [w, count] : multi)
      std::cout << w << " " << count << "\n";
    return 0;
  }
  bool first = true;
  for (const um::Weight& w : sp) {
    std::cout << (first ? "" : " ") << w;
    first = false;
  }
  std::cout << "\n";
  return 0;
}

int run_tree(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  um::RepresentingTree tree = um::build_representing_tree(space);
  emit(opt.format == "json" ? um::tree_json(space, tree)
                            : um::export_tree_dot(space, tree),
       opt.output);
  return 0;
}

int run_balls(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  um::RepresentingTree tree = um::build_representing_tree(space);
  um::Ballean balls = um::ballean(tree);
  if (opt.format == "json") {
    ordered_json doc;
    doc["balls"] = balls_json(space, balls);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (const um::Ball& ball : balls)
    std::cout << format_set(space, ball.points)
              << " diameter=" << ball.diameter << "\n";
  return 0;
}

int run_msp(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  int start = 0;
  if (!opt.start_label.empty()) {
    const std::optional<int> p = space.index_of(opt.start_label);
    if (!p)
      throw um::Error(um::errc::usage,
                      "unknown point '" + opt.start_label + "' in --start");
    start = *p;
  }
  um::SpanningPath path;
  if (opt.algorithm == "tree") {
    um::RepresentingTree tree = um::build_representing_tree(space);
    path = um::tree_guided_spanning_path(space, tree, start);
  } else {
    path = um::greedy_spanning_path(space, start);
  }
  if (opt.format == "json") {
    ordered_json doc;
    ordered_json order = ordered_json::array();
    for (int p : path.order) order.push_back(space.label(p));
    doc["path"] = std::move(order);
    ordered_json weights = ordered_json::array();
    for (const um::Weight& w : path.spectrum) weights.push_back(w.str());
    doc["spectrum"] = std::move(weights);
    doc["total"] = um::total_weight(path).str();
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << "path:";
  for (int p : path.order) std::cout << " " << space.label(p);
  std::cout << "\nspectrum:";
  for (const um::Weight& w : path.spectrum) std::cout << " " << w;
  std::cout << "\ntotal: " << um::total_weight(path) << "\n";
  return 0;
}

int run_mst(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  um::SpanningTree mst = um::kruskal_mst(space);
  if (opt.format == "json") {
    ordered_json doc;
    ordered_json edges = ordered_json::array();
    for (const um::Edge& e : mst.edges) {
      ordered_json entry;
      entry["u"] = space.label(e.u);
      entry["v"] = space.label(e.v);
      entry["w"] = e.w.str();
      edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    doc["total"] = um::total_weight(mst).str();
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (const um::Edge& e : mst.edges)
    std::cout << space.label(e.u) << " " << space.label(e.v) << " " << e.w
              << "\n";
  std::cout << "total: " << um::total_weight(mst) << "\n";
  return 0;
}

int run_classify(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  um::RepresentingTree tree = um::build_representing_tree(space);
  um::ClassReport report = um::classify(space, tree);
  if (opt.format == "json") {
    ordered_json doc;
    doc["strictly_binary"] = report.strictly_binary;
    doc["injective_labeling"] = report.injective_labeling;
    doc["gomory_hu_extremal"] = report.gomory_hu_extremal;
    doc["maximally_rigid"] = report.maximally_rigid;
    doc["all_msts_are_paths"] = report.all_msts_are_paths;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  auto flag = [](bool b) { return b ? "true" : "false"; };
  std::cout << "strictly_binary=" << flag(report.strictly_binary) << "\n"
            << "injective_labeling=" << flag(report.injective_labeling) << "\n"
            << "gomory_hu_extremal=" << flag(report.gomory_hu_extremal) << "\n"
            << "maximally_rigid=" << flag(report.maximally_rigid) << "\n"
            << "all_msts_are_paths=" << flag(report.all_msts_are_paths)
            << "\n";
  return 0;
}

int run_hausdorff(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  um::PointSet a = parse_point_list(space, opt.a_csv, "a");
  um::PointSet b = parse_point_list(space, opt.b_csv, "b");
  um::RepresentingTree tree = um::build_representing_tree(space);
  um::Weight d = um::hausdorff_distance(space, tree, a, b);
  um::Ballean family;
  if (a != b) family = um::hausdorff_ball_family(space, tree, a, b);
  if (opt.format == "json") {
    ordered_json doc;
    doc["distance"] = d.str();
    doc["balls"] = balls_json(space, family);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  std::cout << d << "\n";
  if (opt.show_balls)
    for (const um::Ball& ball : family)
      std::cout << format_set(space, ball.points)
                << " diameter=" << ball.diameter << "\n";
  return 0;
}

int run_dist(const Options& opt) {
  um::UltrametricSpace space = um::load_space_file(opt.file);
  um::PointSet a = parse_point_list(space, opt.a_csv, "a");
  um::PointSet b = parse_point_list(space, opt.b_csv, "b");
  std::cout << um::set_distance(space, a, b) << "\n";
  return 0;
}

int run_gen(const Options& opt) {
  um::GeneratorSpec spec;
  spec.n = opt.n;
  spec.seed = opt.seed;
  spec.branching = opt.branching > 0 ? opt.branching : std::max(2, opt.n);
  if (!opt.labels_csv.empty()) {
    for (const std::string& token : split_csv(opt.labels_csv)) {
      auto w = um::Weight::parse(token);
      if (!w)
        throw um::Error(um::errc::usage,
                        "bad distance '" + token + "' in --labels");
      spec.label_pool.push_back(*w);
    }
  }
  um::UltrametricSpace space = um::generate_space(spec);
  emit(opt.format == "json" ? um::serialize_json(space)
                            : um::serialize_matrix(space),
       opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for finite ultrametric spaces"};
  app.require_subcommand(1);
  Options opt;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "space file (matrix or JSON form)")
        ->required();
  };
  auto add_format = [&](CLI::App* cmd, const char* choices,
                        const char* fallback) {
    opt.format = fallback;
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(split_csv(choices)));
  };

  CLI::App* validate =
      app.add_subcommand("validate", "check the ultrametric axioms");
  add_file(validate);

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "list the distinct distance values");
  add_file(spectrum);
  spectrum->add_flag("--counts", opt.counts,
                     "print each nonzero value with its pair count");
  add_format(spectrum, "text,json", "text");

  CLI::App* tree =
      app.add_subcommand("tree", "build and export the representing tree");
  add_file(tree);
  add_format(tree, "dot,json", "dot");
  tree->add_option("-o,--output", opt.output, "write to a file instead");

  CLI::App* balls = app.add_subcommand("balls", "list every closed ball");
  add_file(balls);
  add_format(balls, "text,json", "text");

  CLI::App* msp = app.add_subcommand("msp", "compute a minimum spanning path");
  add_file(msp);
  msp->add_option("--start", opt.start_label,
                  "starting point (default: the first point)");
  msp->add_option("--algorithm", opt.algorithm,
                  "path construction: greedy or tree")
      ->check(CLI::IsMember({"greedy", "tree"}));
  add_format(msp, "text,json", "text");

  CLI::App* mst = app.add_subcommand("mst", "compute a minimum spanning tree");
  add_file(mst);
  add_format(mst, "text,json", "text");

  CLI::App* classify =
      app.add_subcommand("classify", "report the structural classes");
  add_file(classify);
  add_format(classify, "text,json", "text");

  CLI::App* hausdorff = app.add_subcommand(
      "hausdorff", "Hausdorff distance between two sets of points");
  add_file(hausdorff);
  hausdorff->add_option("--a", opt.a_csv, "first set, comma-separated labels")
      ->required();
  hausdorff->add_option("--b", opt.b_csv, "second set, comma-separated labels")
      ->required();
  hausdorff->add_flag("--show-balls", opt.show_balls,
                      "also list the determining balls");
  add_format(hausdorff, "text,json", "text");

  CLI::App* dist = app.add_subcommand(
      "dist", "smallest distance between two sets of points");
  add_file(dist);
  dist->add_option("--a", opt.a_csv, "first set, comma-separated labels")
      ->required();
  dist->add_option("--b", opt.b_csv, "second set, comma-separated labels")
      ->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a random space");
  gen->add_option("--n", opt.n, "number of points")->required();
  gen->add_option("--seed", opt.seed, "random seed");
  gen->add_option("--labels", opt.labels_csv,
                  "distance pool, comma-separated decimals");
  gen->add_option("--branching", opt.branching,
                  "max children per tree node (default: max(2, n))");
  add_format(gen, "um,json", "um");
  gen->add_option("-o,--output", opt.output, "write to a file instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(validate)) return run_validate(opt);
    if (app.got_subcommand(spectrum)) return run_spectrum(opt);
    if (app.got_subcommand(tree)) return run_tree(opt);
    if (app.got_subcommand(balls)) return run_balls(opt);
    if (app.got_subcommand(msp)) return run_msp(opt);
    if (app.got_subcommand(mst)) return run_mst(opt);
    if (app.got_subcommand(classify)) return run_classify(opt);
    if (app.got_subcommand(hausdorff)) return run_hausdorff(opt);
    if (app.got_subcommand(dist)) return run_dist(opt);
    if (app.got_subcommand(gen)) return run_gen(opt);
  } catch (const um::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == um::errc::usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
