// Command-line front end over the C API. JSON results go to stdout (or
// --output), a short human summary to stderr.
//
// Exit codes: 0 success, 1 an identity did not hold, 2 bad input.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mobiuslab/mobiuslab.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct InputError {
  std::string message;
};

struct PosetDeleter {
  void operator()(mobiuslab_poset* p) const { mobiuslab_poset_free(p); }
};
struct GraphDeleter {
  void operator()(mobiuslab_graph* g) const { mobiuslab_graph_free(g); }
};
struct TreeDeleter {
  void operator()(mobiuslab_tree* t) const { mobiuslab_tree_free(t); }
};
using PosetPtr = std::unique_ptr<mobiuslab_poset, PosetDeleter>;
using GraphPtr = std::unique_ptr<mobiuslab_graph, GraphDeleter>;
using TreePtr = std::unique_ptr<mobiuslab_tree, TreeDeleter>;

void check(int status) {
  if (status != MOBIUSLAB_OK)
    throw InputError{std::string(mobiuslab_status_name(status)) + ": " + mobiuslab_last_error()};
}

/// Takes ownership of a C string from the library.
std::string take(char* s) {
  std::string out(s);
  mobiuslab_string_free(s);
  return out;
}

Json call_json(const std::function<int(char**)>& fn) {
  char* out = nullptr;
  check(fn(&out));
  return Json::parse(take(out));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{"cannot open " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  std::string output;
  bool csv = false;
  std::uint64_t seed = 0;

  std::string poset_file;
  std::string instance;

  std::string from, to;
  bool matrix = false, number = false;
  unsigned power = 1;
  bool power_set = false;

  std::string function_file;
  std::string direction = "up";
  bool sums = false;

  std::string element;
  std::vector<std::string> elements;

  std::string graph_file;
  std::string graph_spec;
  unsigned evaluate = 3;

  std::string tree_file;
  std::string edges_file;
  std::optional<std::size_t> root;
  std::optional<std::size_t> n;
  bool det = false, distance = false, zeta = false, inverse = false, factorization = false;

  std::string b;
  bool bound = false;

  std::string suite = "small";
  std::vector<int> only;
  bool list = false;

  std::optional<std::size_t> random_poset, random_graph, random_tree;
  double density = 0.3;
};

PosetPtr load_poset(const Options& o) {
  if (o.poset_file.empty() == o.instance.empty()) throw InputError{"give exactly one of --poset or --instance"};
  mobiuslab_poset* p = nullptr;
  if (!o.poset_file.empty()) check(mobiuslab_poset_from_file(o.poset_file.c_str(), &p));
  else check(mobiuslab_poset_named(o.instance.c_str(), &p));
  return PosetPtr(p);
}

GraphPtr load_graph(const Options& o) {
  if (o.graph_file.empty() == o.graph_spec.empty()) throw InputError{"give exactly one of --graph or --named"};
  mobiuslab_graph* g = nullptr;
  if (!o.graph_file.empty()) {
    const auto text = read_text(o.graph_file);
    const int status = mobiuslab_graph_from_edge_list(text.c_str(), &g);
    if (status != MOBIUSLAB_OK)
      throw InputError{o.graph_file + ": " + mobiuslab_status_name(status) + ": " + mobiuslab_last_error()};
  } else {
    check(mobiuslab_graph_named(o.graph_spec.c_str(), &g));
  }
  return GraphPtr(g);
}

std::string read_input_json(const std::string& path) {
  const auto text = read_text(path);
  // Parse here too so file errors carry the path and position.
  try {
    const auto parsed = Json::parse(text);
    (void)parsed;
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError{path + ": line " + std::to_string(line) + ", column " + std::to_string(column) + ": malformed JSON"};
  }
  return text;
}

/// Writes {"schema": 1, ...payload} and returns the exit code implied by a
/// "pass" field, if any.
int emit(const Options& o, const Json& payload) {
  Json out;
  out["schema"] = 1;
  if (payload.is_object()) {
    for (const auto& [k, v] : payload.items()) out[k] = v;
  } else {
    out["result"] = payload;
  }
  const auto text = out.dump(2) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InputError{"cannot write " + o.output};
    f << text;
  }
  if (payload.is_object() && payload.contains("pass") && payload["pass"].is_boolean()) {
    const bool pass = payload["pass"].get<bool>();
    std::cerr << (pass ? "pass" : "FAIL") << "\n";
    return pass ? kExitOk : kExitFailed;
  }
  return kExitOk;
}

int emit_text(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!f) throw InputError{"cannot write " + o.output};
    f << text;
  }
  return kExitOk;
}

std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

std::string matrix_csv(const Json& labels, const Json& m) {
  std::string out = "";
  for (const auto& l : labels) out += "," + csv_cell(l);
  out += "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += csv_cell(labels[i]);
    for (const auto& v : m[i]) out += "," + csv_cell(v);
    out += "\n";
  }
  return out;
}

int cmd_gen(const Options& o) {
  const int chosen = !o.instance.empty() + !o.graph_spec.empty() + o.random_poset.has_value() +
                     o.random_graph.has_value() + o.random_tree.has_value();
  if (chosen != 1)
    throw InputError{"gen needs exactly one of --instance, --named, --random-poset, --random-graph, --random-tree"};
  if (!o.instance.empty() || o.random_poset) {
    mobiuslab_poset* p = nullptr;
    if (o.random_poset) check(mobiuslab_poset_random(*o.random_poset, o.density, o.seed, &p));
    else check(mobiuslab_poset_named(o.instance.c_str(), &p));
    PosetPtr owned(p);
    const auto j = call_json([&](char** out) { return mobiuslab_poset_to_json(owned.get(), out); });
    std::cerr << j["elements"].size() << " elements, " << j["covers"].size() << " covers\n";
    return emit(o, j);
  }
  if (o.random_tree) {
    mobiuslab_tree* t = nullptr;
    check(mobiuslab_tree_random(*o.random_tree, o.seed, &t));
    TreePtr owned(t);
    return emit(o, call_json([&](char** out) { return mobiuslab_tree_report(owned.get(), "json", out); }));
  }
  mobiuslab_graph* g = nullptr;
  if (o.random_graph) check(mobiuslab_graph_random(*o.random_graph, o.density, o.seed, &g));
  else check(mobiuslab_graph_named(o.graph_spec.c_str(), &g));
  GraphPtr owned(g);
  char* text = nullptr;
  check(mobiuslab_graph_to_edge_list(owned.get(), &text));
  return emit_text(o, take(text));
}

int cmd_mu(const Options& o) {
  auto p = load_poset(o);
  if (o.matrix) {
    const auto j = call_json([&](char** out) { return mobiuslab_matrix(p.get(), "mobius", 0, out); });
    if (o.csv) return emit_text(o, matrix_csv(j["labels"], j["matrix"]));
    return emit(o, j);
  }
  if (o.number) {
    char* out = nullptr;
    check(mobiuslab_mobius_number(p.get(), &out));
    const auto v = Json::parse(take(out));
    std::cerr << "mu(P) = " << v.dump() << "\n";
    return emit(o, {{"mobius_number", v}});
  }
  if (o.from.empty() && o.to.empty() && !o.csv) throw InputError{"mu needs --from and --to, --matrix or --number"};
  char* out = nullptr;
  check(mobiuslab_mobius(p.get(), o.from.c_str(), o.to.c_str(), &out));
  const auto v = Json::parse(take(out));
  std::cerr << "mu(" << o.from << ", " << o.to << ") = " << v.dump() << "\n";
  return emit(o, {{"from", o.from}, {"to", o.to}, {"mu", v}});
}

int cmd_zeta(const Options& o) {
  auto p = load_poset(o);
  const auto j = call_json([&](char** out) {
    return o.power_set ? mobiuslab_matrix(p.get(), "zeta_power", o.power, out) : mobiuslab_matrix(p.get(), "zeta", 0, out);
  });
  if (o.csv) return emit_text(o, matrix_csv(j["labels"], j["matrix"]));
  Json payload = j;
  if (o.power_set) payload["power"] = o.power;
  return emit(o, payload);
}

int cmd_invert(const Options& o) {
  auto p = load_poset(o);
  if (o.function_file.empty()) throw InputError{"invert needs --function"};
  const auto f = read_input_json(o.function_file);
  const auto j = call_json([&](char** out) {
    return mobiuslab_invert(p.get(), f.c_str(), o.direction.c_str(), o.sums ? 1 : 0, out);
  });
  Json payload = j;
  payload["pass"] = j["round_trip"];
  return emit(o, payload);
}

int cmd_chains(const Options& o) {
  auto p = load_poset(o);
  const auto j = call_json([&](char** out) { return mobiuslab_chains(p.get(), o.from.c_str(), o.to.c_str(), out); });
  std::cerr << j["chains"].dump() << " chains, signed sum " << j["signed_sum"].dump() << ", mu " << j["mu"].dump()
            << "\n";
  return emit(o, j);
}

int cmd_euler(const Options& o) {
  auto p = load_poset(o);
  const auto j = call_json([&](char** out) { return mobiuslab_euler(p.get(), out); });
  std::cerr << "chi = " << j["euler_characteristic"].dump() << ", 1 + mu(P) = "
            << (j["mobius_number"].is_number() ? std::to_string(j["mobius_number"].get<long long>() + 1)
                                               : j["mobius_number"].dump() + " + 1")
            << "\n";
  return emit(o, j);
}

int cmd_lattice_check(const Options& o) {
  auto p = load_poset(o);
  Json j = call_json([&](char** out) { return mobiuslab_lattice_check(p.get(), out); });
  const bool ok = j["lattice"].get<bool>() && j.value("laws", false);
  std::cerr << (j["lattice"].get<bool>() ? "lattice" : "not a lattice: " + j.value("reason", std::string())) << "\n";
  j["pass"] = ok;
  return emit(o, j);
}

int cmd_weisner(const Options& o) {
  auto p = load_poset(o);
  return emit(o, call_json([&](char** out) {
    return mobiuslab_weisner(p.get(), o.element.empty() ? nullptr : o.element.c_str(), out);
  }));
}

int cmd_cutset(const Options& o) {
  auto p = load_poset(o);
  const std::string labels = Json(o.elements).dump();
  return emit(o, call_json([&](char** out) {
    return mobiuslab_cutset(p.get(), o.elements.empty() ? nullptr : labels.c_str(), out);
  }));
}

int cmd_chromatic(const Options& o) {
  auto g = load_graph(o);
  const auto j = call_json([&](char** out) { return mobiuslab_chromatic(g.get(), o.evaluate, out); });
  std::cerr << "P(x) = " << j["polynomial"].get<std::string>() << "\n";
  return emit(o, j);
}

int cmd_charpoly(const Options& o) {
  auto p = load_poset(o);
  const auto j = call_json([&](char** out) { return mobiuslab_charpoly(p.get(), out); });
  std::cerr << "F(x) = " << j["polynomial"].get<std::string>() << "\n";
  return emit(o, j);
}

int cmd_whitney(const Options& o) {
  auto p = load_poset(o);
  const auto j = call_json([&](char** out) { return mobiuslab_whitney(p.get(), out); });
  if (o.csv) {
    std::string text = "rank,W,w\n";
    for (std::size_t k = 0; k < j["W"].size(); ++k)
      text += std::to_string(k) + "," + j["W"][k].dump() + "," + csv_cell(j["w"][k]) + "\n";
    return emit_text(o, text);
  }
  return emit(o, j);
}

TreePtr load_tree(const Options& o) {
  const int chosen = !o.tree_file.empty() + !o.edges_file.empty() + o.n.has_value();
  if (chosen != 1) throw InputError{"tree needs exactly one of --tree, --edges or --n"};
  mobiuslab_tree* t = nullptr;
  if (!o.tree_file.empty()) {
    const auto text = read_input_json(o.tree_file);
    check(mobiuslab_tree_from_json(text.c_str(), &t));
  } else if (!o.edges_file.empty()) {
    Options graph_options = o;
    graph_options.graph_file = o.edges_file;
    graph_options.graph_spec.clear();
    auto g = load_graph(graph_options);
    check(mobiuslab_tree_from_graph(g.get(), o.root.value_or(0), &t));
  } else {
    check(mobiuslab_tree_random(*o.n, o.seed, &t));
  }
  return TreePtr(t);
}

int cmd_tree(const Options& o) {
  auto t = load_tree(o);
  const int modes = o.det + o.distance + o.zeta + o.inverse + o.factorization;
  if (modes > 1) throw InputError{"choose one of --det, --distance, --zeta, --inverse, --factorization"};
  const char* what = o.det ? "det"
                     : o.distance ? "distance"
                     : o.zeta ? "zeta"
                     : o.inverse ? "inverse"
                     : o.factorization ? "factorization"
                     : "check";
  const auto j = call_json([&](char** out) { return mobiuslab_tree_report(t.get(), what, out); });
  if (o.csv && j.contains("matrix")) {
    Json labels = Json::array();
    for (const auto& v : j["order"]) labels.push_back(v.dump());
    return emit_text(o, matrix_csv(labels, j["matrix"]));
  }
  if (o.det) std::cerr << "det D = " << j["det"].dump() << ", closed form " << j["closed_form"].dump() << "\n";
  return emit(o, j);
}

int cmd_nulldesign(const Options& o) {
  auto p = load_poset(o);
  if (o.bound) {
    const auto j = call_json([&](char** out) {
      return mobiuslab_support_bound(p.get(), o.b.empty() ? nullptr : o.b.c_str(), out);
    });
    return emit(o, {{"bounds", j}});
  }
  if (o.function_file.empty()) throw InputError{"nulldesign needs --function or --bound"};
  const auto f = read_input_json(o.function_file);
  const auto j = call_json([&](char** out) {
    return mobiuslab_null_design(p.get(), f.c_str(), o.b.empty() ? nullptr : o.b.c_str(), out);
  });
  std::cerr << "strength " << j["strength"].dump() << "\n";
  return emit(o, j);
}

int cmd_verify_all(const Options& o) {
  if (o.list) return emit(o, {{"items", call_json([](char** out) { return mobiuslab_verify_list(out); })}});
  const std::string ids = Json(o.only).dump();
  const auto j = call_json([&](char** out) {
    return mobiuslab_verify(o.suite.c_str(), o.seed, o.only.empty() ? nullptr : ids.c_str(), out);
  });
  for (const auto& item : j["items"]) {
    char line[64];
    std::snprintf(line, sizeof line, "%3d  %s  ", item["id"].get<int>(), item["pass"].get<bool>() ? "PASS" : "FAIL");
    std::cerr << line << item["name"].get<std::string>() << ": " << item["summary"].get<std::string>() << "\n";
  }
  std::cerr << j["passed"].dump() << "/" << j["total"].dump() << " passed\n";
  Json payload = j;
  payload["pass"] = j["passed"] == j["total"];
  return emit(o, payload);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moebius functions, lattices and their identities, in exact arithmetic"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mobiuslab_version()));
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("-o,--output", o.output, "Write the result here instead of stdout");
    c->add_option("--seed", o.seed, "Seed for random instances")->capture_default_str();
  };
  auto poset_input = [&](CLI::App* c) {
    c->add_option("--poset", o.poset_file, "Poset JSON file {\"elements\", \"covers\"}");
    c->add_option("--instance", o.instance, "Named instance, e.g. boolean:3, partition:4, subspace:2:3");
  };

  auto* gen = app.add_subcommand("gen", "Emit an instance: poset JSON, edge list or tree JSON");
  common(gen);
  gen->add_option("--instance", o.instance, "Named poset instance");
  gen->add_option("--named", o.graph_spec, "Named graph, e.g. cycle:5");
  gen->add_option("--random-poset", o.random_poset, "Random poset on N elements");
  gen->add_option("--random-graph", o.random_graph, "Random graph on N vertices");
  gen->add_option("--random-tree", o.random_tree, "Random tree on N vertices, rooted at 0");
  gen->add_option("--density", o.density, "Edge probability for random posets and graphs")->capture_default_str();

  auto* mu = app.add_subcommand("mu", "Moebius function values");
  common(mu);
  poset_input(mu);
  mu->add_option("--from", o.from, "Lower label");
  mu->add_option("--to", o.to, "Upper label");
  mu->add_flag("--matrix", o.matrix, "Whole Moebius matrix");
  mu->add_flag("--number", o.number, "Moebius number of the poset");
  mu->add_flag("--csv", o.csv, "Matrix as CSV");

  auto* zeta = app.add_subcommand("zeta", "Zeta matrix or its powers");
  common(zeta);
  poset_input(zeta);
  zeta->add_option("--power", o.power, "Z^m")->each([&](const std::string&) { o.power_set = true; });
  zeta->add_flag("--csv", o.csv, "Matrix as CSV");

  auto* invert = app.add_subcommand("invert", "Moebius inversion of a label -> integer function");
  common(invert);
  poset_input(invert);
  invert->add_option("--function", o.function_file, "JSON label -> integer map")->required();
  invert->add_option("--direction", o.direction, "up: sums over x >= a; down: sums over x <= a")
      ->check(CLI::IsMember({"up", "down"}))
      ->capture_default_str();
  invert->add_flag("--sums", o.sums, "Compute the sums instead of inverting them");

  auto* chains = app.add_subcommand("chains", "Chains between two elements and their signed count");
  common(chains);
  poset_input(chains);
  chains->add_option("--from", o.from, "Lower label")->required();
  chains->add_option("--to", o.to, "Upper label")->required();

  auto* euler = app.add_subcommand("euler", "Order complex face counts and Euler characteristic");
  common(euler);
  poset_input(euler);

  auto* lattice = app.add_subcommand("lattice-check", "Lattice, rank and geometry properties");
  common(lattice);
  poset_input(lattice);

  auto* weisner = app.add_subcommand("weisner", "Weisner's identity at one or every a != 0");
  common(weisner);
  poset_input(weisner);
  weisner->add_option("--element", o.element, "Label of a; every a != 0 when omitted");

  auto* cutset = app.add_subcommand("cutset", "Cutset formula for mu(0,1)");
  common(cutset);
  poset_input(cutset);
  cutset->add_option("--element", o.elements, "Cutset member (repeat); the atoms when omitted");

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial via the contraction lattice");
  common(chromatic);
  chromatic->add_option("--graph", o.graph_file, "Edge list file");
  chromatic->add_option("--named", o.graph_spec, "Named graph, e.g. cycle:5");
  chromatic->add_option("--evaluate", o.evaluate, "Also evaluate at 0..K")->capture_default_str();

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of a ranked lattice");
  common(charpoly);
  poset_input(charpoly);

  auto* whitney = app.add_subcommand("whitney", "Whitney numbers W_k and signed sums w_k");
  common(whitney);
  poset_input(whitney);
  whitney->add_flag("--csv", o.csv, "Table as CSV");

  auto* tree = app.add_subcommand("tree", "Tree distance matrix identities");
  common(tree);
  tree->add_option("--tree", o.tree_file, "Tree JSON {\"n\", \"root\", \"parent\"}");
  tree->add_option("--edges", o.edges_file, "Tree as an edge list");
  tree->add_option("--root", o.root, "Root for --edges (default 0)");
  tree->add_option("--n", o.n, "Random tree on N vertices");
  tree->add_flag("--det", o.det, "det D against (n-1)(-1)^(n-1) 2^(n-2)");
  tree->add_flag("--distance", o.distance, "Distance matrix");
  tree->add_flag("--zeta", o.zeta, "Path-order zeta matrix");
  tree->add_flag("--inverse", o.inverse, "Closed-form inverse of D");
  tree->add_flag("--factorization", o.factorization, "D = Z^T H Z");
  tree->add_flag("--csv", o.csv, "Matrix as CSV");

  auto* nulldesign = app.add_subcommand("nulldesign", "Strength and support bounds of a function");
  common(nulldesign);
  poset_input(nulldesign);
  nulldesign->add_option("--function", o.function_file, "JSON label -> integer map");
  nulldesign->add_option("--b", o.b, "Element for the restriction f_b or the bound");
  nulldesign->add_flag("--bound", o.bound, "Only sum_{c<=b} |mu(c,b)|");

  auto* verify = app.add_subcommand("verify-all", "Run the identity suites");
  common(verify);
  verify->add_option("--suite", o.suite, "small or full")->check(CLI::IsMember({"small", "full"}))->capture_default_str();
  verify->add_option("--only", o.only, "Run only this item id (repeat)");
  verify->add_flag("--list", o.list, "List the items");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (mu->parsed()) return cmd_mu(o);
    if (zeta->parsed()) return cmd_zeta(o);
    if (invert->parsed()) return cmd_invert(o);
    if (chains->parsed()) return cmd_chains(o);
    if (euler->parsed()) return cmd_euler(o);
    if (lattice->parsed()) return cmd_lattice_check(o);
    if (weisner->parsed()) return cmd_weisner(o);
    if (cutset->parsed()) return cmd_cutset(o);
    if (chromatic->parsed()) return cmd_chromatic(o);
    if (charpoly->parsed()) return cmd_charpoly(o);
    if (whitney->parsed()) return cmd_whitney(o);
    if (tree->parsed()) return cmd_tree(o);
    if (nulldesign->parsed()) return cmd_nulldesign(o);
    if (verify->parsed()) return cmd_verify_all(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
