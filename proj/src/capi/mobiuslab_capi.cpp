#include "mobiuslab/mobiuslab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/complex.hpp"
#include "core/incidence.hpp"
#include "core/instances.hpp"
#include "core/inversion.hpp"
#include "core/io.hpp"
#include "core/lattice.hpp"
#include "core/lattice_identities.hpp"
#include "core/matroid.hpp"
#include "core/null_designs.hpp"
#include "core/size_guard.hpp"
#include "core/tree_distance.hpp"
#include "verify/verify.hpp"

struct mobiuslab_poset {
  mobiuslab::Poset poset;
};

struct mobiuslab_graph {
  mobiuslab::Graph graph;
};

struct mobiuslab_tree {
  mobiuslab::RootedTree tree;
};

namespace {

using namespace mobiuslab;

thread_local std::string last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return MOBIUSLAB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MOBIUSLAB_SIZE_GUARD;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MOBIUSLAB_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (!ptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_out(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const Json& j) { *out = copy_out(j.dump()); }

Json labels_of(const Poset& p) { return p.labels(); }

Json integers(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_json(x));
  return j;
}

Json matrix_json(const Poset& p, const IntMatrix& m) { return {{"labels", labels_of(p)}, {"matrix", to_json(m)}}; }

}  // namespace

extern "C" {

const char* mobiuslab_version(void) { return "0.1.0"; }

const char* mobiuslab_status_name(int status) {
  if (status == MOBIUSLAB_OK) return "ok";
  if (status < MOBIUSLAB_INVALID_ARGUMENT || status > MOBIUSLAB_INTERNAL) return "unknown";
  return error_code_name(static_cast<ErrorCode>(status));
}

const char* mobiuslab_last_error(void) { return last_error.c_str(); }

void mobiuslab_string_free(char* s) { std::free(s); }

int mobiuslab_poset_from_json(const char* json, mobiuslab_poset** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new mobiuslab_poset{poset_from_json(parse_json(json))};
  });
}

int mobiuslab_poset_from_file(const char* path, mobiuslab_poset** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    try {
      *out = new mobiuslab_poset{poset_from_json(parse_json(read_file(path)))};
    } catch (const Error& e) {
      throw Error(e.code(), std::string(path) + ": " + e.what());
    }
  });
}

int mobiuslab_poset_named(const char* spec, mobiuslab_poset** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new mobiuslab_poset{named_poset(spec)};
  });
}

int mobiuslab_poset_random(size_t n, double density, uint64_t seed, mobiuslab_poset** out) {
  return guarded([&] {
    require(out, "out");
    if (!(density >= 0 && density <= 1)) throw Error(ErrorCode::InvalidArgument, "density must lie in [0, 1]");
    check_size("random poset", static_cast<double>(n));
    *out = new mobiuslab_poset{random_poset(n, density, seed)};
  });
}

void mobiuslab_poset_free(mobiuslab_poset* p) { delete p; }

size_t mobiuslab_poset_size(const mobiuslab_poset* p) { return p ? p->poset.size() : 0; }

int mobiuslab_poset_to_json(const mobiuslab_poset* p, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    emit(out, poset_to_json(p->poset));
  });
}

int mobiuslab_mobius(const mobiuslab_poset* p, const char* a, const char* b, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = copy_out(mobius(p->poset, std::string_view(a), std::string_view(b)).get_str());
  });
}

int mobiuslab_mobius_number(const mobiuslab_poset* p, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    *out = copy_out(mobius_number(p->poset).get_str());
  });
}

int mobiuslab_matrix(const mobiuslab_poset* p, const char* kind, unsigned m, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(kind, "kind");
    require(out, "out");
    const std::string k = kind;
    if (k == "zeta") emit(out, matrix_json(p->poset, zeta_matrix(p->poset)));
    else if (k == "mobius") emit(out, matrix_json(p->poset, mobius_matrix(p->poset)));
    else if (k == "zeta_power") emit(out, matrix_json(p->poset, zeta_power(p->poset, m)));
    else throw Error(ErrorCode::InvalidArgument, "unknown matrix kind '" + k + "'");
  });
}

int mobiuslab_invert(const mobiuslab_poset* p, const char* function_json, const char* direction, int sums,
                     char** out) {
  return guarded([&] {
    require(p, "poset");
    require(function_json, "function");
    require(direction, "direction");
    require(out, "out");
    const std::string d = direction;
    if (d != "up" && d != "down") throw Error(ErrorCode::InvalidArgument, "direction must be \"up\" or \"down\"");
    const auto f = function_from_json(parse_json(function_json), p->poset);
    PosetFunction g;
    if (sums) g = d == "up" ? up_sums(p->poset, f) : down_sums(p->poset, f);
    else g = d == "up" ? invert_up(p->poset, f) : invert_down(p->poset, f);
    // Round trip through the opposite operation as a built-in check.
    const auto back = sums ? (d == "up" ? invert_up(p->poset, g) : invert_down(p->poset, g))
                           : (d == "up" ? up_sums(p->poset, g) : down_sums(p->poset, g));
    emit(out, {{"direction", d},
               {"operation", sums ? "sums" : "inversion"},
               {"result", function_to_json(p->poset, g)},
               {"round_trip", back == f}});
  });
}

int mobiuslab_chains(const mobiuslab_poset* p, const char* a, const char* b, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(a, "a");
    require(b, "b");
    require(out, "out");
    const auto i = p->poset.index_of(a), j = p->poset.index_of(b);
    if (!p->poset.leq(i, j)) throw Error(ErrorCode::InvalidArgument, std::string("'") + a + "' is not below '" + b + "'");
    std::vector<Integer> by_length;
    const auto longest = static_cast<unsigned>(p->poset.longest_chain_length());
    for (unsigned m = 0; m <= longest; ++m) by_length.push_back(strict_zeta_power(p->poset, m)(i, j));
    while (by_length.size() > 1 && by_length.back() == 0) by_length.pop_back();
    const auto signed_sum = mobius_by_chains(p->poset, i, j);
    const auto mu = mobius(p->poset, i, j);
    emit(out, {{"from", a},
               {"to", b},
               {"chains_by_length", integers(by_length)},
               {"chains", to_json(count_chains(p->poset, i, j))},
               {"signed_sum", to_json(signed_sum)},
               {"mu", to_json(mu)},
               {"pass", signed_sum == mu}});
  });
}

int mobiuslab_euler(const mobiuslab_poset* p, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    const auto complex = order_complex(p->poset);
    const auto chi = euler_characteristic(complex);
    const auto mu = mobius_number(p->poset);
    const auto cone = is_cone(p->poset);
    Json j{{"face_counts", integers(level_numbers(complex))},
           {"euler_characteristic", to_json(chi)},
           {"mobius_number", to_json(mu)},
           {"pass", chi == 1 + mu}};
    j["cone"] = cone ? Json(p->poset.label(*cone)) : Json(nullptr);
    emit(out, j);
  });
}

int mobiuslab_lattice_check(const mobiuslab_poset* p, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    Json j;
    j["size"] = p->poset.size();
    Lattice l;
    try {
      l = Lattice::from_poset(p->poset);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotALattice) throw;
      j["lattice"] = false;
      j["reason"] = e.what();
      emit(out, j);
      return;
    }
    auto names = [&](const std::vector<std::size_t>& xs) {
      Json a = Json::array();
      for (auto x : xs) a.push_back(l.label(x));
      return a;
    };
    j["lattice"] = true;
    j["zero"] = l.label(l.zero());
    j["one"] = l.label(l.one());
    j["laws"] = check_lattice_laws(l);
    j["atoms"] = names(atoms(l));
    j["coatoms"] = names(coatoms(l));
    j["point_lattice"] = is_point_lattice(l);
    j["complemented"] = is_complemented(l);
    j["modular"] = is_modular_lattice(l);
    j["join_irreducibles"] = join_irreducibles(l).size();
    j["meet_irreducibles"] = meet_irreducibles(l).size();
    try {
      const auto r = RankedLattice::from_lattice(l);
      j["ranked"] = true;
      j["height"] = r.height();
      j["whitney_numbers"] = whitney_numbers(r);
      j["semimodular"] = is_semimodular(r);
      j["geometric"] = is_geometric(r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotRanked) throw;
      j["ranked"] = false;
      j["reason"] = e.what();
    }
    emit(out, j);
  });
}

int mobiuslab_weisner(const mobiuslab_poset* p, const char* a, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    const auto l = Lattice::from_poset(p->poset);
    if (a) {
      emit(out, weisner_check(l, l.index_of(a)).to_json());
      return;
    }
    std::vector<Report> parts;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (x != l.zero()) parts.push_back(weisner_check(l, x));
    emit(out, combine("weisner", parts).to_json());
  });
}

int mobiuslab_cutset(const mobiuslab_poset* p, const char* labels_json, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    const auto l = Lattice::from_poset(p->poset);
    std::vector<std::size_t> c;
    if (labels_json) {
      const auto j = parse_json(labels_json);
      if (!j.is_array()) throw Error(ErrorCode::Parse, "cutset must be a JSON array of labels");
      for (const auto& x : j) {
        if (!x.is_string()) throw Error(ErrorCode::Parse, "cutset entries must be labels");
        c.push_back(l.index_of(x.get<std::string>()));
      }
    } else {
      c = atoms(l);
    }
    emit(out, cutset_check(l, c).to_json());
  });
}

int mobiuslab_whitney(const mobiuslab_poset* p, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    const auto l = RankedLattice::from_poset(p->poset);
    emit(out, {{"W", whitney_numbers(l)}, {"w", integers(whitney_rank_sums(l))}});
  });
}

int mobiuslab_charpoly(const mobiuslab_poset* p, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    const auto f = characteristic_polynomial(RankedLattice::from_poset(p->poset));
    emit(out, {{"coefficients", f.to_json()}, {"polynomial", f.to_string()}});
  });
}

int mobiuslab_graph_from_edge_list(const char* text, mobiuslab_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new mobiuslab_graph{graph_from_edge_list(text)};
  });
}

int mobiuslab_graph_named(const char* spec, mobiuslab_graph** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new mobiuslab_graph{named_graph(spec)};
  });
}

int mobiuslab_graph_random(size_t n, double density, uint64_t seed, mobiuslab_graph** out) {
  return guarded([&] {
    require(out, "out");
    if (!(density >= 0 && density <= 1)) throw Error(ErrorCode::InvalidArgument, "density must lie in [0, 1]");
    check_size("random graph", static_cast<double>(n));
    *out = new mobiuslab_graph{random_graph(n, density, seed)};
  });
}

void mobiuslab_graph_free(mobiuslab_graph* g) { delete g; }

int mobiuslab_graph_to_edge_list(const mobiuslab_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = copy_out(graph_to_edge_list(g->graph));
  });
}

int mobiuslab_chromatic(const mobiuslab_graph* g, unsigned evaluate_up_to, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const auto f = chromatic_polynomial(g->graph);
    Json values = Json::array();
    for (unsigned k = 0; k <= evaluate_up_to; ++k) values.push_back(to_json(f(Integer(k))));
    emit(out, {{"vertices", g->graph.vertex_count()},
               {"edges", g->graph.edges().size()},
               {"coefficients", f.to_json()},
               {"polynomial", f.to_string()},
               {"values", values}});
  });
}

int mobiuslab_graph_contraction_lattice(const mobiuslab_graph* g, mobiuslab_poset** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new mobiuslab_poset{contraction_lattice(g->graph).poset()};
  });
}

int mobiuslab_tree_from_json(const char* json, mobiuslab_tree** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new mobiuslab_tree{tree_from_json(parse_json(json))};
  });
}

int mobiuslab_tree_from_graph(const mobiuslab_graph* g, size_t root, mobiuslab_tree** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new mobiuslab_tree{RootedTree::from_graph(g->graph, root)};
  });
}

int mobiuslab_tree_random(size_t n, uint64_t seed, mobiuslab_tree** out) {
  return guarded([&] {
    require(out, "out");
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "a tree needs at least one vertex");
    check_size("random tree", static_cast<double>(n));
    *out = new mobiuslab_tree{RootedTree::from_graph(random_tree(n, seed), 0)};
  });
}

void mobiuslab_tree_free(mobiuslab_tree* t) { delete t; }

int mobiuslab_tree_report(const mobiuslab_tree* t, const char* what, char** out) {
  return guarded([&] {
    require(t, "tree");
    require(what, "what");
    require(out, "out");
    const auto& tree = t->tree;
    const std::string w = what;
    if (w == "det") {
      const auto g = graham_pollak_det(tree);
      emit(out, {{"n", tree.size()}, {"det", to_json(g.det)}, {"closed_form", to_json(g.closed_form)}, {"pass", g.pass}});
    } else if (w == "distance") {
      emit(out, {{"order", tree.order()}, {"matrix", to_json(distance_matrix(tree))}});
    } else if (w == "zeta") {
      emit(out, {{"order", tree.order()}, {"matrix", to_json(tree_zeta(tree))}});
    } else if (w == "inverse") {
      const auto r = distance_inverse_check(tree);
      emit(out, {{"order", tree.order()}, {"matrix", r.details["inverse"]}, {"pass", r.pass}});
    } else if (w == "factorization") {
      emit(out, graham_lovasz_check(tree).to_json());
    } else if (w == "check") {
      std::vector<Report> parts{graham_lovasz_check(tree), tree_zeta_inverse_check(tree)};
      if (tree.size() >= 2) {
        const auto g = graham_pollak_det(tree);
        Report det;
        det.identity = "graham_pollak";
        det.lhs = to_json(g.det);
        det.rhs = to_json(g.closed_form);
        det.pass = g.pass;
        parts.push_back(det);
        parts.push_back(distance_inverse_check(tree));
      }
      emit(out, combine("tree", parts).to_json());
    } else if (w == "json") {
      Json parent = Json::array();
      for (std::size_t v = 0; v < tree.size(); ++v)
        parent.push_back(tree.parent(v) ? Json(*tree.parent(v)) : Json(nullptr));
      emit(out, {{"n", tree.size()}, {"root", tree.root()}, {"parent", parent}});
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown tree report '" + w + "'");
    }
  });
}

int mobiuslab_null_design(const mobiuslab_poset* p, const char* function_json, const char* b, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(function_json, "function");
    require(out, "out");
    const auto m = MeetSemilattice::from_poset(p->poset);
    const auto f = function_from_json(parse_json(function_json), m.poset());
    Json j;
    j["strength"] = strength(m, f);
    bool pass = true;
    if (b) {
      const auto r = restrict_to_interval(m, f, m.poset().index_of(b));
      j["restriction"] = {{"b", b},
                          {"by_inversion", function_to_json(m.poset(), r.by_inversion)},
                          {"by_fibres", function_to_json(m.poset(), r.by_fibres)},
                          {"agree", r.agree}};
      pass = r.agree;
    }
    try {
      const auto r = verify_support_theorem(m, f);
      j["support_theorem"] = r.to_json();
      pass = pass && r.pass;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Precondition) throw;
      j["support_theorem"] = {{"applicable", false}, {"reason", e.what()}};
    }
    j["pass"] = pass;
    emit(out, j);
  });
}

int mobiuslab_support_bound(const mobiuslab_poset* p, const char* b, char** out) {
  return guarded([&] {
    require(p, "poset");
    require(out, "out");
    const auto heights = p->poset.heights();
    Json rows = Json::array();
    for (std::size_t x = 0; x < p->poset.size(); ++x) {
      if (b && p->poset.label(x) != b) continue;
      rows.push_back({{"b", p->poset.label(x)},
                      {"height", heights[x]},
                      {"bound", to_json(support_lower_bound(p->poset, x))},
                      {"upper_sum", to_json(support_upper_sum(p->poset, x))}});
    }
    if (b && rows.empty()) p->poset.index_of(b);
    emit(out, rows);
  });
}

int mobiuslab_verify(const char* size, uint64_t seed, const char* ids_json, char** out) {
  return guarded([&] {
    require(out, "out");
    SuiteOptions options;
    options.seed = seed;
    const std::string s = size ? size : "small";
    if (s == "full") options.size = SuiteSize::Full;
    else if (s != "small") throw Error(ErrorCode::InvalidArgument, "suite must be \"small\" or \"full\"");
    std::vector<int> ids;
    if (ids_json) {
      const auto j = parse_json(ids_json);
      if (!j.is_array()) throw Error(ErrorCode::Parse, "ids must be a JSON array");
      for (const auto& x : j) {
        if (!x.is_number_integer()) throw Error(ErrorCode::Parse, "ids must be integers");
        const int id = x.get<int>();
        bool known = false;
        for (const auto& e : suite_entries()) known = known || e.id == id;
        if (!known) throw Error(ErrorCode::InvalidArgument, "no suite item " + std::to_string(id));
        ids.push_back(id);
      }
    }
    const auto items = run_suite(options, ids);
    Json list = Json::array();
    std::size_t passed = 0;
    for (const auto& item : items) {
      list.push_back(to_json(item));
      passed += item.pass;
    }
    emit(out, {{"suite", s}, {"seed", seed}, {"items", list}, {"passed", passed}, {"total", items.size()}});
  });
}

int mobiuslab_verify_list(char** out) {
  return guarded([&] {
    require(out, "out");
    Json list = Json::array();
    for (const auto& e : suite_entries()) list.push_back({{"id", e.id}, {"name", e.name}});
    emit(out, list);
  });
}

}  // extern "C"
