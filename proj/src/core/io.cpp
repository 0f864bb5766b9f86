#include "core/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace mobiuslab {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto colon = what.rfind(": ");
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                                      (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::Parse, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string as_label(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, "expected a string label, got " + j.dump());
  return j.get<std::string>();
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw Error(ErrorCode::Parse, std::string(what) + ": expected a non-negative integer, got " + j.dump());
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

Poset poset_from_json(const Json& j) {
  const auto& elements = field(j, "elements");
  const auto& covers = field(j, "covers");
  if (!elements.is_array() || !covers.is_array()) throw Error(ErrorCode::Parse, "\"elements\" and \"covers\" must be arrays");
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(as_label(e));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& c : covers) {
    if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::Parse, "cover must be a pair, got " + c.dump());
    pairs.emplace_back(as_label(c[0]), as_label(c[1]));
  }
  return Poset::from_covers(std::move(labels), pairs);
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = p.labels();
  Json covers = Json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
  j["covers"] = std::move(covers);
  return j;
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> declared;
  std::size_t largest = 0;
  bool any = false;
  std::vector<Graph::Edge> edges;
  std::set<Graph::Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto where = [&](std::size_t col) {
      return "line " + std::to_string(line_no) + ", column " + std::to_string(col + 1) + ": ";
    };
    if (line[first] == '#') {
      std::istringstream h(line.substr(first + 1));
      std::string word;
      std::size_t n;
      if (h >> word && word == "vertices") {
        if (!(h >> n)) throw Error(ErrorCode::Parse, where(first) + "expected a vertex count");
        declared = n;
      }
      continue;
    }
    std::size_t pos = first;
    std::size_t ends[2];
    for (auto& e : ends) {
      pos = line.find_first_not_of(" \t\r", pos);
      if (pos == std::string::npos) throw Error(ErrorCode::Parse, where(line.size()) + "expected two vertices");
      std::size_t used = 0;
      try {
        if (line[pos] == '-' || line[pos] == '+') throw std::invalid_argument("sign");
        e = std::stoul(line.substr(pos), &used);
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, where(pos) + "expected a vertex number");
      }
      pos += used;
    }
    const auto rest = line.find_first_not_of(" \t\r", pos);
    if (rest != std::string::npos) throw Error(ErrorCode::Parse, where(rest) + "unexpected text after edge");
    if (ends[0] == ends[1]) throw Error(ErrorCode::Parse, where(first) + "loop at vertex " + std::to_string(ends[0]));
    const Graph::Edge e{static_cast<std::uint32_t>(std::min(ends[0], ends[1])),
                        static_cast<std::uint32_t>(std::max(ends[0], ends[1]))};
    if (!seen.insert(e).second) throw Error(ErrorCode::Parse, where(first) + "repeated edge");
    edges.push_back(e);
    largest = std::max<std::size_t>(largest, e.second);
    any = true;
  }
  std::size_t n = any ? largest + 1 : 0;
  if (declared) {
    if (*declared < n) throw Error(ErrorCode::Parse, "edge endpoint exceeds the declared vertex count");
    n = *declared;
  }
  return Graph(n, std::move(edges));
}

std::string graph_to_edge_list(const Graph& g) {
  std::string out = "# vertices " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

RootedTree tree_from_json(const Json& j) {
  const std::size_t n = as_index(field(j, "n"), "n");
  const std::size_t root = as_index(field(j, "root"), "root");
  const auto& parent = field(j, "parent");
  if (!parent.is_array() || parent.size() != n)
    throw Error(ErrorCode::Parse, "\"parent\" must be an array of length n");
  std::vector<std::optional<std::size_t>> links(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& p = parent[v];
    if (p.is_null() || (p.is_number_integer() && p.get<long long>() == -1)) continue;
    links[v] = as_index(p, "parent");
  }
  if (root >= n || links[root]) throw Error(ErrorCode::InvalidArgument, "root must be the vertex without a parent");
  return RootedTree::from_parents(links);
}

PosetFunction function_from_json(const Json& j, const Poset& p) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "function must be a JSON object of label: integer");
  PosetFunction f(p.size());
  for (const auto& [label, value] : j.items()) f[p.index_of(label)] = integer_from_json(value);
  return f;
}

Json function_to_json(const Poset& p, const PosetFunction& f) {
  Json j = Json::object();
  for (std::size_t i = 0; i < p.size(); ++i) j[p.label(i)] = to_json(f[i]);
  return j;
}

GeneratorMatrix generator_from_json(const Json& j) {
  GeneratorMatrix g;
  g.q = static_cast<unsigned>(as_index(field(j, "q"), "q"));
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw Error(ErrorCode::Parse, "\"rows\" must be an array");
  for (const auto& r : rows) {
    if (!r.is_array()) throw Error(ErrorCode::Parse, "each row must be an array");
    std::vector<unsigned> row;
    for (const auto& v : r) row.push_back(static_cast<unsigned>(as_index(v, "entry")));
    g.rows.push_back(std::move(row));
  }
  return g;
}

}  // namespace mobiuslab
