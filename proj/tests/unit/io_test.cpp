#include <doctest.h>

#include <string>

#include "core/error.hpp"
#include "core/incidence.hpp"
#include "core/instances.hpp"
#include "core/integer.hpp"
#include "core/io.hpp"

using namespace mobiuslab;

namespace {

std::string message_of(const std::function<void()>& f, ErrorCode expected) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == expected);
    return e.what();
  }
  FAIL("no error raised");
  return {};
}

}  // namespace

TEST_CASE("poset JSON round trip") {
  const auto p = boolean_lattice(3).poset();
  const auto q = poset_from_json(parse_json(poset_to_json(p).dump()));
  CHECK(q.labels() == p.labels());
  CHECK(q.covers() == p.covers());
}

TEST_CASE("malformed JSON reports line and column") {
  const auto what = message_of([] { parse_json("{\"elements\": [\"a\",\n  \"b\" \"c\"]}"); }, ErrorCode::Parse);
  CHECK(what.find("line 2") != std::string::npos);
  CHECK(what.find("column") != std::string::npos);
}

TEST_CASE("poset JSON must have elements and covers") {
  message_of([] { poset_from_json(parse_json("{\"covers\": []}")); }, ErrorCode::Parse);
  message_of([] { poset_from_json(parse_json("{\"elements\": [1], \"covers\": []}")); }, ErrorCode::Parse);
}

TEST_CASE("edge lists") {
  const auto g = graph_from_edge_list("# vertices 4\n0 1\n1 2\n\n2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edges().size() == 3);
  CHECK(graph_from_edge_list(graph_to_edge_list(g)).edges() == g.edges());
  const auto what = message_of([] { graph_from_edge_list("0 1\n1 two\n"); }, ErrorCode::Parse);
  CHECK(what.find("line 2") != std::string::npos);
}

TEST_CASE("trees and functions from JSON") {
  const auto t = tree_from_json(parse_json(R"({"n": 3, "root": 0, "parent": [null, 0, 1]})"));
  CHECK(t.size() == 3);
  const auto t2 = tree_from_json(parse_json(R"({"n": 3, "root": 0, "parent": [-1, 0, 1]})"));
  CHECK(t2.order() == t.order());
  const auto p = chain(2);
  const auto f = function_from_json(parse_json(R"({"0": 1, "1": "-12345678901234567890", "2": 0})"), p);
  CHECK(f[1] == Integer("-12345678901234567890"));
  message_of([&] { function_from_json(parse_json(R"({"9": 1})"), p); }, ErrorCode::UnknownLabel);
  message_of([&] { function_from_json(parse_json(R"({"0": "x"})"), p); }, ErrorCode::Parse);
}
