#include <doctest.h>

#include "core/error.hpp"
#include "core/incidence.hpp"
#include "core/instances.hpp"
#include "core/poset.hpp"
#include "oracles/oracles.hpp"

using namespace mobiuslab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("covers give a linear extension and the transitive reduction") {
  auto p = Poset::from_covers({"top", "mid", "bot"}, {{"bot", "mid"}, {"mid", "top"}, {"bot", "top"}});
  CHECK(p.size() == 3);
  CHECK(p.label(0) == "bot");
  CHECK(p.label(2) == "top");
  CHECK(p.covers().size() == 2);
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.bottom() == 0u);
  CHECK(p.top() == 2u);
  CHECK(p.longest_chain_length() == 2);
}

TEST_CASE("construction errors carry their codes") {
  CHECK(code_of([] { Poset::from_covers({"a", "a"}, {}); }) == ErrorCode::DuplicateLabel);
  CHECK(code_of([] { Poset::from_covers({"a"}, {{"a", "b"}}); }) == ErrorCode::UnknownLabel);
  CHECK(code_of([] { Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}); }) ==
        ErrorCode::Cycle);
}

TEST_CASE("cycle errors spell out a cycle") {
  try {
    Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    FAIL("expected a cycle");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("->") != std::string::npos);
  }
}

TEST_CASE("dual, product and interval") {
  const auto c = chain(2);
  const auto d = dual(c);
  CHECK(d.label(0) == c.label(2));
  const auto sq = product(chain(1), chain(1));
  CHECK(sq.size() == 4);
  CHECK(find_isomorphism(sq, boolean_lattice(2).poset()).has_value());
  const auto b3 = boolean_lattice(3);
  const auto& p = b3.poset();
  const auto i = interval(p, p.index_of("1"), p.index_of("123"));
  CHECK(find_isomorphism(i, boolean_lattice(2).poset()).has_value());
}

TEST_CASE("Mobius function agrees with the chain oracle on random posets") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto p = random_poset(8, 0.35, seed);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b)
        if (p.leq(a, b)) REQUIRE(mobius(p, a, b) == oracle::mobius(p, a, b));
  }
}

TEST_CASE("Mobius matrix inverts the zeta matrix") {
  const auto p = random_poset(10, 0.3, 7);
  const auto z = zeta_matrix(p);
  const auto m = mobius_matrix(p);
  CHECK((z * m).is_identity());
  CHECK((m * z).is_identity());
  CHECK(z.is_upper_triangular());
}

TEST_CASE("known Mobius values") {
  const auto b3 = boolean_lattice(3);
  CHECK(mobius(b3.poset(), "", "123") == -1);
  const auto p4 = partition_lattice(4);
  CHECK(mobius(p4.poset(), p4.label(p4.zero()), p4.label(p4.one())) == -6);
  const auto d12 = divisor_lattice(12);
  CHECK(mobius(d12.poset(), "1", "4") == 0);
  CHECK(mobius(d12.poset(), "1", "6") == 1);
  const auto s23 = subspace_lattice(2, 3);
  CHECK(mobius(s23.poset(), s23.label(s23.zero()), s23.label(s23.one())) == -8);
}

TEST_CASE("chain counts and zeta powers") {
  const auto b2 = boolean_lattice(2);
  const auto& p = b2.poset();
  CHECK(count_chains(p, p.index_of(""), p.index_of("12")) == 3);
  CHECK(mobius_by_chains(p, p.index_of(""), p.index_of("12")) == 1);
  const auto z2 = zeta_power(p, 2);
  CHECK(z2(p.index_of(""), p.index_of("12")) == 4);
}
