#include <doctest.h>

#include "core/error.hpp"
#include "core/incidence.hpp"
#include "core/instances.hpp"
#include "core/null_designs.hpp"

using namespace mobiuslab;

TEST_CASE("meet semilattice recognition") {
  CHECK_THROWS_AS(MeetSemilattice::from_poset(Poset::from_covers({"a", "b"}, {})), Error);
  const auto s = MeetSemilattice::from_poset(boolean_lattice(3).poset());
  CHECK(s.height() == 3);
}

TEST_CASE("interval designs reach the support bound on B(3)") {
  const auto s = MeetSemilattice::from_poset(boolean_lattice(3).poset());
  const auto& p = s.poset();
  const auto b = p.index_of("123");
  const auto f = interval_design(s, b);
  CHECK(strength(s, f) == 2);
  const auto r = verify_support_theorem(s, f);
  CHECK(r.pass);
  CHECK(support_lower_bound(p, b) == 8);
}

TEST_CASE("zero function has full strength") {
  const auto s = MeetSemilattice::from_poset(boolean_lattice(2).poset());
  const PosetFunction zero(s.size());
  CHECK(strength(s, zero) == 2);
  CHECK(verify_support_theorem(s, zero).pass);
}

TEST_CASE("restriction routes agree on random semilattices") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_meet_semilattice(12, seed);
    PosetFunction f(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) f[x] = static_cast<long>((x * 7 + seed) % 5) - 2;
    for (std::size_t b = 0; b < s.size(); ++b) CHECK(restrict_to_interval(s, f, b).agree);
  }
}

TEST_CASE("partition lattice sums") {
  const auto l = partition_lattice(3);
  const auto& p = l.poset();
  CHECK(support_lower_bound(p, l.zero()) == 1);
  CHECK(support_lower_bound(p, l.one()) == 6);
  CHECK(support_upper_sum(p, l.zero()) == 6);
}
