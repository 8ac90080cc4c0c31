#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>

#include "fpgroups/arithmetic.hpp"
#include "fpgroups/word.hpp"

using namespace fpg;
using boost::multiprecision::cpp_int;

namespace {

// direct powering oracle for small moduli
std::uint64_t ord2_direct(std::uint64_t m) {
  std::uint64_t v = 2 % m, k = 1;
  while (v != 1 % m) {
    v = v * 2 % m;
    ++k;
  }
  return k;
}

std::uint64_t phi_brute(std::uint64_t m) {
  std::uint64_t c = 0;
  for (std::uint64_t a = 1; a <= m; ++a) {
    std::uint64_t x = a, y = m;
    while (y) {
      std::uint64_t t = x % y;
      x = y;
      y = t;
    }
    if (x == 1) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("ord2_mod examples") {
  CHECK(ord2_mod(7) == 3);   // 2^3 = 8 = 1 mod 7
  CHECK(ord2_mod(1) == 1);
  CHECK(ord2_mod(9) == 6);   // 2,4,8,7,5,1 mod 9
  CHECK(ord2_mod(2) == std::nullopt);
  CHECK(ord2_mod(10) == std::nullopt);
  CHECK(ord2_mod(3) == 2);
  CHECK(ord2_mod(127) == 7);
  CHECK_THROWS_AS(ord2_mod(0), error);

  for (std::uint64_t m = 3; m <= 501; m += 2)
    CHECK(ord2_mod(m) == ord2_direct(m));
}

TEST_CASE("ord2 divides euler phi for odd moduli") {
  for (std::uint64_t m = 1; m <= 10000; m += 2) {
    auto o = ord2_mod(m);
    REQUIRE(o.has_value());
    CHECK(phi_brute(m) % *o == 0);
  }
}

TEST_CASE("edge characterization: d | 2^r - 1 iff ord2(d) | r") {
  DivisibilityGraph g(200);
  for (std::uint64_t d = 1; d <= 200; d += 2) {
    for (std::uint64_t r = 1; r <= 64; ++r) {
      cpp_int big = (cpp_int(1) << static_cast<unsigned>(r)) - 1;
      bool divides = big % d == 0;
      CHECK(divides == g.edge(r, d));
      CHECK(divides == (r % *ord2_mod(d) == 0));
    }
  }
  // no edge into even d > 1
  CHECK(!g.edge(6, 4));
  CHECK(g.edge(6, 1));  // d = 1 always
}

TEST_CASE("tuple search against a brute-force oracle for tiny bounds") {
  // n = 1: r | 2^r - 1 forces r = 1
  auto single = order_tuple_search(1, 1000);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == std::vector<std::uint32_t>{1});

  // n = 2: brute force over all pairs with big-integer divisibility
  std::vector<std::vector<std::uint32_t>> expected;
  for (std::uint32_t a = 1; a <= 100; ++a)
    for (std::uint32_t b = 1; b <= 100; ++b) {
      cpp_int pa = (cpp_int(1) << a) - 1;
      cpp_int pb = (cpp_int(1) << b) - 1;
      if (pa % b == 0 && pb % a == 0) expected.push_back({a, b});
    }
  auto got = order_tuple_search(2, 100);
  CHECK(got == expected);
  REQUIRE(expected.size() == 1);
  CHECK(expected[0] == std::vector<std::uint32_t>{1, 1});
}

TEST_CASE("only the all-ones cycle exists at moderate bounds") {
  DivisibilityGraph g(10000);
  for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 12u}) {
    auto tuples = order_tuple_search(n, g);
    REQUIRE(tuples.size() == 1);
    for (auto v : tuples[0]) CHECK(v == 1);
  }
}

TEST_CASE("recurrent core collapses to the fixed point") {
  DivisibilityGraph g(5000);
  auto core = g.recurrent_core();
  REQUIRE(core.size() == 1);
  CHECK(core[0] == 1);
  CHECK(g.successors(1) == std::vector<std::uint32_t>{1});
}

TEST_CASE("folner constant inequality, exactly") {
  FolnerCheck c;
  CHECK(c.lhs == 49);
  CHECK(c.rhs == 48);
  CHECK(c.holds());
  CHECK(c.quotient_constant_matches());
  CHECK(folner_bound_check());
}
