#include <doctest.h>

#include <map>
#include <vector>

#include "permcycle/permutation.hpp"

using namespace permcycle;

namespace {

// Independent parity oracle: sign from the inversion count.
bool even_by_inversions(const Perm& p) {
  int inv = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv % 2 == 0;
}

// Independent cycle-count oracle: follow orbits with a plain marker array.
std::map<int, int> type_by_orbits(const Perm& p) {
  std::map<int, int> type;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int x = 0; x < p.size(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int len = 0, y = x;
    while (!seen[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = true;
      ++len;
      y = p(y);
    }
    ++type[len];
  }
  return type;
}

}  // namespace

TEST_CASE("composition") {
  const Perm a = parse_one_line("2 1 3");
  const Perm b = parse_one_line("1 3 2");
  CHECK(a * b == parse_one_line("2 3 1"));

  const Perm pi = parse_one_line("4 1 6 2 5 7 3");
  CHECK(pi * Perm::identity(7) == pi);
  CHECK(Perm::identity(7) * pi == pi);

  // grey rotation times the reversed-position cycle, on {0..7}
  const Perm grey = Perm::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}});
  const Perm black = Perm::from_cycles(8, {{0, 3, 7, 5, 2, 6, 1, 4}});
  CHECK(grey * black == Perm::from_cycles(8, {{0, 4, 1, 5, 3}, {2, 7, 6}}));

  CHECK_THROWS_AS((void)(a * Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(parse_one_line("2 3 1").inverse() == parse_one_line("3 1 2"));
  CHECK(Perm::identity(6).inverse() == Perm::identity(6));
  CHECK(parse_one_line("4 1 6 2 5 7 3").inverse() == parse_one_line("2 4 7 1 5 3 6"));
  for (std::uint64_t r = 0; r < factorial(5); ++r) {
    const Perm p = unrank(r, 5);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("conjugation relabels cycles") {
  const Perm pi = parse_one_line("4 1 6 2 5 7 3");
  CHECK(pi.conjugate_by(Perm::identity(7)) == pi);

  const Perm p = Perm::from_cycles(3, {{0, 2}});      // (1,3)(2) one-based
  const Perm s = Perm::from_cycles(3, {{0, 1, 2}});   // (1,2,3)
  CHECK(p.conjugate_by(s) == Perm::from_cycles(3, {{0, 1}}));

  for (std::uint64_t a = 0; a < factorial(6); ++a) {
    const Perm x = unrank(a, 6);
    const auto type = type_by_orbits(x);
    for (std::uint64_t b = 0; b < factorial(6); ++b) {
      if (type_by_orbits(x.conjugate_by(unrank(b, 6))) != type) {
        FAIL("conjugation changed the cycle type");
      }
    }
  }
}

TEST_CASE("cycle decomposition is canonical") {
  const CycleDecomposition d = cycle_decomposition(parse_one_line("4 1 6 2 5 7 3"));
  CHECK(d.cycles == std::vector<std::vector<int>>{{0, 3, 1}, {2, 5, 6}, {4}});
  CHECK(format_cycles(d, 1, true) == "(1,4,2)(3,6,7)(5)");
  CHECK(d.c == 3);
  CHECK(d.c_odd == 3);
  CHECK(d.c_even == 0);
  CHECK(d.c_fixed == 1);

  const CycleDecomposition id5 = cycle_decomposition(Perm::identity(5));
  CHECK(id5.c == 5);
  CHECK(id5.c_fixed == 5);

  for (std::uint64_t r = 0; r < factorial(6); ++r) {
    const Perm p = unrank(r, 6);
    const CycleDecomposition dec = cycle_decomposition(p);
    std::map<int, int> type;
    for (const auto& cyc : dec.cycles) ++type[static_cast<int>(cyc.size())];
    CHECK(type == type_by_orbits(p));
    CHECK(dec.by_length == type);
  }
}

TEST_CASE("parity matches the inversion sign") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Perm p = unrank(r, n);
      CHECK(is_even(p) == even_by_inversions(p));
    }
  }
}

TEST_CASE("rank and unrank") {
  CHECK(rank(Perm::identity(4)) == 0);
  CHECK(unrank(23, 4) == parse_one_line("4 3 2 1"));
  CHECK_THROWS_AS(unrank(24, 4), std::out_of_range);
  for (std::uint64_t r = 0; r < factorial(7); ++r) {
    CHECK(rank(unrank(r, 7)) == r);
  }
}

TEST_CASE("order reversal") {
  CHECK(reverse_chi(3) == parse_one_line("3 2 1"));
  for (int n = 1; n <= 7; ++n) {
    CHECK((reverse_chi(n) * reverse_chi(n)).is_identity());
  }
  // reverse complement formula: entry i becomes n+1 - pi_{n+1-i}
  const Perm pi = parse_one_line("4 1 6 2 5 7 3");
  CHECK(pi.conjugate_by(reverse_chi(7)) == parse_one_line("5 1 3 6 2 7 4"));
}

TEST_CASE("text round trips") {
  CHECK(format_one_line(parse_one_line("4,1,6,2,5,7,3")) == "4 1 6 2 5 7 3");
  CHECK(parse_one_line("1") == Perm::identity(1));
  CHECK_THROWS_AS(parse_one_line("1 2 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_one_line("1 2 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_one_line("a b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_one_line(""), std::invalid_argument);
  CHECK(format_cycles(Perm::identity(4), 0, false) == "()");
  CHECK(format_cycles(Perm::identity(3), 0, true) == "(0)(1)(2)");
}
