#include <doctest.h>

#include <numeric>

#include "permcycle/cycle_graph.hpp"
#include "permcycle/descents.hpp"
#include "permcycle/diameter_sort.hpp"
#include "permcycle/permutation.hpp"

using namespace permcycle;

TEST_CASE("descent counting and attribution") {
  const DescentReport rep = descent_report(parse_one_line("4 1 6 2 5 7 3"));
  CHECK(rep.des == 3);
  CHECK(rep.positions == std::vector<int>{2, 4, 7});
  CHECK(std::accumulate(rep.per_cycle.begin(), rep.per_cycle.end(), 0) == rep.des);

  CHECK(descent_report(Perm::identity(6)).des == 0);
  CHECK(descent_report(parse_one_line("3 2 1")).des == 2);  // (n+1)/2 for this 2-permutation
}

TEST_CASE("per-cycle descent bounds") {
  for (int n = 1; n <= 6; ++n) CHECK(check_descent_bounds(n));

  for (std::uint64_t r = 0; r < factorial(6); ++r) {
    const DescentReport rep = descent_report(unrank(r, 6));
    CHECK(std::accumulate(rep.per_cycle.begin(), rep.per_cycle.end(), 0) == rep.des);
    for (int i : rep.positions) {
      CHECK(i >= 2);
      CHECK(i <= 6);
    }
  }

  // one larger sample
  const DescentReport rep = descent_report(parse_one_line("6 3 8 1 5 2 7 4"));
  CHECK(std::accumulate(rep.per_cycle.begin(), rep.per_cycle.end(), 0) == rep.des);
  for (std::size_t c = 0; c < rep.alt_cycles.cycles.size(); ++c) {
    const int len = static_cast<int>(rep.alt_cycles.cycles[c].size());
    if (len == 1) {
      CHECK(rep.per_cycle[c] == 0);
    } else {
      CHECK(rep.per_cycle[c] >= 1);
      CHECK(rep.per_cycle[c] <= len - 1);
    }
  }
}

TEST_CASE("each 2-cycle of a 2-permutation holds exactly one descent") {
  int seen = 0;
  for (std::uint64_t r = 0; r < factorial(7); ++r) {
    const Perm pi = unrank(r, 7);
    if (!is_two_permutation(pi)) continue;
    ++seen;
    const DescentReport rep = descent_report(pi);
    CHECK(rep.des == 4);
    for (int cnt : rep.per_cycle) CHECK(cnt == 1);
  }
  CHECK(seen > 0);
}

TEST_CASE("extension adjacencies count the encoding's fixed points") {
  CHECK(extension_adjacencies(Perm::identity(5)) == 6);
  CHECK(extension_adjacencies(parse_one_line("4 1 6 2 5 7 3")) == 0);
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Perm pi = unrank(r, n);
      CHECK(extension_adjacencies(pi) == cycle_stats(encode_perm(pi)).c_fixed);
    }
  }
}
