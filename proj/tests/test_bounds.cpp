#include <doctest.h>

#include <map>
#include <queue>
#include <vector>

#include "permcycle/bounds.hpp"
#include "permcycle/cycle_graph.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/permutation.hpp"

using namespace permcycle;

namespace {

// Independent oracle for the 3-cycles-through-an-element distance: plain
// breadth-first search over all bijections of {0..m-1}.
std::map<Perm, int> bfs_three_cycles_through(int m, int distinguished) {
  std::vector<Perm> gens;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b || a == distinguished || b == distinguished) continue;
      gens.push_back(Perm::from_cycles(m, {{distinguished, a, b}}));
    }
  }
  std::map<Perm, int> dist;
  std::queue<Perm> frontier;
  dist[Perm::identity(m)] = 0;
  frontier.push(Perm::identity(m));
  while (!frontier.empty()) {
    const Perm cur = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      Perm next = cur * g;
      if (!dist.count(next)) {
        dist[next] = dist[cur] + 1;
        frontier.push(next);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("breakpoint count") {
  CHECK(ptb(Perm::identity(5)) == 1);
  CHECK(ptb(Perm::identity(1)) == 1);
  CHECK(ptb(parse_one_line("4 1 6 2 5 7 3")) == 8);
  CHECK(ptb(parse_one_line("1 2 4 3")) == 4);
  CHECK(ptb(parse_one_line("3 2 1")) == 4);
  // the two internal routes agree (a mismatch throws)
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) (void)ptb(unrank(r, n));
  }
}

TEST_CASE("breakpoint lower bound") {
  CHECK(dm_lower_bound(Perm::identity(4)) == 0);
  CHECK(dm_lower_bound(parse_one_line("4 1 6 2 5 7 3")) == 4);
  CHECK(dm_lower_bound(parse_one_line("3 2 1")) == 2);
}

TEST_CASE("strip and clan statistics") {
  CHECK(cs_lower_bound(Perm::identity(5)) == 0);
  CHECK(cs_lower_bound(Perm::identity(1)) == 0);

  // the reversal maps to 4 3 2 1 0: five singleton strips, one clan of five
  const CsStats chi = cs_stats(reverse_chi(5));
  CHECK(chi.strips == 5);
  REQUIRE(chi.clans.size() == 1);
  CHECK(chi.clans[0].begin == 0);
  CHECK(chi.clans[0].end == 4);
  CHECK(chi.excess == 3);
  CHECK(cs_lower_bound(reverse_chi(5)) == 3);

  // cyclic value reading: 2 1 maps to 1 0, whose single pair wraps mod 2
  CHECK(cs_stats(parse_one_line("2 1")).strips == 1);
  CHECK(cs_lower_bound(parse_one_line("2 1")) == 1);

  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      CHECK(cs_lower_bound(unrank(r, n)) >= 0);
    }
  }
}

TEST_CASE("block-interchange and transposition bounds") {
  const Perm pi = parse_one_line("4 1 6 2 5 7 3");
  CHECK(bid_lower_bound(Perm::identity(5)) == 0);
  CHECK(bid_lower_bound(pi) == 3);
  CHECK(td_lower_bound(Perm::identity(5)) == 0);
  CHECK(td_lower_bound(pi) == 3);
  CHECK(td_upper_bound(Perm::identity(5)) == 0);
  CHECK(td_upper_bound(pi) == 4);

  Oracle oracle;
  const DistanceTable& bid5 = oracle.table(5, FamilyTag::bid);
  const DistanceTable& td5 = oracle.table(5, FamilyTag::td);
  for (std::uint64_t r = 0; r < factorial(5); ++r) {
    const Perm p = unrank(r, 5);
    CHECK(bid_lower_bound(p) == bid5.dist[r]);  // exact, not just a bound
    CHECK(td_lower_bound(p) <= td5.dist[r]);
    CHECK(td5.dist[r] <= td_upper_bound(p));
  }
}

TEST_CASE("prefix exchange distance") {
  CHECK(pexc_exact(Perm::identity(6)) == 0);
  CHECK(pexc_exact(parse_one_line("2 1 3")) == 1);
  CHECK(pexc_exact(parse_one_line("1 3 2")) == 3);
  Oracle oracle;
  const DistanceTable& tbl = oracle.table(5, FamilyTag::pexc);
  for (std::uint64_t r = 0; r < factorial(5); ++r) {
    CHECK(pexc_exact(unrank(r, 5)) == tbl.dist[r]);
  }
}

TEST_CASE("three-cycles-through-an-element distance") {
  CHECK(d13(Perm::identity(5), 0) == 0);
  CHECK(d13(Perm::from_cycles(4, {{0, 2}, {1, 3}}), 1) == 2);
  CHECK_THROWS_AS(d13(Perm::from_cycles(4, {{0, 1}}), 0), std::invalid_argument);
  CHECK_THROWS_AS(d13(Perm::identity(4), 9), std::invalid_argument);

  for (int distinguished : {0, 1, 3}) {
    const auto oracle = bfs_three_cycles_through(5, distinguished);
    CHECK(oracle.size() == factorial(5) / 2);  // exactly the even bijections
    for (const auto& [q, d] : oracle) {
      CHECK(d13(q, distinguished) == d);
    }
  }
}

TEST_CASE("encoding-based prefix transposition bound") {
  CHECK(ptd_new_lower_bound(Perm::identity(5)) == 0);
  CHECK(ptd_new_lower_bound(parse_one_line("4 1 6 2 5 7 3")) == 4);
  CHECK(ptd_new_lower_bound(parse_one_line("2 1")) == 1);
  // agrees with the through-1 distance of the encoding
  for (std::uint64_t r = 0; r < factorial(5); ++r) {
    const Perm pi = unrank(r, 5);
    CHECK(ptd_new_lower_bound(pi) == d13(encode_perm(pi), 1));
  }
}

TEST_CASE("dominance and parity") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const Perm pi = unrank(r, n);
      CHECK(ptd_new_lower_bound(pi) >= dm_lower_bound(pi));
      CHECK((n + 1 - cycle_stats(encode_perm(pi)).c) % 2 == 0);
      CHECK(corollary_checks(pi));
    }
  }
  CHECK(corollary_checks(parse_one_line("4 1 6 2 5 7 3")));
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(parse_one_line("4 1 6 2 5 7 3"));
  CHECK(r.ptb == 8);
  CHECK(r.dm_lb == 4);
  CHECK(r.new_lb == 4);
  CHECK(r.bid_lb == 3);
  CHECK(r.td_lb == 3);
  CHECK(r.td_ub == 4);
  const BoundReport id = bound_report(Perm::identity(3));
  CHECK(id.dm_lb == 0);
  CHECK(id.cs_lb == 0);
  CHECK(id.new_lb == 0);
  CHECK(id.bid_lb == 0);
  CHECK(id.td_lb == 0);
  CHECK(id.td_ub == 0);
  CHECK(id.pexc == 0);
}
