#include <doctest.h>

#include <sstream>

#include "permcycle/bounds.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/permutation.hpp"

using namespace permcycle;

TEST_CASE("small searches") {
  Oracle oracle;
  const DistanceTable& t3 = oracle.table(3, FamilyTag::ptd);
  CHECK(t3.diameter == 2);
  CHECK(exact_distance(Perm::identity(3), t3) == 0);
  CHECK(exact_distance(parse_one_line("3 2 1"), t3) == 2);
  CHECK(exact_distance(parse_one_line("1 3 2"), t3) == 2);
  CHECK(exact_distance(parse_one_line("2 3 1"), t3) == 1);
  int hist[3] = {0, 0, 0};
  for (std::uint8_t d : t3.dist) ++hist[d];
  CHECK(hist[0] == 1);
  CHECK(hist[1] == 3);
  CHECK(hist[2] == 2);

  // a single state for n = 1, whatever the family
  CHECK(bfs(1, {FamilyTag::ptd, 1}).dist == std::vector<std::uint8_t>{0});
  CHECK(bfs(1, {FamilyTag::bid, 1}).diameter == 0);

  CHECK_THROWS_AS(exact_distance(Perm::identity(4), t3), std::invalid_argument);
  CHECK_THROWS_AS(bfs(4, {FamilyTag::ptd, 3}), std::invalid_argument);
}

TEST_CASE("cap enforcement") {
  BfsOptions opts;
  opts.cap = 4;
  CHECK_THROWS_AS(bfs(5, {FamilyTag::ptd, 5}, opts), cap_exceeded);
  opts.cap = 99;  // clamped to the hard limit
  CHECK_THROWS_AS(bfs(13, {FamilyTag::ptd, 13}, opts), cap_exceeded);
}

TEST_CASE("edge consistency and inverse symmetry") {
  Oracle oracle;
  for (FamilyTag tag : {FamilyTag::ptd, FamilyTag::pexc, FamilyTag::td}) {
    const DistanceTable& tbl = oracle.table(5, tag);
    const auto gens = realise_all({tag, 5});
    for (std::uint64_t r = 0; r < factorial(5); ++r) {
      const Perm p = unrank(r, 5);
      const int d = tbl.dist[r];
      CHECK(tbl.dist[rank(p.inverse())] == d);
      for (const auto& g : gens) {
        const int nd = tbl.dist[rank(p * g)];
        CHECK(nd >= d - 1);
        CHECK(nd <= d + 1);
      }
    }
  }
  // full edge check at n = 6 for the prefix transposition family
  const DistanceTable& t6 = oracle.table(6, FamilyTag::ptd);
  const auto gens6 = realise_all({FamilyTag::ptd, 6});
  for (std::uint64_t r = 0; r < factorial(6); ++r) {
    const Perm p = unrank(r, 6);
    const int d = t6.dist[r];
    CHECK(t6.dist[rank(p.inverse())] == d);
    for (const auto& g : gens6) {
      const int nd = t6.dist[rank(p * g)];
      CHECK(nd >= d - 1);
      CHECK(nd <= d + 1);
    }
  }
}

TEST_CASE("threaded search is identical to serial") {
  BfsOptions serial;
  serial.threads = 1;
  BfsOptions wide;
  wide.threads = 4;
  const DistanceTable a = bfs(6, {FamilyTag::ptd, 6}, serial);
  const DistanceTable b = bfs(6, {FamilyTag::ptd, 6}, wide);
  CHECK(a.dist == b.dist);
  CHECK(a.diameter == b.diameter);
}

TEST_CASE("tight-count rows") {
  Oracle oracle;
  const Table1Row r4 = table1_row(4, oracle);
  CHECK(r4.n_factorial == 24);
  CHECK(r4.tight_dm == 13);
  CHECK(r4.tight_new == 22);
  const Table1Row r6 = table1_row(6, oracle);
  CHECK(r6.tight_dm == 196);
  CHECK(r6.tight_new == 574);

  const Table2Row g6 = table2_row(6, oracle);
  CHECK(g6.delta == std::array<std::uint64_t, 4>{574, 143, 3, 0});
  const Table2Row g5 = table2_row(5, oracle);
  CHECK(g5.delta == std::array<std::uint64_t, 4>{106, 14, 0, 0});
}

TEST_CASE("diameters") {
  Oracle oracle;
  CHECK(diameter_of(3, FamilyTag::ptd, oracle) == 2);
  for (int n = 3; n <= 7; ++n) {
    CHECK(diameter_of(n, FamilyTag::ptd, oracle) >= 3 * n / 4);
  }
  // the prefix exchange diameter equals the formula's maximum
  int best = 0;
  for (std::uint64_t r = 0; r < factorial(3); ++r) {
    best = std::max(best, pexc_exact(unrank(r, 3)));
  }
  CHECK(diameter_of(3, FamilyTag::pexc, oracle) == best);
  CHECK(best == 3);
}

TEST_CASE("table serialisation") {
  Oracle oracle;
  const DistanceTable& tbl = oracle.table(5, FamilyTag::td);
  std::ostringstream out(std::ios::binary);
  dump_table(tbl, out);
  const std::string bytes = out.str();
  CHECK(bytes.substr(0, 4) == "PCDT");
  CHECK(bytes.size() == 16 + factorial(5));

  std::istringstream in(bytes, std::ios::binary);
  const DistanceTable back = load_table(in);
  CHECK(back.n == tbl.n);
  CHECK(back.family == tbl.family);
  CHECK(back.dist == tbl.dist);
  CHECK(back.diameter == tbl.diameter);

  std::istringstream bad("XXXX????", std::ios::binary);
  CHECK_THROWS_AS(load_table(bad), std::invalid_argument);
}

TEST_CASE("tsv emission") {
  Oracle oracle;
  CHECK(to_tsv(table1(3, oracle)) ==
        "1\t1\t1\t1\t1\n"
        "2\t2\t2\t2\t2\n"
        "3\t6\t4\t5\t6\n");
  CHECK(to_tsv(table2(3, oracle)) ==
        "1\t1\t1\t0\t0\t0\n"
        "2\t2\t2\t0\t0\t0\n"
        "3\t6\t6\t0\t0\t0\n");
}
