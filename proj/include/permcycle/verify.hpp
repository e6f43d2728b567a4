#pragma once

#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "permcycle/bounds.hpp"
#include "permcycle/cycle_graph.hpp"
#include "permcycle/descents.hpp"
#include "permcycle/diameter_sort.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/permutation.hpp"

namespace permcycle {

// Reference values from published exhaustive runs: per n, the number of
// permutations whose exact prefix transposition distance is tight with
// respect to the breakpoint bound, the strip/clan bound, and the
// encoding-based bound, and the histogram of distance minus encoding bound.
struct ReferenceTightRow {
  int n;
  std::uint64_t n_factorial, dm, cs, nw;
};
struct ReferenceGapRow {
  int n;
  std::uint64_t n_factorial;
  std::array<std::uint64_t, 4> delta;
};

inline constexpr ReferenceTightRow kReferenceTight[] = {
    {1, 1, 1, 1, 1},
    {2, 2, 2, 2, 2},
    {3, 6, 4, 4, 6},
    {4, 24, 13, 15, 22},
    {5, 120, 41, 48, 106},
    {6, 720, 196, 255, 574},
    {7, 5040, 862, 1144, 3782},
    {8, 40320, 5489, 7737, 27471},
    {9, 362880, 31033, 44187, 229167},
    {10, 3628800, 247006, 369979, 2103510},
    {11, 39916800, 1706816, 2575693, 21280564},
    {12, 479001600, 16302397, 25791862, 236651919},
};

inline constexpr ReferenceGapRow kReferenceGap[] = {
    {1, 1, {1, 0, 0, 0}},
    {2, 2, {2, 0, 0, 0}},
    {3, 6, {6, 0, 0, 0}},
    {4, 24, {22, 2, 0, 0}},
    {5, 120, {106, 14, 0, 0}},
    {6, 720, {574, 143, 3, 0}},
    {7, 5040, {3782, 1234, 24, 0}},
    {8, 40320, {27471, 12310, 539, 0}},
    {9, 362880, {229167, 128576, 5137, 0}},
    {10, 3628800, {2103510, 1427966, 97321, 3}},
    {11, 39916800, {21280564, 17532948, 1103254, 34}},
    {12, 479001600, {236651919, 221680237, 20667140, 2304}},
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int table_max_n = 8;
  int diameter_bfs_max = 10;
  bool long_tables = false;  // extend table checks to n = 9, 10
  int threads = 0;
  std::string cli_path;  // when set, table emission also runs through the CLI binary
};

namespace detail {

inline std::optional<std::string> capture_cli(const std::string& command) {
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = ::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  if (status != 0) return std::nullopt;
  return out;
}

inline std::string reference_tsv1(int max_n) {
  std::string out;
  for (const auto& row : kReferenceTight) {
    if (row.n > max_n) break;
    out += std::to_string(row.n) + '\t' + std::to_string(row.n_factorial) + '\t' +
           std::to_string(row.dm) + '\t' + std::to_string(row.cs) + '\t' + std::to_string(row.nw) +
           '\n';
  }
  return out;
}

inline std::string reference_tsv2(int max_n) {
  std::string out;
  for (const auto& row : kReferenceGap) {
    if (row.n > max_n) break;
    out += std::to_string(row.n) + '\t' + std::to_string(row.n_factorial);
    for (auto d : row.delta) out += '\t' + std::to_string(d);
    out += '\n';
  }
  return out;
}

// Deterministic across standard libraries, unlike std::shuffle.
inline Perm random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
  }
  return Perm::from_image(std::move(img));
}

}  // namespace detail

/// Runs the full acceptance suite and returns one result per criterion.
inline std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {}) {
  std::vector<CriterionResult> results;
  Oracle oracle;
  oracle.options.threads = opts.threads;
  oracle.options.cap = std::max(kDefaultBfsCap, opts.diameter_bfs_max);

  const int check_n = opts.long_tables ? std::min(opts.table_max_n + 2, 10) : opts.table_max_n;

  // 1. tight-count table reproduction
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = table1(check_n, oracle);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream detail;
    bool pass = true;
    for (const auto& row : rows) {
      const auto& ref = kReferenceTight[static_cast<std::size_t>(row.n - 1)];
      if (row.n_factorial != ref.n_factorial || row.tight_dm != ref.dm ||
          row.tight_cs != ref.cs || row.tight_new != ref.nw) {
        pass = false;
        detail << " n=" << row.n << " got (" << row.n_factorial << "," << row.tight_dm << ","
               << row.tight_cs << "," << row.tight_new << ") want (" << ref.n_factorial << ","
               << ref.dm << "," << ref.cs << "," << ref.nw << ");";
      }
    }
    const bool in_budget = secs < (opts.long_tables ? 1800.0 : 120.0);
    std::ostringstream head;
    head << "n<=" << check_n << " in " << secs << "s";
    if (!in_budget) head << " (over budget)";
    results.push_back({1, "table1-reproduction", pass && in_budget, head.str() + detail.str()});
  }

  // 2. gap-histogram table reproduction
  {
    const auto rows = table2(check_n, oracle);
    std::ostringstream detail;
    bool pass = true;
    for (const auto& row : rows) {
      const auto& ref = kReferenceGap[static_cast<std::size_t>(row.n - 1)];
      if (row.n_factorial != ref.n_factorial || row.delta != ref.delta) {
        pass = false;
        detail << " n=" << row.n << " got (" << row.delta[0] << "," << row.delta[1] << ","
               << row.delta[2] << "," << row.delta[3] << ");";
      }
    }
    results.push_back({2, "table2-reproduction", pass,
                       pass ? "all gap histograms match" : detail.str()});
  }

  // 3. dominance of the encoding bound over the breakpoint bound
  {
    bool pass = true;
    std::string where;
    for (int n = 1; n <= 8 && pass; ++n) {
      for (std::uint64_t r = 0; r < factorial(n); ++r) {
        const Perm pi = unrank(r, n);
        if (ptd_new_lower_bound(pi) < dm_lower_bound(pi)) {
          pass = false;
          where = format_one_line(pi);
          break;
        }
      }
    }
    results.push_back({3, "dominance", pass, pass ? "new >= dm for all n <= 8" : "violated at " + where});
  }

  // 4. exactness of the block-interchange and prefix-exchange formulas
  {
    const auto t0 = std::chrono::steady_clock::now();
    const DistanceTable& bid_tbl = oracle.table(6, FamilyTag::bid);
    const DistanceTable& pexc_tbl = oracle.table(6, FamilyTag::pexc);
    std::uint64_t bad = 0;
    for (std::uint64_t r = 0; r < factorial(6); ++r) {
      const Perm pi = unrank(r, 6);
      if (bid_lower_bound(pi) != bid_tbl.dist[r]) ++bad;
      if (pexc_exact(pi) != pexc_tbl.dist[r]) ++bad;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream ss;
    ss << bad << " mismatches over S_6 in " << secs << "s";
    results.push_back({4, "bid/pexc-exactness", bad == 0 && secs < 10.0, ss.str()});
  }

  // 5. transposition distance sandwich
  {
    const DistanceTable& td_tbl = oracle.table(6, FamilyTag::td);
    std::uint64_t bad = 0;
    for (std::uint64_t r = 0; r < factorial(6); ++r) {
      const Perm pi = unrank(r, 6);
      const int d = td_tbl.dist[r];
      if (!(td_lower_bound(pi) <= d && d <= td_upper_bound(pi))) ++bad;
    }
    std::ostringstream ss;
    ss << bad << " violations over S_6";
    results.push_back({5, "td-sandwich", bad == 0, ss.str()});
  }

  // 6. diameter family
  {
    bool pass = true;
    std::ostringstream ss;
    const auto report = verify_diameter_family(std::min(opts.diameter_bfs_max, 10), &oracle);
    pass = report.all_ok;
    for (const auto& row : report.rows) {
      ss << " n=" << row.n << " bound=" << row.bound;
      if (row.bfs) ss << " bfs=" << *row.bfs;
      ss << "/" << row.floor_3n_4 << (row.ok ? "" : " FAIL");
    }
    const Perm big = construct_extremal(11);
    const int big_bound = ptd_new_lower_bound(big);
    const SortingSequence seq = sort_two_permutation(TwoPermutation(big));
    const bool big_ok = big_bound >= 8 && static_cast<int>(seq.ops.size()) == 8 &&
                        apply_sequence(seq).is_identity();
    ss << " n=11 bound=" << big_bound << " certificate=" << seq.ops.size();
    pass = pass && big_ok;
    results.push_back({6, "diameter-family", pass, ss.str()});
  }

  // 7. optimal sorting of the fixed-point-free involution class in S_7
  {
    const DistanceTable& tbl = oracle.table(7, FamilyTag::ptd);
    std::uint64_t count = 0, bad = 0;
    for (std::uint64_t r = 0; r < factorial(7); ++r) {
      const Perm pi = unrank(r, 7);
      if (!is_two_permutation(pi)) continue;
      ++count;
      const SortingSequence seq = sort_two_permutation(TwoPermutation(pi));
      const bool ok = seq.ops.size() == 5 && tbl.dist[r] == 5 && apply_sequence(seq).is_identity();
      if (!ok) ++bad;
    }
    std::ostringstream ss;
    ss << count << " such permutations, " << bad << " mismatches";
    results.push_back({7, "sorter-optimality", bad == 0 && count > 0, ss.str()});
  }

  // 8. algebraic identity suite
  {
    bool pass = true;
    std::string what;
    try {
      for (int n = 1; n <= 5 && pass; ++n) {
        const std::uint64_t total = factorial(n);
        for (std::uint64_t a = 0; a < total && pass; ++a) {
          const Perm p = unrank(a, n);
          inverse_encoding(p);             // throws on violation
          reverse_complement_encoding(p);  // throws on violation
          toric_encodings(p);              // throws on violation
          for (std::uint64_t b = 0; b < total; ++b) {
            if (!compose_identity_check(p, unrank(b, n))) {
              pass = false;
              what = "composition identity at n=" + std::to_string(n);
              break;
            }
          }
        }
      }
      std::mt19937_64 rng(0x5eed5eed5eed5eedULL);
      for (int trial = 0; trial < 10000 && pass; ++trial) {
        const Perm p = detail::random_perm(10, rng);
        const Perm s = detail::random_perm(10, rng);
        if (!compose_identity_check(p, s)) {
          pass = false;
          what = "composition identity on random n=10";
        }
        inverse_encoding(p);
        composed_inverse_encoding(p, s);
        reverse_complement_encoding(p);
        const Perm rot = grey_rotation(10);
        Perm power = Perm::identity(11);
        const int shift = static_cast<int>(rng() % 11);
        for (int k = 0; k < shift; ++k) power = power * rot;
        // a random toric shift's encoding is the matching conjugate
        const auto cls = toric_class(p);
        const auto encs = toric_encodings(p);
        if (!encs.count(encode_perm(p).conjugate_by(power))) {
          pass = false;
          what = "toric conjugation on random n=10";
        }
        if ((11 % cls.size()) != 0) {
          pass = false;
          what = "toric class size does not divide n+1";
        }
      }
    } catch (const std::exception& e) {
      pass = false;
      what = e.what();
    }
    results.push_back({8, "algebraic-identities", pass,
                       pass ? "exhaustive n <= 5 plus 10^4 random n=10 instances" : what});
  }

  // 9. descent suite
  {
    bool pass = true;
    std::string what = "descent bounds n <= 7; involution-class descents; adjacency counts";
    for (int n = 1; n <= 7 && pass; ++n) {
      if (!check_descent_bounds(n)) {
        pass = false;
        what = "per-cycle descent bounds failed at n=" + std::to_string(n);
      }
      for (std::uint64_t r = 0; r < factorial(n); ++r) {
        const Perm pi = unrank(r, n);
        if (extension_adjacencies(pi) != cycle_stats(encode_perm(pi)).c_fixed) {
          pass = false;
          what = "adjacency count mismatch at n=" + std::to_string(n);
          break;
        }
      }
    }
    for (std::uint64_t r = 0; r < factorial(7) && pass; ++r) {
      const Perm pi = unrank(r, 7);
      if (is_two_permutation(pi) && descent_report(pi).des != 4) {
        pass = false;
        what = "descent count of a 2-permutation is not (n+1)/2";
      }
    }
    results.push_back({9, "descent-suite", pass, what});
  }

  // 10. determinism of the emitted tables
  {
    bool pass = true;
    std::string what;
    Oracle fresh1, fresh2;
    fresh1.options.threads = opts.threads;
    fresh2.options.threads = opts.threads;
    const int max_n = std::min(opts.table_max_n, 8);
    const std::string a1 = to_tsv(table1(max_n, fresh1)) + to_tsv(table2(max_n, fresh1));
    const std::string a2 = to_tsv(table1(max_n, fresh2)) + to_tsv(table2(max_n, fresh2));
    if (a1 != a2) {
      pass = false;
      what = "in-process reruns differ";
    }
    if (!opts.cli_path.empty()) {
      const std::string cmd1 = opts.cli_path + " table1 --max-n " + std::to_string(max_n);
      const std::string cmd2 = opts.cli_path + " table2 --max-n " + std::to_string(max_n);
      const auto b1 = detail::capture_cli(cmd1), b2 = detail::capture_cli(cmd1);
      const auto c1 = detail::capture_cli(cmd2), c2 = detail::capture_cli(cmd2);
      if (!b1 || !b2 || !c1 || !c2) {
        pass = false;
        what = "CLI invocation failed";
      } else if (*b1 != *b2 || *c1 != *c2) {
        pass = false;
        what = "CLI reruns differ";
      }
    }
    results.push_back({10, "determinism", pass, pass ? "byte-identical reruns" : what});
  }

  return results;
}

}  // namespace permcycle
