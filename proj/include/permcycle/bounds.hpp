#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "permcycle/cycle_graph.hpp"
#include "permcycle/permutation.hpp"

namespace permcycle {

/// Breakpoint count of the extension 0 pi_1 ... pi_n n+1: a pair of adjacent
/// entries is a breakpoint when the right one is not the left plus one, and
/// the leading pair always counts.  Cross-checked against the fixed-point
/// formula n+1 - c_1(enc(pi)) (+1 when pi_1 = 1).
inline int ptb(const Perm& pi) {
  const int n = pi.size();
  int count = 1;  // pair (0, pi_1)
  for (int i = 2; i <= n; ++i) {
    if (pi(i - 1) != pi(i - 2) + 1) ++count;
  }
  if (pi(n - 1) != n - 1) ++count;  // pair (pi_n, n+1)

  const int via_fixed_points =
      n + 1 - cycle_stats(encode_perm(pi)).c_fixed + (pi(0) == 0 ? 1 : 0);
  if (count != via_fixed_points) throw std::logic_error("ptb: formula cross-check failed");
  return count;
}

/// Breakpoint lower bound on the prefix transposition distance: ceil((ptb-1)/2).
inline int dm_lower_bound(const Perm& pi) { return ptb(pi) / 2; }

struct ClanInterval {
  int begin = 0;  // 0-based positions into the 0-based value sequence, inclusive
  int end = 0;
  int length() const { return end - begin + 1; }
};

/// Strip/clan statistics of the permutation mapped onto {0..n-1} by
/// subtracting one from every entry.  Values are read cyclically mod n:
/// a pair of adjacent entries is an adjacency when the right one is the left
/// plus one mod n, and an anti-adjacency when it is the left minus one mod n.
/// A strip is a maximal interval containing only adjacencies (a lone entry is
/// a strip of length one); a clan is a maximal interval containing only
/// anti-adjacencies, and only clans of length >= 3 carry weight in the bound.
struct CsStats {
  int strips = 0;
  std::vector<ClanInterval> clans;  // clans of length >= 3
  long long excess = 0;             // sum of (length - 2) over those clans
  long long numerator6() const { return 3LL * strips + excess; }  // 6x the raw bound
};

inline CsStats cs_stats(const Perm& pi) {
  const int n = pi.size();
  CsStats s;
  auto is_adj = [&](int a, int b) { return (a + 1) % n == b; };
  auto is_anti = [&](int a, int b) { return (a + n - 1) % n == b; };
  for (int i = 1; i <= n; ++i) {
    if (i == n || !is_adj(pi(i - 1), pi(i))) ++s.strips;  // end of an adjacency run
  }
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || !is_anti(pi(i - 1), pi(i))) {
      const int len = i - start;
      if (len >= 3) {
        s.clans.push_back({start, i - 1});
        s.excess += len - 2;
      }
      start = i;
    }
  }
  return s;
}

/// Strip/clan lower bound on the prefix transposition distance, rounded up to
/// an integer; the identity needs no moves and is reported as 0.
inline int cs_lower_bound(const Perm& pi) {
  if (pi.is_identity()) return 0;
  const long long num = cs_stats(pi).numerator6();
  return static_cast<int>((num + 5) / 6);
}

/// Block-interchange distance: (n+1 - c(enc(pi))) / 2, exact.
inline int bid_lower_bound(const Perm& pi) {
  const int n = pi.size();
  return (n + 1 - cycle_stats(encode_perm(pi)).c) / 2;
}

/// Transposition distance lower bound: (n+1 - c_odd(enc(pi))) / 2.
inline int td_lower_bound(const Perm& pi) {
  const int n = pi.size();
  return (n + 1 - cycle_stats(encode_perm(pi)).c_odd) / 2;
}

/// Transposition distance upper bound: n - c_odd over the cycles of pi itself.
inline int td_upper_bound(const Perm& pi) {
  return pi.size() - cycle_stats(pi).c_odd;
}

/// Prefix exchange distance, exact: n + c - 2*c_1 over the cycles of pi,
/// minus 2 unless pi fixes its first position.
inline int pexc_exact(const Perm& pi) {
  const CycleStats st = cycle_stats(pi);
  return pi.size() + st.c - 2 * st.c_fixed - (pi(0) == 0 ? 0 : 2);
}

/// Minimum number of 3-cycles through a distinguished element whose product
/// is the even bijection q: (|q| + c)/2 - c_1, minus 1 unless q fixes the
/// distinguished element.
inline int d13(const Perm& q, int distinguished) {
  if (!is_even(q)) throw std::invalid_argument("d13: permutation must be even");
  if (distinguished < 0 || distinguished >= q.size()) {
    throw std::invalid_argument("d13: distinguished element out of range");
  }
  const CycleStats st = cycle_stats(q);
  return (q.size() + st.c) / 2 - st.c_fixed - (q(distinguished) == distinguished ? 0 : 1);
}

/// Prefix transposition distance lower bound from the encoding's cycle
/// statistics: (n+1 + c(enc))/2 - c_1(enc), minus 1 unless pi_1 = 1.  Equals
/// the 3-cycles-through-1 distance of enc(pi) and dominates the breakpoint
/// bound everywhere.
inline int ptd_new_lower_bound(const Perm& pi) {
  const int n = pi.size();
  const CycleStats st = cycle_stats(encode_perm(pi));
  return (n + 1 + st.c) / 2 - st.c_fixed - (pi(0) == 0 ? 0 : 1);
}

/// Both cycle-count inequalities relating pi to its encoding:
/// 2*c_odd(pi) <= n-1 + c_odd(enc) and 2*c(pi) <= n-1 + c(enc).
inline bool corollary_checks(const Perm& pi) {
  const int n = pi.size();
  const CycleStats a = cycle_stats(pi);
  const CycleStats b = cycle_stats(encode_perm(pi));
  return 2 * a.c_odd <= n - 1 + b.c_odd && 2 * a.c <= n - 1 + b.c;
}

struct BoundReport {
  int ptb = 0;
  int dm_lb = 0;
  int cs_lb = 0;
  int new_lb = 0;
  int bid_lb = 0;
  int td_lb = 0;
  int td_ub = 0;
  int pexc = 0;
  int strips = 0;
  std::vector<ClanInterval> clans;
};

inline BoundReport bound_report(const Perm& pi) {
  BoundReport r;
  r.ptb = ptb(pi);
  r.dm_lb = dm_lower_bound(pi);
  CsStats cs = cs_stats(pi);
  r.strips = cs.strips;
  r.clans = std::move(cs.clans);
  r.cs_lb = cs_lower_bound(pi);
  r.new_lb = ptd_new_lower_bound(pi);
  r.bid_lb = bid_lower_bound(pi);
  r.td_lb = td_lower_bound(pi);
  r.td_ub = td_upper_bound(pi);
  r.pexc = pexc_exact(pi);
  return r;
}

}  // namespace permcycle
