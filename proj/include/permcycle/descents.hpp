#pragma once

#include <stdexcept>
#include <vector>

#include "permcycle/cycle_graph.hpp"
#include "permcycle/permutation.hpp"

namespace permcycle {

/**
 * Descents of pi and their distribution over the alternating cycles of the
 * cycle graph.  A descent at position i (2 <= i <= n) is a drop pi_i <
 * pi_{i-1}; it belongs to the alternating cycle owning the black arc at
 * position i.  The boundary arcs (position 1 and the wrap arc) never carry
 * a descent.
 */
struct DescentReport {
  std::vector<int> positions;       // 1-based positions i with pi_i < pi_{i-1}
  int des = 0;
  CycleDecomposition alt_cycles;    // cycles of the encoding, canonical order
  std::vector<int> per_cycle;       // descent count per cycle, same order
};

inline DescentReport descent_report(const Perm& pi) {
  const int n = pi.size();
  DescentReport rep;
  rep.alt_cycles = cycle_decomposition(encode_perm(pi));
  rep.per_cycle.assign(rep.alt_cycles.cycles.size(), 0);

  // element -> index of its cycle in the decomposition
  std::vector<int> cycle_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t c = 0; c < rep.alt_cycles.cycles.size(); ++c) {
    for (int e : rep.alt_cycles.cycles[c]) cycle_of[static_cast<std::size_t>(e)] = static_cast<int>(c);
  }

  for (int i = 2; i <= n; ++i) {
    if (pi(i - 1) < pi(i - 2)) {
      rep.positions.push_back(i);
      ++rep.des;
      // black arc at position i runs from element pi_i
      ++rep.per_cycle[static_cast<std::size_t>(cycle_of[static_cast<std::size_t>(pi(i - 1) + 1)])];
    }
  }
  return rep;
}

/// Every alternating cycle of length l >= 2 carries between 1 and l-1
/// descents, and 1-cycles carry none; checked for all of S_n.
inline bool check_descent_bounds(int n) {
  const std::uint64_t total = factorial(n);
  for (std::uint64_t r = 0; r < total; ++r) {
    const DescentReport rep = descent_report(unrank(r, n));
    for (std::size_t c = 0; c < rep.alt_cycles.cycles.size(); ++c) {
      const int len = static_cast<int>(rep.alt_cycles.cycles[c].size());
      const int cnt = rep.per_cycle[c];
      if (len == 1 ? cnt != 0 : (cnt < 1 || cnt > len - 1)) return false;
    }
  }
  return true;
}

/// Adjacency count of the extension 0 pi_1 ... pi_n n+1; equals the number
/// of fixed points of the encoding.
inline int extension_adjacencies(const Perm& pi) {
  const int n = pi.size();
  int count = 0;
  if (pi(0) == 0) ++count;
  for (int i = 2; i <= n; ++i) {
    if (pi(i - 1) == pi(i - 2) + 1) ++count;
  }
  if (pi(n - 1) == n - 1) ++count;
  return count;
}

}  // namespace permcycle
