#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "permcycle/bounds.hpp"
#include "permcycle/cycle_graph.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/permutation.hpp"
#include "permcycle/rearrangement.hpp"

namespace permcycle {

/// True iff every cycle of the encoding has length 2 (a fixed-point-free
/// involution of {0..n}); possible only when n = 3 (mod 4).
inline bool is_two_permutation(const Perm& pi) {
  const Perm enc = encode_perm(pi);
  for (int x = 0; x < enc.size(); ++x) {
    if (enc(x) == x || enc(enc(x)) != x) return false;
  }
  return true;
}

/// A permutation whose encoding is a perfect matching of 2-cycles.
class TwoPermutation {
 public:
  explicit TwoPermutation(Perm pi) : pi_(std::move(pi)) {
    if (!is_two_permutation(pi_)) {
      throw std::invalid_argument("TwoPermutation: encoding has a cycle of length != 2");
    }
  }
  const Perm& perm() const { return pi_; }
  int n() const { return pi_.size(); }

 private:
  Perm pi_;
};

namespace detail {

/// Lexicographically smallest pi in S_n whose encoding is a fixed-point-free
/// involution, found by a depth-first search over positions with the partial
/// involution constraints propagated.
///
/// Writing enc(x) = black(x) + 1 mod n+1, fixing pi_1..pi_i pins down
/// enc(pi_j) = pi_{j-1} + 1 for j <= i (and enc(pi_1) = 1), plus enc(0) =
/// pi_n + 1 once the last position is placed.
inline std::optional<Perm> lex_min_two_permutation(int n) {
  if (n % 4 != 3) return std::nullopt;
  const int m = n + 1;
  std::vector<int> inv(static_cast<std::size_t>(m), -1);  // partial involution
  std::vector<char> used(static_cast<std::size_t>(m), 0);  // values 1..n placed
  std::vector<int> img;                                     // 0-based one-line
  img.reserve(static_cast<std::size_t>(n));

  auto link = [&](int a, int b) -> bool {  // require enc(a) = b
    if (a == b) return false;
    if (inv[static_cast<std::size_t>(a)] == -1 && inv[static_cast<std::size_t>(b)] == -1) {
      inv[static_cast<std::size_t>(a)] = b;
      inv[static_cast<std::size_t>(b)] = a;
      return true;
    }
    return inv[static_cast<std::size_t>(a)] == b;
  };
  auto unlink = [&](int a, int b) {
    if (inv[static_cast<std::size_t>(a)] == b && inv[static_cast<std::size_t>(b)] == a) {
      inv[static_cast<std::size_t>(a)] = -1;
      inv[static_cast<std::size_t>(b)] = -1;
    }
  };

  struct Frame {
    int value = 0;       // candidate pi at this position (1-based value)
    bool linked = false;
    int a = 0, b = 0;    // the involution pair added, if any
  };

  // Depth-first over positions 1..n, trying the smallest unused value first.
  std::vector<Frame> stack;
  stack.push_back({});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const int pos = static_cast<int>(stack.size());  // 1-based position being filled
    if (f.linked) {  // undo before advancing the candidate
      unlink(f.a, f.b);
      used[static_cast<std::size_t>(f.value)] = 0;
      img.pop_back();
      f.linked = false;
    }
    ++f.value;
    if (f.value > n) {
      stack.pop_back();
      continue;
    }
    if (used[static_cast<std::size_t>(f.value)]) continue;
    // constraint introduced by placing value v at position pos:
    //   pos == 1: enc(v) = 1; pos > 1: enc(v) = prev + 1 (mod m)
    const int v = f.value;
    const int target = pos == 1 ? 1 : (img.back() + 1 + 1) % m;
    if (!link(v, target)) continue;
    f.a = v;
    f.b = target;
    f.linked = true;
    used[static_cast<std::size_t>(v)] = 1;
    img.push_back(v - 1);
    if (pos == n) {
      // final constraint: enc(0) = pi_n + 1
      const int last = (img.back() + 1 + 1) % m;
      const bool fresh = inv[0] == -1;
      if (link(0, last)) {
        Perm result = Perm::from_image(img);
        if (is_two_permutation(result)) return result;
        if (fresh) unlink(0, last);
      }
      continue;  // try the next value at this position
    }
    stack.push_back({});
  }
  return std::nullopt;
}

/// Interleaved block pattern <3 2 1 4 | 7 6 5 8 | 11 10 9 ...>: block j holds
/// 4j+3, 4j+2, 4j+1, 4j+4, the final block dropping its fourth entry.
inline Perm pattern_two_permutation(int n) {
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(n));
  for (int base = 0; base < n; base += 4) {
    img.push_back(base + 2);
    img.push_back(base + 1);
    img.push_back(base + 0);
    if (base + 3 < n) img.push_back(base + 3);
  }
  return Perm::from_image(std::move(img));
}

inline Perm canonical_two_permutation(int n) {
  if (n % 4 != 3) throw std::invalid_argument("canonical_two_permutation: need n = 3 (mod 4)");
  if (n <= 15) {
    auto found = lex_min_two_permutation(n);
    if (!found) throw std::logic_error("canonical_two_permutation: search failed");
    return *found;
  }
  return pattern_two_permutation(n);
}

/// Pulls a bijection of {0..n} back through the encoding, throwing when it is
/// not in the encoding's image.
inline Perm decode_or_throw(const Perm& enc) {
  auto pi = decode_encoding(enc);
  if (!pi) throw std::logic_error("extremal construction: encoding not decodable");
  return *pi;
}

}  // namespace detail

/**
 * A permutation of S_n whose prefix transposition distance is at least
 * floor(3n/4), built per residue of n mod 4:
 *
 *   n = 3: the canonical 2-permutation (bound (3n-1)/4);
 *   n = 0: insert a new fixed element 1 into the previous case's encoding,
 *          giving pi_1 = 1 (bound 3n/4);
 *   n = 1: additionally turn element 0 of the encoding into a fixed point by
 *          renaming it to the new top element (bound (3n-3)/4);
 *   n = 2: extend a 2-permutation of S_{n-3} with the 3-cycle (0, n, n-1) in
 *          the encoding (bound (3n-2)/4).
 *
 * Cases 0..2 are realised on the encoding and pulled back through its
 * explicit inverse; the required cycle type is asserted.
 */
inline Perm construct_extremal(int n) {
  if (n < 3) throw std::invalid_argument("construct_extremal: n must be at least 3");
  const int r = n % 4;
  if (r == 3) return detail::canonical_two_permutation(n);

  if (r == 0) {
    // relabel {0..n-1} -> {0, 2..n}: 0 stays, x -> x+1; add fixed point 1
    const Perm q = encode_perm(construct_extremal(n - 1));
    std::vector<int> img(static_cast<std::size_t>(n) + 1);
    auto rel = [](int x) { return x == 0 ? 0 : x + 1; };
    img[1] = 1;
    for (int x = 0; x < q.size(); ++x) img[static_cast<std::size_t>(rel(x))] = rel(q(x));
    const Perm pi = detail::decode_or_throw(Perm::from_image(std::move(img)));
    const CycleStats st = cycle_stats(encode_perm(pi));
    if (!(st.c_fixed == 1 && st.c == n / 2 + 1) || pi(0) != 0) {
      throw std::logic_error("construct_extremal: wrong cycle type for n = 0 (mod 4)");
    }
    return pi;
  }
  if (r == 1) {
    // rename element 0 of the previous encoding to the new top element n;
    // 0 becomes a fixed point (pi_n = n), pi_1 stays 1
    const Perm q = encode_perm(construct_extremal(n - 1));
    std::vector<int> img(static_cast<std::size_t>(n) + 1);
    auto rel = [&](int x) { return x == 0 ? n : x; };
    img[0] = 0;
    for (int x = 0; x < q.size(); ++x) img[static_cast<std::size_t>(rel(x))] = rel(q(x));
    const Perm pi = detail::decode_or_throw(Perm::from_image(std::move(img)));
    const CycleStats st = cycle_stats(encode_perm(pi));
    if (!(st.c_fixed == 2 && st.c == (n - 1) / 2 + 2) || pi(0) != 0) {
      throw std::logic_error("construct_extremal: wrong cycle type for n = 1 (mod 4)");
    }
    return pi;
  }
  // r == 2: relabel 0 -> n-2 in the S_{n-3} encoding and adjoin (0, n, n-1)
  const Perm q = encode_perm(detail::canonical_two_permutation(n - 3));
  std::vector<int> img(static_cast<std::size_t>(n) + 1);
  auto rel = [&](int x) { return x == 0 ? n - 2 : x; };
  img[0] = n;
  img[static_cast<std::size_t>(n)] = n - 1;
  img[static_cast<std::size_t>(n - 1)] = 0;
  for (int x = 0; x < q.size(); ++x) img[static_cast<std::size_t>(rel(x))] = rel(q(x));
  const Perm pi = detail::decode_or_throw(Perm::from_image(std::move(img)));
  const CycleDecomposition dec = cycle_decomposition(encode_perm(pi));
  if (!(dec.c_fixed == 0 && dec.by_length.count(3) && dec.by_length.at(3) == 1 &&
        dec.by_length.count(2) && dec.by_length.at(2) == (n - 2) / 2)) {
    throw std::logic_error("construct_extremal: wrong cycle type for n = 2 (mod 4)");
  }
  return pi;
}

/**
 * Partner of a 2-cycle under the crossing order on black arcs ("arc i
 * precedes arc j iff i <= j", the wrap arc coming last): an alternating
 * cycle owning two black arcs that interleave the given pair.  Among the
 * qualifying cycles the one with the smallest qualifying arc index wins.
 * Throws when none qualifies, which cannot happen inside a 2-permutation.
 */
inline std::vector<int> find_crossing(const CycleGraph& g, const std::vector<int>& c1) {
  if (c1.size() != 2) throw std::invalid_argument("find_crossing: cycle must have two black arcs");
  const int a = c1[0], b = c1[1];
  const std::vector<int>* best = nullptr;
  int best_arc = 0;
  for (const auto& cyc : g.alternating) {
    if (cyc.size() < 2 || cyc == c1) continue;
    // smallest first arc of an interleaving pair within this cycle
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      bool qualifies = false;
      for (std::size_t j = i + 1; j < cyc.size() && !qualifies; ++j) {
        const int c = cyc[i], d = cyc[j];
        qualifies = (a < c && c < b && b < d) || (c < a && a < d && d < b);
      }
      if (qualifies) {
        if (!best || cyc[i] < best_arc) {
          best = &cyc;
          best_arc = cyc[i];
        }
        break;  // later i in this cycle cannot beat cyc[i]
      }
    }
  }
  if (!best) throw std::logic_error("find_crossing: no crossing cycle");
  return *best;
}

struct SortingSequence {
  Perm start;
  std::vector<Rearrangement> ops;  // right-composing them in order sorts start
};

/// Applies ops in order to the start permutation; the result should be the
/// identity for a valid sorting sequence.
inline Perm apply_sequence(const SortingSequence& seq) {
  Perm cur = seq.start;
  for (const auto& op : seq.ops) cur = cur * realise(op);
  return cur;
}

/**
 * Sorts a 2-permutation with exactly (3n-1)/4 prefix transpositions.  Each
 * round turns one crossing pair of 2-cycles into four fixed points of the
 * encoding: the first round spends two moves on the 2-cycle owning black arc
 * 1 and its crossing partner; each later round first parks the sorted prefix
 * inside the leftmost 2-cycle (one move), then resolves as before (two more).
 */
inline SortingSequence sort_two_permutation(const TwoPermutation& tp) {
  const int n = tp.n();
  SortingSequence seq{tp.perm(), {}};
  Perm cur = tp.perm();

  auto push = [&](int j, int l) {
    seq.ops.push_back(Rearrangement::prefix_transposition(n, j, l));
    cur = cur * realise(seq.ops.back());
  };

  int fixed_before = cycle_stats(encode_perm(cur)).c_fixed;
  while (!cur.is_identity()) {
    CycleGraph g = build_graph(cur);
    // leftmost nontrivial cycle; in this state it must be a 2-cycle
    const std::vector<int>* leftmost = nullptr;
    for (const auto& cyc : g.alternating) {
      if (cyc.size() < 2) continue;
      if (!leftmost || cyc.front() < leftmost->front()) leftmost = &cyc;
    }
    if (!leftmost || leftmost->size() != 2) {
      throw std::logic_error("sort_two_permutation: leftmost nontrivial cycle is not a 2-cycle");
    }
    if (leftmost->front() != 1) {
      // park the sorted prefix: exchange [1, a-1] with [a, b-1]
      const int a = (*leftmost)[0], b = (*leftmost)[1];
      push(a, b);
      g = build_graph(cur);
      leftmost = nullptr;
      for (const auto& cyc : g.alternating) {
        if (cyc.size() == 2 && cyc.front() == 1) leftmost = &cyc;
      }
      if (!leftmost) throw std::logic_error("sort_two_permutation: parked cycle lost arc 1");
    }
    const int j = (*leftmost)[1];
    const std::vector<int> partner = find_crossing(g, *leftmost);
    const int i = partner[0], k = partner[1];
    if (!(1 < i && i < j && j < k)) {
      throw std::logic_error("sort_two_permutation: crossing pattern violated");
    }
    push(i, k);
    push(j - i + 1, k - i + 1);

    const int fixed_after = cycle_stats(encode_perm(cur)).c_fixed;
    if (fixed_after != fixed_before + 4) {
      throw std::logic_error("sort_two_permutation: round did not create four fixed points");
    }
    fixed_before = fixed_after;
  }

  if (static_cast<int>(seq.ops.size()) != (3 * n - 1) / 4) {
    throw std::logic_error("sort_two_permutation: sequence length is not (3n-1)/4");
  }
  return seq;
}

struct DiameterFamilyRow {
  int n = 0;
  Perm pi;
  int bound = 0;           // encoding-based lower bound of the construction
  int floor_3n_4 = 0;
  std::optional<int> bfs;  // exact distance when the search cap allows
  bool ok = false;
};

struct DiameterFamilyReport {
  std::vector<DiameterFamilyRow> rows;
  bool all_ok = true;
};

/// Checks the extremal family: the encoding bound reaches floor(3n/4) for
/// every n, and so does the exact BFS distance for n within the cap.
inline DiameterFamilyReport verify_diameter_family(int n_max, Oracle* oracle) {
  DiameterFamilyReport report;
  for (int n = 3; n <= n_max; ++n) {
    DiameterFamilyRow row;
    row.n = n;
    row.pi = construct_extremal(n);
    row.bound = ptd_new_lower_bound(row.pi);
    row.floor_3n_4 = 3 * n / 4;
    row.ok = row.bound >= row.floor_3n_4;
    if (oracle && n <= oracle->options.cap) {
      row.bfs = oracle->distance(row.pi, FamilyTag::ptd);
      row.ok = row.ok && *row.bfs >= row.floor_3n_4;
    }
    report.all_ok = report.all_ok && row.ok;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace permcycle
