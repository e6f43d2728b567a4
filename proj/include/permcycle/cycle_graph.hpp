#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "permcycle/permutation.hpp"
#include "permcycle/rearrangement.hpp"

namespace permcycle {

/// Embeds an S_n permutation (0-based storage for {1..n}) into a bijection of
/// {0..n} that fixes the element 0.
inline Perm extend_fixing_zero(const Perm& pi) {
  const int n = pi.size();
  std::vector<int> img(static_cast<std::size_t>(n) + 1);
  img[0] = 0;
  for (int e = 1; e <= n; ++e) img[static_cast<std::size_t>(e)] = pi(e - 1) + 1;
  return Perm::from_image(std::move(img));
}

/// The rotation (0,1,2,...,n) on {0..n}.
inline Perm grey_rotation(int n) {
  std::vector<int> img(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) img[static_cast<std::size_t>(x)] = (x + 1) % (n + 1);
  return Perm::from_image(std::move(img));
}

/**
 * The cycle-graph image of pi: the even bijection of {0..n}
 *
 *     (0,1,2,...,n) * (0, pi_n, pi_{n-1}, ..., pi_1),
 *
 * i.e. the product of the grey rotation with the reversed-position cycle made
 * of all black arcs.  Its disjoint cycles list the alternating cycles of the
 * cycle graph in black-arc-first traversal order, and the identity maps to
 * the identity of {0..n}.
 */
inline Perm encode_perm(const Perm& pi) {
  const int n = pi.size();
  const int m = n + 1;
  // black(0) = pi_n, black(pi_i) = pi_{i-1} for i >= 2, black(pi_1) = 0;
  // composing with the rotation adds 1 mod m to every image.
  std::vector<int> img(static_cast<std::size_t>(m));
  img[0] = (pi(n - 1) + 1 + 1) % m;
  img[static_cast<std::size_t>(pi(0) + 1)] = 1;
  for (int i = 2; i <= n; ++i) {
    img[static_cast<std::size_t>(pi(i - 1) + 1)] = (pi(i - 2) + 1 + 1) % m;
  }
  return Perm::from_image(std::move(img));
}

struct CycleGraphEncoding {
  int n = 0;
  Perm perm;                      // bijection on {0..n}
  CycleDecomposition alt_cycles;  // = alternating cycles of the cycle graph
};

inline CycleGraphEncoding encode(const Perm& pi) {
  CycleGraphEncoding e;
  e.n = pi.size();
  e.perm = encode_perm(pi);
  e.alt_cycles = cycle_decomposition(e.perm);
  return e;
}

/// Inverse of the encoding: recovers pi when `enc` lies in the image of the
/// map, i.e. when undoing the grey rotation leaves a single (n+1)-cycle.
inline std::optional<Perm> decode_encoding(const Perm& enc) {
  const int m = enc.size();
  const int n = m - 1;
  if (n < 1) return std::nullopt;
  // black = rotation^-1 * enc must be the full cycle (0, pi_n, ..., pi_1).
  std::vector<int> black(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) black[static_cast<std::size_t>(x)] = (enc(x) + m - 1) % m;
  std::vector<int> pi_img(static_cast<std::size_t>(n));
  int x = 0;
  for (int step = 0; step < n; ++step) {
    x = black[static_cast<std::size_t>(x)];
    if (x == 0) return std::nullopt;  // cycle through 0 too short
    pi_img[static_cast<std::size_t>(n - 1 - step)] = x - 1;  // x = pi_{n-step}
  }
  if (black[static_cast<std::size_t>(x)] != 0) return std::nullopt;  // not a single cycle
  return Perm::from_image(std::move(pi_img));
}

/**
 * The bicoloured cycle graph itself.  Vertices are listed by position
 * (0, pi_1, ..., pi_n).  Black arc i (1 <= i <= n) runs from pi_i to pi_{i-1};
 * arc n+1 is the wrap-around (0, pi_n).  Grey arcs run from each value v to
 * v+1 mod n+1.  Alternating cycles are stored as ascending lists of black-arc
 * indices; their index order under "arc i precedes arc j iff i <= j" is the
 * crossing order used by the 2-permutation sorter.
 */
struct CycleGraph {
  struct Arc {
    int from = 0;
    int to = 0;
  };

  int n = 0;
  std::vector<int> vertices;                   // size n+1, vertices[i] = pi_i (pi_0 = 0)
  std::vector<Arc> black;                      // index 1..n+1 used; [0] unused
  std::vector<Arc> grey;                       // grey[v] = (v, v+1 mod n+1)
  std::vector<std::vector<int>> alternating;   // cycles as sorted black-arc indices
  std::vector<int> cycle_of_arc;               // black-arc index -> cycle index
};

inline CycleGraph build_graph(const Perm& pi) {
  const int n = pi.size();
  const int m = n + 1;
  CycleGraph g;
  g.n = n;
  g.vertices.resize(static_cast<std::size_t>(m));
  g.vertices[0] = 0;
  for (int i = 1; i <= n; ++i) g.vertices[static_cast<std::size_t>(i)] = pi(i - 1) + 1;

  g.black.resize(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= n; ++i) {
    g.black[static_cast<std::size_t>(i)] = {g.vertices[static_cast<std::size_t>(i)],
                                            g.vertices[static_cast<std::size_t>(i - 1)]};
  }
  g.black[static_cast<std::size_t>(m)] = {0, g.vertices[static_cast<std::size_t>(n)]};

  g.grey.resize(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) g.grey[static_cast<std::size_t>(v)] = {v, (v + 1) % m};

  // Follow black then grey from each unvisited black arc.  Black arc i is the
  // unique black arc leaving vertex[i] (the wrap arc leaves 0), so traversal
  // is by source element; the successor element is enc(source).
  std::vector<int> arc_of_element(static_cast<std::size_t>(m));  // element -> black-arc index
  for (int i = 1; i <= n; ++i) arc_of_element[static_cast<std::size_t>(g.vertices[i])] = i;
  arc_of_element[0] = m;

  const Perm enc = encode_perm(pi);
  g.cycle_of_arc.assign(static_cast<std::size_t>(m) + 1, -1);
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> arcs;
    int e = start;
    do {
      seen[static_cast<std::size_t>(e)] = 1;
      arcs.push_back(arc_of_element[static_cast<std::size_t>(e)]);
      e = enc(e);
    } while (e != start);
    std::sort(arcs.begin(), arcs.end());
    const int idx = static_cast<int>(g.alternating.size());
    for (int a : arcs) g.cycle_of_arc[static_cast<std::size_t>(a)] = idx;
    g.alternating.push_back(std::move(arcs));
  }
  return g;
}

/// Image of composition: enc(p * s) = enc(p) * conj(enc(s), p-extended).
inline bool compose_identity_check(const Perm& p, const Perm& s) {
  if (p.size() != s.size()) throw std::invalid_argument("compose_identity_check: size mismatch");
  const Perm lhs = encode_perm(p * s);
  const Perm rhs = encode_perm(p) * encode_perm(s).conjugate_by(extend_fixing_zero(p));
  return lhs == rhs;
}

/**
 * Rewrites a factorisation of p into a factorisation of enc(p).  The input
 * ops multiply, rightmost applied first, to p; the output is one bijection of
 * {0..n} per op, in the same order, such that
 *
 *   - out[idx] has the cycle type of encode_op(ops[idx]), and
 *   - out[0] * out[1] * ... * out[t-1] = enc(p).
 *
 * Peeling the leftmost factor g turns the remaining rewritten factors f into
 * g f g^-1 (g extended to fix 0), which preserves cycle types.
 */
inline std::vector<Perm> translate_factorisation(const Perm& p,
                                                 const std::vector<Rearrangement>& ops) {
  if (ops.empty()) throw std::invalid_argument("translate_factorisation: empty factorisation");
  Perm prod = Perm::identity(p.size());
  for (const auto& r : ops) prod = prod * realise(r);
  if (prod != p) {
    throw std::invalid_argument("translate_factorisation: ops do not multiply to p");
  }

  std::vector<Perm> out;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    const Perm g = extend_fixing_zero(realise(*it));
    for (auto& f : out) f = f.conjugate_by(g);
    out.insert(out.begin(), encode_perm(realise(*it)));
  }

  Perm check = Perm::identity(p.size() + 1);
  for (const auto& f : out) check = check * f;
  if (check != encode_perm(p)) {
    throw std::logic_error("translate_factorisation: rewritten product mismatch");
  }
  return out;
}

/// enc(p^-1) = conj(enc(p)^-1, p^-1-extended); computed both ways and checked.
inline Perm inverse_encoding(const Perm& p) {
  const Perm direct = encode_perm(p.inverse());
  const Perm via_identity = encode_perm(p).inverse().conjugate_by(extend_fixing_zero(p.inverse()));
  if (direct != via_identity) throw std::logic_error("inverse_encoding: identity violated");
  return direct;
}

/// enc((p*s)^-1) = conj(enc(s)^-1 * enc(p^-1), s^-1-extended); checked.
inline Perm composed_inverse_encoding(const Perm& p, const Perm& s) {
  if (p.size() != s.size()) {
    throw std::invalid_argument("composed_inverse_encoding: size mismatch");
  }
  const Perm direct = encode_perm((p * s).inverse());
  const Perm via_identity = (encode_perm(s).inverse() * encode_perm(p.inverse()))
                                .conjugate_by(extend_fixing_zero(s.inverse()));
  if (direct != via_identity) throw std::logic_error("composed_inverse_encoding: identity violated");
  return direct;
}

/// enc(reverse-complement of p) = conj(conj(enc(p)^-1, chi-extended), rotation);
/// chi-extended fixes 0 and reverses {1..n}.  Computed both ways and checked.
inline Perm reverse_complement_encoding(const Perm& p) {
  const int n = p.size();
  const Perm chi = reverse_chi(n);
  const Perm direct = encode_perm(p.conjugate_by(chi));

  const Perm chi_hat = extend_fixing_zero(chi);
  const Perm via_identity =
      encode_perm(p).inverse().conjugate_by(chi_hat).conjugate_by(grey_rotation(n));
  if (direct != via_identity) {
    throw std::logic_error("reverse_complement_encoding: identity violated");
  }
  return direct;
}

/**
 * The set of permutations reconstructed from every cyclic value shift of the
 * circular form 0 pi_1 ... pi_n: add m to all entries mod n+1, then read off
 * the n entries after the 0.  Distinct shifts may reconstruct equal
 * permutations, so the class size divides n+1.
 */
inline std::set<Perm> toric_class(const Perm& pi) {
  const int n = pi.size();
  const int m = n + 1;
  std::vector<int> circ(static_cast<std::size_t>(m));
  circ[0] = 0;
  for (int i = 1; i <= n; ++i) circ[static_cast<std::size_t>(i)] = pi(i - 1) + 1;

  std::set<Perm> out;
  for (int shift = 0; shift < m; ++shift) {
    std::vector<int> shifted(static_cast<std::size_t>(m));
    int zero_at = 0;
    for (int i = 0; i < m; ++i) {
      shifted[static_cast<std::size_t>(i)] = (circ[static_cast<std::size_t>(i)] + shift) % m;
      if (shifted[static_cast<std::size_t>(i)] == 0) zero_at = i;
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int step = 1; step <= n; ++step) {
      img[static_cast<std::size_t>(step - 1)] =
          shifted[static_cast<std::size_t>((zero_at + step) % m)] - 1;
    }
    out.insert(Perm::from_image(std::move(img)));
  }
  return out;
}

/// Encodings across the toric class: conjugates of enc(pi) by powers of the
/// rotation.  Checked against encoding every class member directly.
inline std::set<Perm> toric_encodings(const Perm& pi) {
  const int n = pi.size();
  const Perm enc = encode_perm(pi);
  const Perm rot = grey_rotation(n);

  std::set<Perm> out;
  Perm power = Perm::identity(n + 1);
  for (int shift = 0; shift <= n; ++shift) {
    out.insert(enc.conjugate_by(power));
    power = power * rot;
  }

  std::set<Perm> direct;
  for (const auto& sigma : toric_class(pi)) direct.insert(encode_perm(sigma));
  if (direct != out) throw std::logic_error("toric_encodings: conjugation route mismatch");
  return out;
}

}  // namespace permcycle
