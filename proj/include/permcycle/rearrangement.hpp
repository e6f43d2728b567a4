#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permcycle/permutation.hpp"

namespace permcycle {

enum class OpKind {
  BlockInterchange,
  Transposition,
  Exchange,
  PrefixTransposition,
  PrefixExchange,
};

/**
 * A segment-rearrangement operation on one-line forms, identified by its
 * index tuple.  Every kind is a special block-interchange b(i,j,k,l) with
 * 1 <= i < j <= k < l <= n+1, which exchanges the (possibly non-adjacent)
 * blocks at positions [i, j-1] and [k, l-1]:
 *
 *   - transposition t(i,j,l) is the adjacent case j = k;
 *   - exchange e(i,k) is the two-singleton case j = i+1, l = k+1;
 *   - prefix variants additionally fix i = 1.
 *
 * Operations act on positions by right-composition: applying g to p yields
 * p * g, whose one-line form is p's with the segments moved.
 */
struct Rearrangement {
  OpKind kind = OpKind::BlockInterchange;
  int n = 0;
  int i = 0, j = 0, k = 0, l = 0;  // always normalised to the b(i,j,k,l) tuple

  static Rearrangement block_interchange(int n, int i, int j, int k, int l) {
    check_tuple(n, i, j, k, l);
    return {OpKind::BlockInterchange, n, i, j, k, l};
  }

  static Rearrangement transposition(int n, int i, int j, int l) {
    if (!(1 <= i && i < j && j < l && l <= n + 1)) {
      throw std::invalid_argument("transposition: need 1 <= i < j < l <= n+1");
    }
    return {OpKind::Transposition, n, i, j, j, l};
  }

  static Rearrangement exchange(int n, int i, int k) {
    if (!(1 <= i && i < k && k <= n)) {
      throw std::invalid_argument("exchange: need 1 <= i < k <= n");
    }
    return {OpKind::Exchange, n, i, i + 1, k, k + 1};
  }

  static Rearrangement prefix_transposition(int n, int j, int l) {
    if (!(1 < j && j < l && l <= n + 1)) {
      throw std::invalid_argument("prefix_transposition: need 1 < j < l <= n+1");
    }
    return {OpKind::PrefixTransposition, n, 1, j, j, l};
  }

  static Rearrangement prefix_exchange(int n, int k) {
    if (!(2 <= k && k <= n)) {
      throw std::invalid_argument("prefix_exchange: need 2 <= k <= n");
    }
    return {OpKind::PrefixExchange, n, 1, 2, k, k + 1};
  }

  /// Text form: "b(1,2,4,6)", "t(1,3,5)", "e(1,4)".
  std::string to_string() const {
    switch (kind) {
      case OpKind::BlockInterchange:
        return "b(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
               "," + std::to_string(l) + ")";
      case OpKind::Transposition:
      case OpKind::PrefixTransposition:
        return "t(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ")";
      case OpKind::Exchange:
      case OpKind::PrefixExchange:
        return "e(" + std::to_string(i) + "," + std::to_string(k) + ")";
    }
    return {};
  }

 private:
  static void check_tuple(int n, int i, int j, int k, int l) {
    if (!(1 <= i && i < j && j <= k && k < l && l <= n + 1)) {
      throw std::invalid_argument("block_interchange: need 1 <= i < j <= k < l <= n+1");
    }
  }
};

/// One-line realisation: <1..i-1, k..l-1, j..k-1, i..j-1, l..n>, 0-based storage.
inline Perm realise(const Rearrangement& r) {
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(r.n));
  for (int v = 1; v < r.i; ++v) img.push_back(v - 1);
  for (int v = r.k; v < r.l; ++v) img.push_back(v - 1);
  for (int v = r.j; v < r.k; ++v) img.push_back(v - 1);
  for (int v = r.i; v < r.j; ++v) img.push_back(v - 1);
  for (int v = r.l; v <= r.n; ++v) img.push_back(v - 1);
  return Perm::from_image(std::move(img));
}

/// Image of the operation on {0..n}: the product (j,l)(i,k) of two
/// transpositions of elements, with indices reduced modulo n+1 (so l = n+1
/// becomes element 0).  For a transposition (j = k) this collapses to the
/// 3-cycle (i,l,j).
inline Perm encode_op(const Rearrangement& r) {
  const int m = r.n + 1;
  const int i = r.i % m, j = r.j % m, k = r.k % m, l = r.l % m;
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) img[static_cast<std::size_t>(x)] = x;
  std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(k)]);
  // left-multiply by (j,l): swap the *values* j and l wherever they occur
  for (int& v : img) {
    if (v == j) {
      v = l;
    } else if (v == l) {
      v = j;
    }
  }
  return Perm::from_image(std::move(img));
}

enum class FamilyTag { bid, td, exc, ptd, pexc };

inline std::string family_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::bid: return "bid";
    case FamilyTag::td: return "td";
    case FamilyTag::exc: return "exc";
    case FamilyTag::ptd: return "ptd";
    case FamilyTag::pexc: return "pexc";
  }
  return {};
}

inline FamilyTag parse_family(std::string_view name) {
  if (name == "bid") return FamilyTag::bid;
  if (name == "td") return FamilyTag::td;
  if (name == "exc") return FamilyTag::exc;
  if (name == "ptd") return FamilyTag::ptd;
  if (name == "pexc") return FamilyTag::pexc;
  throw std::invalid_argument("unknown generator family: " + std::string(name));
}

struct GeneratorFamily {
  FamilyTag tag = FamilyTag::ptd;
  int n = 0;
};

/// Complete, duplicate-free list of the family's generators.  Distinct
/// canonical tuples realise distinct permutations, so no dedup pass is needed.
inline std::vector<Rearrangement> enumerate(const GeneratorFamily& f) {
  if (f.n < 1) throw std::invalid_argument("enumerate: n must be positive");
  const int n = f.n;
  std::vector<Rearrangement> out;
  switch (f.tag) {
    case FamilyTag::bid:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
          for (int k = j; k <= n; ++k)
            for (int l = k + 1; l <= n + 1; ++l)
              out.push_back(Rearrangement::block_interchange(n, i, j, k, l));
      break;
    case FamilyTag::td:
      for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int l = j + 1; l <= n + 1; ++l)
            out.push_back(Rearrangement::transposition(n, i, j, l));
      break;
    case FamilyTag::exc:
      for (int i = 1; i < n; ++i)
        for (int k = i + 1; k <= n; ++k) out.push_back(Rearrangement::exchange(n, i, k));
      break;
    case FamilyTag::ptd:
      for (int j = 2; j <= n; ++j)
        for (int l = j + 1; l <= n + 1; ++l)
          out.push_back(Rearrangement::prefix_transposition(n, j, l));
      break;
    case FamilyTag::pexc:
      for (int k = 2; k <= n; ++k) out.push_back(Rearrangement::prefix_exchange(n, k));
      break;
  }
  return out;
}

inline std::vector<Perm> realise_all(const GeneratorFamily& f) {
  std::vector<Perm> out;
  for (const auto& r : enumerate(f)) out.push_back(realise(r));
  return out;
}

/// True when the set of realisations is closed under inverse.
inline bool is_symmetric_family(const std::vector<Perm>& gens) {
  std::set<Perm> seen(gens.begin(), gens.end());
  for (const auto& g : gens) {
    if (!seen.count(g.inverse())) return false;
  }
  return true;
}

}  // namespace permcycle
