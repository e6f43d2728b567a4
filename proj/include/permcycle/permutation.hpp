#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permcycle {

namespace detail {

/// Lehmer-code rank of a length-n image buffer holding the values 0..n-1.
template <typename T>
std::uint64_t lehmer_rank(const T* img, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (img[j] < img[i]) ++smaller;
    }
    r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return r;
}

/// Inverse of lehmer_rank: writes the permutation of rank r into out[0..n).
template <typename T>
void lehmer_unrank(std::uint64_t r, int n, T* out) {
  int code[24];
  for (int i = n - 1; i >= 0; --i) {
    code[i] = static_cast<int>(r % static_cast<std::uint64_t>(n - i));
    r /= static_cast<std::uint64_t>(n - i);
  }
  T avail[24];
  for (int v = 0; v < n; ++v) avail[v] = static_cast<T>(v);
  int len = n;
  for (int i = 0; i < n; ++i) {
    int idx = code[i];
    out[i] = avail[idx];
    for (int j = idx; j + 1 < len; ++j) avail[j] = avail[j + 1];
    --len;
  }
}

}  // namespace detail

/// n! as an unsigned 64-bit value; permissible up to n = 20.
inline std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/**
 * A bijection of {0, 1, ..., size()-1} stored in one-line form.
 *
 * This is the single algebra type of the library.  Elements of the symmetric
 * group on {1..n} are held with 0-based storage and rendered 1-based at the
 * text boundary; cycle-graph encodings live on {0..n} and are rendered as-is.
 */
class Perm {
 public:
  Perm() = default;

  /// Identity on {0..m-1}.
  explicit Perm(int m) : img_(static_cast<std::size_t>(m)) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Perm identity(int m) { return Perm(m); }

  /// Takes ownership of a one-line image; throws if it is not a bijection.
  static Perm from_image(std::vector<int> image) {
    const int m = static_cast<int>(image.size());
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int v : image) {
      if (v < 0 || v >= m || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("Perm::from_image: not a bijection of {0.." +
                                    std::to_string(m - 1) + "}");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
    Perm p;
    p.img_ = std::move(image);
    return p;
  }

  /// Builds a permutation of {0..m-1} from disjoint cycles; unlisted elements stay fixed.
  static Perm from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
    Perm p(m);
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i];
        int b = cyc[(i + 1) % cyc.size()];
        if (a < 0 || a >= m || used[static_cast<std::size_t>(a)]) {
          throw std::invalid_argument("Perm::from_cycles: cycles are not disjoint in range");
        }
        used[static_cast<std::size_t>(a)] = 1;
        p.img_[static_cast<std::size_t>(a)] = b;
      }
    }
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }

  /// Image of x.
  int operator()(int x) const { return img_[static_cast<std::size_t>(x)]; }

  const std::vector<int>& image() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i) {
      if (img_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
  }

  /// Function composition, applied from right to left: (a*b)(x) = a(b(x)).
  Perm operator*(const Perm& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("Perm: size mismatch in composition");
    Perm out;
    out.img_.resize(img_.size());
    for (int x = 0; x < size(); ++x) {
      out.img_[static_cast<std::size_t>(x)] = (*this)(rhs(x));
    }
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.img_.resize(img_.size());
    for (int x = 0; x < size(); ++x) {
      out.img_[static_cast<std::size_t>((*this)(x))] = x;
    }
    return out;
  }

  /// Conjugate by s, that is s * (*this) * s^-1: relabels every element x as s(x).
  Perm conjugate_by(const Perm& s) const {
    if (size() != s.size()) throw std::invalid_argument("Perm: size mismatch in conjugation");
    Perm out;
    out.img_.resize(img_.size());
    for (int x = 0; x < size(); ++x) {
      out.img_[static_cast<std::size_t>(s(x))] = s((*this)(x));
    }
    return out;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

inline Perm compose(const Perm& a, const Perm& b) { return a * b; }
inline Perm inverse(const Perm& p) { return p.inverse(); }
inline Perm conjugate(const Perm& p, const Perm& s) { return p.conjugate_by(s); }

/// Disjoint cycles in canonical form: each cycle starts at its minimum and
/// the cycles are sorted by their minima; 1-cycles are kept.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  int c = 0;         // total number of cycles
  int c_odd = 0;     // cycles of odd length
  int c_even = 0;    // cycles of even length
  int c_fixed = 0;   // 1-cycles
  std::map<int, int> by_length;  // c_k for each occurring length k
};

inline CycleDecomposition cycle_decomposition(const Perm& p) {
  CycleDecomposition d;
  const int m = p.size();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cyc;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
      x = p(x);
    } while (x != start);
    const int len = static_cast<int>(cyc.size());
    ++d.c;
    (len % 2 ? d.c_odd : d.c_even) += 1;
    if (len == 1) ++d.c_fixed;
    ++d.by_length[len];
    d.cycles.push_back(std::move(cyc));
  }
  return d;
}

/// Cheap cycle counts without materialising the cycles.
struct CycleStats {
  int c = 0;
  int c_odd = 0;
  int c_even = 0;
  int c_fixed = 0;
};

inline CycleStats cycle_stats(const Perm& p) {
  CycleStats s;
  const int m = p.size();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int len = 0;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      ++len;
      x = p(x);
    } while (x != start);
    ++s.c;
    (len % 2 ? s.c_odd : s.c_even) += 1;
    if (len == 1) ++s.c_fixed;
  }
  return s;
}

/// Even iff expressible as a product of an even number of 2-cycles,
/// equivalently iff the number of even-length cycles is even.
inline bool is_even(const Perm& p) { return (p.size() - cycle_stats(p).c) % 2 == 0; }

/// Lehmer-code rank: a dense index into [0, m!), with rank(identity) = 0.
using PermRank = std::uint64_t;

inline PermRank rank(const Perm& p) {
  return detail::lehmer_rank(p.image().data(), p.size());
}

inline Perm unrank(PermRank r, int m) {
  if (r >= factorial(m)) throw std::out_of_range("unrank: rank out of range");
  std::vector<int> img(static_cast<std::size_t>(m));
  detail::lehmer_unrank(r, m, img.data());
  return Perm::from_image(std::move(img));
}

/// The order-reversing permutation of {1..n} (0-based storage).
inline Perm reverse_chi(int n) {
  if (n < 1) throw std::invalid_argument("reverse_chi: n must be positive");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = n - 1 - i;
  return Perm::from_image(std::move(img));
}

/// Parses 1-based one-line notation, e.g. "4 1 6 2 5 7 3" or "4,1,6,2,5,7,3".
inline Perm parse_one_line(std::string_view text) {
  std::string buf(text);
  for (char& ch : buf) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(buf);
  std::vector<int> vals;
  int v = 0;
  while (in >> v) vals.push_back(v - 1);
  if (!in.eof()) throw std::invalid_argument("parse_one_line: invalid token in \"" + buf + "\"");
  if (vals.empty()) throw std::invalid_argument("parse_one_line: empty permutation");
  return Perm::from_image(std::move(vals));  // rejects non-bijections
}

/// 1-based one-line text form.
inline std::string format_one_line(const Perm& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

/// Disjoint-cycle text form, e.g. "(0,4,1,5,3)(2,7,6)".  `offset` is added to
/// every element on output (1 for one-based S_n objects, 0 for encodings).
inline std::string format_cycles(const CycleDecomposition& d, int offset = 0,
                                 bool include_fixed = false) {
  std::string out;
  for (const auto& cyc : d.cycles) {
    if (cyc.size() == 1 && !include_fixed) continue;
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cyc[i] + offset);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

inline std::string format_cycles(const Perm& p, int offset = 0, bool include_fixed = false) {
  return format_cycles(cycle_decomposition(p), offset, include_fixed);
}

}  // namespace permcycle
