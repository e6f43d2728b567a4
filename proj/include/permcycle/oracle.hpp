#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "permcycle/bounds.hpp"
#include "permcycle/permutation.hpp"
#include "permcycle/rearrangement.hpp"

namespace permcycle {

/// Thrown when a search would exceed the configured state-space cap.
class cap_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultBfsCap = 10;
inline constexpr int kHardBfsCap = 12;  // 12! distance bytes ~ 479 MB

/// Exact distances of every permutation of S_n to the identity under one
/// generator family, dense over Lehmer ranks.
struct DistanceTable {
  int n = 0;
  FamilyTag family = FamilyTag::ptd;
  std::vector<std::uint8_t> dist;  // indexed by rank; dist[0] = 0
  int diameter = 0;
};

struct BfsOptions {
  int cap = kDefaultBfsCap;
  int threads = 1;          // 0 = hardware concurrency
  std::ostream* notes = nullptr;  // receives the memory estimate for big runs
};

namespace detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

/// Runs fn(begin, end) over [0, total) split into roughly equal chunks.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
  if (threads <= 1 || total < 2) {
    fn(std::uint64_t{0}, total);
    return;
  }
  const std::uint64_t want = static_cast<std::uint64_t>(threads);
  const std::uint64_t chunk = (total + want - 1) / want;
  std::vector<std::thread> pool;
  for (std::uint64_t b = 0; b < total; b += chunk) {
    const std::uint64_t e = std::min(total, b + chunk);
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace detail

/**
 * Breadth-first search over the Cayley graph of S_n for the family, from the
 * identity outwards.  Neighbour expansion right-composes each generator, so
 * symmetry of the generator set (checked up front) makes distance-to-identity
 * equal distance-from-identity.  Levels are expanded by scanning the distance
 * array, and writes race only on identical values, so the resulting table is
 * deterministic for any thread count.
 */
inline DistanceTable bfs(int n, const GeneratorFamily& family, const BfsOptions& opts = {}) {
  if (family.n != n) throw std::invalid_argument("bfs: family size mismatch");
  if (n < 1) throw std::invalid_argument("bfs: n must be positive");
  const int cap = std::min(opts.cap, kHardBfsCap);
  if (n > cap) {
    throw cap_exceeded("bfs: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                       " (raise with --cap-override, hard limit " +
                       std::to_string(kHardBfsCap) + ")");
  }

  const std::vector<Perm> gen_perms = realise_all(family);
  const std::uint64_t total = factorial(n);
  if (gen_perms.empty() && total > 1) {
    throw std::invalid_argument("bfs: empty generator family cannot generate S_n");
  }
  if (!is_symmetric_family(gen_perms)) {
    throw std::logic_error("bfs: generator family is not closed under inverse");
  }

  if (opts.notes && n >= 11) {
    *opts.notes << "bfs: allocating " << total << " distance bytes (~" << (total >> 20)
                << " MiB) for n = " << n << "\n";
  }

  // Generators as raw byte images for the hot loop.
  const int gcount = static_cast<int>(gen_perms.size());
  std::vector<std::uint8_t> gens(static_cast<std::size_t>(gcount) * static_cast<std::size_t>(n));
  for (int g = 0; g < gcount; ++g) {
    for (int x = 0; x < n; ++x) {
      gens[static_cast<std::size_t>(g) * n + x] = static_cast<std::uint8_t>(gen_perms[g](x));
    }
  }

  constexpr std::uint8_t kUnseen = 0xFF;
  std::unique_ptr<std::atomic<std::uint8_t>[]> dist(new std::atomic<std::uint8_t>[total]);
  const int threads = detail::resolve_threads(opts.threads);
  detail::parallel_chunks(total, threads, [&](std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t r = b; r < e; ++r) dist[r].store(kUnseen, std::memory_order_relaxed);
  });
  dist[0].store(0, std::memory_order_relaxed);

  std::uint64_t level_count = 1;
  int level = 0;
  while (level_count > 0) {
    std::atomic<std::uint64_t> found{0};
    const std::uint8_t next = static_cast<std::uint8_t>(level + 1);
    detail::parallel_chunks(total, threads, [&](std::uint64_t b, std::uint64_t e) {
      std::uint8_t p[16];
      std::uint8_t q[16];
      std::uint64_t local = 0;
      for (std::uint64_t r = b; r < e; ++r) {
        if (dist[r].load(std::memory_order_relaxed) != level) continue;
        detail::lehmer_unrank(r, n, p);
        for (int g = 0; g < gcount; ++g) {
          const std::uint8_t* gi = &gens[static_cast<std::size_t>(g) * n];
          for (int x = 0; x < n; ++x) q[x] = p[gi[x]];
          const std::uint64_t nr = detail::lehmer_rank(q, n);
          std::uint8_t expect = kUnseen;
          if (dist[nr].compare_exchange_strong(expect, next, std::memory_order_relaxed)) {
            ++local;
          }
        }
      }
      found.fetch_add(local, std::memory_order_relaxed);
    });
    level_count = found.load();
    if (level_count > 0) ++level;
    if (level > 250) throw std::logic_error("bfs: runaway level count");
  }

  DistanceTable table;
  table.n = n;
  table.family = family.tag;
  table.dist.resize(total);
  for (std::uint64_t r = 0; r < total; ++r) {
    const std::uint8_t d = dist[r].load(std::memory_order_relaxed);
    if (d == kUnseen) throw std::logic_error("bfs: family does not generate S_n");
    table.dist[r] = d;
  }
  table.diameter = level;
  return table;
}

inline int exact_distance(const Perm& pi, const DistanceTable& table) {
  if (pi.size() != table.n) throw std::invalid_argument("exact_distance: size mismatch");
  return table.dist[rank(pi)];
}

/// Caches one distance table per (n, family).
class Oracle {
 public:
  BfsOptions options;

  const DistanceTable& table(int n, FamilyTag tag) {
    const auto key = std::make_pair(n, tag);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, bfs(n, GeneratorFamily{tag, n}, options)).first;
    }
    return it->second;
  }

  int distance(const Perm& pi, FamilyTag tag) {
    return exact_distance(pi, table(pi.size(), tag));
  }

  void put(DistanceTable t) { cache_[std::make_pair(t.n, t.family)] = std::move(t); }

 private:
  std::map<std::pair<int, FamilyTag>, DistanceTable> cache_;
};

inline int diameter_of(int n, FamilyTag tag, Oracle& oracle) {
  return oracle.table(n, tag).diameter;
}

// ---------------------------------------------------------------------------
// Lower-bound comparison tables.
//
// A permutation counts as tight for a bound when its exact prefix
// transposition distance equals the bound's value.  The breakpoint bound is
// compared against its exact rational value (ptb - 1)/2, the strip/clan
// bound against its rounded-up integer, and the encoding bound against its
// (always integral) value.
// ---------------------------------------------------------------------------

struct Table1Row {
  int n = 0;
  std::uint64_t n_factorial = 0;
  std::uint64_t tight_dm = 0;   // distance equals (ptb - 1) / 2 exactly
  std::uint64_t tight_cs = 0;   // distance equals the rounded strip/clan bound
  std::uint64_t tight_new = 0;  // distance equals the encoding-based bound
};

struct Table2Row {
  int n = 0;
  std::uint64_t n_factorial = 0;
  std::array<std::uint64_t, 4> delta{};  // counts for distance - bound = 0,1,2,3
};

inline Table1Row table1_row(int n, Oracle& oracle) {
  const DistanceTable& tbl = oracle.table(n, FamilyTag::ptd);
  Table1Row row;
  row.n = n;
  row.n_factorial = factorial(n);
  const int threads = detail::resolve_threads(oracle.options.threads);
  std::atomic<std::uint64_t> dm{0}, cs{0}, nw{0};
  detail::parallel_chunks(row.n_factorial, threads, [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t local_dm = 0, local_cs = 0, local_nw = 0;
    for (std::uint64_t r = b; r < e; ++r) {
      const Perm pi = unrank(r, n);
      const int d = tbl.dist[r];
      if (2 * d == ptb(pi) - 1) ++local_dm;
      if (d == cs_lower_bound(pi)) ++local_cs;
      if (d == ptd_new_lower_bound(pi)) ++local_nw;
    }
    dm += local_dm;
    cs += local_cs;
    nw += local_nw;
  });
  row.tight_dm = dm.load();
  row.tight_cs = cs.load();
  row.tight_new = nw.load();
  return row;
}

inline Table2Row table2_row(int n, Oracle& oracle) {
  const DistanceTable& tbl = oracle.table(n, FamilyTag::ptd);
  Table2Row row;
  row.n = n;
  row.n_factorial = factorial(n);
  const int threads = detail::resolve_threads(oracle.options.threads);
  std::array<std::atomic<std::uint64_t>, 4> delta{};
  std::atomic<bool> out_of_range{false};
  detail::parallel_chunks(row.n_factorial, threads, [&](std::uint64_t b, std::uint64_t e) {
    std::array<std::uint64_t, 4> local{};
    for (std::uint64_t r = b; r < e; ++r) {
      const Perm pi = unrank(r, n);
      const int gap = tbl.dist[r] - ptd_new_lower_bound(pi);
      if (gap < 0 || gap > 3) {
        out_of_range.store(true);
        return;
      }
      ++local[static_cast<std::size_t>(gap)];
    }
    for (int i = 0; i < 4; ++i) delta[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
  });
  if (out_of_range.load()) throw std::logic_error("table2_row: distance - bound outside [0, 3]");
  for (int i = 0; i < 4; ++i) row.delta[static_cast<std::size_t>(i)] = delta[static_cast<std::size_t>(i)].load();
  return row;
}

inline std::vector<Table1Row> table1(int max_n, Oracle& oracle) {
  std::vector<Table1Row> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(table1_row(n, oracle));
  return rows;
}

inline std::vector<Table2Row> table2(int max_n, Oracle& oracle) {
  std::vector<Table2Row> rows;
  for (int n = 1; n <= max_n; ++n) rows.push_back(table2_row(n, oracle));
  return rows;
}

inline std::string to_tsv(const std::vector<Table1Row>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += std::to_string(r.n) + '\t' + std::to_string(r.n_factorial) + '\t' +
           std::to_string(r.tight_dm) + '\t' + std::to_string(r.tight_cs) + '\t' +
           std::to_string(r.tight_new) + '\n';
  }
  return out;
}

inline std::string to_tsv(const std::vector<Table2Row>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += std::to_string(r.n) + '\t' + std::to_string(r.n_factorial);
    for (const auto& d : r.delta) out += '\t' + std::to_string(d);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Binary table files: "PCDT", u32 version, u32 n, u32 family, then one byte
// per rank.  Integers are little-endian.
// ---------------------------------------------------------------------------

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
               static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(b, 4);
}

inline std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace detail

inline void dump_table(const DistanceTable& table, std::ostream& out) {
  out.write("PCDT", 4);
  detail::put_u32(out, 1);
  detail::put_u32(out, static_cast<std::uint32_t>(table.n));
  detail::put_u32(out, static_cast<std::uint32_t>(table.family));
  out.write(reinterpret_cast<const char*>(table.dist.data()),
            static_cast<std::streamsize>(table.dist.size()));
}

inline DistanceTable load_table(std::istream& in) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "PCDT", 4) != 0) {
    throw std::invalid_argument("load_table: bad magic");
  }
  const std::uint32_t version = detail::get_u32(in);
  if (version != 1) throw std::invalid_argument("load_table: unsupported version");
  DistanceTable table;
  table.n = static_cast<int>(detail::get_u32(in));
  table.family = static_cast<FamilyTag>(detail::get_u32(in));
  if (table.n < 1 || table.n > kHardBfsCap) throw std::invalid_argument("load_table: bad n");
  table.dist.resize(factorial(table.n));
  in.read(reinterpret_cast<char*>(table.dist.data()),
          static_cast<std::streamsize>(table.dist.size()));
  if (!in) throw std::invalid_argument("load_table: truncated file");
  table.diameter = 0;
  for (std::uint8_t d : table.dist) table.diameter = std::max(table.diameter, static_cast<int>(d));
  return table;
}

}  // namespace permcycle
