#ifndef SIGNCOUNT_ORACLE_HPP
#define SIGNCOUNT_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signcount/sign.hpp"
#include "signcount/transition.hpp"

namespace signcount {

inline std::uint64_t pow3(std::size_t n) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < n; ++i) p *= 3;
  return p;
}

/// The index-th pattern of {-1,0,1}^n in lexicographic order (component 0 most
/// significant, -1 < 0 < 1).
inline SignVector pattern_from_index(std::size_t n, std::uint64_t index) {
  std::vector<int> s(n);
  for (std::size_t i = n; i-- > 0;) {
    s[i] = static_cast<int>(index % 3) - 1;
    index /= 3;
  }
  return SignVector(std::move(s));
}

template <typename Fn>
void for_each_pattern(std::size_t n, Fn &&fn) {
  const std::uint64_t total = pow3(n);
  std::vector<int> s(n, -1);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    fn(SignVector(s));
    for (std::size_t i = n; i-- > 0;) {
      if (s[i] < 1) {
        ++s[i];
        break;
      }
      s[i] = -1;
    }
  }
}

/// All sign patterns with their t-values, in lexicographic pattern order.
struct GridTable {
  struct Row {
    SignVector pattern;
    std::size_t t;
  };

  std::size_t n = 0;
  Topology topology = Topology::Circular;
  std::vector<Row> rows;

  /// Rows whose first component equals z1, in table order.
  std::vector<Row> slice(int z1) const {
    std::vector<Row> out;
    for (const Row &r : rows) {
      if (r.pattern[0] == z1) out.push_back(r);
    }
    return out;
  }

  std::map<std::size_t, std::size_t> histogram() const {
    std::map<std::size_t, std::size_t> h;
    for (const Row &r : rows) ++h[r.t];
    return h;
  }

  std::size_t lookup(const SignVector &z) const {
    std::uint64_t idx = 0;
    for (int v : z) idx = idx * 3 + static_cast<std::uint64_t>(v + 1);
    return rows.at(idx).t;
  }
};

inline constexpr std::size_t kMinGridDim = 2;
inline constexpr std::size_t kMaxGridDim = 12;

inline GridTable enumerate_grid(std::size_t n, Topology topo) {
  if (n < kMinGridDim || n > kMaxGridDim) {
    throw std::invalid_argument("enumerate_grid: n must lie in [2, 12]");
  }
  GridTable table;
  table.n = n;
  table.topology = topo;
  table.rows.reserve(pow3(n));
  for_each_pattern(n, [&](const SignVector &s) { table.rows.push_back({s, sign_changes(s, topo)}); });
  return table;
}

/// True iff {z : t(z) > threshold} is closed under z -> -z.
inline bool center_symmetry_check(const GridTable &table, std::size_t threshold) {
  for (const auto &row : table.rows) {
    if (row.t > threshold && table.lookup(-row.pattern) <= threshold) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Local classification through reachable sign patterns

enum class LocalLabel { NoZeroStationary, LocalMax, LocalMin, Neither };

inline std::string_view to_string(LocalLabel label) {
  switch (label) {
    case LocalLabel::NoZeroStationary: return "NoZeroStationary";
    case LocalLabel::LocalMax: return "LocalMax";
    case LocalLabel::LocalMin: return "LocalMin";
    case LocalLabel::Neither: return "Neither";
  }
  return "?";
}

struct LocalClass {
  LocalLabel label = LocalLabel::Neither;
  std::vector<SignVector> reachable;
  std::string frechet;  // what the Frechet subdifferential is known to be
};

/// Sign patterns realized in every small ball around x: nonzero components keep
/// their sign, zero components take any of -1, 0, 1.
inline std::vector<SignVector> reachable_patterns(std::span<const double> x) {
  const SignVector base = SignVector::of(x);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (base[i] == 0) free.push_back(i);
  }
  std::vector<SignVector> out;
  out.reserve(pow3(free.size()));
  for_each_pattern(free.size(), [&](const SignVector &choice) {
    std::vector<int> s = base.entries();
    for (std::size_t j = 0; j < free.size(); ++j) s[free[j]] = choice[j];
    out.emplace_back(std::move(s));
  });
  return out;
}

/// A point whose neighbourhood values are all equal counts as LocalMin, since the
/// Frechet classification only speaks about points outside the local minima.
inline LocalClass classify_point(std::span<const double> x, Topology topo) {
  LocalClass result;
  result.reachable = reachable_patterns(x);
  const SignVector center = SignVector::of(x);
  const std::size_t t0 = sign_changes(center, topo);

  if (count_nonzero(center) == center.size()) {
    result.label = LocalLabel::NoZeroStationary;
    result.frechet = "{0}";
    return result;
  }
  bool is_max = true;
  bool is_min = true;
  for (const SignVector &s : result.reachable) {
    const std::size_t t = sign_changes(s, topo);
    is_max = is_max && t <= t0;
    is_min = is_min && t >= t0;
  }
  if (is_min) {
    result.label = LocalLabel::LocalMin;
    result.frechet = "combinatorial (not enumerated)";
  } else if (is_max) {
    result.label = LocalLabel::LocalMax;
    result.frechet = "subset of X_perp(x)";
  } else {
    result.label = LocalLabel::Neither;
    result.frechet = "{0}";
  }
  return result;
}

}  // namespace signcount

#endif  // SIGNCOUNT_ORACLE_HPP
