#ifndef BJORTHO_SPLIT_HPP
#define BJORTHO_SPLIT_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

namespace bjortho::detail {

/// Finds a subset A of positions with 0 < m(A) < m(rest), masses strictly
/// positive. Strictness is required with a relative margin; ties do not count.
/// Scans single positions first (lightest first), then every subset when there
/// are at most 12 positions, otherwise a sorted greedy fill.
inline std::optional<std::vector<std::size_t>> light_split(const std::vector<double>& masses,
                                                           double rel_margin = 1e-12) {
  const std::size_t n = masses.size();
  if (n < 2) return std::nullopt;
  const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
  auto strictly_lighter = [&](double a) { return a > 0.0 && a < (total - a) * (1.0 - rel_margin); };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return masses[a] < masses[b]; });
  if (strictly_lighter(masses[order.front()])) return std::vector<std::size_t>{order.front()};

  constexpr std::size_t kExhaustiveCap = 12;
  if (n <= kExhaustiveCap) {
    for (unsigned long bits = 1; bits + 1 < (1ul << n); ++bits) {
      double m = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        if (bits & (1ul << i)) m += masses[i];
      if (strictly_lighter(m)) {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < n; ++i)
          if (bits & (1ul << i)) subset.push_back(i);
        return subset;
      }
    }
    return std::nullopt;
  }

  std::vector<std::size_t> subset;
  double m = 0.0;
  for (auto i : order) {
    if (m + masses[i] >= (total - m - masses[i])) break;
    m += masses[i];
    subset.push_back(i);
  }
  if (!subset.empty() && strictly_lighter(m)) {
    std::sort(subset.begin(), subset.end());
    return subset;
  }
  return std::nullopt;
}

}  // namespace bjortho::detail

#endif  // BJORTHO_SPLIT_HPP
