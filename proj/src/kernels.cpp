#include "nakaoka/kernels.hpp"

#include <limits>

namespace nakaoka::kernels {

namespace {

bool gprime_pair_fails(const FiniteRing& r, const std::vector<std::vector<Elem>>& action,
                       const ElementSet& ideal, Elem x, Elem y) {
  for (const auto& t : action)
    if (!ideal.contains(r.mul(x, t[y]))) return false;
  return true;
}

bool product_inside(const std::vector<const FiniteRing*>& levels, const LevelwiseGenerators& a,
                    const LevelwiseGenerators& b, const std::vector<ElementSet>& target) {
  for (std::size_t l = 0; l < levels.size(); ++l)
    for (Elem x : a[l])
      for (Elem y : b[l])
        if (!target[l].contains(levels[l]->mul(x, y))) return false;
  return true;
}

}  // namespace

std::optional<std::pair<Elem, Elem>> find_gprime_violation(
    const FiniteRing& ring, const std::vector<std::vector<Elem>>& action,
    const ElementSet& ideal, Policy policy) {
  const long n = static_cast<long>(ring.order());
  if (policy == Policy::serial) {
    for (Elem x = 0; x < n; ++x) {
      if (ideal.contains(x)) continue;
      for (Elem y = 0; y < n; ++y)
        if (!ideal.contains(y) && gprime_pair_fails(ring, action, ideal, x, y)) return std::pair{x, y};
    }
    return std::nullopt;
  }
  constexpr long none = std::numeric_limits<long>::max();
  long best = none;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (long x = 0; x < n; ++x) {
    if (ideal.contains(static_cast<Elem>(x))) continue;
    for (long y = 0; y < n; ++y)
      if (!ideal.contains(static_cast<Elem>(y)) &&
          gprime_pair_fails(ring, action, ideal, static_cast<Elem>(x), static_cast<Elem>(y))) {
        best = std::min(best, x * n + y);
        break;
      }
  }
  if (best == none) return std::nullopt;
  return std::pair{static_cast<Elem>(best / n), static_cast<Elem>(best % n)};
}

std::optional<std::pair<std::size_t, std::size_t>> find_product_inside(
    const std::vector<const FiniteRing*>& levels, const std::vector<LevelwiseGenerators>& ideals,
    const std::vector<ElementSet>& target, Policy policy) {
  const long m = static_cast<long>(ideals.size());
  if (policy == Policy::serial) {
    for (long i = 0; i < m; ++i)
      for (long j = i; j < m; ++j)
        if (product_inside(levels, ideals[i], ideals[j], target))
          return std::pair{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
    return std::nullopt;
  }
  constexpr long none = std::numeric_limits<long>::max();
  long best = none;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (long i = 0; i < m; ++i)
    for (long j = i; j < m; ++j)
      if (product_inside(levels, ideals[i], ideals[j], target)) {
        best = std::min(best, i * m + j);
        break;
      }
  if (best == none) return std::nullopt;
  return std::pair{static_cast<std::size_t>(best / m), static_cast<std::size_t>(best % m)};
}

}  // namespace nakaoka::kernels
