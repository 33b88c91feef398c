#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nakaoka/rings.hpp"

namespace nakaoka::kernels {

/// Every scan below has an OpenMP version and a plain serial loop kept as the
/// reference; both return the lexicographically first witness.
enum class Policy { serial, parallel };

/// First (x, y) with x, y outside `ideal` and x·(g·y) in `ideal` for every g.
std::optional<std::pair<Elem, Elem>> find_gprime_violation(
    const FiniteRing& ring, const std::vector<std::vector<Elem>>& action,
    const ElementSet& ideal, Policy policy);

/// Ideal generators level by level: gens[level] generates the level ideal.
using LevelwiseGenerators = std::vector<std::vector<Elem>>;

/// First pair (i, j), i <= j, whose levelwise generator products all lie in
/// `target`, i.e. whose ideal product is contained in `target`.
std::optional<std::pair<std::size_t, std::size_t>> find_product_inside(
    const std::vector<const FiniteRing*>& levels, const std::vector<LevelwiseGenerators>& ideals,
    const std::vector<ElementSet>& target, Policy policy);

}  // namespace nakaoka::kernels
