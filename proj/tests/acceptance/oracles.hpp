#pragma once

#include <vector>

#include "nakaoka/burnside.hpp"

namespace nakaoka::oracle {

/// Marks of Map_K(H, X) for the effective K-set X = ⊔_j K/L_j, by enumerating
/// every K-equivariant function H -> X and counting fixed points directly.
/// Returned in the class order of A(H).
IntVector coinduced_set_marks(const BurnsideFunctor& a, std::size_t k, std::size_t h,
                              const std::vector<std::size_t>& parts);

/// |(H/K)^I| by listing the cosets of K in H as sets and testing I-invariance.
Integer fixed_cosets(const SubgroupLattice& lat, std::size_t i, std::size_t k, std::size_t h);

/// Coordinates of the H-set H/K × H/L by orbit enumeration.
IntVector product_of_transitive(const BurnsideFunctor& a, std::size_t h, std::size_t k,
                                std::size_t l);

}  // namespace nakaoka::oracle
