#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace nakaoka {

/// Exact integer scalar. All arithmetic through the checked helpers below;
/// overflow throws Error("ArithmeticOverflow").
using Integer = std::int64_t;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

Integer checked_add(Integer a, Integer b);
Integer checked_sub(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);
/// Floor division and matching non-negative remainder for b > 0.
Integer floor_div(Integer a, Integer b);
Integer floor_mod(Integer a, Integer b);

/// Row-style Hermite normal form of the lattice spanned by `rows`
/// (all of length `ncols`). Zero rows are dropped; pivots are positive and
/// entries above each pivot are reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols);

/// Membership of v in the lattice with HNF basis `hnf`, by back-substitution.
bool lattice_contains(const IntMatrix& hnf, const IntVector& v);

/// True iff lattice(sub) is contained in lattice(super).
bool lattice_includes(const IntMatrix& super, const IntMatrix& sub);

/// HNF basis of { x in Z^n : map·x in lattice(target) }, where `map` is an
/// m×n matrix and `target` holds row vectors of length m.
IntMatrix lattice_preimage(const IntMatrix& map, std::size_t n, const IntMatrix& target);

/// HNF basis of { x in Z^n : map·x ≡ 0 (mod p) } (p = 0: exact kernel).
IntMatrix congruence_kernel(const IntMatrix& map, std::size_t n, Integer p);

/// Identity lattice basis of Z^n.
IntMatrix unit_lattice(std::size_t n);

}  // namespace nakaoka
