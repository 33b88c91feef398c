#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nakaoka/kernels.hpp"
#include "nakaoka/tambara.hpp"

namespace nakaoka {

/// Green ideals skip the norm condition.
enum class IdealKind { tambara, green };

/// Levelwise ring ideals I(G/H), one per subgroup, closed under Tr, Res, conj
/// (and Nm for Tambara ideals). Equality is levelwise set equality.
struct TambaraIdeal {
  FunctorPtr functor;
  std::vector<ElementSet> levels;

  bool is_subset_of(const TambaraIdeal& other) const;
  bool is_unit() const;
  bool is_zero() const;
  std::size_t total_count() const;
  friend bool operator==(const TambaraIdeal& a, const TambaraIdeal& b) { return a.levels == b.levels; }
};

/// Lexicographic on (total size, level contents); the order enumerations use.
bool ideal_less(const TambaraIdeal& a, const TambaraIdeal& b);

/// First violated condition as "<condition> at <levels>", or nullopt.
/// Conditions: LevelIdeal, Transfer, Norm, Restriction, Conjugation.
std::optional<std::string> ideal_violation(const TambaraFunctor& r, const std::vector<ElementSet>& levels,
                                           IdealKind kind = IdealKind::tambara);
/// NotAnIdeal if any condition fails.
TambaraIdeal make_ideal(FunctorPtr r, std::vector<ElementSet> levels, IdealKind kind = IdealKind::tambara);

TambaraIdeal zero_ideal(FunctorPtr r);
TambaraIdeal unit_ideal(FunctorPtr r);

/// Per-level generator sets.
using LevelElements = std::vector<std::vector<Elem>>;

/// Least ideal containing the generators (worklist fixed point; every element
/// is pushed through res, tr, conj and, for Tambara ideals, nm exactly once).
TambaraIdeal close_ideal(FunctorPtr r, const LevelElements& generators, IdealKind kind);
TambaraIdeal close_tambara(FunctorPtr r, const LevelElements& generators);
TambaraIdeal close_green(FunctorPtr r, const LevelElements& generators);
/// Closure of an ideal together with extra generators.
TambaraIdeal close_with(const TambaraIdeal& base, const LevelElements& extra, IdealKind kind = IdealKind::tambara);
TambaraIdeal principal_ideal(FunctorPtr r, std::size_t level, Elem x);

/// Closure of the levelwise products I(G/H)·J(G/H).
TambaraIdeal ideal_product(const TambaraIdeal& i, const TambaraIdeal& j);
TambaraIdeal ideal_intersection(const TambaraIdeal& i, const TambaraIdeal& j);
TambaraIdeal ideal_sum(const TambaraIdeal& i, const TambaraIdeal& j);

/// Levelwise ring-ideal generators (greedy).
kernels::LevelwiseGenerators ideal_generators(const TambaraIdeal& i);

/// Distinct principal Tambara ideals <x>, x ranging over every level.
std::vector<TambaraIdeal> principal_ideals(FunctorPtr r);

/// A pair I, J (both not inside p) with I·J inside p.
struct PrimeWitness {
  TambaraIdeal first, second;
};

/// Principal-pair test: p is prime iff no principal <x>, <y> with x, y outside
/// p have <x><y> inside p. Exact, since products are monotone. ImproperIdeal
/// for the unit ideal.
std::optional<PrimeWitness> prime_violation(const TambaraIdeal& p,
                                            kernels::Policy policy = kernels::Policy::parallel);
bool is_prime(const TambaraIdeal& p, kernels::Policy policy = kernels::Policy::parallel);
/// The definition over all pairs from `all` (an enumeration of every ideal).
std::optional<PrimeWitness> prime_violation_full(const TambaraIdeal& p, const std::vector<TambaraIdeal>& all,
                                                 kernels::Policy policy = kernels::Policy::parallel);
bool is_prime_full(const TambaraIdeal& p, const std::vector<TambaraIdeal>& all,
                   kernels::Policy policy = kernels::Policy::parallel);

inline constexpr std::size_t kDefaultSearchBound = std::size_t{1} << 16;

/// Every ideal, by backtracking over conjugacy-class representatives in
/// increasing order: level candidates are Weyl-invariant ring ideals
/// containing the transfers/norms from below and restricting into the levels
/// below; conjugate levels follow by conj. SearchBoundExceeded when the
/// product of candidate counts exceeds `bound`. Sorted by ideal_less.
std::vector<TambaraIdeal> enumerate_ideals(FunctorPtr r, std::size_t bound = kDefaultSearchBound,
                                           IdealKind kind = IdealKind::tambara,
                                           kernels::Policy policy = kernels::Policy::parallel);
std::vector<TambaraIdeal> enumerate_tambara_ideals(FunctorPtr r, std::size_t bound = kDefaultSearchBound);
/// Reference: breadth-first closure from the zero ideal, adding one element at a time.
std::vector<TambaraIdeal> enumerate_ideals_by_closure(FunctorPtr r, IdealKind kind = IdealKind::tambara);

/// Levelwise preimage along f (an ideal of the source).
TambaraIdeal contract(const TambaraMorphism& f, const TambaraIdeal& j);
/// Levelwise kernel; NotAnIdeal if it fails the ideal conditions.
TambaraIdeal kernel(const TambaraMorphism& f);

/// I -> prod_x I(H ∩ xKx^-1) at level G/K.
TambaraIdeal coind_ideal(const Coinduction& c, const TambaraIdeal& i);
/// Restriction to H followed by projection onto the identity double coset factor.
TambaraIdeal coind_ideal_inverse(const Coinduction& c, const TambaraIdeal& j);
/// Levels K <= H of the ideal, as an ideal of the restricted functor.
TambaraIdeal restrict_ideal(const Restriction& r, const TambaraIdeal& p);
/// Levelwise image under the projections to one factor.
TambaraIdeal project_ideal(const TambaraMorphism& projection, const TambaraIdeal& i);

/// "e: {0,2}  G: {0,2}" with element labels.
std::string render_ideal(const TambaraIdeal& i);

}  // namespace nakaoka
