#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nakaoka/gring.hpp"
#include "nakaoka/groups.hpp"
#include "nakaoka/rings.hpp"

namespace nakaoka {

using ElemMap = std::vector<Elem>;
/// (k, h) with subgroup k contained in subgroup h (lattice indices).
using LevelPair = std::pair<std::size_t, std::size_t>;

/// Levelwise finite Tambara functor. Levels are stored for every subgroup;
/// res[(k,h)] : R(h) -> R(k), tr[(k,h)], nm[(k,h)] : R(k) -> R(h) for every
/// k <= h (identities included); conj[g][h] : R(h) -> R(g h g^-1).
struct TambaraFunctor {
  LatticePtr lattice;
  std::vector<FiniteRing> levels;
  std::map<LevelPair, ElemMap> res, tr, nm;
  std::vector<std::vector<ElemMap>> conj;
  std::string name;

  const FiniteGroup& group() const { return lattice->group(); }
  const FiniteRing& level(std::size_t h) const { return levels[h]; }
  Elem restriction(std::size_t k, std::size_t h, Elem x) const { return res.at({k, h})[x]; }
  Elem transfer(std::size_t k, std::size_t h, Elem x) const { return tr.at({k, h})[x]; }
  Elem norm(std::size_t k, std::size_t h, Elem x) const { return nm.at({k, h})[x]; }
  Elem conjugate(Elem g, std::size_t h, Elem x) const { return conj[g][h][x]; }
  std::size_t total_elements() const;
};

using FunctorPtr = std::shared_ptr<const TambaraFunctor>;

enum class Strictness { standard, full };

/// Exhaustive axiom check. Throws Error("AxiomViolation", "<axiom>: <witness>").
/// standard: ring-hom/additive/multiplicative maps, identities, composition,
/// conjugation functoriality and compatibility, Frobenius reciprocity and the
/// Mackey formulas for Res∘Tr and Res∘Nm. full (C_p, levels <= 16): also the
/// norm-of-sum formula for C_p.
void validate_tambara(const TambaraFunctor& f, Strictness strictness = Strictness::standard);
FunctorPtr make_functor(TambaraFunctor f, Strictness strictness = Strictness::standard);

/// Adds the identity res/tr/nm maps at pairs (h, h) where absent.
void add_identity_maps(TambaraFunctor& f);

struct TambaraMorphism {
  FunctorPtr source, target;
  std::vector<ElemMap> maps;  // per subgroup
};

/// Levelwise ring homomorphisms commuting with res, tr, nm and conj.
void validate_morphism(const TambaraMorphism& f);
TambaraMorphism identity_morphism(FunctorPtr f);
TambaraMorphism compose(const TambaraMorphism& second, const TambaraMorphism& first);

// ---- constructions ---------------------------------------------------------

struct FixedPoints {
  FunctorPtr functor;
  std::vector<SubringView> levels;  // S^H inside S
};
FixedPoints fixed_point_functor(const GRing& s);
/// FP(f) for an equivariant ring map f : S -> T.
TambaraMorphism fp_morphism(const FixedPoints& source, const FixedPoints& target, const ElemMap& ring_map);

/// The zero functor (all levels the zero ring).
FunctorPtr zero_functor(LatticePtr lattice);

/// Res_H^G: an H-functor over subgroup_as_group(G, h). Level j of the result
/// is level ambient_level[j] of the input, with identical element indices.
struct Restriction {
  FunctorPtr functor;
  std::size_t subgroup = 0;
  EmbeddedSubgroup embedding;
  std::vector<std::size_t> ambient_level;
};
Restriction restrict_functor(const FunctorPtr& r, std::size_t h);

/// Layout of (CoInd_H^G R)(G/K) = prod over double cosets H x K of
/// R(H ∩ x K x^-1); the identity double coset comes first.
struct CoindLevel {
  std::vector<Elem> reps;
  std::vector<std::size_t> factor_levels;  // levels of the H-functor
  ProductLayout layout{{}};
};

struct Coinduction {
  FunctorPtr functor;
  FunctorPtr base;
  std::size_t subgroup = 0;
  EmbeddedSubgroup embedding;
  std::vector<CoindLevel> layout;
};
/// CoInd_H^G of an H-functor whose group is subgroup_as_group(g_lattice, h).
Coinduction coinduce(const FunctorPtr& r, const LatticePtr& g_lattice, std::size_t h);

struct CoindUnit {
  Restriction restriction;
  Coinduction coinduction;
  TambaraMorphism unit;  // R -> CoInd_H^G Res_H^G R
};
CoindUnit coind_unit(const FunctorPtr& r, std::size_t h);

struct Ghost {
  FunctorPtr functor;
  TambaraMorphism chi;           // R -> ghost(R)
  ElementSet transfer_ideal;     // in R(C_p/C_p)
  SubringView fixed;             // R(C_p/e)^{C_p}
  QuotientRing quotient;         // R(C_p/C_p)/Tr
  ProductLayout top_layout{{}};  // top = fixed x quotient
};
/// NotCyclicPrime unless the group has prime order.
Ghost ghost(const FunctorPtr& r);

struct ProductFunctor {
  FunctorPtr functor;
  std::vector<ProductLayout> layouts;
  std::vector<TambaraMorphism> projections;
};
ProductFunctor product(const std::vector<FunctorPtr>& factors);

struct Split {
  Restriction restriction;
  FunctorPtr part;                  // R_H, an H-functor
  std::vector<Elem> units;          // per level of R_H: the idempotent e_L in R(L)
  std::vector<SubringView> views;   // e_L R(L) inside R(L)
  Coinduction coinduced;            // CoInd_H^G R_H
  std::vector<ElemMap> iso;         // R(K) -> CoInd R_H (K), verified bijective
};
/// d: idempotent of R(G/e) of type H with orbit sum 1; NotSplittable otherwise.
Split split_by_idempotent(const FunctorPtr& r, Elem d, std::size_t h);

/// The bottom level as a G-ring under conjugation.
GRing bottom_gring(const TambaraFunctor& r);
bool is_idle(const TambaraFunctor& r);
/// Every res map is injective.
bool restrictions_injective(const TambaraFunctor& r);

}  // namespace nakaoka
