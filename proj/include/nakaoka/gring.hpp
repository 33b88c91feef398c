#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nakaoka/groups.hpp"
#include "nakaoka/rings.hpp"

namespace nakaoka {

/// Finite commutative ring with an action of G by ring automorphisms.
/// action[g][x] = g·x.
struct GRing {
  LatticePtr lattice;
  FiniteRing ring;
  std::vector<std::vector<Elem>> action;

  const FiniteGroup& group() const { return lattice->group(); }
  Elem act(Elem g, Elem x) const { return action[g][x]; }
};

/// Throws NotAutomorphism / NotHomomorphism naming the first violation.
GRing validate_gring(LatticePtr lattice, FiniteRing ring, std::vector<std::vector<Elem>> action);
GRing trivial_gring(LatticePtr lattice, FiniteRing ring);

/// Elements fixed by every element of subgroup h, as a subring.
SubringView fixed_subring(const GRing& s, std::size_t h);
/// Sum (resp. product) of r·x over left coset representatives r of K in H.
Elem relative_trace(const GRing& s, Elem x, std::size_t k, std::size_t h);
Elem relative_norm(const GRing& s, Elem x, std::size_t k, std::size_t h);

bool is_invariant(const GRing& s, const ElementSet& ideal);
/// The definition, in contrapositive form: for all x, y outside I with
/// x·gy in I for every g, fail. Errors: NotInvariant, ImproperIdeal.
bool is_G_prime(const GRing& s, const ElementSet& ideal);

std::vector<ElementSet> enumerate_G_invariant_ideals(const GRing& s, std::size_t bound = 64);
std::vector<ElementSet> G_prime_ideals(const GRing& s, std::size_t bound = 64);

/// Idempotents d with isotropy exactly H and d·gd = 0 for g outside H.
std::vector<std::pair<Elem, std::size_t>> find_type_H_idempotents(const GRing& s);
/// No nonzero idempotent d with d·gd = 0 for some g.
bool is_clarified(const GRing& s);
/// Σ over G/H of g·d.
Elem orbit_sum(const GRing& s, Elem d, std::size_t h);

/// S/I with the induced action; QuotientNotGRing if I is not invariant.
struct QuotientGRing {
  GRing ring;
  std::vector<Elem> project;
};
QuotientGRing quotient_gring(const GRing& s, const ElementSet& ideal);

/// The action restricted to subgroup h, as a G-ring over h viewed as a group.
GRing restrict_gring(const GRing& s, std::size_t h);

/// CoInd_H^G S = Map_H(G, S) = product over left cosets G/H of S, where S is
/// an H-ring over `subgroup_as_group(g_lattice, h)`. Factor i corresponds to
/// the coset reps[i]·H with reps[0] = e.
struct CoinducedGRing {
  GRing ring;
  std::vector<Elem> reps;
  ProductLayout layout;
};
CoinducedGRing coinduce_gring(const GRing& s, LatticePtr g_lattice, std::size_t h);

/// Are the tables of a and b identical after relabelling by the bijection `map` (a -> b)?
bool is_ring_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& map);

}  // namespace nakaoka
