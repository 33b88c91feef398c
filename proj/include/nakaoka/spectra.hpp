#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nakaoka/burnside.hpp"
#include "nakaoka/ideals.hpp"

namespace nakaoka {

enum class Provenance { enumerated, classified_burnside, classified_ghost, classified_fp };
std::string to_string(Provenance p);

/// Sorted point indices.
using PointSet = std::vector<std::size_t>;

/// A finite set of primes with the specialization order p <= q iff p ⊆ q.
/// Functor spectra keep the prime ideals; Burnside spectra keep the prime
/// levels at every subgroup and every symbol p_{K,p} naming the point.
struct Spectrum {
  Provenance provenance = Provenance::enumerated;
  LatticePtr lattice;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: point i ⊆ point j

  FunctorPtr functor;
  std::vector<TambaraIdeal> ideals;

  std::vector<std::vector<BurnsidePrimeSymbol>> symbols;
  std::vector<std::vector<IdealLattice>> burnside_levels;
  std::vector<Integer> prime_set;

  std::size_t size() const { return labels.size(); }
  /// Truncated spectra only represent some points of an infinite space.
  bool truncated() const { return provenance == Provenance::classified_burnside; }
  PointSet all() const;
};

enum class Verdict { yes, no, truncation_limited };
std::string to_string(Verdict v);

struct TopologyVerdict {
  PointSet subset;
  Verdict closed = Verdict::no;
  Verdict open = Verdict::no;
  /// closed = no: (p in S, q outside S, p ⊆ q).
  std::optional<std::pair<std::size_t, std::size_t>> not_closed_witness;
  /// open = no: (p outside S, q in S, p ⊆ q).
  std::optional<std::pair<std::size_t, std::size_t>> not_open_witness;
  /// closed = yes on a functor spectrum: an ideal I with S = V(I).
  std::optional<TambaraIdeal> closed_ideal;
  /// closed = yes on a Burnside spectrum: the point whose V cuts out S.
  std::optional<std::size_t> closed_point;
};

/// All primes by exhaustive ideal enumeration.
Spectrum spec_bruteforce(const FunctorPtr& r, std::size_t bound = kDefaultSearchBound);
/// Classified points p_{K,p}, K over class representatives and p over `primes`,
/// merged when their levels agree.
Spectrum spec_burnside(const BurnsideFunctor& a, const std::vector<Integer>& primes);

/// Index of the point equal to the given prime, or nullopt.
std::optional<std::size_t> find_point(const Spectrum& s, const TambaraIdeal& p);
std::optional<std::size_t> find_point(const Spectrum& s, BurnsidePrimeSymbol symbol);

/// Points containing I (functor spectra) or containing the given point.
PointSet v_of(const Spectrum& s, const TambaraIdeal& i);
PointSet v_of_point(const Spectrum& s, std::size_t point);
/// Smallest specialization-closed superset.
PointSet closure(const Spectrum& s, const PointSet& subset);
PointSet complement(const Spectrum& s, const PointSet& subset);

/// Closedness and openness with witnesses. On truncated spectra "yes" for
/// closed needs S = V(point), "yes" for open needs S to be everything or
/// nothing; an upward-closed set without such a certificate is
/// truncation-limited. "No" always carries a specialization witness, which
/// remains valid in the full spectrum.
TopologyVerdict topology(const Spectrum& s, const PointSet& subset);

/// Contraction of every target prime along f into the source spectrum.
/// ContractionNotPrime if some contraction is not prime.
std::vector<std::size_t> spec_map(const TambaraMorphism& f, const Spectrum& source, const Spectrum& target);

struct Stratum {
  std::size_t subgroup = 0;  // class representative
  PointSet points;
  TopologyVerdict verdict;
  // Burnside only: the classification {p_{K,p} : K ≼ H} and V(p_{H,0}).
  PointSet by_classification;
  PointSet by_v_of;
  std::optional<bool> matches_classification;
  std::optional<bool> matches_v_of;
};

struct Stratification {
  Spectrum spectrum;
  std::vector<Stratum> strata;  // one per conjugacy class, in lattice order
  bool dedekind = false;
  std::vector<std::string> notes;
};

/// Strata as images of Spec(Res_H R) under contraction along the
/// coinduction unit, Spec(CoInd_H Res_H R) being identified with
/// Spec(Res_H R) through coind_ideal.
Stratification stratify(const FunctorPtr& r, std::size_t bound = kDefaultSearchBound);
/// Burnside strata by contracting the primes of A_H along the unit, compared
/// with the classification and with V(p_{H,0}) when G is Dedekind.
Stratification stratify_burnside(const BurnsideFunctor& a, const std::vector<Integer>& primes);

struct GhostStratum {
  Ghost ghost;
  Spectrum spectrum;                 // enumerated
  PointSet classified_restricted;    // (p; R/Tr) for p a C_p-prime of R(C_p/e)
  PointSet classified_norm;          // (Nm^-1 q; q) for q a prime of R(C_p/C_p)/Tr
  std::vector<TambaraIdeal> classified;  // both families as ideals
  bool classification_matches = false;
  PointSet e_stratum;                // by contraction
  bool e_stratum_matches = false;    // equals classified_restricted
  bool transfer_surjective = false;
  TopologyVerdict verdict;
};
GhostStratum stratum_ghost(const FunctorPtr& r, std::size_t bound = kDefaultSearchBound);

struct FpComparison {
  std::vector<ElementSet> g_primes;       // G-prime ideals of S
  Spectrum spectrum;                      // primes of FP(S), enumerated
  std::vector<ElementSet> fixed_primes;   // primes of S^G (as subsets of S^G)
  std::vector<std::size_t> g_to_fp;       // via gprime_to_prime
  std::vector<std::size_t> fp_to_fixed;   // p -> p(G/e) ∩ S^G
  std::vector<std::size_t> g_to_fixed;    // I -> I ∩ S^G
  bool bijective = false;
  bool order_isomorphic = false;
  bool commutes = false;
};
FpComparison spec_fp(const GRing& s, std::size_t bound = kDefaultSearchBound);

/// Kernel of FP(S) -> FP(S/I). Verified prime with bottom level I.
TambaraIdeal gprime_to_prime(const GRing& s, const FixedPoints& fp, const ElementSet& ideal);

struct DomainLikeVerdict {
  bool domain_like = false;
  bool restrictions_injective = false;
  std::optional<bool> bottom_g_prime;  // zero ideal of the bottom G-ring
  bool consistent = true;              // with injective restrictions both tests agree
};
DomainLikeVerdict is_domain_like(const FunctorPtr& r);

struct ClarifiedDecomposition {
  bool already_clarified = false;
  bool complete = false;        // ended at a clarified functor
  std::size_t subgroup = 0;     // lattice index in the original group
  FunctorPtr functor;           // clarified functor over that subgroup
  std::vector<std::string> steps;
};
/// Repeatedly splits along type-H idempotents with orbit sum 1, smallest H first.
ClarifiedDecomposition clarified_decomposition(const FunctorPtr& r);

}  // namespace nakaoka
