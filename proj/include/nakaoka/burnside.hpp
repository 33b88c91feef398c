#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nakaoka/groups.hpp"
#include "nakaoka/lattice.hpp"

namespace nakaoka {

/// Table of marks of a subgroup H of G. Classes are the H-conjugacy classes
/// of subgroups of H, represented by lattice indices and sorted by index (so
/// by order). marks[i][j] = |(H/K_j)^{I_i}|; nonzero only when I_i is
/// H-subconjugate to K_j.
struct TableOfMarks {
  std::size_t ambient = 0;
  std::vector<std::size_t> classes;
  IntMatrix marks;
};

TableOfMarks table_of_marks(const SubgroupLattice& lat, std::size_t h);

/// Element of A(H) in the basis of transitive sets [H/K].
struct BurnsideElement {
  std::size_t ambient = 0;
  IntVector coords;
  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;
};

/// Integer sublattice of A(H)-coordinates in Hermite normal form.
struct IdealLattice {
  std::size_t ambient = 0;
  std::size_t rank = 0;
  IntMatrix basis;
  friend bool operator==(const IdealLattice&, const IdealLattice&) = default;
};

/// p_{K,p}: `subgroup` is a lattice index (any member of the class), `characteristic` prime or 0.
struct BurnsidePrimeSymbol {
  std::size_t subgroup = 0;
  Integer characteristic = 0;
  friend bool operator==(const BurnsidePrimeSymbol&, const BurnsidePrimeSymbol&) = default;
};

enum class PrimeComparison { equal, first_in_second, second_in_first, incomparable };

std::string to_string(PrimeComparison c);

/// The Burnside Tambara functor on G (or on a subgroup W of G, whose levels
/// are the subgroups of W). Holds the table of marks of every subgroup.
class BurnsideFunctor {
 public:
  explicit BurnsideFunctor(LatticePtr lat);

  const SubgroupLattice& lattice() const noexcept { return *lat_; }
  const LatticePtr& lattice_ptr() const noexcept { return lat_; }
  const TableOfMarks& marks(std::size_t h) const { return tables_[h]; }
  std::size_t rank(std::size_t h) const { return tables_[h].classes.size(); }

  /// Position of subgroup i (contained in H) among the H-classes of A(H).
  std::size_t class_position(std::size_t h, std::size_t i) const;

  BurnsideElement zero(std::size_t h) const;
  BurnsideElement one(std::size_t h) const;
  /// The transitive set [H/K].
  BurnsideElement transitive(std::size_t h, std::size_t k) const;

  BurnsideElement add(const BurnsideElement& x, const BurnsideElement& y) const;
  BurnsideElement scale(Integer c, const BurnsideElement& x) const;

  /// |X^I| for I a subgroup of the ambient of x, reduced into [0,p) when p != 0.
  Integer mark_hom(const BurnsideElement& x, std::size_t i, Integer p = 0) const;
  /// Marks at each class of the ambient, in class order.
  IntVector mark_vector(const BurnsideElement& x) const;
  /// Pulls a mark vector back to coordinates; NonIntegralResult if impossible.
  BurnsideElement from_marks(std::size_t h, const IntVector& marks) const;

  BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y) const;
  /// Induction A(K) -> A(H).
  BurnsideElement tr(const BurnsideElement& x, std::size_t h) const;
  /// Restriction A(H) -> A(K) via double cosets K\H/L.
  BurnsideElement res(const BurnsideElement& x, std::size_t k) const;
  /// Restriction computed through marks; independent cross-check of res.
  BurnsideElement res_via_marks(const BurnsideElement& x, std::size_t k) const;
  /// A(K) -> A(gKg^-1).
  BurnsideElement conj(const BurnsideElement& x, Elem g) const;
  /// Multiplicative norm A(K) -> A(H) by the double-coset mark product.
  BurnsideElement norm(const BurnsideElement& x, std::size_t h) const;

  /// Ideal level p_{K,p}(G/H) where subconjugacy I ≼ K is taken inside
  /// `within` (a subgroup containing H and K; the whole group by default).
  IdealLattice prime_level(std::size_t k, Integer p, std::size_t h,
                           std::size_t within) const;
  IdealLattice prime_level(std::size_t k, Integer p, std::size_t h) const {
    return prime_level(k, p, h, lat_->whole());
  }

  bool contains(const IdealLattice& level, const BurnsideElement& x) const;

 private:
  LatticePtr lat_;
  std::vector<TableOfMarks> tables_;
  std::vector<std::vector<std::size_t>> positions_;  // [h][i] -> class position or npos
};

/// A prime ideal of the Burnside functor, stored levelwise at every subgroup.
struct BurnsidePrime {
  BurnsidePrimeSymbol symbol;
  std::vector<IdealLattice> levels;
};

/// All levels of p_{K,p}, with subconjugacy inside `within`; levels are
/// computed for the subgroups of `within` (others left empty).
BurnsidePrime burnside_prime(const BurnsideFunctor& a, BurnsidePrimeSymbol s,
                             std::size_t within);
inline BurnsidePrime burnside_prime(const BurnsideFunctor& a, BurnsidePrimeSymbol s) {
  return burnside_prime(a, s, a.lattice().whole());
}

/// Levelwise comparison of two ideals given by lattices on the same subgroups.
PrimeComparison compare_levels(const std::vector<IdealLattice>& a,
                               const std::vector<IdealLattice>& b,
                               const std::vector<std::size_t>& at);

/// Compares p_{K1,p1} and p_{K2,p2} at every subgroup-class level of G.
PrimeComparison burnside_prime_compare(const BurnsideFunctor& a, BurnsidePrimeSymbol s1,
                                       BurnsidePrimeSymbol s2);

/// Primes dividing |G|, 0, and the least prime not dividing |G|.
std::vector<Integer> default_prime_set(std::size_t group_order);

std::string symbol_name(const SubgroupLattice& lat, BurnsidePrimeSymbol s);

}  // namespace nakaoka
