#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "nakaoka/gring.hpp"

namespace nakaoka {

/// Monomial of F_q[G·x]/(g1 x · g2 x, g1 != g2): the constant 1, or x_g^k.
struct Monomial {
  static constexpr std::size_t constant = static_cast<std::size_t>(-1);
  std::size_t variable = constant;  // group element index or `constant`
  std::size_t exponent = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Finitely supported elements of the G-algebra F_q[G·x]/(g1 x · g2 x)
/// together with its embedding into prod_{g in G} F_q[t], x_g -> t in factor g.
class MonomialGAlgebra {
 public:
  using Element = std::map<Monomial, Integer>;  // nonzero coefficients in [1, q)
  /// Polynomial per factor: poly[g][k] = coefficient of t^k.
  using Image = std::vector<IntVector>;

  MonomialGAlgebra(FiniteGroup group, Integer q);

  const FiniteGroup& group() const noexcept { return group_; }
  Integer characteristic() const noexcept { return q_; }

  Element constant(Integer c) const;
  Element variable(Elem g, std::size_t exponent = 1) const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  /// h·x_g = x_{hg}
  Element act(Elem h, const Element& a) const;

  Image embed(const Element& a) const;
  /// Monomials 1 and x_g^k for 1 <= k <= degree.
  std::vector<Element> monomials(std::size_t degree) const;
  /// Rank over F_q of the images of all monomials of degree <= `degree`
  /// equals their number; images of products equal products of images.
  bool embedding_injective_up_to(std::size_t degree) const;
  bool embedding_multiplicative_up_to(std::size_t degree) const;

  /// Finite model: the algebra modulo monomials of degree > d, as a G-ring,
  /// its target prod_g F_q[t]/(t^{d+1}) and the induced equivariant map.
  GRing truncated_model(LatticePtr lattice, std::size_t d) const;
  GRing truncated_target(LatticePtr lattice, std::size_t d) const;
  std::vector<Elem> truncated_embedding(std::size_t d) const;

 private:
  Image multiply_images(const Image& a, const Image& b) const;
  FiniteGroup group_;
  Integer q_;
};

}  // namespace nakaoka
