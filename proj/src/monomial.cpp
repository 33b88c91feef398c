#include "nakaoka/monomial.hpp"

#include "nakaoka/errors.hpp"

namespace nakaoka {

namespace {

bool prime(Integer n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Rank over F_q of integer row vectors.
std::size_t rank_mod(std::vector<IntVector> rows, Integer q) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  auto inverse = [&](Integer a) {
    for (Integer b = 1; b < q; ++b)
      if (a * b % q == 1) return b;
    return Integer{0};
  };
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && floor_mod(rows[piv][c], q) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Integer inv = inverse(floor_mod(rows[rank][c], q));
    for (auto& v : rows[rank]) v = floor_mod(v * inv, q);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const Integer f = floor_mod(rows[r][c], q);
      if (!f) continue;
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = floor_mod(rows[r][k] - f * rows[rank][k], q);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MonomialGAlgebra::MonomialGAlgebra(FiniteGroup group, Integer q) : group_(std::move(group)), q_(q) {
  if (!prime(q)) throw Error("InvalidParameter", "field characteristic must be prime");
}

MonomialGAlgebra::Element MonomialGAlgebra::constant(Integer c) const {
  Element e;
  if (floor_mod(c, q_)) e[Monomial{}] = floor_mod(c, q_);
  return e;
}

MonomialGAlgebra::Element MonomialGAlgebra::variable(Elem g, std::size_t exponent) const {
  if (exponent == 0) return constant(1);
  return Element{{Monomial{g, exponent}, 1}};
}

MonomialGAlgebra::Element MonomialGAlgebra::add(const Element& a, const Element& b) const {
  Element out = a;
  for (const auto& [m, c] : b) {
    const Integer v = floor_mod(out[m] + c, q_);
    if (v) out[m] = v;
    else out.erase(m);
  }
  return out;
}

MonomialGAlgebra::Element MonomialGAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m;
      if (ma.variable == Monomial::constant) m = mb;
      else if (mb.variable == Monomial::constant) m = ma;
      else if (ma.variable == mb.variable) m = Monomial{ma.variable, ma.exponent + mb.exponent};
      else continue;  // g1 x · g2 x = 0
      out = add(out, Element{{m, floor_mod(ca * cb, q_)}});
    }
  return out;
}

MonomialGAlgebra::Element MonomialGAlgebra::act(Elem h, const Element& a) const {
  Element out;
  for (const auto& [m, c] : a) {
    Monomial n = m;
    if (m.variable != Monomial::constant) n.variable = group_.mul(h, static_cast<Elem>(m.variable));
    out[n] = c;
  }
  return out;
}

MonomialGAlgebra::Image MonomialGAlgebra::embed(const Element& a) const {
  std::size_t deg = 0;
  for (const auto& [m, c] : a) deg = std::max(deg, m.exponent);
  Image img(group_.order(), IntVector(deg + 1, 0));
  for (const auto& [m, c] : a) {
    if (m.variable == Monomial::constant) {
      for (auto& p : img) p[0] = floor_mod(p[0] + c, q_);
    } else {
      auto& p = img[m.variable][m.exponent];
      p = floor_mod(p + c, q_);
    }
  }
  return img;
}

std::vector<MonomialGAlgebra::Element> MonomialGAlgebra::monomials(std::size_t degree) const {
  std::vector<Element> out{constant(1)};
  for (Elem g = 0; g < group_.order(); ++g)
    for (std::size_t k = 1; k <= degree; ++k) out.push_back(variable(g, k));
  return out;
}

MonomialGAlgebra::Image MonomialGAlgebra::multiply_images(const Image& a, const Image& b) const {
  Image out(a.size());
  for (std::size_t g = 0; g < a.size(); ++g) {
    out[g].assign(a[g].size() + b[g].size() - 1, 0);
    for (std::size_t i = 0; i < a[g].size(); ++i)
      for (std::size_t j = 0; j < b[g].size(); ++j)
        out[g][i + j] = floor_mod(out[g][i + j] + a[g][i] * b[g][j], q_);
  }
  return out;
}

bool MonomialGAlgebra::embedding_injective_up_to(std::size_t degree) const {
  std::vector<IntVector> rows;
  for (const auto& m : monomials(degree)) {
    IntVector flat(group_.order() * (degree + 1), 0);
    const auto img = embed(m);
    for (std::size_t g = 0; g < img.size(); ++g)
      for (std::size_t k = 0; k < img[g].size(); ++k) flat[g * (degree + 1) + k] = img[g][k];
    rows.push_back(std::move(flat));
  }
  return rank_mod(rows, q_) == rows.size();
}

bool MonomialGAlgebra::embedding_multiplicative_up_to(std::size_t degree) const {
  auto trim = [](Image v) {
    for (auto& p : v)
      while (p.size() > 1 && p.back() == 0) p.pop_back();
    return v;
  };
  const auto ms = monomials(degree);
  for (const auto& a : ms)
    for (const auto& b : ms)
      if (trim(embed(mul(a, b))) != trim(multiply_images(embed(a), embed(b)))) return false;
  return true;
}

GRing MonomialGAlgebra::truncated_model(LatticePtr lattice, std::size_t d) const {
  const std::size_t n = group_.order(), dim = 1 + n * d;
  auto basis = [&](std::size_t g, std::size_t k) { return 1 + g * d + (k - 1); };
  std::vector<std::vector<IntVector>> prod(dim, std::vector<IntVector>(dim, IntVector(dim, 0)));
  for (std::size_t i = 0; i < dim; ++i) {
    prod[0][i][i] = 1;
    prod[i][0][i] = 1;
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = 1; i + j <= d; ++j) prod[basis(g, i)][basis(g, j)][basis(g, i + j)] = 1;
  auto ring = FiniteRing::algebra(static_cast<std::size_t>(q_), dim, prod,
                                  "F" + std::to_string(q_) + "[Gx]/(deg>" + std::to_string(d) + ")");
  // h permutes the basis: x_g^k -> x_{hg}^k
  std::vector<std::vector<Elem>> action(n, std::vector<Elem>(ring.order()));
  const auto q = static_cast<std::size_t>(q_);
  for (Elem h = 0; h < n; ++h)
    for (std::size_t x = 0; x < ring.order(); ++x) {
      std::vector<std::size_t> dig(dim), out(dim, 0);
      std::size_t v = x;
      for (std::size_t i = 0; i < dim; ++i, v /= q) dig[i] = v % q;
      out[0] = dig[0];
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 1; k <= d; ++k) out[basis(group_.mul(h, static_cast<Elem>(g)), k)] = dig[basis(g, k)];
      std::size_t y = 0;
      for (std::size_t i = dim; i-- > 0;) y = y * q + out[i];
      action[h][x] = static_cast<Elem>(y);
    }
  return validate_gring(std::move(lattice), std::move(ring), std::move(action));
}

GRing MonomialGAlgebra::truncated_target(LatticePtr lattice, std::size_t d) const {
  const std::size_t n = group_.order(), dim = n * (d + 1);
  auto basis = [&](std::size_t g, std::size_t k) { return g * (d + 1) + k; };
  std::vector<std::vector<IntVector>> prod(dim, std::vector<IntVector>(dim, IntVector(dim, 0)));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; i + j <= d; ++j) prod[basis(g, i)][basis(g, j)][basis(g, i + j)] = 1;
  auto ring = FiniteRing::algebra(static_cast<std::size_t>(q_), dim, prod,
                                  "prod F" + std::to_string(q_) + "[t]/t^" + std::to_string(d + 1));
  std::vector<std::vector<Elem>> action(n, std::vector<Elem>(ring.order()));
  const auto q = static_cast<std::size_t>(q_);
  for (Elem h = 0; h < n; ++h)
    for (std::size_t x = 0; x < ring.order(); ++x) {
      std::vector<std::size_t> dig(dim), out(dim, 0);
      std::size_t v = x;
      for (std::size_t i = 0; i < dim; ++i, v /= q) dig[i] = v % q;
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k <= d; ++k) out[basis(group_.mul(h, static_cast<Elem>(g)), k)] = dig[basis(g, k)];
      std::size_t y = 0;
      for (std::size_t i = dim; i-- > 0;) y = y * q + out[i];
      action[h][x] = static_cast<Elem>(y);
    }
  return validate_gring(std::move(lattice), std::move(ring), std::move(action));
}

std::vector<Elem> MonomialGAlgebra::truncated_embedding(std::size_t d) const {
  const std::size_t n = group_.order(), dim = 1 + n * d, tdim = n * (d + 1);
  const auto q = static_cast<std::size_t>(q_);
  std::size_t order = 1;
  for (std::size_t i = 0; i < dim; ++i) order *= q;
  std::vector<Elem> map(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::vector<std::size_t> dig(dim), out(tdim, 0);
    std::size_t v = x;
    for (std::size_t i = 0; i < dim; ++i, v /= q) dig[i] = v % q;
    for (std::size_t g = 0; g < n; ++g) {
      out[g * (d + 1)] = dig[0];
      for (std::size_t k = 1; k <= d; ++k) out[g * (d + 1) + k] = dig[1 + g * d + (k - 1)];
    }
    std::size_t y = 0;
    for (std::size_t i = tdim; i-- > 0;) y = y * q + out[i];
    map[x] = static_cast<Elem>(y);
  }
  return map;
}

}  // namespace nakaoka
