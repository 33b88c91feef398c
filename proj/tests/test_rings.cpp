#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nakaoka/errors.hpp"
#include "nakaoka/rings.hpp"

namespace nakaoka {
namespace {

// Every subset of a ring of order <= 16 tested against the ideal axioms directly.
std::set<std::vector<Elem>> ideals_by_subsets(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::set<std::vector<Elem>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u << r.zero())) continue;
    auto in = [&](Elem x) { return (mask >> x & 1u) != 0; };
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (Elem y = 0; y < n && ok; ++y) {
        if (in(y) && !in(r.add(x, y))) ok = false;
        if (!in(r.mul(x, y))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Elem> members;
    for (Elem x = 0; x < n; ++x)
      if (in(x)) members.push_back(x);
    out.insert(members);
  }
  return out;
}

std::set<std::vector<Elem>> as_sets(const std::vector<ElementSet>& v) {
  std::set<std::vector<Elem>> out;
  for (const auto& s : v) out.insert(s.elements());
  return out;
}

FiniteRing dual_numbers_f2() {
  // F2[x]/(x^2)
  return FiniteRing::algebra(2, 2, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, "F2[x]/x^2");
}

FiniteRing truncated_f2(std::size_t d) {
  // F2[x]/(x^d), basis x^i
  std::vector<std::vector<IntVector>> prod(d, std::vector<IntVector>(d, IntVector(d, 0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i + j < d) prod[i][j][i + j] = 1;
  return FiniteRing::algebra(2, d, prod);
}

std::vector<FiniteRing> sample_rings() {
  std::vector<FiniteRing> out;
  for (std::size_t n : {1, 2, 3, 4, 6, 8, 9, 12, 16}) out.push_back(FiniteRing::zmod(n));
  for (std::size_t q : {2, 4, 8, 9, 16}) out.push_back(FiniteRing::galois_field(q));
  out.push_back(dual_numbers_f2());
  out.push_back(truncated_f2(3));
  out.push_back(truncated_f2(4));
  const auto z2 = FiniteRing::zmod(2), z4 = FiniteRing::zmod(4), f4 = FiniteRing::galois_field(4);
  out.push_back(FiniteRing::product(z2, z2));
  out.push_back(FiniteRing::product(z2, z4));
  out.push_back(FiniteRing::product(z4, z4));
  out.push_back(FiniteRing::product(z2, f4));
  out.push_back(FiniteRing::product({&z2, &z2, &z2}));
  out.push_back(FiniteRing::product(dual_numbers_f2(), z2));
  return out;
}

TEST(Rings, ZmodTables) {
  const auto r = FiniteRing::zmod(6);
  EXPECT_EQ(r.order(), 6u);
  EXPECT_EQ(r.add(4, 5), 3u);
  EXPECT_EQ(r.mul(4, 5), 2u);
  EXPECT_EQ(r.neg(1), 5u);
  EXPECT_EQ(r.from_int(-1), 5u);
  EXPECT_EQ(r.power(2, 3), 2u);
}

TEST(Rings, GaloisFieldsAreFields) {
  for (std::size_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const auto f = FiniteRing::galois_field(q);
    ASSERT_EQ(f.order(), q);
    EXPECT_TRUE(is_integral_domain(f)) << q;
    for (Elem x = 0; x < q; ++x) {
      if (x == f.zero()) continue;
      bool unit = false;
      for (Elem y = 0; y < q; ++y) unit = unit || f.mul(x, y) == f.one();
      EXPECT_TRUE(unit) << "q=" << q << " x=" << f.label(x);
    }
  }
  EXPECT_THROW(FiniteRing::galois_field(6), Error);
}

TEST(Rings, FromTablesRejectsNonRings) {
  auto r = FiniteRing::zmod(4);
  auto mul = r.mul_table();
  mul[2][3] = 1;  // breaks commutativity and distributivity
  try {
    FiniteRing::from_tables(r.add_table(), mul);
    FAIL() << "expected NotARing";
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "NotARing");
  }
  EXPECT_NO_THROW(FiniteRing::from_tables(r.add_table(), r.mul_table()));
}

TEST(Rings, ProductLayoutRoundTrip) {
  ProductLayout layout({2, 3, 4});
  EXPECT_EQ(layout.total(), 24u);
  for (Elem x = 0; x < 24; ++x) EXPECT_EQ(layout.join(layout.split(x)), x);
  EXPECT_EQ(layout.join({1, 2, 3}), 1u + 2u * 2u + 3u * 6u);
  const auto z2 = FiniteRing::zmod(2), z3 = FiniteRing::zmod(3);
  const auto p = FiniteRing::product(z2, z3);
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) {
      const auto a = ProductLayout({2, 3}).split(x), b = ProductLayout({2, 3}).split(y);
      EXPECT_EQ(p.mul(x, y), ProductLayout({2, 3}).join({z2.mul(a[0], b[0]), z3.mul(a[1], b[1])}));
    }
}

TEST(Rings, Z4Ideals) {
  const auto r = FiniteRing::zmod(4);
  const auto ideals = enumerate_ring_ideals(r);
  ASSERT_EQ(ideals.size(), 3u);
  EXPECT_EQ(ideals[0].elements(), (std::vector<Elem>{0}));
  EXPECT_EQ(ideals[1].elements(), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(ideals[2].count(), 4u);
  const auto f2 = enumerate_ring_ideals(FiniteRing::zmod(2));
  EXPECT_EQ(f2.size(), 2u);
}

TEST(Rings, IdealEnumerationMatchesSubsetOracle) {
  for (const auto& r : sample_rings()) {
    const auto expected = ideals_by_subsets(r);
    EXPECT_EQ(as_sets(enumerate_ring_ideals(r)), expected) << r.name();
    EXPECT_EQ(as_sets(enumerate_ring_ideals_bruteforce(r)), expected) << r.name();
  }
}

TEST(Rings, IdealEnumerationLargerRingsAgree) {
  const auto z4 = FiniteRing::zmod(4), z9 = FiniteRing::zmod(9), f4 = FiniteRing::galois_field(4);
  for (const auto& r : {FiniteRing::product({&z4, &z4, &z4}), FiniteRing::product(z9, f4),
                        FiniteRing::product(truncated_f2(4), z4)}) {
    EXPECT_EQ(as_sets(enumerate_ring_ideals(r, 1024)), as_sets(enumerate_ring_ideals_bruteforce(r)))
        << r.name();
  }
}

TEST(Rings, OrderBound) {
  const auto r = FiniteRing::zmod(65);
  try {
    enumerate_ring_ideals(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "OrderBoundExceeded");
  }
  EXPECT_EQ(enumerate_ring_ideals(r, 65).size(), 4u);
}

TEST(Rings, PrimeIdealsAgreeWithDefinition) {
  for (const auto& r : sample_rings()) {
    for (const auto& i : enumerate_ring_ideals(r)) {
      bool prime = !i.contains(r.one());
      for (Elem x = 0; x < r.order() && prime; ++x)
        for (Elem y = 0; y < r.order() && prime; ++y)
          if (i.contains(r.mul(x, y)) && !i.contains(x) && !i.contains(y)) prime = false;
      EXPECT_EQ(is_prime_ideal(r, i), prime) << r.name() << " " << render_set(r, i);
    }
  }
  // Z/12: primes (2), (3)
  const auto primes = prime_ideals(FiniteRing::zmod(12));
  ASSERT_EQ(primes.size(), 2u);
  EXPECT_EQ(primes[0].count(), 4u);
  EXPECT_EQ(primes[1].count(), 6u);
}

TEST(Rings, IdempotentsAndDomains) {
  EXPECT_EQ(idempotents(FiniteRing::zmod(6)), (std::vector<Elem>{0, 1, 3, 4}));
  EXPECT_EQ(idempotents(FiniteRing::zmod(4)).size(), 2u);
  const auto z2 = FiniteRing::zmod(2);
  EXPECT_EQ(idempotents(FiniteRing::product({&z2, &z2, &z2})).size(), 8u);
  EXPECT_FALSE(is_integral_domain(FiniteRing::zmod(4)));
  EXPECT_FALSE(is_integral_domain(FiniteRing::zmod(1)));
  EXPECT_TRUE(is_integral_domain(FiniteRing::zmod(7)));
}

TEST(Rings, QuotientAndSubsetRing) {
  const auto r = FiniteRing::zmod(12);
  const auto q = quotient(r, principal_ideal(r, 4));
  EXPECT_EQ(q.ring.order(), 4u);
  for (Elem x = 0; x < 12; ++x)
    for (Elem y = 0; y < 12; ++y) {
      EXPECT_EQ(q.project[r.add(x, y)], q.ring.add(q.project[x], q.project[y]));
      EXPECT_EQ(q.project[r.mul(x, y)], q.ring.mul(q.project[x], q.project[y]));
    }
  // e R for e = 4 in Z/12 is a ring with identity 4, isomorphic to Z/3.
  const auto v = subset_ring(r, principal_ideal(r, 4));
  EXPECT_EQ(v.ring.order(), 3u);
  EXPECT_EQ(v.embed[v.ring.one()], 4u);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) EXPECT_EQ(v.embed[v.ring.mul(x, y)], r.mul(v.embed[x], v.embed[y]));
}

TEST(Rings, IdealHelpers) {
  const auto r = FiniteRing::zmod(12);
  const auto a = principal_ideal(r, 4), b = principal_ideal(r, 6);
  EXPECT_EQ(ideal_sum(r, a, b), principal_ideal(r, 2));
  for (const auto& i : enumerate_ring_ideals(r)) {
    ElementSet gens(r.order());
    for (Elem g : ideal_generators(r, i)) gens.insert(g);
    EXPECT_EQ(ideal_closure(r, gens), i);
    EXPECT_TRUE(is_ring_ideal(r, i));
  }
  ElementSet odd(12);
  odd.insert(0);
  odd.insert(3);
  EXPECT_FALSE(is_ring_ideal(r, odd));
  EXPECT_EQ(ideal_closure(r, odd), principal_ideal(r, 3));
}

}  // namespace
}  // namespace nakaoka
