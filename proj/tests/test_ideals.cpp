#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "nakaoka/errors.hpp"
#include "nakaoka/ideals.hpp"

namespace nakaoka {
namespace {

LatticePtr c2() { return make_lattice(FiniteGroup::cyclic(2)); }

GRing swap_gring() {
  const auto f2 = FiniteRing::zmod(2);
  return validate_gring(c2(), FiniteRing::product(f2, f2), {{0, 1, 2, 3}, {0, 2, 1, 3}});
}

GRing frobenius_f4(LatticePtr lat) {
  const auto f4 = FiniteRing::galois_field(4);
  std::vector<Elem> frob(4), id(4);
  for (Elem x = 0; x < 4; ++x) {
    frob[x] = f4.mul(x, x);
    id[x] = x;
  }
  return validate_gring(lat, f4, {id, frob});
}

FunctorPtr fp(const GRing& s) { return fixed_point_functor(s).functor; }

FunctorPtr fp_z4() { return fp(trivial_gring(c2(), FiniteRing::zmod(4))); }

FunctorPtr coind_f2() {
  auto lat = c2();
  const auto e = subgroup_as_group(*lat, 0);
  return coinduce(fp(trivial_gring(make_lattice(e.group), FiniteRing::zmod(2))), lat, 0).functor;
}

FunctorPtr s3_permutation() {
  auto s3 = make_lattice(FiniteGroup::symmetric(3));
  std::vector<std::size_t> order2;
  for (std::size_t i = 0; i < s3->size(); ++i)
    if (mask_elements((*s3)[i].members).size() == 2) order2.push_back(i);
  const auto f2 = FiniteRing::zmod(2);
  const auto r = FiniteRing::product({&f2, &f2, &f2});
  std::vector<std::vector<Elem>> action;
  for (Elem a = 0; a < s3->group().order(); ++a) {
    std::vector<Elem> t(8);
    for (Elem x = 0; x < 8; ++x) {
      Elem y = 0;
      for (unsigned i = 0; i < 3; ++i) {
        const auto p = std::find(order2.begin(), order2.end(), s3->conjugate(a, order2[i])) - order2.begin();
        if (x >> i & 1u) y |= 1u << p;
      }
      t[x] = y;
    }
    action.push_back(t);
  }
  return fp(validate_gring(s3, r, action));
}

std::vector<std::pair<std::string, FunctorPtr>> samples() {
  return {
      {"FP(Z/4)", fp_z4()},
      {"FP(swap)", fp(swap_gring())},
      {"CoInd F2", coind_f2()},
      {"FP(F4 frob)", fp(frobenius_f4(c2()))},
      {"FP(Z/6)", fp(trivial_gring(c2(), FiniteRing::zmod(6)))},
      {"ghost FP(Z/4)", ghost(fp_z4()).functor},
      {"FP(Z/4) over C2xC2", fp(trivial_gring(make_lattice(FiniteGroup::product_of_cyclic({2, 2})), FiniteRing::zmod(4)))},
      {"FP(F2^3) over S3", s3_permutation()},
      {"FP(Z/9) over C3", fp(trivial_gring(make_lattice(FiniteGroup::cyclic(3)), FiniteRing::zmod(9)))},
  };
}

// Every tuple of levelwise ring ideals, filtered by the four conditions,
// written out directly.
std::set<std::vector<ElementSet>> oracle_ideals(const TambaraFunctor& r, IdealKind kind) {
  const auto& lat = *r.lattice;
  std::vector<std::vector<ElementSet>> per_level;
  for (const auto& ring : r.levels) per_level.push_back(enumerate_ring_ideals_bruteforce(ring));
  std::set<std::vector<ElementSet>> out;
  std::vector<ElementSet> pick(lat.size());
  std::function<void(std::size_t)> rec = [&](std::size_t h) {
    if (h == lat.size()) {
      for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b) {
          if (a == b || !lat.included(a, b)) continue;
          for (Elem x = 0; x < r.levels[b].order(); ++x)
            if (pick[b].contains(x) && !pick[a].contains(r.restriction(a, b, x))) return;
          for (Elem x = 0; x < r.levels[a].order(); ++x) {
            if (!pick[a].contains(x)) continue;
            if (!pick[b].contains(r.transfer(a, b, x))) return;
            if (kind == IdealKind::tambara && !pick[b].contains(r.norm(a, b, x))) return;
          }
        }
      for (Elem g = 0; g < lat.group().order(); ++g)
        for (std::size_t a = 0; a < lat.size(); ++a)
          for (Elem x = 0; x < r.levels[a].order(); ++x)
            if (pick[a].contains(x) && !pick[lat.conjugate(g, a)].contains(r.conjugate(g, a, x))) return;
      out.insert(pick);
      return;
    }
    for (const auto& i : per_level[h]) {
      pick[h] = i;
      rec(h + 1);
    }
  };
  rec(0);
  return out;
}

std::set<std::vector<ElementSet>> level_sets(const std::vector<TambaraIdeal>& v) {
  std::set<std::vector<ElementSet>> out;
  for (const auto& i : v) out.insert(i.levels);
  return out;
}

// The definition verbatim: some I, J with I·J inside p and neither inside p.
bool prime_by_definition(const TambaraIdeal& p, const std::vector<TambaraIdeal>& all) {
  for (const auto& i : all)
    for (const auto& j : all)
      if (!i.is_subset_of(p) && !j.is_subset_of(p) && ideal_product(i, j).is_subset_of(p)) return false;
  return true;
}

TEST(Ideals, ClosureExamples) {
  const auto r = fp_z4();
  EXPECT_TRUE(close_tambara(r, {}).is_zero());
  const auto two = close_tambara(r, {{2}, {}});
  EXPECT_EQ(two.levels[0].elements(), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(two.levels[1].elements(), (std::vector<Elem>{0}));
  const auto top_two = close_tambara(r, {{}, {2}});
  EXPECT_EQ(top_two.levels[0].elements(), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(top_two.levels[1].elements(), (std::vector<Elem>{0, 2}));
  EXPECT_TRUE(close_tambara(r, {{1}, {}}).is_unit());
  EXPECT_TRUE(close_tambara(r, {{}, {3}}).is_unit());
  EXPECT_THROW(close_tambara(r, {{7}, {}}), Error);
}

TEST(Ideals, ClosureIsIdempotentAndLeast) {
  for (const auto& [name, r] : samples()) {
    SCOPED_TRACE(name);
    for (std::size_t h = 0; h < r->levels.size(); ++h)
      for (Elem x = 0; x < r->levels[h].order(); ++x) {
        const auto p = principal_ideal(r, h, x);
        EXPECT_FALSE(ideal_violation(*r, p.levels).has_value());
        LevelElements again;
        for (const auto& l : p.levels) again.push_back(l.elements());
        EXPECT_EQ(close_tambara(r, again), p);
        EXPECT_TRUE(p.levels[h].contains(x));
      }
  }
}

TEST(Ideals, GreenClosureSkipsNorms) {
  const auto r = fp(swap_gring());
  // (1,0) at the bottom: Tr(1,0) = 1 makes the Green closure the unit ideal.
  EXPECT_TRUE(close_green(r, {{1}, {}}).is_unit());
  const auto z4 = fp_z4();
  const auto g = close_green(z4, {{2}, {}});
  EXPECT_EQ(g.levels[1].count(), 1u);
  for (const auto& [name, f] : samples()) {
    SCOPED_TRACE(name);
    const auto green = enumerate_ideals(f, kDefaultSearchBound, IdealKind::green);
    const auto tambara = enumerate_tambara_ideals(f);
    EXPECT_GE(green.size(), tambara.size());
    EXPECT_EQ(level_sets(green), oracle_ideals(*f, IdealKind::green));
  }
}

TEST(Ideals, EnumerationMatchesOracleAndClosureLattice) {
  for (const auto& [name, r] : samples()) {
    SCOPED_TRACE(name);
    const auto fast = enumerate_tambara_ideals(r);
    const auto expected = oracle_ideals(*r, IdealKind::tambara);
    EXPECT_EQ(level_sets(fast), expected);
    EXPECT_EQ(level_sets(enumerate_ideals_by_closure(r)), expected);
    const auto serial = enumerate_ideals(r, kDefaultSearchBound, IdealKind::tambara, kernels::Policy::serial);
    EXPECT_EQ(serial, fast);
    EXPECT_TRUE(std::is_sorted(fast.begin(), fast.end(), ideal_less));
  }
}

TEST(Ideals, EnumerationExamples) {
  const auto f2 = fp(trivial_gring(make_lattice(FiniteGroup()), FiniteRing::zmod(2)));
  EXPECT_EQ(enumerate_tambara_ideals(f2).size(), 2u);
  const auto c = coind_f2();
  const auto ideals = enumerate_tambara_ideals(c);
  ASSERT_EQ(ideals.size(), 2u);
  EXPECT_TRUE(is_prime(ideals[0]));
  EXPECT_TRUE(ideals[1].is_unit());
}

TEST(Ideals, SearchBound) {
  const auto r = s3_permutation();
  try {
    enumerate_tambara_ideals(r, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "SearchBoundExceeded");
  }
}

TEST(Ideals, ProductExamples) {
  const auto r = fp_z4();
  const auto two = close_tambara(r, {{}, {2}});
  EXPECT_TRUE(ideal_product(two, two).is_zero());
  EXPECT_EQ(ideal_product(two, unit_ideal(r)), two);
  EXPECT_TRUE(ideal_product(zero_ideal(r), two).is_zero());
}

TEST(Ideals, ProductLaws) {
  for (const auto& [name, r] : samples()) {
    SCOPED_TRACE(name);
    const auto all = enumerate_tambara_ideals(r);
    if (all.size() > 20) continue;
    for (const auto& i : all)
      for (const auto& j : all) {
        const auto ij = ideal_product(i, j);
        EXPECT_EQ(ij, ideal_product(j, i));
        EXPECT_TRUE(ij.is_subset_of(ideal_intersection(i, j)));
        EXPECT_FALSE(ideal_violation(*r, ideal_intersection(i, j).levels).has_value());
        EXPECT_FALSE(ideal_violation(*r, ideal_sum(i, j).levels).has_value());
        for (const auto& k : all) {
          EXPECT_EQ(ideal_product(ij, k), ideal_product(i, ideal_product(j, k)));
          if (j.is_subset_of(k)) EXPECT_TRUE(ij.is_subset_of(ideal_product(i, k)));
        }
      }
  }
}

TEST(Ideals, PrimalityExamples) {
  const auto r = fp_z4();
  EXPECT_TRUE(is_prime(close_tambara(r, {{}, {2}})));
  EXPECT_FALSE(is_prime(zero_ideal(r)));
  EXPECT_THROW(is_prime(unit_ideal(r)), Error);
  const auto field = fp(trivial_gring(c2(), FiniteRing::galois_field(4)));
  EXPECT_TRUE(is_prime(zero_ideal(field)));
  const auto w = prime_violation(zero_ideal(r));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(ideal_product(w->first, w->second).is_zero());
}

TEST(Ideals, PrincipalPairMatchesDefinition) {
  for (const auto& [name, r] : samples()) {
    SCOPED_TRACE(name);
    const auto all = enumerate_tambara_ideals(r);
    for (const auto& p : all) {
      if (p.is_unit()) continue;
      const bool principal = is_prime(p);
      EXPECT_EQ(principal, is_prime_full(p, all)) << render_ideal(p);
      EXPECT_EQ(is_prime(p, kernels::Policy::serial), principal);
      if (all.size() <= 24) EXPECT_EQ(principal, prime_by_definition(p, all)) << render_ideal(p);
    }
  }
}

TEST(Ideals, ProductDecomposition) {
  const auto a = fp_z4();
  const auto b = fp(frobenius_f4(c2()));
  const auto p = product({a, b});
  const auto ia = enumerate_tambara_ideals(a), ib = enumerate_tambara_ideals(b);
  const auto ip = enumerate_tambara_ideals(p.functor);
  EXPECT_EQ(ip.size(), ia.size() * ib.size());
  std::size_t primes_a = 0, primes_b = 0, primes_p = 0;
  for (const auto& i : ia) primes_a += !i.is_unit() && is_prime(i);
  for (const auto& i : ib) primes_b += !i.is_unit() && is_prime(i);
  for (const auto& i : ip) {
    primes_p += !i.is_unit() && is_prime(i);
    // each ideal is the product of its projections
    const auto x = project_ideal(p.projections[0], i), y = project_ideal(p.projections[1], i);
    for (std::size_t h = 0; h < i.levels.size(); ++h)
      for (Elem z = 0; z < p.functor->levels[h].order(); ++z)
        EXPECT_EQ(i.levels[h].contains(z), x.levels[h].contains(p.layouts[h].component(z, 0)) &&
                                               y.levels[h].contains(p.layouts[h].component(z, 1)));
  }
  EXPECT_EQ(primes_p, primes_a + primes_b);
}

struct CoindSample {
  const char* name;
  LatticePtr g;
  std::size_t h;
  std::function<GRing(LatticePtr)> ring;
};

TEST(Ideals, CoinductionBijection) {
  auto c4 = make_lattice(FiniteGroup::cyclic(4));
  auto s3 = make_lattice(FiniteGroup::symmetric(3));
  const std::vector<CoindSample> cases{
      {"C2/e", c2(), 0, [](LatticePtr h) { return trivial_gring(h, FiniteRing::zmod(4)); }},
      {"C4/C2", c4, c4->first_of_order(2), [](LatticePtr h) { return frobenius_f4(h); }},
      {"C4/C2 Z4", c4, c4->first_of_order(2), [](LatticePtr h) { return trivial_gring(h, FiniteRing::zmod(4)); }},
      {"S3/C2", s3, s3->first_of_order(2), [](LatticePtr h) { return frobenius_f4(h); }},
      {"S3/C3", s3, s3->first_of_order(3), [](LatticePtr h) { return trivial_gring(h, FiniteRing::zmod(4)); }},
  };
  for (const auto& c : cases) {
    SCOPED_TRACE(c.name);
    const auto hlat = make_lattice(subgroup_as_group(*c.g, c.h).group);
    const auto base = fp(c.ring(hlat));
    const auto co = coinduce(base, c.g, c.h);
    const auto below = enumerate_tambara_ideals(base);
    const auto above = enumerate_tambara_ideals(co.functor);
    ASSERT_EQ(below.size(), above.size());
    std::set<std::vector<ElementSet>> images;
    for (const auto& i : below) {
      const auto j = coind_ideal(co, i);
      images.insert(j.levels);
      EXPECT_EQ(coind_ideal_inverse(co, j), i);
      if (!i.is_unit()) EXPECT_EQ(is_prime(i), is_prime(j)) << render_ideal(i);
      for (const auto& k : below) {
        const auto jk = coind_ideal(co, k);
        EXPECT_EQ(i.is_subset_of(k), j.is_subset_of(jk));
        EXPECT_EQ(coind_ideal(co, ideal_product(i, k)), ideal_product(j, jk));
      }
    }
    EXPECT_EQ(images, level_sets(above));
    for (const auto& j : above) EXPECT_EQ(coind_ideal(co, coind_ideal_inverse(co, j)), j);
    EXPECT_TRUE(coind_ideal(co, zero_ideal(base)).is_zero());
    EXPECT_TRUE(coind_ideal(co, unit_ideal(base)).is_unit());
  }
}

TEST(Ideals, ContractAndKernel) {
  const auto r = fp_z4();
  const auto id = identity_morphism(r);
  for (const auto& j : enumerate_tambara_ideals(r)) EXPECT_EQ(contract(id, j), j);
  EXPECT_TRUE(kernel(id).is_zero());
  const auto gh = ghost(r);
  EXPECT_TRUE(kernel(gh.chi).is_zero());
  EXPECT_TRUE(contract(gh.chi, unit_ideal(gh.functor)).is_unit());
  // primes of the target contract to primes along the coinduction unit
  const auto swap = fp(swap_gring());
  const auto u = coind_unit(swap, 0);
  for (const auto& q : enumerate_tambara_ideals(u.coinduction.functor)) {
    if (q.is_unit() || !is_prime(q)) continue;
    const auto p = contract(u.unit, q);
    EXPECT_TRUE(is_prime(p)) << render_ideal(p);
  }
}

TEST(Ideals, KernelRejectsNonMorphisms) {
  const auto r = fp_z4();
  TambaraMorphism bad{r, r, {{0, 0, 0, 0}, {0, 1, 2, 3}}};
  try {
    kernel(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "NotAnIdeal");
  }
}

TEST(Ideals, RestrictIdeal) {
  auto s3 = make_lattice(FiniteGroup::symmetric(3));
  const auto r = fp(trivial_gring(s3, FiniteRing::zmod(4)));
  const auto all = enumerate_tambara_ideals(r);
  for (const auto& p : all) {
    const auto whole = restrict_functor(r, s3->whole());
    EXPECT_EQ(restrict_ideal(whole, p).levels, p.levels);
    for (std::size_t h = 0; h < s3->size(); ++h) {
      const auto res = restrict_functor(r, h);
      const auto q = restrict_ideal(res, p);
      EXPECT_EQ(q.levels[0], p.levels[0]);
    }
    if (!p.is_unit() && is_prime(p)) {
      const auto bottom = bottom_gring(*r);
      EXPECT_TRUE(is_G_prime(bottom, p.levels[0]));
    }
  }
}

TEST(Ideals, Rendering) {
  const auto r = fp_z4();
  EXPECT_EQ(render_ideal(close_tambara(r, {{}, {2}})), "e: {0,2}  G: {0,2}");
}

}  // namespace
}  // namespace nakaoka
