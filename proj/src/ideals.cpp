#include "nakaoka/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "nakaoka/errors.hpp"

namespace nakaoka {

bool TambaraIdeal::is_subset_of(const TambaraIdeal& other) const {
  for (std::size_t h = 0; h < levels.size(); ++h)
    if (!levels[h].is_subset_of(other.levels[h])) return false;
  return true;
}

bool TambaraIdeal::is_unit() const {
  for (std::size_t h = 0; h < levels.size(); ++h)
    if (!levels[h].contains(functor->levels[h].one())) return false;
  return true;
}

bool TambaraIdeal::is_zero() const {
  for (const auto& l : levels)
    if (l.count() > 1) return false;
  return true;
}

std::size_t TambaraIdeal::total_count() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.count();
  return n;
}

bool ideal_less(const TambaraIdeal& a, const TambaraIdeal& b) {
  const auto na = a.total_count(), nb = b.total_count();
  if (na != nb) return na < nb;
  return a.levels < b.levels;
}

namespace {

bool image_inside(const ElemMap& map, const ElementSet& from, const ElementSet& into) {
  bool ok = true;
  from.for_each([&](Elem x) { ok = ok && into.contains(map[x]); });
  return ok;
}

}  // namespace

std::optional<std::string> ideal_violation(const TambaraFunctor& r, const std::vector<ElementSet>& levels,
                                           IdealKind kind) {
  const auto& lat = *r.lattice;
  if (levels.size() != lat.size()) return "Shape: one level per subgroup expected";
  for (std::size_t h = 0; h < lat.size(); ++h)
    if (levels[h].universe() != r.levels[h].order() || !is_ring_ideal(r.levels[h], levels[h]))
      return "LevelIdeal at " + lat.name(h);
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (k == h || !lat.included(k, h)) continue;
      const std::string pair = lat.name(k) + "<=" + lat.name(h);
      if (!image_inside(r.tr.at({k, h}), levels[k], levels[h])) return "Transfer at " + pair;
      if (kind == IdealKind::tambara && !image_inside(r.nm.at({k, h}), levels[k], levels[h]))
        return "Norm at " + pair;
      if (!image_inside(r.res.at({k, h}), levels[h], levels[k])) return "Restriction at " + pair;
    }
  for (Elem g = 0; g < lat.group().order(); ++g)
    for (std::size_t h = 0; h < lat.size(); ++h)
      if (!image_inside(r.conj[g][h], levels[h], levels[lat.conjugate(g, h)]))
        return "Conjugation by " + lat.group().label(g) + " at " + lat.name(h);
  return std::nullopt;
}

TambaraIdeal make_ideal(FunctorPtr r, std::vector<ElementSet> levels, IdealKind kind) {
  if (auto v = ideal_violation(*r, levels, kind)) throw Error("NotAnIdeal", *v);
  return TambaraIdeal{std::move(r), std::move(levels)};
}

TambaraIdeal zero_ideal(FunctorPtr r) {
  std::vector<ElementSet> levels;
  for (const auto& ring : r->levels) {
    ElementSet s(ring.order());
    s.insert(ring.zero());
    levels.push_back(std::move(s));
  }
  return TambaraIdeal{std::move(r), std::move(levels)};
}

TambaraIdeal unit_ideal(FunctorPtr r) {
  std::vector<ElementSet> levels;
  for (const auto& ring : r->levels) levels.push_back(ElementSet::full(ring.order()));
  return TambaraIdeal{std::move(r), std::move(levels)};
}

namespace {

struct Closure {
  const TambaraFunctor& r;
  const SubgroupLattice& lat;
  IdealKind kind;
  std::vector<ElementSet> levels;
  std::deque<std::pair<std::size_t, Elem>> work;

  Closure(const TambaraFunctor& f, std::vector<ElementSet> start, IdealKind k)
      : r(f), lat(*f.lattice), kind(k), levels(std::move(start)) {}

  // Grow level h to the ideal generated by it and x; queue the new elements.
  void add(std::size_t h, Elem x) {
    if (levels[h].contains(x)) return;
    const auto& ring = r.levels[h];
    const auto grown = nakaoka::ideal_sum(ring, levels[h], nakaoka::principal_ideal(ring, x));
    grown.for_each([&](Elem y) {
      if (!levels[h].contains(y)) work.emplace_back(h, y);
    });
    levels[h] = grown;
  }

  void run() {
    const auto& g = lat.group();
    while (!work.empty()) {
      const auto [h, y] = work.front();
      work.pop_front();
      for (std::size_t k = 0; k < lat.size(); ++k) {
        if (k == h) continue;
        if (lat.included(k, h)) add(k, r.restriction(k, h, y));
        if (lat.included(h, k)) {
          add(k, r.transfer(h, k, y));
          if (kind == IdealKind::tambara) add(k, r.norm(h, k, y));
        }
      }
      for (Elem a = 0; a < g.order(); ++a) add(lat.conjugate(a, h), r.conjugate(a, h, y));
    }
  }
};

}  // namespace

TambaraIdeal close_with(const TambaraIdeal& base, const LevelElements& extra, IdealKind kind) {
  Closure c(*base.functor, base.levels, kind);
  for (std::size_t h = 0; h < extra.size(); ++h)
    for (Elem x : extra[h]) c.add(h, x);
  c.run();
  return TambaraIdeal{base.functor, std::move(c.levels)};
}

TambaraIdeal close_ideal(FunctorPtr r, const LevelElements& generators, IdealKind kind) {
  if (generators.size() > r->levels.size()) throw Error("InvalidParameter", "generators given for too many levels");
  for (std::size_t h = 0; h < generators.size(); ++h)
    for (Elem x : generators[h])
      if (x >= r->levels[h].order())
        throw Error("InvalidParameter", "generator " + std::to_string(x) + " is not an element of level " + r->lattice->name(h));
  return close_with(zero_ideal(std::move(r)), generators, kind);
}

TambaraIdeal close_tambara(FunctorPtr r, const LevelElements& generators) {
  return close_ideal(std::move(r), generators, IdealKind::tambara);
}

TambaraIdeal close_green(FunctorPtr r, const LevelElements& generators) {
  return close_ideal(std::move(r), generators, IdealKind::green);
}

TambaraIdeal principal_ideal(FunctorPtr r, std::size_t level, Elem x) {
  LevelElements gens(r->levels.size());
  gens[level].push_back(x);
  return close_tambara(std::move(r), gens);
}

kernels::LevelwiseGenerators ideal_generators(const TambaraIdeal& i) {
  kernels::LevelwiseGenerators out;
  for (std::size_t h = 0; h < i.levels.size(); ++h) out.push_back(nakaoka::ideal_generators(i.functor->levels[h], i.levels[h]));
  return out;
}

TambaraIdeal ideal_product(const TambaraIdeal& i, const TambaraIdeal& j) {
  const auto gi = ideal_generators(i), gj = ideal_generators(j);
  LevelElements gens(i.levels.size());
  for (std::size_t h = 0; h < gens.size(); ++h) {
    const auto& ring = i.functor->levels[h];
    for (Elem x : gi[h])
      for (Elem y : gj[h]) gens[h].push_back(ring.mul(x, y));
  }
  return close_tambara(i.functor, gens);
}

TambaraIdeal ideal_intersection(const TambaraIdeal& i, const TambaraIdeal& j) {
  TambaraIdeal out = i;
  for (std::size_t h = 0; h < out.levels.size(); ++h) out.levels[h] &= j.levels[h];
  return out;
}

TambaraIdeal ideal_sum(const TambaraIdeal& i, const TambaraIdeal& j) {
  LevelElements extra;
  for (const auto& l : j.levels) extra.push_back(l.elements());
  return close_with(i, extra);
}

std::vector<TambaraIdeal> principal_ideals(FunctorPtr r) {
  std::set<std::vector<ElementSet>> seen;
  std::vector<TambaraIdeal> out;
  for (std::size_t h = 0; h < r->levels.size(); ++h)
    for (Elem x = 0; x < r->levels[h].order(); ++x) {
      auto p = principal_ideal(r, h, x);
      if (seen.insert(p.levels).second) out.push_back(std::move(p));
    }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

namespace {

std::optional<PrimeWitness> witness_among(const TambaraIdeal& p, const std::vector<TambaraIdeal>& candidates,
                                          kernels::Policy policy) {
  if (p.is_unit()) throw Error("ImproperIdeal", "the unit ideal is not prime");
  std::vector<const TambaraIdeal*> outside;
  for (const auto& c : candidates)
    if (!c.is_subset_of(p)) outside.push_back(&c);
  std::vector<kernels::LevelwiseGenerators> gens;
  for (const auto* c : outside) gens.push_back(ideal_generators(*c));
  std::vector<const FiniteRing*> rings;
  for (const auto& ring : p.functor->levels) rings.push_back(&ring);
  const auto hit = kernels::find_product_inside(rings, gens, p.levels, policy);
  if (!hit) return std::nullopt;
  return PrimeWitness{*outside[hit->first], *outside[hit->second]};
}

}  // namespace

std::optional<PrimeWitness> prime_violation(const TambaraIdeal& p, kernels::Policy policy) {
  if (p.is_unit()) throw Error("ImproperIdeal", "the unit ideal is not prime");
  // <x> for x outside p only; others are inside p.
  std::set<std::vector<ElementSet>> seen;
  std::vector<TambaraIdeal> candidates;
  for (std::size_t h = 0; h < p.levels.size(); ++h)
    for (Elem x = 0; x < p.functor->levels[h].order(); ++x) {
      if (p.levels[h].contains(x)) continue;
      auto c = principal_ideal(p.functor, h, x);
      if (seen.insert(c.levels).second) candidates.push_back(std::move(c));
    }
  std::sort(candidates.begin(), candidates.end(), ideal_less);
  return witness_among(p, candidates, policy);
}

bool is_prime(const TambaraIdeal& p, kernels::Policy policy) { return !prime_violation(p, policy).has_value(); }

std::optional<PrimeWitness> prime_violation_full(const TambaraIdeal& p, const std::vector<TambaraIdeal>& all,
                                                 kernels::Policy policy) {
  return witness_among(p, all, policy);
}

bool is_prime_full(const TambaraIdeal& p, const std::vector<TambaraIdeal>& all, kernels::Policy policy) {
  return !prime_violation_full(p, all, policy).has_value();
}

namespace {

struct Enumerator {
  const TambaraFunctor& r;
  const SubgroupLattice& lat;
  IdealKind kind;
  std::vector<std::size_t> reps;                              // class reps, ascending
  std::vector<std::vector<std::pair<std::size_t, Elem>>> members;  // per class: (subgroup, conjugator)
  std::vector<std::vector<ElementSet>> candidates;             // per class, Weyl-invariant ring ideals

  Enumerator(const TambaraFunctor& f, IdealKind k) : r(f), lat(*f.lattice), kind(k) {
    reps = lat.class_reps();
    std::sort(reps.begin(), reps.end());
    const auto& g = lat.group();
    for (auto h : reps) {
      std::vector<std::pair<std::size_t, Elem>> m;
      for (Elem a = 0; a < g.order(); ++a) {
        const auto c = lat.conjugate(a, h);
        if (std::none_of(m.begin(), m.end(), [&](const auto& p) { return p.first == c; })) m.emplace_back(c, a);
      }
      members.push_back(std::move(m));
      std::vector<ElementSet> cands;
      const auto weyl = weyl_group(lat, h);
      for (auto& i : enumerate_ring_ideals(r.levels[h], std::max<std::size_t>(r.levels[h].order(), 64))) {
        bool ok = true;
        for (Elem n : weyl) ok = ok && image_inside(r.conj[n][h], i, i);
        if (ok) cands.push_back(std::move(i));
      }
      candidates.push_back(std::move(cands));
    }
  }

  double combinations() const {
    double n = 1;
    for (const auto& c : candidates) n *= static_cast<double>(c.size());
    return n;
  }

  bool fits(std::size_t h, const ElementSet& i, const std::vector<ElementSet>& levels) const {
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (k == h || !lat.included(k, h)) continue;
      if (!image_inside(r.res.at({k, h}), i, levels[k])) return false;
      if (!image_inside(r.tr.at({k, h}), levels[k], i)) return false;
      if (kind == IdealKind::tambara && !image_inside(r.nm.at({k, h}), levels[k], i)) return false;
    }
    return true;
  }

  void assign(std::size_t c, const ElementSet& i, std::vector<ElementSet>& levels) const {
    for (auto [m, a] : members[c]) {
      ElementSet s(r.levels[m].order());
      i.for_each([&](Elem x) { s.insert(r.conj[a][reps[c]][x]); });
      levels[m] = std::move(s);
    }
  }

  void search(std::size_t c, std::vector<ElementSet>& levels, std::vector<std::vector<ElementSet>>& out) const {
    if (c == reps.size()) {
      out.push_back(levels);
      return;
    }
    for (const auto& i : candidates[c]) {
      if (!fits(reps[c], i, levels)) continue;
      assign(c, i, levels);
      search(c + 1, levels, out);
    }
  }
};

}  // namespace

std::vector<TambaraIdeal> enumerate_ideals(FunctorPtr r, std::size_t bound, IdealKind kind, kernels::Policy policy) {
  for (const auto& ring : r->levels)
    if (ring.order() > kMaxRingOrder)
      throw Error("SearchBoundExceeded", "level of order " + std::to_string(ring.order()) + " exceeds the ring order cap");
  Enumerator e(*r, kind);
  if (e.combinations() > static_cast<double>(bound))
    throw Error("SearchBoundExceeded", "candidate combinations " + std::to_string(static_cast<long double>(e.combinations())) +
                                           " exceed the bound " + std::to_string(bound));
  // The trivial subgroup is always the first class and has no levels below it.
  const auto& first = e.candidates[0];
  std::vector<std::vector<std::vector<ElementSet>>> found(first.size());
  const long n = static_cast<long>(first.size());
  auto run = [&](long t) {
    std::vector<ElementSet> levels(r->levels.size());
    e.assign(0, first[static_cast<std::size_t>(t)], levels);
    e.search(1, levels, found[static_cast<std::size_t>(t)]);
  };
  if (policy == kernels::Policy::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < n; ++t) run(t);
  } else {
    for (long t = 0; t < n; ++t) run(t);
  }
  std::vector<TambaraIdeal> out;
  for (auto& batch : found)
    for (auto& levels : batch) {
      if (auto v = ideal_violation(*r, levels, kind)) throw Error("InternalError", "enumeration produced a non-ideal: " + *v);
      out.push_back(TambaraIdeal{r, std::move(levels)});
    }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

std::vector<TambaraIdeal> enumerate_tambara_ideals(FunctorPtr r, std::size_t bound) {
  return enumerate_ideals(std::move(r), bound, IdealKind::tambara);
}

std::vector<TambaraIdeal> enumerate_ideals_by_closure(FunctorPtr r, IdealKind kind) {
  const auto zero = close_ideal(r, {}, kind);
  std::set<std::vector<ElementSet>> seen{zero.levels};
  std::deque<TambaraIdeal> queue{zero};
  std::vector<TambaraIdeal> out;
  while (!queue.empty()) {
    auto i = std::move(queue.front());
    queue.pop_front();
    for (std::size_t h = 0; h < i.levels.size(); ++h)
      for (Elem x = 0; x < r->levels[h].order(); ++x) {
        if (i.levels[h].contains(x)) continue;
        LevelElements extra(i.levels.size());
        extra[h].push_back(x);
        auto j = close_with(i, extra, kind);
        if (seen.insert(j.levels).second) queue.push_back(std::move(j));
      }
    out.push_back(std::move(i));
  }
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

TambaraIdeal contract(const TambaraMorphism& f, const TambaraIdeal& j) {
  std::vector<ElementSet> levels;
  for (std::size_t h = 0; h < f.maps.size(); ++h) levels.push_back(preimage_set(f.maps[h], j.levels[h]));
  if (auto v = ideal_violation(*f.source, levels)) throw Error("InternalError", "contraction is not an ideal: " + *v);
  return TambaraIdeal{f.source, std::move(levels)};
}

TambaraIdeal kernel(const TambaraMorphism& f) {
  std::vector<ElementSet> levels;
  for (std::size_t h = 0; h < f.maps.size(); ++h) {
    ElementSet zero(f.target->levels[h].order());
    zero.insert(f.target->levels[h].zero());
    levels.push_back(preimage_set(f.maps[h], zero));
  }
  return make_ideal(f.source, std::move(levels));
}

TambaraIdeal coind_ideal(const Coinduction& c, const TambaraIdeal& i) {
  std::vector<ElementSet> levels;
  for (const auto& level : c.layout) {
    ElementSet s(level.layout.total());
    for (Elem y = 0; y < level.layout.total(); ++y) {
      bool in = true;
      for (std::size_t k = 0; k < level.reps.size() && in; ++k)
        in = i.levels[level.factor_levels[k]].contains(level.layout.component(y, k));
      if (in) s.insert(y);
    }
    levels.push_back(std::move(s));
  }
  return make_ideal(c.functor, std::move(levels));
}

TambaraIdeal coind_ideal_inverse(const Coinduction& c, const TambaraIdeal& j) {
  const auto& glat = *c.functor->lattice;
  const auto& hlat = *c.base->lattice;
  std::vector<ElementSet> levels;
  for (std::size_t l = 0; l < hlat.size(); ++l) {
    const std::size_t k = glat.index_of(c.embedding.to_ambient(hlat[l].members));
    const auto& level = c.layout[k];
    ElementSet s(c.base->levels[l].order());
    j.levels[k].for_each([&](Elem y) { s.insert(level.layout.component(y, 0)); });
    levels.push_back(std::move(s));
  }
  return make_ideal(c.base, std::move(levels));
}

TambaraIdeal restrict_ideal(const Restriction& r, const TambaraIdeal& p) {
  std::vector<ElementSet> levels;
  for (auto a : r.ambient_level) levels.push_back(p.levels[a]);
  return make_ideal(r.functor, std::move(levels));
}

TambaraIdeal project_ideal(const TambaraMorphism& projection, const TambaraIdeal& i) {
  std::vector<ElementSet> levels;
  for (std::size_t h = 0; h < projection.maps.size(); ++h)
    levels.push_back(image_set(projection.maps[h], i.levels[h], projection.target->levels[h].order()));
  return make_ideal(projection.target, std::move(levels));
}

std::string render_ideal(const TambaraIdeal& i) {
  std::string out;
  const auto& lat = *i.functor->lattice;
  for (std::size_t h = 0; h < i.levels.size(); ++h) {
    if (h) out += "  ";
    out += lat.name(h) + ": " + render_set(i.functor->levels[h], i.levels[h]);
  }
  return out;
}

}  // namespace nakaoka
