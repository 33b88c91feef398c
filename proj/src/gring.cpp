#include "nakaoka/gring.hpp"

#include <algorithm>

#include "nakaoka/errors.hpp"
#include "nakaoka/kernels.hpp"

namespace nakaoka {

GRing validate_gring(LatticePtr lattice, FiniteRing ring, std::vector<std::vector<Elem>> action) {
  const auto& g = lattice->group();
  const std::size_t n = ring.order();
  if (action.size() != g.order())
    throw Error("NotHomomorphism", "action has " + std::to_string(action.size()) +
                                       " tables for a group of order " + std::to_string(g.order()));
  for (Elem a = 0; a < g.order(); ++a) {
    const auto& t = action[a];
    const std::string who = "g=" + g.label(a);
    if (t.size() != n) throw Error("NotAutomorphism", who + ": table has wrong length");
    std::vector<bool> hit(n, false);
    for (Elem x = 0; x < n; ++x) {
      if (t[x] >= n || hit[t[x]]) throw Error("NotAutomorphism", who + ": not a bijection at x=" + ring.label(x));
      hit[t[x]] = true;
    }
    if (t[ring.one()] != ring.one()) throw Error("NotAutomorphism", who + ": does not fix 1");
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (t[ring.add(x, y)] != ring.add(t[x], t[y]))
          throw Error("NotAutomorphism", who + ": not additive at (" + ring.label(x) + "," + ring.label(y) + ")");
        if (t[ring.mul(x, y)] != ring.mul(t[x], t[y]))
          throw Error("NotAutomorphism", who + ": not multiplicative at (" + ring.label(x) + "," + ring.label(y) + ")");
      }
  }
  for (Elem x = 0; x < n; ++x)
    if (action[g.identity()][x] != x) throw Error("NotHomomorphism", "identity acts nontrivially on " + ring.label(x));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem x = 0; x < n; ++x)
        if (action[g.mul(a, b)][x] != action[a][action[b][x]])
          throw Error("NotHomomorphism", "(" + g.label(a) + g.label(b) + ")x != " + g.label(a) + "(" +
                                             g.label(b) + "x) at x=" + ring.label(x));
  return GRing{std::move(lattice), std::move(ring), std::move(action)};
}

GRing trivial_gring(LatticePtr lattice, FiniteRing ring) {
  std::vector<Elem> id(ring.order());
  for (Elem x = 0; x < id.size(); ++x) id[x] = x;
  const std::size_t order = lattice->group().order();
  return GRing{std::move(lattice), std::move(ring), std::vector<std::vector<Elem>>(order, id)};
}

SubringView fixed_subring(const GRing& s, std::size_t h) {
  ElementSet fixed(s.ring.order());
  const auto elems = mask_elements((*s.lattice)[h].members);
  for (Elem x = 0; x < s.ring.order(); ++x) {
    bool ok = true;
    for (Elem g : elems) ok = ok && s.act(g, x) == x;
    if (ok) fixed.insert(x);
  }
  return subset_ring(s.ring, fixed, s.ring.name() + "^" + s.lattice->name(h));
}

Elem relative_trace(const GRing& s, Elem x, std::size_t k, std::size_t h) {
  const auto& lat = *s.lattice;
  Elem acc = s.ring.zero();
  for (Elem r : left_coset_reps(lat.group(), lat[k].members, lat[h].members)) acc = s.ring.add(acc, s.act(r, x));
  return acc;
}

Elem relative_norm(const GRing& s, Elem x, std::size_t k, std::size_t h) {
  const auto& lat = *s.lattice;
  Elem acc = s.ring.one();
  for (Elem r : left_coset_reps(lat.group(), lat[k].members, lat[h].members)) acc = s.ring.mul(acc, s.act(r, x));
  return acc;
}

bool is_invariant(const GRing& s, const ElementSet& ideal) {
  bool ok = true;
  ideal.for_each([&](Elem x) {
    for (const auto& t : s.action) ok = ok && ideal.contains(t[x]);
  });
  return ok;
}

bool is_G_prime(const GRing& s, const ElementSet& ideal) {
  if (!is_invariant(s, ideal)) throw Error("NotInvariant", "ideal is not G-invariant");
  if (ideal.contains(s.ring.one())) throw Error("ImproperIdeal", "ideal is the whole ring");
  return !kernels::find_gprime_violation(s.ring, s.action, ideal, kernels::Policy::parallel).has_value();
}

std::vector<ElementSet> enumerate_G_invariant_ideals(const GRing& s, std::size_t bound) {
  std::vector<ElementSet> out;
  for (auto& i : enumerate_ring_ideals(s.ring, bound))
    if (is_invariant(s, i)) out.push_back(std::move(i));
  return out;
}

std::vector<ElementSet> G_prime_ideals(const GRing& s, std::size_t bound) {
  std::vector<ElementSet> out;
  for (auto& i : enumerate_G_invariant_ideals(s, bound))
    if (!i.contains(s.ring.one()) && is_G_prime(s, i)) out.push_back(std::move(i));
  return out;
}

std::vector<std::pair<Elem, std::size_t>> find_type_H_idempotents(const GRing& s) {
  const auto& lat = *s.lattice;
  const auto& g = lat.group();
  std::vector<std::pair<Elem, std::size_t>> out;
  for (Elem d : idempotents(s.ring)) {
    if (d == s.ring.zero()) continue;
    GroupMask iso = 0;
    for (Elem a = 0; a < g.order(); ++a)
      if (s.act(a, d) == d) iso |= singleton(a);
    bool ok = true;
    for (Elem a = 0; a < g.order() && ok; ++a)
      if (!mask_contains(iso, a)) ok = s.ring.mul(d, s.act(a, d)) == s.ring.zero();
    if (ok) out.emplace_back(d, lat.index_of(iso));
  }
  return out;
}

bool is_clarified(const GRing& s) {
  for (Elem d : idempotents(s.ring)) {
    if (d == s.ring.zero()) continue;
    for (const auto& t : s.action)
      if (s.ring.mul(d, t[d]) == s.ring.zero()) return false;
  }
  return true;
}

Elem orbit_sum(const GRing& s, Elem d, std::size_t h) {
  const auto& lat = *s.lattice;
  Elem acc = s.ring.zero();
  for (Elem r : left_coset_reps(lat.group(), lat[h].members, lat[lat.whole()].members))
    acc = s.ring.add(acc, s.act(r, d));
  return acc;
}

QuotientGRing quotient_gring(const GRing& s, const ElementSet& ideal) {
  if (!is_invariant(s, ideal)) throw Error("QuotientNotGRing", "ideal is not G-invariant");
  auto q = quotient(s.ring, ideal);
  std::vector<std::vector<Elem>> action(s.action.size(), std::vector<Elem>(q.lift.size()));
  for (std::size_t g = 0; g < s.action.size(); ++g)
    for (std::size_t i = 0; i < q.lift.size(); ++i) action[g][i] = q.project[s.action[g][q.lift[i]]];
  return {GRing{s.lattice, std::move(q.ring), std::move(action)}, std::move(q.project)};
}

GRing restrict_gring(const GRing& s, std::size_t h) {
  auto emb = subgroup_as_group(*s.lattice, h);
  std::vector<std::vector<Elem>> action;
  for (Elem a : emb.embed) action.push_back(s.action[a]);
  return GRing{make_lattice(emb.group), s.ring, std::move(action)};
}

CoinducedGRing coinduce_gring(const GRing& s, LatticePtr g_lattice, std::size_t h) {
  const auto& g = g_lattice->group();
  auto emb = subgroup_as_group(*g_lattice, h);
  if (emb.group.cayley() != s.group().cayley())
    throw Error("InvalidParameter", "ring is not acted on by the given subgroup");
  const auto reps = left_coset_reps(g, (*g_lattice)[h].members, (*g_lattice)[g_lattice->whole()].members);
  const std::size_t m = reps.size();
  std::vector<const FiniteRing*> factors(m, &s.ring);
  auto ring = FiniteRing::product(factors);
  ProductLayout layout(std::vector<std::size_t>(m, s.ring.order()));
  // f(x h) = h^-1 f(x); (a·f)(r_i) = f(a^-1 r_i) = h^-1 f(r_j) where a^-1 r_i = r_j h.
  auto locate = [&](Elem y) {
    for (std::size_t j = 0; j < m; ++j) {
      const Elem hh = g.mul(g.inv(reps[j]), y);
      if (mask_contains((*g_lattice)[h].members, hh)) return std::pair{j, emb.from_ambient_elem(hh)};
    }
    throw Error("InternalError", "coset lookup failed");
  };
  std::vector<std::vector<Elem>> action(g.order(), std::vector<Elem>(ring.order()));
  for (Elem a = 0; a < g.order(); ++a) {
    std::vector<std::pair<std::size_t, Elem>> where(m);
    for (std::size_t i = 0; i < m; ++i) where[i] = locate(g.mul(g.inv(a), reps[i]));
    for (Elem x = 0; x < ring.order(); ++x) {
      const auto parts = layout.split(x);
      std::vector<Elem> out(m);
      for (std::size_t i = 0; i < m; ++i)
        out[i] = s.act(s.group().inv(where[i].second), parts[where[i].first]);
      action[a][x] = layout.join(out);
    }
  }
  return {GRing{std::move(g_lattice), std::move(ring), std::move(action)}, reps, layout};
}

bool is_ring_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (Elem x : map) {
    if (x >= b.order() || hit[x]) return false;
    hit[x] = true;
  }
  if (map[a.one()] != b.one()) return false;
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (map[a.add(x, y)] != b.add(map[x], map[y]) || map[a.mul(x, y)] != b.mul(map[x], map[y]))
        return false;
  return true;
}

}  // namespace nakaoka
