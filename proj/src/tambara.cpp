#include "nakaoka/tambara.hpp"

#include <algorithm>
#include <functional>

#include "nakaoka/errors.hpp"

namespace nakaoka {

namespace {

[[noreturn]] void violation(const std::string& axiom, const std::string& witness) {
  throw Error("AxiomViolation", axiom + ": " + witness);
}

ElemMap identity_map(std::size_t n) {
  ElemMap m(n);
  for (Elem x = 0; x < n; ++x) m[x] = x;
  return m;
}

bool is_identity(const ElemMap& m) {
  for (Elem x = 0; x < m.size(); ++x)
    if (m[x] != x) return false;
  return true;
}

// Lattice index pairs (k, h) with k <= h.
std::vector<LevelPair> inclusions(const SubgroupLattice& lat) {
  std::vector<LevelPair> out;
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (std::size_t k = 0; k < lat.size(); ++k)
      if (lat.included(k, h)) out.emplace_back(k, h);
  return out;
}

struct Checker {
  const TambaraFunctor& f;
  const SubgroupLattice& lat;
  const FiniteGroup& g;

  std::string at(std::size_t h, Elem x) const { return lat.name(h) + ":" + f.levels[h].label(x); }

  void shapes() const {
    if (f.levels.size() != lat.size()) violation("Shape", "one level per subgroup expected");
    for (auto [k, h] : inclusions(lat)) {
      auto need = [&](const std::map<LevelPair, ElemMap>& m, const char* what, std::size_t from, std::size_t to) {
        auto it = m.find({k, h});
        if (it == m.end()) violation("Shape", std::string(what) + " missing for (" + lat.name(k) + "," + lat.name(h) + ")");
        if (it->second.size() != f.levels[from].order()) violation("Shape", std::string(what) + " has wrong domain size for (" + lat.name(k) + "," + lat.name(h) + ")");
        for (Elem y : it->second)
          if (y >= f.levels[to].order()) violation("Shape", std::string(what) + " value out of range for (" + lat.name(k) + "," + lat.name(h) + ")");
      };
      need(f.res, "res", h, k);
      need(f.tr, "tr", k, h);
      need(f.nm, "nm", k, h);
    }
    if (f.conj.size() != g.order()) violation("Shape", "conj needs one entry per group element");
    for (Elem a = 0; a < g.order(); ++a) {
      if (f.conj[a].size() != lat.size()) violation("Shape", "conj needs one map per subgroup");
      for (std::size_t h = 0; h < lat.size(); ++h) {
        const auto& m = f.conj[a][h];
        const std::size_t to = lat.conjugate(a, h);
        if (m.size() != f.levels[h].order()) violation("Shape", "conj map has wrong domain size");
        for (Elem y : m)
          if (y >= f.levels[to].order()) violation("Shape", "conj value out of range");
      }
    }
  }

  void ring_maps() const {
    for (auto [k, h] : inclusions(lat)) {
      const auto& rk = f.levels[k];
      const auto& rh = f.levels[h];
      const auto& res = f.res.at({k, h});
      const auto& tr = f.tr.at({k, h});
      const auto& nm = f.nm.at({k, h});
      const std::string pair = "(" + lat.name(k) + "," + lat.name(h) + ")";
      if (k == h) {
        if (!is_identity(res) || !is_identity(tr) || !is_identity(nm)) violation("Identity", "maps at " + pair + " are not the identity");
        continue;
      }
      if (res[rh.one()] != rk.one()) violation("ResRingHom", pair + " Res(1) != 1");
      if (nm[rk.one()] != rh.one()) violation("NmUnital", pair + " Nm(1) != 1");
      for (Elem x = 0; x < rh.order(); ++x)
        for (Elem y = 0; y < rh.order(); ++y) {
          if (res[rh.add(x, y)] != rk.add(res[x], res[y])) violation("ResRingHom", pair + " additivity at " + at(h, x) + "," + at(h, y));
          if (res[rh.mul(x, y)] != rk.mul(res[x], res[y])) violation("ResRingHom", pair + " multiplicativity at " + at(h, x) + "," + at(h, y));
        }
      for (Elem x = 0; x < rk.order(); ++x)
        for (Elem y = 0; y < rk.order(); ++y) {
          if (tr[rk.add(x, y)] != rh.add(tr[x], tr[y])) violation("TrAdditive", pair + " at " + at(k, x) + "," + at(k, y));
          if (nm[rk.mul(x, y)] != rh.mul(nm[x], nm[y])) violation("NmMultiplicative", pair + " at " + at(k, x) + "," + at(k, y));
        }
    }
  }

  void composition() const {
    for (std::size_t h = 0; h < lat.size(); ++h)
      for (std::size_t k = 0; k < lat.size(); ++k) {
        if (!lat.included(k, h)) continue;
        for (std::size_t l = 0; l < lat.size(); ++l) {
          if (!lat.included(l, k)) continue;
          const std::string triple = lat.name(l) + "<=" + lat.name(k) + "<=" + lat.name(h);
          for (Elem x = 0; x < f.levels[h].order(); ++x)
            if (f.restriction(l, k, f.restriction(k, h, x)) != f.restriction(l, h, x))
              violation("ResComposition", triple + " at " + at(h, x));
          for (Elem x = 0; x < f.levels[l].order(); ++x) {
            if (f.transfer(k, h, f.transfer(l, k, x)) != f.transfer(l, h, x))
              violation("TrComposition", triple + " at " + at(l, x));
            if (f.norm(k, h, f.norm(l, k, x)) != f.norm(l, h, x))
              violation("NmComposition", triple + " at " + at(l, x));
          }
        }
      }
  }

  void conjugation() const {
    for (std::size_t h = 0; h < lat.size(); ++h) {
      if (!is_identity(f.conj[g.identity()][h])) violation("ConjIdentity", "c_e is not the identity on " + lat.name(h));
      for (Elem a : mask_elements(lat[h].members))
        if (!is_identity(f.conj[a][h])) violation("ConjInner", "c_" + g.label(a) + " acts nontrivially on " + lat.name(h));
    }
    for (Elem a = 0; a < g.order(); ++a)
      for (std::size_t h = 0; h < lat.size(); ++h) {
        const auto& rh = f.levels[h];
        const std::size_t ah = lat.conjugate(a, h);
        const auto& ra = f.levels[ah];
        const auto& c = f.conj[a][h];
        if (c[rh.one()] != ra.one()) violation("ConjRingHom", "c_" + g.label(a) + "(1) != 1 on " + lat.name(h));
        for (Elem x = 0; x < rh.order(); ++x)
          for (Elem y = 0; y < rh.order(); ++y)
            if (c[rh.add(x, y)] != ra.add(c[x], c[y]) || c[rh.mul(x, y)] != ra.mul(c[x], c[y]))
              violation("ConjRingHom", "c_" + g.label(a) + " at " + at(h, x) + "," + at(h, y));
        for (Elem b = 0; b < g.order(); ++b)
          for (Elem x = 0; x < rh.order(); ++x)
            if (f.conj[b][ah][c[x]] != f.conj[g.mul(b, a)][h][x])
              violation("ConjFunctoriality", "c_" + g.label(b) + " c_" + g.label(a) + " != c_" + g.label(g.mul(b, a)) + " at " + at(h, x));
      }
    for (auto [k, h] : inclusions(lat))
      for (Elem a = 0; a < g.order(); ++a) {
        const std::size_t ak = lat.conjugate(a, k), ah = lat.conjugate(a, h);
        const std::string who = "c_" + g.label(a) + " on (" + lat.name(k) + "," + lat.name(h) + ")";
        for (Elem x = 0; x < f.levels[h].order(); ++x)
          if (f.conj[a][k][f.restriction(k, h, x)] != f.restriction(ak, ah, f.conj[a][h][x]))
            violation("ConjRes", who + " at " + at(h, x));
        for (Elem x = 0; x < f.levels[k].order(); ++x) {
          if (f.conj[a][h][f.transfer(k, h, x)] != f.transfer(ak, ah, f.conj[a][k][x]))
            violation("ConjTr", who + " at " + at(k, x));
          if (f.conj[a][h][f.norm(k, h, x)] != f.norm(ak, ah, f.conj[a][k][x]))
            violation("ConjNm", who + " at " + at(k, x));
        }
      }
  }

  void frobenius() const {
    for (auto [k, h] : inclusions(lat)) {
      if (k == h) continue;
      const auto& rk = f.levels[k];
      const auto& rh = f.levels[h];
      for (Elem x = 0; x < rk.order(); ++x)
        for (Elem y = 0; y < rh.order(); ++y)
          if (f.transfer(k, h, rk.mul(x, f.restriction(k, h, y))) != rh.mul(f.transfer(k, h, x), y))
            violation("Frobenius", "(" + lat.name(k) + "," + lat.name(h) + ") at " + at(k, x) + "," + at(h, y));
    }
  }

  void mackey() const {
    for (std::size_t h = 0; h < lat.size(); ++h)
      for (std::size_t k = 0; k < lat.size(); ++k) {
        if (!lat.included(k, h)) continue;
        for (std::size_t l = 0; l < lat.size(); ++l) {
          if (!lat.included(l, h)) continue;
          // L\H/K with stabilizers S = K ∩ x^-1 L x; terms land in x S x^-1 <= L.
          const auto d = double_cosets(lat, l, k, h);
          std::vector<std::size_t> stab, image;
          for (std::size_t i = 0; i < d.reps.size(); ++i) {
            stab.push_back(lat.index_of(d.stabilizers[i]));
            image.push_back(lat.conjugate(d.reps[i], stab.back()));
          }
          const auto& rl = f.levels[l];
          const std::string who = "Res_" + lat.name(l) + " ? _" + lat.name(k) + "^" + lat.name(h);
          for (Elem x = 0; x < f.levels[k].order(); ++x) {
            Elem sum = rl.zero(), prod = rl.one();
            for (std::size_t i = 0; i < d.reps.size(); ++i) {
              const Elem y = f.conj[d.reps[i]][stab[i]][f.restriction(stab[i], k, x)];
              sum = rl.add(sum, f.transfer(image[i], l, y));
              prod = rl.mul(prod, f.norm(image[i], l, y));
            }
            if (f.restriction(l, h, f.transfer(k, h, x)) != sum) violation("MackeyResTr", who + " at " + at(k, x));
            if (f.restriction(l, h, f.norm(k, h, x)) != prod) violation("MackeyResNm", who + " at " + at(k, x));
          }
        }
      }
  }

  // Nm(a+b) = Nm a + Nm b + sum over free orbits of nonempty proper S ⊂ C_p of
  // Tr(prod_{g in S} g a · prod_{g not in S} g b).
  void norm_of_sum() const {
    const std::size_t p = g.order();
    const auto& bottom = f.levels[0];
    const auto& top = f.levels[lat.whole()];
    std::vector<std::uint32_t> reps;
    const std::uint32_t full = (1u << p) - 1;
    for (std::uint32_t s = 1; s < full; ++s) {
      std::uint32_t best = s;
      for (Elem a = 0; a < p; ++a) {
        std::uint32_t t = 0;
        for (Elem x = 0; x < p; ++x)
          if (s >> x & 1u) t |= 1u << g.mul(a, x);
        best = std::min(best, t);
      }
      if (best == s) reps.push_back(s);
    }
    const std::size_t w = lat.whole();
    for (Elem a = 0; a < bottom.order(); ++a)
      for (Elem b = 0; b < bottom.order(); ++b) {
        Elem rhs = top.add(f.norm(0, w, a), f.norm(0, w, b));
        for (auto s : reps) {
          Elem term = bottom.one();
          for (Elem x = 0; x < p; ++x) term = bottom.mul(term, f.conj[x][0][(s >> x & 1u) ? a : b]);
          rhs = top.add(rhs, f.transfer(0, w, term));
        }
        if (f.norm(0, w, bottom.add(a, b)) != rhs) violation("NormOfSum", "at " + at(0, a) + "," + at(0, b));
      }
  }
};

}  // namespace

std::size_t TambaraFunctor::total_elements() const {
  std::size_t n = 0;
  for (const auto& r : levels) n += r.order();
  return n;
}

void add_identity_maps(TambaraFunctor& f) {
  for (std::size_t h = 0; h < f.levels.size(); ++h) {
    const auto id = identity_map(f.levels[h].order());
    f.res.try_emplace({h, h}, id);
    f.tr.try_emplace({h, h}, id);
    f.nm.try_emplace({h, h}, id);
  }
}

void validate_tambara(const TambaraFunctor& f, Strictness strictness) {
  if (!f.lattice) violation("Shape", "no group");
  Checker c{f, *f.lattice, f.lattice->group()};
  c.shapes();
  c.ring_maps();
  c.composition();
  c.conjugation();
  c.frobenius();
  c.mackey();
  if (strictness == Strictness::full) {
    bool cp = f.lattice->size() == 2 && f.group().order() > 1;
    for (const auto& r : f.levels) cp = cp && r.order() <= 16;
    if (!cp) throw Error("InvalidParameter", "full strictness needs G = C_p and levels of order <= 16");
    c.norm_of_sum();
  }
}

FunctorPtr make_functor(TambaraFunctor f, Strictness strictness) {
  validate_tambara(f, strictness);
  return std::make_shared<const TambaraFunctor>(std::move(f));
}

void validate_morphism(const TambaraMorphism& m) {
  const auto& s = *m.source;
  const auto& t = *m.target;
  const auto& lat = *s.lattice;
  if (s.lattice->group().cayley() != t.lattice->group().cayley()) violation("Morphism", "different groups");
  if (m.maps.size() != lat.size()) violation("Morphism", "one map per subgroup expected");
  for (std::size_t h = 0; h < lat.size(); ++h) {
    const auto& a = s.levels[h];
    const auto& b = t.levels[h];
    const auto& f = m.maps[h];
    if (f.size() != a.order()) violation("Morphism", "map at " + lat.name(h) + " has wrong size");
    if (f[a.one()] != b.one()) violation("MorphismRingHom", "f(1) != 1 at " + lat.name(h));
    for (Elem x = 0; x < a.order(); ++x)
      for (Elem y = 0; y < a.order(); ++y)
        if (f[a.add(x, y)] != b.add(f[x], f[y]) || f[a.mul(x, y)] != b.mul(f[x], f[y]))
          violation("MorphismRingHom", "at " + lat.name(h) + ":" + a.label(x) + "," + a.label(y));
  }
  for (auto [k, h] : inclusions(lat)) {
    for (Elem x = 0; x < s.levels[h].order(); ++x)
      if (m.maps[k][s.restriction(k, h, x)] != t.restriction(k, h, m.maps[h][x]))
        violation("MorphismRes", lat.name(k) + "<=" + lat.name(h));
    for (Elem x = 0; x < s.levels[k].order(); ++x) {
      if (m.maps[h][s.transfer(k, h, x)] != t.transfer(k, h, m.maps[k][x]))
        violation("MorphismTr", lat.name(k) + "<=" + lat.name(h));
      if (m.maps[h][s.norm(k, h, x)] != t.norm(k, h, m.maps[k][x]))
        violation("MorphismNm", lat.name(k) + "<=" + lat.name(h));
    }
  }
  for (Elem g = 0; g < lat.group().order(); ++g)
    for (std::size_t h = 0; h < lat.size(); ++h)
      for (Elem x = 0; x < s.levels[h].order(); ++x)
        if (m.maps[lat.conjugate(g, h)][s.conjugate(g, h, x)] != t.conjugate(g, h, m.maps[h][x]))
          violation("MorphismConj", "c_" + lat.group().label(g) + " on " + lat.name(h));
}

TambaraMorphism identity_morphism(FunctorPtr f) {
  TambaraMorphism m{f, f, {}};
  for (const auto& r : f->levels) m.maps.push_back(identity_map(r.order()));
  return m;
}

TambaraMorphism compose(const TambaraMorphism& second, const TambaraMorphism& first) {
  TambaraMorphism m{first.source, second.target, {}};
  for (std::size_t h = 0; h < first.maps.size(); ++h) {
    ElemMap c(first.maps[h].size());
    for (Elem x = 0; x < c.size(); ++x) c[x] = second.maps[h][first.maps[h][x]];
    m.maps.push_back(std::move(c));
  }
  return m;
}

FixedPoints fixed_point_functor(const GRing& s) {
  const auto& lat = *s.lattice;
  const auto& g = lat.group();
  FixedPoints out;
  TambaraFunctor f;
  f.lattice = s.lattice;
  f.name = "FP(" + s.ring.name() + ")";
  for (std::size_t h = 0; h < lat.size(); ++h) {
    out.levels.push_back(fixed_subring(s, h));
    f.levels.push_back(out.levels.back().ring);
  }
  for (auto [k, h] : inclusions(lat)) {
    const auto& vk = out.levels[k];
    const auto& vh = out.levels[h];
    ElemMap res(vh.embed.size()), tr(vk.embed.size()), nm(vk.embed.size());
    for (Elem x = 0; x < res.size(); ++x) res[x] = vk.to_local(vh.embed[x]);
    for (Elem x = 0; x < tr.size(); ++x) {
      tr[x] = vh.to_local(relative_trace(s, vk.embed[x], k, h));
      nm[x] = vh.to_local(relative_norm(s, vk.embed[x], k, h));
    }
    f.res[{k, h}] = std::move(res);
    f.tr[{k, h}] = std::move(tr);
    f.nm[{k, h}] = std::move(nm);
  }
  f.conj.assign(g.order(), {});
  for (Elem a = 0; a < g.order(); ++a)
    for (std::size_t h = 0; h < lat.size(); ++h) {
      const auto& vh = out.levels[h];
      const auto& va = out.levels[lat.conjugate(a, h)];
      ElemMap c(vh.embed.size());
      for (Elem x = 0; x < c.size(); ++x) c[x] = va.to_local(s.act(a, vh.embed[x]));
      f.conj[a].push_back(std::move(c));
    }
  out.functor = make_functor(std::move(f));
  return out;
}

TambaraMorphism fp_morphism(const FixedPoints& source, const FixedPoints& target, const ElemMap& ring_map) {
  TambaraMorphism m{source.functor, target.functor, {}};
  for (std::size_t h = 0; h < source.levels.size(); ++h) {
    const auto& a = source.levels[h];
    const auto& b = target.levels[h];
    ElemMap f(a.embed.size());
    for (Elem x = 0; x < f.size(); ++x) f[x] = b.to_local(ring_map[a.embed[x]]);
    m.maps.push_back(std::move(f));
  }
  validate_morphism(m);
  return m;
}

FunctorPtr zero_functor(LatticePtr lattice) {
  TambaraFunctor f;
  f.lattice = lattice;
  f.name = "0";
  f.levels.assign(lattice->size(), FiniteRing());
  for (auto p : inclusions(*lattice)) f.res[p] = f.tr[p] = f.nm[p] = ElemMap{0};
  f.conj.assign(lattice->group().order(), std::vector<ElemMap>(lattice->size(), ElemMap{0}));
  return make_functor(std::move(f));
}

Restriction restrict_functor(const FunctorPtr& r, std::size_t h) {
  const auto& lat = *r->lattice;
  Restriction out;
  out.subgroup = h;
  out.embedding = subgroup_as_group(lat, h);
  auto sub = make_lattice(out.embedding.group);
  for (std::size_t j = 0; j < sub->size(); ++j)
    out.ambient_level.push_back(lat.index_of(out.embedding.to_ambient((*sub)[j].members)));
  TambaraFunctor f;
  f.lattice = sub;
  f.name = "Res_" + lat.name(h) + " " + r->name;
  for (auto a : out.ambient_level) f.levels.push_back(r->levels[a]);
  for (auto [k, hh] : inclusions(*sub)) {
    const LevelPair amb{out.ambient_level[k], out.ambient_level[hh]};
    f.res[{k, hh}] = r->res.at(amb);
    f.tr[{k, hh}] = r->tr.at(amb);
    f.nm[{k, hh}] = r->nm.at(amb);
  }
  for (Elem a : out.embedding.embed) {
    std::vector<ElemMap> row;
    for (auto amb : out.ambient_level) row.push_back(r->conj[a][amb]);
    f.conj.push_back(std::move(row));
  }
  out.functor = make_functor(std::move(f));
  return out;
}

namespace {

// Assembles the maps of CoInd_H^G R along G-maps G/K1 -> G/K2, gK1 -> g a K2.
struct CoindBuilder {
  const TambaraFunctor& base;          // H-functor
  const SubgroupLattice& glat;
  const SubgroupLattice& hlat;
  const EmbeddedSubgroup& emb;
  std::size_t h;
  const std::vector<CoindLevel>& layout;

  struct OrbitMap {
    std::size_t target_factor;
    Elem h0;                 // in H coordinates
    std::size_t a_level;     // H-level of the source factor
    std::size_t c_level;     // h0 B h0^-1
  };

  std::vector<OrbitMap> orbit_maps(std::size_t k1, std::size_t k2, Elem a) const {
    const auto& g = glat.group();
    const GroupMask hm = glat[h].members;
    const auto& src = layout[k1];
    const auto& dst = layout[k2];
    std::vector<OrbitMap> out;
    for (std::size_t i = 0; i < src.reps.size(); ++i) {
      const Elem xa = g.mul(src.reps[i], a);
      bool found = false;
      for (std::size_t j = 0; j < dst.reps.size() && !found; ++j)
        for (Elem h0 : mask_elements(hm)) {
          // x a K2 = h0 y K2  <=>  y^-1 h0^-1 x a in K2
          const Elem t = g.mul(g.inv(dst.reps[j]), g.mul(g.inv(h0), xa));
          if (!mask_contains(glat[k2].members, t)) continue;
          const Elem h0l = emb.from_ambient_elem(h0);
          const std::size_t b = dst.factor_levels[j];
          out.push_back({j, h0l, src.factor_levels[i], hlat.conjugate(h0l, b)});
          found = true;
          break;
        }
      if (!found) throw Error("InternalError", "coinduction orbit lookup failed");
      if (!hlat.included(out.back().a_level, out.back().c_level))
        throw Error("InternalError", "coinduction orbit map is not defined");
    }
    return out;
  }

  ElemMap pullback(std::size_t k1, std::size_t k2, Elem a) const {
    const auto maps = orbit_maps(k1, k2, a);
    const auto& src = layout[k1];
    const auto& dst = layout[k2];
    ElemMap out(dst.layout.total());
    std::vector<Elem> parts(src.reps.size());
    for (Elem y = 0; y < out.size(); ++y) {
      for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto& m = maps[i];
        const Elem comp = dst.layout.component(y, m.target_factor);
        const Elem moved = base.conjugate(m.h0, dst.factor_levels[m.target_factor], comp);
        parts[i] = base.restriction(m.a_level, m.c_level, moved);
      }
      out[y] = src.layout.join(parts);
    }
    return out;
  }

  ElemMap pushforward(std::size_t k1, std::size_t k2, Elem a, bool multiplicative) const {
    const auto maps = orbit_maps(k1, k2, a);
    const auto& src = layout[k1];
    const auto& dst = layout[k2];
    const auto& g = hlat.group();
    ElemMap out(src.layout.total());
    std::vector<Elem> parts(dst.reps.size());
    for (Elem x = 0; x < out.size(); ++x) {
      for (std::size_t j = 0; j < dst.reps.size(); ++j) {
        const auto& ring = base.levels[dst.factor_levels[j]];
        parts[j] = multiplicative ? ring.one() : ring.zero();
      }
      for (std::size_t i = 0; i < maps.size(); ++i) {
        const auto& m = maps[i];
        const Elem comp = src.layout.component(x, i);
        const Elem pushed = multiplicative ? base.norm(m.a_level, m.c_level, comp)
                                           : base.transfer(m.a_level, m.c_level, comp);
        const Elem back = base.conjugate(g.inv(m.h0), m.c_level, pushed);
        const auto& ring = base.levels[dst.factor_levels[m.target_factor]];
        auto& slot = parts[m.target_factor];
        slot = multiplicative ? ring.mul(slot, back) : ring.add(slot, back);
      }
      out[x] = dst.layout.join(parts);
    }
    return out;
  }
};

}  // namespace

Coinduction coinduce(const FunctorPtr& r, const LatticePtr& g_lattice, std::size_t h) {
  const auto& glat = *g_lattice;
  const auto& g = glat.group();
  Coinduction out;
  out.base = r;
  out.subgroup = h;
  out.embedding = subgroup_as_group(glat, h);
  if (out.embedding.group.cayley() != r->group().cayley())
    throw Error("InvalidParameter", "functor group is not the subgroup " + glat.name(h));
  const auto& hlat = *r->lattice;
  const GroupMask hm = glat[h].members;
  for (std::size_t k = 0; k < glat.size(); ++k) {
    CoindLevel level;
    const auto d = double_cosets(g, hm, glat[k].members, glat[glat.whole()].members);
    std::vector<std::size_t> orders;
    for (std::size_t i = 0; i < d.reps.size(); ++i) {
      const Elem x = d.reps[i];
      // H ∩ x K x^-1 = x (K ∩ x^-1 H x) x^-1
      const GroupMask b = conjugate_mask(g, x, d.stabilizers[i]);
      level.reps.push_back(x);
      level.factor_levels.push_back(hlat.index_of(out.embedding.from_ambient(b)));
      orders.push_back(r->levels[level.factor_levels.back()].order());
    }
    level.layout = ProductLayout(orders);
    out.layout.push_back(std::move(level));
  }
  TambaraFunctor f;
  f.lattice = g_lattice;
  f.name = "CoInd_" + glat.name(h) + "^G " + r->name;
  for (const auto& level : out.layout) {
    std::vector<const FiniteRing*> factors;
    for (auto l : level.factor_levels) factors.push_back(&r->levels[l]);
    f.levels.push_back(FiniteRing::product(factors));
  }
  CoindBuilder b{*r, glat, hlat, out.embedding, h, out.layout};
  for (auto [k, hh] : inclusions(glat)) {
    f.res[{k, hh}] = b.pullback(k, hh, g.identity());
    f.tr[{k, hh}] = b.pushforward(k, hh, g.identity(), false);
    f.nm[{k, hh}] = b.pushforward(k, hh, g.identity(), true);
  }
  f.conj.assign(g.order(), {});
  for (Elem a = 0; a < g.order(); ++a)
    for (std::size_t k = 0; k < glat.size(); ++k) f.conj[a].push_back(b.pullback(glat.conjugate(a, k), k, a));
  out.functor = make_functor(std::move(f));
  return out;
}

CoindUnit coind_unit(const FunctorPtr& r, std::size_t h) {
  const auto& lat = *r->lattice;
  const auto& g = lat.group();
  CoindUnit out;
  out.restriction = restrict_functor(r, h);
  out.coinduction = coinduce(out.restriction.functor, r->lattice, h);
  out.unit = TambaraMorphism{r, out.coinduction.functor, {}};
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const auto& level = out.coinduction.layout[k];
    ElemMap m(r->levels[k].order());
    std::vector<Elem> parts(level.reps.size());
    for (Elem x = 0; x < m.size(); ++x) {
      for (std::size_t i = 0; i < level.reps.size(); ++i) {
        const Elem rep = level.reps[i];
        const std::size_t xk = lat.conjugate(rep, k);
        const std::size_t b = out.restriction.ambient_level[level.factor_levels[i]];
        parts[i] = r->restriction(b, xk, r->conjugate(rep, k, x));
      }
      m[x] = level.layout.join(parts);
    }
    out.unit.maps.push_back(std::move(m));
  }
  (void)g;
  validate_morphism(out.unit);
  return out;
}

Ghost ghost(const FunctorPtr& r) {
  const auto& lat = *r->lattice;
  const auto& g = lat.group();
  bool prime = g.order() > 1;
  for (std::size_t d = 2; d * d <= g.order(); ++d) prime = prime && g.order() % d != 0;
  if (!prime) throw Error("NotCyclicPrime", "ghost needs a group of prime order, got order " + std::to_string(g.order()));
  const std::size_t top = lat.whole();
  const auto& bottom = r->levels[0];
  const auto& rtop = r->levels[top];
  Ghost out;
  // transfer image and the ideal it generates
  ElementSet image(rtop.order());
  for (Elem x = 0; x < bottom.order(); ++x) image.insert(r->transfer(0, top, x));
  out.transfer_ideal = ideal_closure(rtop, image);
  if (!(out.transfer_ideal == image)) throw Error("AxiomViolation", "Frobenius: transfer image is not an ideal");
  ElementSet fixed(bottom.order());
  for (Elem x = 0; x < bottom.order(); ++x) {
    bool ok = true;
    for (Elem a = 0; a < g.order(); ++a) ok = ok && r->conjugate(a, 0, x) == x;
    if (ok) fixed.insert(x);
  }
  out.fixed = subset_ring(bottom, fixed, bottom.name() + "^G");
  out.quotient = quotient(rtop, out.transfer_ideal);
  out.top_layout = ProductLayout({out.fixed.ring.order(), out.quotient.ring.order()});
  TambaraFunctor f;
  f.lattice = r->lattice;
  f.name = "ghost(" + r->name + ")";
  f.levels = {bottom, FiniteRing::product(out.fixed.ring, out.quotient.ring)};
  const auto& gt = f.levels[1];
  add_identity_maps(f);
  ElemMap res(gt.order()), tr(bottom.order()), nm(bottom.order());
  for (Elem y = 0; y < gt.order(); ++y) res[y] = out.fixed.embed[out.top_layout.component(y, 0)];
  for (Elem x = 0; x < bottom.order(); ++x) {
    Elem s = bottom.zero(), p = bottom.one();
    for (Elem a = 0; a < g.order(); ++a) {
      s = bottom.add(s, r->conjugate(a, 0, x));
      p = bottom.mul(p, r->conjugate(a, 0, x));
    }
    tr[x] = out.top_layout.join({out.fixed.to_local(s), out.quotient.project[rtop.zero()]});
    nm[x] = out.top_layout.join({out.fixed.to_local(p), out.quotient.project[r->norm(0, top, x)]});
  }
  f.res[{0, top}] = std::move(res);
  f.tr[{0, top}] = std::move(tr);
  f.nm[{0, top}] = std::move(nm);
  f.conj.assign(g.order(), {});
  for (Elem a = 0; a < g.order(); ++a) f.conj[a] = {r->conj[a][0], identity_map(gt.order())};
  out.functor = make_functor(std::move(f));
  ElemMap chi_top(rtop.order());
  for (Elem x = 0; x < rtop.order(); ++x)
    chi_top[x] = out.top_layout.join({out.fixed.to_local(r->restriction(0, top, x)), out.quotient.project[x]});
  out.chi = TambaraMorphism{r, out.functor, {identity_map(bottom.order()), std::move(chi_top)}};
  validate_morphism(out.chi);
  return out;
}

ProductFunctor product(const std::vector<FunctorPtr>& factors) {
  if (factors.empty()) throw Error("InvalidParameter", "product of no functors");
  const auto& lat = *factors.front()->lattice;
  for (const auto& f : factors)
    if (f->group().cayley() != lat.group().cayley()) throw Error("InvalidParameter", "factors over different groups");
  const std::size_t n = factors.size();
  ProductFunctor out;
  TambaraFunctor f;
  f.lattice = factors.front()->lattice;
  for (std::size_t i = 0; i < n; ++i) f.name += (i ? " x " : "") + factors[i]->name;
  for (std::size_t h = 0; h < lat.size(); ++h) {
    std::vector<const FiniteRing*> rings;
    std::vector<std::size_t> orders;
    for (const auto& fa : factors) {
      rings.push_back(&fa->levels[h]);
      orders.push_back(fa->levels[h].order());
    }
    f.levels.push_back(FiniteRing::product(rings));
    out.layouts.emplace_back(orders);
  }
  auto lift = [&](std::size_t from, std::size_t to, const std::function<const ElemMap&(const TambaraFunctor&)>& pick) {
    ElemMap m(out.layouts[from].total());
    std::vector<Elem> parts(n);
    for (Elem x = 0; x < m.size(); ++x) {
      for (std::size_t i = 0; i < n; ++i) parts[i] = pick(*factors[i])[out.layouts[from].component(x, i)];
      m[x] = out.layouts[to].join(parts);
    }
    return m;
  };
  for (auto [k, h] : inclusions(lat)) {
    const LevelPair p{k, h};
    f.res[p] = lift(h, k, [&](const TambaraFunctor& t) -> const ElemMap& { return t.res.at(p); });
    f.tr[p] = lift(k, h, [&](const TambaraFunctor& t) -> const ElemMap& { return t.tr.at(p); });
    f.nm[p] = lift(k, h, [&](const TambaraFunctor& t) -> const ElemMap& { return t.nm.at(p); });
  }
  f.conj.assign(lat.group().order(), {});
  for (Elem a = 0; a < lat.group().order(); ++a)
    for (std::size_t h = 0; h < lat.size(); ++h)
      f.conj[a].push_back(lift(h, lat.conjugate(a, h), [&](const TambaraFunctor& t) -> const ElemMap& { return t.conj[a][h]; }));
  out.functor = make_functor(std::move(f));
  for (std::size_t i = 0; i < n; ++i) {
    TambaraMorphism m{out.functor, factors[i], {}};
    for (std::size_t h = 0; h < lat.size(); ++h) {
      ElemMap pm(out.layouts[h].total());
      for (Elem x = 0; x < pm.size(); ++x) pm[x] = out.layouts[h].component(x, i);
      m.maps.push_back(std::move(pm));
    }
    validate_morphism(m);
    out.projections.push_back(std::move(m));
  }
  return out;
}

GRing bottom_gring(const TambaraFunctor& r) {
  std::vector<std::vector<Elem>> action;
  for (Elem a = 0; a < r.group().order(); ++a) action.push_back(r.conj[a][0]);
  return GRing{r.lattice, r.levels[0], std::move(action)};
}

Split split_by_idempotent(const FunctorPtr& r, Elem d, std::size_t h) {
  const auto& lat = *r->lattice;
  const auto bottom = bottom_gring(*r);
  const auto types = find_type_H_idempotents(bottom);
  if (std::find(types.begin(), types.end(), std::pair{d, h}) == types.end())
    throw Error("NotSplittable", r->levels[0].label(d) + " is not an idempotent of type " + lat.name(h));
  if (orbit_sum(bottom, d, h) != bottom.ring.one())
    throw Error("NotSplittable", "orbit sum of " + r->levels[0].label(d) + " over G/" + lat.name(h) + " is not 1");
  Split out;
  out.restriction = restrict_functor(r, h);
  const auto& res = *out.restriction.functor;
  const auto& hlat = *res.lattice;
  for (std::size_t j = 0; j < hlat.size(); ++j) {
    const std::size_t l = out.restriction.ambient_level[j];
    const Elem e = r->norm(0, l, d);
    out.units.push_back(e);
    out.views.push_back(subset_ring(r->levels[l], principal_ideal(r->levels[l], e), lat.name(h) + "-part of " + lat.name(l)));
  }
  TambaraFunctor f;
  f.lattice = res.lattice;
  f.name = "split_" + lat.name(h) + " " + r->name;
  for (const auto& v : out.views) f.levels.push_back(v.ring);
  auto cut = [&](std::size_t j, Elem x) { return out.views[j].to_local(res.levels[j].mul(out.units[j], x)); };
  for (auto [k, hh] : inclusions(hlat)) {
    const auto& vk = out.views[k];
    const auto& vh = out.views[hh];
    ElemMap rm(vh.embed.size()), tm(vk.embed.size()), nmm(vk.embed.size());
    for (Elem x = 0; x < rm.size(); ++x) rm[x] = cut(k, res.restriction(k, hh, vh.embed[x]));
    for (Elem x = 0; x < tm.size(); ++x) {
      tm[x] = cut(hh, res.transfer(k, hh, vk.embed[x]));
      nmm[x] = cut(hh, res.norm(k, hh, vk.embed[x]));
    }
    f.res[{k, hh}] = std::move(rm);
    f.tr[{k, hh}] = std::move(tm);
    f.nm[{k, hh}] = std::move(nmm);
  }
  f.conj.assign(hlat.group().order(), {});
  for (Elem a = 0; a < hlat.group().order(); ++a)
    for (std::size_t j = 0; j < hlat.size(); ++j) {
      const std::size_t aj = hlat.conjugate(a, j);
      ElemMap c(out.views[j].embed.size());
      for (Elem x = 0; x < c.size(); ++x) c[x] = cut(aj, res.conjugate(a, j, out.views[j].embed[x]));
      f.conj[a].push_back(std::move(c));
    }
  out.part = make_functor(std::move(f));
  out.coinduced = coinduce(out.part, r->lattice, h);
  // R(K) -> prod_x e_{B_x} R(B_x), x over H\G/K.
  TambaraMorphism iso{r, out.coinduced.functor, {}};
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const auto& level = out.coinduced.layout[k];
    ElemMap m(r->levels[k].order());
    std::vector<Elem> parts(level.reps.size());
    std::vector<bool> hit(level.layout.total(), false);
    for (Elem x = 0; x < m.size(); ++x) {
      for (std::size_t i = 0; i < level.reps.size(); ++i) {
        const std::size_t j = level.factor_levels[i];
        const std::size_t b = out.restriction.ambient_level[j];
        const Elem y = r->restriction(b, lat.conjugate(level.reps[i], k), r->conjugate(level.reps[i], k, x));
        parts[i] = cut(j, y);
      }
      m[x] = level.layout.join(parts);
      if (hit[m[x]]) throw Error("NotSplittable", "comparison map is not injective at " + lat.name(k));
      hit[m[x]] = true;
    }
    if (m.size() != level.layout.total()) throw Error("NotSplittable", "comparison map is not surjective at " + lat.name(k));
    iso.maps.push_back(std::move(m));
  }
  validate_morphism(iso);
  out.iso = std::move(iso.maps);
  return out;
}

bool is_idle(const TambaraFunctor& r) {
  const auto& lat = *r.lattice;
  for (std::size_t h = 0; h < lat.size(); ++h)
    for (Elem a : weyl_group(lat, h))
      if (!is_identity(r.conj[a][h])) return false;
  return true;
}

bool restrictions_injective(const TambaraFunctor& r) {
  for (const auto& [p, m] : r.res) {
    std::vector<bool> hit(r.levels[p.first].order(), false);
    for (Elem y : m) {
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

}  // namespace nakaoka
