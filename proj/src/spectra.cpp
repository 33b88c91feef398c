#include "nakaoka/spectra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "nakaoka/errors.hpp"

namespace nakaoka {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::enumerated: return "enumerated";
    case Provenance::classified_burnside: return "classified-burnside";
    case Provenance::classified_ghost: return "classified-ghost";
    case Provenance::classified_fp: return "classified-fp";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::truncation_limited: return "truncation-limited";
  }
  return "?";
}

PointSet Spectrum::all() const {
  PointSet out(size());
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

namespace {

std::vector<bool> as_mask(const Spectrum& s, const PointSet& subset) {
  std::vector<bool> m(s.size(), false);
  for (auto i : subset) {
    if (i >= s.size()) throw Error("InvalidParameter", "point " + std::to_string(i) + " out of range");
    m[i] = true;
  }
  return m;
}

PointSet from_mask(const std::vector<bool>& m) {
  PointSet out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(i);
  return out;
}

PointSet normalized(PointSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

// (p in S, q outside S, p <= q), or nullopt when S is upward closed.
std::optional<std::pair<std::size_t, std::size_t>> escape(const Spectrum& s, const std::vector<bool>& in) {
  for (std::size_t p = 0; p < s.size(); ++p)
    if (in[p])
      for (std::size_t q = 0; q < s.size(); ++q)
        if (!in[q] && s.leq[p][q]) return std::pair{p, q};
  return std::nullopt;
}

void fill_order(Spectrum& s) {
  const auto n = s.size();
  s.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s.leq[i][j] = s.ideals[i].is_subset_of(s.ideals[j]);
}

void require_functor_spectrum(const Spectrum& s, const char* what) {
  if (s.provenance == Provenance::classified_burnside)
    throw Error("InvalidParameter", std::string(what) + " needs a spectrum of a finite functor");
}

}  // namespace

// ---- finite spectra ---------------------------------------------------------

Spectrum spec_bruteforce(const FunctorPtr& r, std::size_t bound) {
  Spectrum s;
  s.provenance = Provenance::enumerated;
  s.lattice = r->lattice;
  s.functor = r;
  for (auto& i : enumerate_tambara_ideals(r, bound))
    if (!i.is_unit() && is_prime(i)) s.ideals.push_back(std::move(i));
  for (std::size_t i = 0; i < s.ideals.size(); ++i) s.labels.push_back("P" + std::to_string(i + 1));
  fill_order(s);
  return s;
}

std::optional<std::size_t> find_point(const Spectrum& s, const TambaraIdeal& p) {
  for (std::size_t i = 0; i < s.ideals.size(); ++i)
    if (s.ideals[i] == p) return i;
  return std::nullopt;
}

PointSet v_of(const Spectrum& s, const TambaraIdeal& i) {
  require_functor_spectrum(s, "v_of");
  PointSet out;
  for (std::size_t k = 0; k < s.ideals.size(); ++k)
    if (i.is_subset_of(s.ideals[k])) out.push_back(k);
  return out;
}

PointSet v_of_point(const Spectrum& s, std::size_t point) {
  PointSet out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s.leq[point][k]) out.push_back(k);
  return out;
}

PointSet closure(const Spectrum& s, const PointSet& subset) {
  const auto in = as_mask(s, subset);
  std::vector<bool> out(s.size(), false);
  for (std::size_t p = 0; p < s.size(); ++p)
    if (in[p])
      for (std::size_t q = 0; q < s.size(); ++q)
        if (s.leq[p][q]) out[q] = true;
  return from_mask(out);
}

PointSet complement(const Spectrum& s, const PointSet& subset) {
  auto in = as_mask(s, subset);
  in.flip();
  return from_mask(in);
}

TopologyVerdict topology(const Spectrum& s, const PointSet& subset) {
  TopologyVerdict v;
  v.subset = normalized(subset);
  const auto in = as_mask(s, v.subset);
  auto out = in;
  out.flip();

  if (auto w = escape(s, in)) {
    v.closed = Verdict::no;
    v.not_closed_witness = w;
  } else if (!s.truncated()) {
    v.closed = Verdict::yes;
    // S = V(intersection of its minimal points): a prime containing a finite
    // intersection contains one of the ideals.
    TambaraIdeal i = unit_ideal(s.functor);
    for (auto p : v.subset) {
      bool minimal = true;
      for (auto q : v.subset) minimal = minimal && (q == p || !s.leq[q][p] || s.leq[p][q]);
      if (minimal) i = ideal_intersection(i, s.ideals[p]);
    }
    if (v_of(s, i) != v.subset) throw Error("InternalError", "closed set is not V of its minimal points");
    v.closed_ideal = std::move(i);
  } else if (v.subset.empty()) {
    v.closed = Verdict::yes;
  } else {
    v.closed = Verdict::truncation_limited;
    for (auto p : v.subset)
      if (v_of_point(s, p) == v.subset) {
        v.closed = Verdict::yes;
        v.closed_point = p;
        break;
      }
  }

  if (auto w = escape(s, out)) {
    v.open = Verdict::no;
    v.not_open_witness = w;
  } else if (!s.truncated() || v.subset.empty() || v.subset.size() == s.size()) {
    v.open = Verdict::yes;
  } else {
    v.open = Verdict::truncation_limited;
  }
  return v;
}

std::vector<std::size_t> spec_map(const TambaraMorphism& f, const Spectrum& source, const Spectrum& target) {
  require_functor_spectrum(source, "spec_map");
  require_functor_spectrum(target, "spec_map");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < target.size(); ++j) {
    const auto c = contract(f, target.ideals[j]);
    if (c.is_unit() || !is_prime(c))
      throw Error("ContractionNotPrime", "contraction of " + target.labels[j] + " is " + render_ideal(c));
    const auto i = find_point(source, c);
    if (!i) throw Error("InternalError", "contraction of " + target.labels[j] + " missing from the source spectrum");
    out.push_back(*i);
  }
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b)
      if (target.leq[a][b] && !source.leq[out[a]][out[b]])
        throw Error("InternalError", "contraction is not order preserving");
  return out;
}

// ---- Burnside ---------------------------------------------------------------

Spectrum spec_burnside(const BurnsideFunctor& a, const std::vector<Integer>& primes) {
  const auto& lat = a.lattice();
  Spectrum s;
  s.provenance = Provenance::classified_burnside;
  s.lattice = a.lattice_ptr();
  s.prime_set = primes;
  for (auto k : lat.class_reps())
    for (auto p : primes) {
      auto bp = burnside_prime(a, {k, p});
      bool merged = false;
      for (std::size_t i = 0; i < s.size() && !merged; ++i)
        if (compare_levels(s.burnside_levels[i], bp.levels, lat.class_reps()) == PrimeComparison::equal) {
          s.symbols[i].push_back(bp.symbol);
          s.labels[i] += "=" + symbol_name(lat, bp.symbol);
          merged = true;
        }
      if (merged) continue;
      s.symbols.push_back({bp.symbol});
      s.labels.push_back(symbol_name(lat, bp.symbol));
      s.burnside_levels.push_back(std::move(bp.levels));
    }
  const auto n = s.size();
  s.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = compare_levels(s.burnside_levels[i], s.burnside_levels[j], lat.class_reps());
      s.leq[i][j] = c == PrimeComparison::equal || c == PrimeComparison::first_in_second;
    }
  return s;
}

std::optional<std::size_t> find_point(const Spectrum& s, BurnsidePrimeSymbol symbol) {
  const auto& lat = *s.lattice;
  for (std::size_t i = 0; i < s.symbols.size(); ++i)
    for (const auto& t : s.symbols[i])
      if (t.characteristic == symbol.characteristic &&
          lat.class_of(t.subgroup) == lat.class_of(symbol.subgroup))
        return i;
  return std::nullopt;
}

namespace {

// Levels (at class representatives of G) of the contraction of a prime q of
// A_H along A -> CoInd_H Res_H A: y in A(L) lies in it iff
// res^{xLx^-1}_{H ∩ xLx^-1} c_x y lies in q for every double coset H x L.
std::vector<IdealLattice> contract_burnside(const BurnsideFunctor& a, std::size_t h,
                                            const std::vector<IdealLattice>& q) {
  const auto& lat = a.lattice();
  std::vector<IdealLattice> out(lat.size());
  for (auto l : lat.class_reps()) {
    const auto dc = double_cosets(lat, h, l, lat.whole());
    const std::size_t n = a.rank(l);
    IntMatrix map;     // rows: stacked coordinates of all B_x
    IntMatrix target;  // block diagonal q(B_x)
    std::vector<std::vector<BurnsideElement>> images(n);
    for (std::size_t t = 0; t < dc.reps.size(); ++t) {
      const Elem x = dc.reps[t];
      const std::size_t b = lat.conjugate(x, lat.index_of(dc.stabilizers[t]));
      const std::size_t offset = map.size();
      const std::size_t m = a.rank(b);
      for (std::size_t r = 0; r < m; ++r) map.push_back(IntVector(n, 0));
      for (std::size_t j = 0; j < n; ++j) {
        BurnsideElement e = a.zero(l);
        e.coords[j] = 1;
        const auto img = a.res(a.conj(e, x), b);
        for (std::size_t r = 0; r < m; ++r) map[offset + r][j] = img.coords[r];
      }
      for (const auto& row : q[b].basis) {
        IntVector padded;
        padded.reserve(offset + m);
        padded.assign(offset, 0);
        padded.insert(padded.end(), row.begin(), row.end());
        target.push_back(std::move(padded));
      }
    }
    for (auto& row : target) row.resize(map.size(), 0);
    out[l] = {l, n, lattice_preimage(map, n, target)};
  }
  return out;
}

std::optional<std::size_t> find_levels(const Spectrum& s, const std::vector<IdealLattice>& levels) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (compare_levels(s.burnside_levels[i], levels, s.lattice->class_reps()) == PrimeComparison::equal) return i;
  return std::nullopt;
}

}  // namespace

Stratification stratify_burnside(const BurnsideFunctor& a, const std::vector<Integer>& primes) {
  const auto& lat = a.lattice();
  Stratification out;
  out.spectrum = spec_burnside(a, primes);
  out.dedekind = is_dedekind(lat);
  const auto& spec = out.spectrum;
  if (!out.dedekind)
    out.notes.push_back("not Dedekind: comparison with V(p_{H,0}) not applicable");
  const auto generic = find_point(spec, BurnsidePrimeSymbol{lat.whole(), 0});
  for (auto h : lat.class_reps()) {
    Stratum st;
    st.subgroup = h;
    for (std::size_t k = 0; k < lat.size(); ++k) {
      if (!lat.included(k, h)) continue;
      for (auto p : primes) {
        const auto q = burnside_prime(a, {k, p}, h);
        const auto c = contract_burnside(a, h, q.levels);
        const auto at = find_levels(spec, c);
        if (!at)
          throw Error("ContractionNotPrime", "contraction of " + symbol_name(lat, {k, p}) + " from " +
                                                 lat.name(h) + " matches no classified prime");
        st.points.push_back(*at);
      }
    }
    st.points = normalized(st.points);

    for (std::size_t i = 0; i < spec.size(); ++i)
      for (const auto& t : spec.symbols[i])
        if (is_subconjugate(lat, t.subgroup, h)) {
          st.by_classification.push_back(i);
          break;
        }
    st.matches_classification = st.points == st.by_classification;

    const auto rational = find_point(spec, BurnsidePrimeSymbol{h, 0});
    if (rational) st.by_v_of = v_of_point(spec, *rational);
    if (out.dedekind) st.matches_v_of = rational && st.points == st.by_v_of;

    st.verdict = topology(spec, st.points);
    if (out.dedekind && rational && st.points == st.by_v_of) {
      st.verdict.closed = Verdict::yes;
      st.verdict.closed_point = rational;
    }
    // the generic point lies below everything and outside every proper stratum
    if (generic && rational && h != lat.whole() &&
        !std::binary_search(st.points.begin(), st.points.end(), *generic) &&
        std::binary_search(st.points.begin(), st.points.end(), *rational)) {
      st.verdict.open = Verdict::no;
      st.verdict.not_open_witness = std::pair{*generic, *rational};
    }
    out.strata.push_back(std::move(st));
  }
  return out;
}

// ---- strata of finite functors -------------------------------------------------

namespace {

PointSet stratum_by_contraction(const FunctorPtr& r, const Spectrum& spec, std::size_t h, std::size_t bound) {
  const auto cu = coind_unit(r, h);
  const auto local = spec_bruteforce(cu.restriction.functor, bound);
  PointSet pts;
  for (std::size_t i = 0; i < local.size(); ++i) {
    const auto j = coind_ideal(cu.coinduction, local.ideals[i]);
    const auto c = contract(cu.unit, j);
    if (c.is_unit() || !is_prime(c))
      throw Error("ContractionNotPrime", "contraction from " + r->lattice->name(h) + " is " + render_ideal(c));
    const auto at = find_point(spec, c);
    if (!at) throw Error("InternalError", "contracted prime missing from the spectrum");
    pts.push_back(*at);
  }
  return normalized(pts);
}

}  // namespace

Stratification stratify(const FunctorPtr& r, std::size_t bound) {
  const auto& lat = *r->lattice;
  Stratification out;
  out.spectrum = spec_bruteforce(r, bound);
  out.dedekind = is_dedekind(lat);
  for (auto h : lat.class_reps()) {
    Stratum st;
    st.subgroup = h;
    st.points = stratum_by_contraction(r, out.spectrum, h, bound);
    st.verdict = topology(out.spectrum, st.points);
    out.strata.push_back(std::move(st));
  }
  return out;
}

// ---- ghost ------------------------------------------------------------------

GhostStratum stratum_ghost(const FunctorPtr& r, std::size_t bound) {
  GhostStratum out;
  out.ghost = ghost(r);
  const auto& g = out.ghost;
  const auto& gf = g.functor;
  const std::size_t top = gf->lattice->whole();
  const auto& bottom = gf->levels[0];
  const auto& gtop = gf->levels[top];
  out.spectrum = spec_bruteforce(gf, bound);
  out.transfer_surjective = g.transfer_ideal.count() == r->levels[top].order();

  auto top_level = [&](const ElementSet& b, const std::function<bool(Elem)>& quotient_ok) {
    ElementSet t(gtop.order());
    for (Elem y = 0; y < gtop.order(); ++y)
      if (b.contains(g.fixed.embed[g.top_layout.component(y, 0)]) && quotient_ok(g.top_layout.component(y, 1)))
        t.insert(y);
    return t;
  };
  bool all_valid = true;
  auto classify = [&](std::vector<ElementSet> levels, PointSet& family) {
    if (ideal_violation(*gf, levels)) {
      all_valid = false;
      return;
    }
    TambaraIdeal i{gf, std::move(levels)};
    if (i.is_unit() || !is_prime(i)) {
      all_valid = false;
      return;
    }
    if (auto at = find_point(out.spectrum, i)) family.push_back(*at);
    else all_valid = false;
    out.classified.push_back(std::move(i));
  };

  // (p; R/Tr): p a C_p-prime of the bottom level
  const auto bg = bottom_gring(*gf);
  for (const auto& p : G_prime_ideals(bg)) classify({p, top_level(p, [](Elem) { return true; })}, out.classified_restricted);
  // (Nm^-1 q; q): x -> [Nm x] is a ring map into R(C_p/C_p)/Tr
  for (const auto& q : prime_ideals(g.quotient.ring)) {
    ElementSet b(bottom.order());
    for (Elem x = 0; x < bottom.order(); ++x)
      if (q.contains(g.top_layout.component(gf->norm(0, top, x), 1))) b.insert(x);
    classify({b, top_level(b, [&](Elem c) { return q.contains(c); })}, out.classified_norm);
  }
  out.classified_restricted = normalized(out.classified_restricted);
  out.classified_norm = normalized(out.classified_norm);
  PointSet both = out.classified_restricted;
  both.insert(both.end(), out.classified_norm.begin(), out.classified_norm.end());
  both = normalized(both);
  out.classification_matches = all_valid && both == out.spectrum.all() &&
                               both.size() == out.classified_restricted.size() + out.classified_norm.size();

  out.e_stratum = stratum_by_contraction(gf, out.spectrum, 0, bound);
  out.e_stratum_matches = out.e_stratum == out.classified_restricted;
  out.verdict = topology(out.spectrum, out.e_stratum);
  return out;
}

// ---- fixed points -------------------------------------------------------------

TambaraIdeal gprime_to_prime(const GRing& s, const FixedPoints& fp, const ElementSet& ideal) {
  if (!is_G_prime(s, ideal)) throw Error("InvalidParameter", "ideal " + render_set(s.ring, ideal) + " is not G-prime");
  const auto q = quotient_gring(s, ideal);
  const auto fq = fixed_point_functor(q.ring);
  const auto k = kernel(fp_morphism(fp, fq, q.project));
  if (k.is_unit() || !is_prime(k)) throw Error("InternalError", "kernel of FP(S) -> FP(S/I) is not prime");
  ElementSet bottom(s.ring.order());
  k.levels[0].for_each([&](Elem x) { bottom.insert(fp.levels[0].embed[x]); });
  if (!(bottom == ideal)) throw Error("InternalError", "kernel of FP(S) -> FP(S/I) has the wrong bottom level");
  return k;
}

FpComparison spec_fp(const GRing& s, std::size_t bound) {
  FpComparison out;
  const auto fp = fixed_point_functor(s);
  const auto& fixed = fp.levels[s.lattice->whole()];
  out.g_primes = G_prime_ideals(s);
  out.spectrum = spec_bruteforce(fp.functor, bound);
  out.fixed_primes = prime_ideals(fixed.ring);

  auto meet_fixed = [&](const ElementSet& ambient) {
    ElementSet t(fixed.ring.order());
    for (Elem y = 0; y < fixed.ring.order(); ++y)
      if (ambient.contains(fixed.embed[y])) t.insert(y);
    return t;
  };
  auto index_in = [](const std::vector<ElementSet>& v, const ElementSet& x) {
    const auto it = std::find(v.begin(), v.end(), x);
    return it == v.end() ? SubringView::npos : static_cast<std::size_t>(it - v.begin());
  };
  constexpr auto npos = SubringView::npos;

  for (const auto& i : out.g_primes) {
    const auto at = find_point(out.spectrum, gprime_to_prime(s, fp, i));
    out.g_to_fp.push_back(at ? *at : npos);
    out.g_to_fixed.push_back(index_in(out.fixed_primes, meet_fixed(i)));
  }
  for (const auto& p : out.spectrum.ideals) {
    ElementSet bottom(s.ring.order());
    p.levels[0].for_each([&](Elem x) { bottom.insert(fp.levels[0].embed[x]); });
    out.fp_to_fixed.push_back(index_in(out.fixed_primes, meet_fixed(bottom)));
  }

  auto bijection = [npos](const std::vector<std::size_t>& m, std::size_t target) {
    if (m.size() != target) return false;
    std::set<std::size_t> seen(m.begin(), m.end());
    return seen.size() == m.size() && !seen.contains(npos);
  };
  out.bijective = bijection(out.g_to_fp, out.spectrum.size()) &&
                  bijection(out.fp_to_fixed, out.fixed_primes.size()) &&
                  bijection(out.g_to_fixed, out.fixed_primes.size());
  if (!out.bijective) return out;

  bool iso = true;
  const auto n = out.g_primes.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      iso = iso && out.g_primes[a].is_subset_of(out.g_primes[b]) == out.spectrum.leq[out.g_to_fp[a]][out.g_to_fp[b]];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      iso = iso && out.spectrum.leq[a][b] ==
                       out.fixed_primes[out.fp_to_fixed[a]].is_subset_of(out.fixed_primes[out.fp_to_fixed[b]]);
  out.order_isomorphic = iso;
  out.commutes = true;
  for (std::size_t a = 0; a < n; ++a) out.commutes = out.commutes && out.fp_to_fixed[out.g_to_fp[a]] == out.g_to_fixed[a];
  return out;
}

// ---- domain-like, clarified -----------------------------------------------------

DomainLikeVerdict is_domain_like(const FunctorPtr& r) {
  DomainLikeVerdict v;
  const auto zero = zero_ideal(r);
  v.domain_like = !zero.is_unit() && is_prime(zero);
  v.restrictions_injective = restrictions_injective(*r);
  const auto bg = bottom_gring(*r);
  if (bg.ring.order() > 1) {
    ElementSet z(bg.ring.order());
    z.insert(bg.ring.zero());
    v.bottom_g_prime = is_G_prime(bg, z);
  }
  if (v.restrictions_injective && v.bottom_g_prime) v.consistent = *v.bottom_g_prime == v.domain_like;
  return v;
}

ClarifiedDecomposition clarified_decomposition(const FunctorPtr& r) {
  ClarifiedDecomposition out;
  FunctorPtr current = r;
  std::vector<std::size_t> to_original(r->lattice->size());
  std::iota(to_original.begin(), to_original.end(), std::size_t{0});
  while (true) {
    const auto& lat = *current->lattice;
    const auto bg = bottom_gring(*current);
    if (is_clarified(bg)) {
      out.already_clarified = out.steps.empty();
      out.complete = true;
      break;
    }
    std::vector<std::pair<Elem, std::size_t>> candidates;
    for (auto [d, h] : find_type_H_idempotents(bg))
      if (h != lat.whole() && orbit_sum(bg, d, h) == bg.ring.one()) candidates.emplace_back(d, h);
    if (candidates.empty()) {
      out.steps.push_back("stuck: no type-H idempotent with orbit sum 1");
      break;
    }
    std::sort(candidates.begin(), candidates.end(), [&](const auto& x, const auto& y) {
      return std::pair{lat[x.second].order, x.first} < std::pair{lat[y.second].order, y.first};
    });
    const auto [d, h] = candidates.front();
    const auto split = split_by_idempotent(current, d, h);
    out.steps.push_back("split along " + bg.ring.label(d) + " of type " + lat.name(h));
    std::vector<std::size_t> next(split.restriction.ambient_level.size());
    for (std::size_t j = 0; j < next.size(); ++j) next[j] = to_original[split.restriction.ambient_level[j]];
    to_original = std::move(next);
    current = split.part;
  }
  out.functor = current;
  out.subgroup = to_original[current->lattice->whole()];
  return out;
}

}  // namespace nakaoka
