#include "nakaoka/burnside.hpp"

#include <algorithm>
#include <limits>

#include "nakaoka/errors.hpp"

namespace nakaoka {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool is_prime_number(Integer n) {
  if (n < 2) return false;
  for (Integer d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string to_string(PrimeComparison c) {
  switch (c) {
    case PrimeComparison::equal: return "equal";
    case PrimeComparison::first_in_second: return "first_in_second";
    case PrimeComparison::second_in_first: return "second_in_first";
    case PrimeComparison::incomparable: return "incomparable";
  }
  return "incomparable";
}

TableOfMarks table_of_marks(const SubgroupLattice& lat, std::size_t h) {
  const auto& g = lat.group();
  const GroupMask hm = lat[h].members;
  TableOfMarks t;
  t.ambient = h;
  std::vector<bool> assigned(lat.size(), false);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (!lat.included(i, h) || assigned[i]) continue;
    t.classes.push_back(i);
    for (Elem x : mask_elements(hm)) assigned[lat.conjugate(x, i)] = true;
  }
  const std::size_t n = t.classes.size();
  t.marks.assign(n, IntVector(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t k = t.classes[c];
    const auto reps = left_coset_reps(g, lat[k].members, hm);
    for (std::size_t r = 0; r < n; ++r) {
      const GroupMask im = lat[t.classes[r]].members;
      Integer fixed = 0;
      for (Elem x : reps)
        if ((im & ~conjugate_mask(g, x, lat[k].members)) == 0) ++fixed;
      t.marks[r][c] = fixed;
    }
  }
  return t;
}

BurnsideFunctor::BurnsideFunctor(LatticePtr lat) : lat_(std::move(lat)) {
  const auto& l = *lat_;
  tables_.reserve(l.size());
  positions_.assign(l.size(), std::vector<std::size_t>(l.size(), npos));
  for (std::size_t h = 0; h < l.size(); ++h) {
    tables_.push_back(table_of_marks(l, h));
    const auto& cls = tables_.back().classes;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l.included(i, h)) continue;
      for (std::size_t c = 0; c < cls.size(); ++c) {
        bool conj = false;
        for (Elem x : mask_elements(l[h].members))
          if (l.conjugate(x, i) == cls[c]) {
            conj = true;
            break;
          }
        if (conj) {
          positions_[h][i] = c;
          break;
        }
      }
    }
  }
}

std::size_t BurnsideFunctor::class_position(std::size_t h, std::size_t i) const {
  const std::size_t pos = positions_[h][i];
  if (pos == npos)
    throw Error("NotASubgroup", lat_->name(i) + " is not contained in " + lat_->name(h));
  return pos;
}

BurnsideElement BurnsideFunctor::zero(std::size_t h) const {
  return {h, IntVector(rank(h), 0)};
}

BurnsideElement BurnsideFunctor::one(std::size_t h) const { return transitive(h, h); }

BurnsideElement BurnsideFunctor::transitive(std::size_t h, std::size_t k) const {
  BurnsideElement x = zero(h);
  x.coords[class_position(h, k)] = 1;
  return x;
}

BurnsideElement BurnsideFunctor::add(const BurnsideElement& x, const BurnsideElement& y) const {
  BurnsideElement z = x;
  for (std::size_t i = 0; i < z.coords.size(); ++i) z.coords[i] = checked_add(z.coords[i], y.coords[i]);
  return z;
}

BurnsideElement BurnsideFunctor::scale(Integer c, const BurnsideElement& x) const {
  BurnsideElement z = x;
  for (auto& v : z.coords) v = checked_mul(c, v);
  return z;
}

Integer BurnsideFunctor::mark_hom(const BurnsideElement& x, std::size_t i, Integer p) const {
  const auto& t = tables_[x.ambient];
  const std::size_t row = class_position(x.ambient, i);
  Integer v = 0;
  for (std::size_t c = 0; c < x.coords.size(); ++c)
    v = checked_add(v, checked_mul(x.coords[c], t.marks[row][c]));
  return p == 0 ? v : floor_mod(v, p);
}

IntVector BurnsideFunctor::mark_vector(const BurnsideElement& x) const {
  IntVector out;
  for (auto i : tables_[x.ambient].classes) out.push_back(mark_hom(x, i));
  return out;
}

BurnsideElement BurnsideFunctor::from_marks(std::size_t h, const IntVector& marks) const {
  const auto& m = tables_[h].marks;
  const std::size_t n = m.size();
  BurnsideElement x = zero(h);
  for (std::size_t k = n; k-- > 0;) {
    Integer rest = marks[k];
    for (std::size_t j = k + 1; j < n; ++j) rest = checked_sub(rest, checked_mul(m[k][j], x.coords[j]));
    if (rest % m[k][k] != 0)
      throw Error("NonIntegralResult", "mark vector is not in the image of A(" +
                                           lat_->name(h) + ")");
    x.coords[k] = rest / m[k][k];
  }
  return x;
}

BurnsideElement BurnsideFunctor::mul(const BurnsideElement& x, const BurnsideElement& y) const {
  if (x.ambient != y.ambient) throw Error("AmbientMismatch", "product of different ambients");
  auto mx = mark_vector(x);
  const auto my = mark_vector(y);
  for (std::size_t i = 0; i < mx.size(); ++i) mx[i] = checked_mul(mx[i], my[i]);
  return from_marks(x.ambient, mx);
}

BurnsideElement BurnsideFunctor::tr(const BurnsideElement& x, std::size_t h) const {
  const std::size_t k = x.ambient;
  if (!lat_->included(k, h)) throw Error("NotASubgroup", "transfer needs K <= H");
  BurnsideElement out = zero(h);
  const auto& cls = tables_[k].classes;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    auto& slot = out.coords[class_position(h, cls[c])];
    slot = checked_add(slot, x.coords[c]);
  }
  return out;
}

BurnsideElement BurnsideFunctor::res(const BurnsideElement& x, std::size_t k) const {
  const std::size_t h = x.ambient;
  if (!lat_->included(k, h)) throw Error("NotASubgroup", "restriction needs K <= H");
  BurnsideElement out = zero(k);
  const auto& cls = tables_[h].classes;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    if (x.coords[c] == 0) continue;
    // K-orbits of H/L: one per double coset, with stabilizer K ∩ g^-1 L g.
    const auto d = double_cosets(*lat_, cls[c], k, h);
    for (auto stab : d.stabilizers) {
      auto& slot = out.coords[class_position(k, lat_->index_of(stab))];
      slot = checked_add(slot, x.coords[c]);
    }
  }
  return out;
}

BurnsideElement BurnsideFunctor::res_via_marks(const BurnsideElement& x, std::size_t k) const {
  IntVector marks;
  for (auto i : tables_[k].classes) marks.push_back(mark_hom(x, i));
  return from_marks(k, marks);
}

BurnsideElement BurnsideFunctor::conj(const BurnsideElement& x, Elem g) const {
  const std::size_t k = x.ambient;
  const std::size_t gk = lat_->conjugate(g, k);
  BurnsideElement out = zero(gk);
  const auto& cls = tables_[k].classes;
  for (std::size_t c = 0; c < cls.size(); ++c) {
    auto& slot = out.coords[class_position(gk, lat_->conjugate(g, cls[c]))];
    slot = checked_add(slot, x.coords[c]);
  }
  return out;
}

BurnsideElement BurnsideFunctor::norm(const BurnsideElement& x, std::size_t h) const {
  const std::size_t k = x.ambient;
  if (!lat_->included(k, h)) throw Error("NotASubgroup", "norm needs K <= H");
  IntVector marks;
  for (auto l : tables_[h].classes) {
    // |Map_K(H, X)^L| = prod over K\H/L of |X^{K ∩ g L g^-1}|
    const auto d = double_cosets(*lat_, l, k, h);
    Integer v = 1;
    for (auto stab : d.stabilizers) v = checked_mul(v, mark_hom(x, lat_->index_of(stab)));
    marks.push_back(v);
  }
  return from_marks(h, marks);
}

IdealLattice BurnsideFunctor::prime_level(std::size_t k, Integer p, std::size_t h,
                                          std::size_t within) const {
  const auto& t = tables_[h];
  const GroupMask w = (*lat_)[within].members;
  IntMatrix rows;
  for (std::size_t r = 0; r < t.classes.size(); ++r)
    if (is_subconjugate_within(*lat_, t.classes[r], k, w)) rows.push_back(t.marks[r]);
  return {h, t.classes.size(), congruence_kernel(rows, t.classes.size(), p)};
}

bool BurnsideFunctor::contains(const IdealLattice& level, const BurnsideElement& x) const {
  return lattice_contains(level.basis, x.coords);
}

BurnsidePrime burnside_prime(const BurnsideFunctor& a, BurnsidePrimeSymbol s,
                             std::size_t within) {
  const auto& lat = a.lattice();
  if (s.characteristic != 0 && !is_prime_number(s.characteristic))
    throw Error("InvalidParameter", std::to_string(s.characteristic) + " is not prime");
  BurnsidePrime out{s, std::vector<IdealLattice>(lat.size())};
  for (std::size_t h = 0; h < lat.size(); ++h)
    if (lat.included(h, within)) out.levels[h] = a.prime_level(s.subgroup, s.characteristic, h, within);
  return out;
}

PrimeComparison compare_levels(const std::vector<IdealLattice>& a,
                               const std::vector<IdealLattice>& b,
                               const std::vector<std::size_t>& at) {
  bool a_in_b = true, b_in_a = true;
  for (auto h : at) {
    if (a_in_b && !lattice_includes(b[h].basis, a[h].basis)) a_in_b = false;
    if (b_in_a && !lattice_includes(a[h].basis, b[h].basis)) b_in_a = false;
  }
  if (a_in_b && b_in_a) return PrimeComparison::equal;
  if (a_in_b) return PrimeComparison::first_in_second;
  if (b_in_a) return PrimeComparison::second_in_first;
  return PrimeComparison::incomparable;
}

PrimeComparison burnside_prime_compare(const BurnsideFunctor& a, BurnsidePrimeSymbol s1,
                                       BurnsidePrimeSymbol s2) {
  const auto p1 = burnside_prime(a, s1);
  const auto p2 = burnside_prime(a, s2);
  return compare_levels(p1.levels, p2.levels, a.lattice().class_reps());
}

std::vector<Integer> default_prime_set(std::size_t group_order) {
  std::vector<Integer> primes{0};
  const auto n = static_cast<Integer>(group_order);
  for (Integer p = 2; p <= n; ++p)
    if (is_prime_number(p) && n % p == 0) primes.push_back(p);
  for (Integer p = 2;; ++p)
    if (is_prime_number(p) && n % p != 0) {
      primes.push_back(p);
      break;
    }
  return primes;
}

std::string symbol_name(const SubgroupLattice& lat, BurnsidePrimeSymbol s) {
  return "p{" + lat.name(s.subgroup) + "," + std::to_string(s.characteristic) + "}";
}

}  // namespace nakaoka
