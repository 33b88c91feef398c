#include "nakaoka/rings.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "nakaoka/errors.hpp"

namespace nakaoka {

namespace {

bool is_prime_number(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s + ")";
}

std::string element_name(std::size_t i) { return std::to_string(i); }

void sort_sets(std::vector<ElementSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.elements() < b.elements();
  });
}

}  // namespace

FiniteRing::FiniteRing() : add_{{0}}, mul_{{0}}, neg_{0}, name_("0"), labels_{"0"} {}

FiniteRing FiniteRing::trusted(Table add, Table mul, std::string name,
                               std::vector<std::string> labels) {
  FiniteRing r;
  const std::size_t n = add.size();
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.name_ = std::move(name);
  for (Elem z = 0; z < n; ++z) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = r.add_[z][x] == x;
    if (ok) {
      r.zero_ = z;
      break;
    }
  }
  for (Elem u = 0; u < n; ++u) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = r.mul_[u][x] == x;
    if (ok) {
      r.one_ = u;
      break;
    }
  }
  r.neg_.assign(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (r.add_[x][y] == r.zero_) {
        r.neg_[x] = y;
        break;
      }
  if (labels.size() != n) {
    labels.clear();
    for (std::size_t i = 0; i < n; ++i) labels.push_back(element_name(i));
  }
  r.labels_ = std::move(labels);
  return r;
}

FiniteRing FiniteRing::from_tables(Table add, Table mul, std::string name,
                                   std::vector<std::string> labels) {
  const std::size_t n = add.size();
  auto fail = [](const std::string& what) { throw Error("NotARing", what); };
  if (n == 0 || n > kMaxRingOrder) fail("order must be between 1 and " + std::to_string(kMaxRingOrder));
  if (mul.size() != n) fail("add and mul tables differ in size");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n) fail("row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j)
      if (add[i][j] >= n || mul[i][j] >= n) fail("entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (!labels.empty() && labels.size() != n) fail("label count differs from order");
  auto t = [](Elem a, Elem b, Elem c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (add[a][b] != add[b][a]) fail("addition not commutative at " + t(a, b, 0));
      if (mul[a][b] != mul[b][a]) fail("multiplication not commutative at " + t(a, b, 0));
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (add[add[a][b]][c] != add[a][add[b][c]]) fail("addition not associative at " + t(a, b, c));
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) fail("multiplication not associative at " + t(a, b, c));
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) fail("not distributive at " + t(a, b, c));
      }
  auto r = trusted(std::move(add), std::move(mul), std::move(name), std::move(labels));
  for (Elem x = 0; x < n; ++x) {
    if (r.add_[r.zero_][x] != x) fail("no additive identity");
    if (r.mul_[r.one_][x] != x) fail("no multiplicative identity");
    if (r.add_[x][r.neg_[x]] != r.zero_) fail("no additive inverse of " + std::to_string(x));
  }
  return r;
}

FiniteRing FiniteRing::zmod(std::size_t n) {
  if (n == 0 || n > kMaxRingOrder) throw Error("InvalidParameter", "Z/n needs 1 <= n <= " + std::to_string(kMaxRingOrder));
  Table add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = static_cast<Elem>((a + b) % n);
      mul[a][b] = static_cast<Elem>((a * b) % n);
    }
  }
  return trusted(std::move(add), std::move(mul), "Z/" + std::to_string(n), std::move(labels));
}

FiniteRing FiniteRing::galois_field(std::size_t q) {
  if (is_prime_number(q)) {
    auto r = zmod(q);
    r.name_ = "F" + std::to_string(q);
    return r;
  }
  // Irreducible x^k = -(c_0 + c_1 x + ... ) written as coefficients of x^k.
  std::size_t p = 0, k = 0;
  IntVector reduction;
  switch (q) {
    case 4: p = 2, k = 2, reduction = {1, 1}; break;       // x^2 = x + 1
    case 8: p = 2, k = 3, reduction = {1, 1, 0}; break;    // x^3 = x + 1
    case 9: p = 3, k = 2, reduction = {2, 0}; break;       // x^2 = -1
    case 16: p = 2, k = 4, reduction = {1, 1, 0, 0}; break;  // x^4 = x + 1
    default: throw Error("InvalidParameter", "F_q supported for q prime or q in {4,8,9,16}");
  }
  // a^i a^j = a^{i+j}, reduced.
  std::vector<IntVector> powers;  // a^m for m < 2k-1
  for (std::size_t m = 0; m + 1 < 2 * k; ++m) {
    IntVector v(k, 0);
    if (m < k) {
      v[m] = 1;
    } else {
      const auto& prev = powers[m - 1];
      // multiply prev by a
      IntVector w(k, 0);
      for (std::size_t i = 0; i + 1 < k; ++i) w[i + 1] = prev[i];
      for (std::size_t i = 0; i < k; ++i) w[i] = (w[i] + prev[k - 1] * reduction[i]) % static_cast<Integer>(p);
      v = w;
    }
    powers.push_back(v);
  }
  std::vector<std::vector<IntVector>> prod(k, std::vector<IntVector>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i][j] = powers[i + j];
  std::vector<std::string> names{"1", "a"};
  for (std::size_t i = 2; i < k; ++i) names.push_back("a^" + std::to_string(i));
  auto r = algebra(p, k, prod, "F" + std::to_string(q));
  // polynomial labels
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < r.order(); ++x) {
    std::string s;
    std::size_t v = x;
    std::vector<std::string> terms;
    for (std::size_t i = 0; i < k; ++i, v /= p) {
      const std::size_t c = v % p;
      if (c == 0) continue;
      if (i == 0) terms.push_back(std::to_string(c));
      else terms.push_back((c == 1 ? "" : std::to_string(c)) + names[i]);
    }
    std::reverse(terms.begin(), terms.end());
    for (std::size_t t = 0; t < terms.size(); ++t) s += (t ? "+" : "") + terms[t];
    labels.push_back(s.empty() ? "0" : s);
  }
  r.labels_ = std::move(labels);
  return r;
}

FiniteRing FiniteRing::algebra(std::size_t q, std::size_t dim,
                               const std::vector<std::vector<IntVector>>& basis_product,
                               std::string name) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    n *= q;
    if (n > kMaxRingOrder) throw Error("OrderBoundExceeded", "algebra order exceeds " + std::to_string(kMaxRingOrder));
  }
  auto digits = [&](std::size_t x) {
    IntVector d(dim);
    for (std::size_t i = 0; i < dim; ++i, x /= q) d[i] = static_cast<Integer>(x % q);
    return d;
  };
  auto index = [&](const IntVector& d) {
    std::size_t x = 0;
    for (std::size_t i = dim; i-- > 0;) x = x * q + static_cast<std::size_t>(floor_mod(d[i], static_cast<Integer>(q)));
    return static_cast<Elem>(x);
  };
  std::vector<IntVector> dig(n);
  for (std::size_t x = 0; x < n; ++x) dig[x] = digits(x);
  Table add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      IntVector s(dim), p(dim, 0);
      for (std::size_t i = 0; i < dim; ++i) s[i] = dig[a][i] + dig[b][i];
      for (std::size_t i = 0; i < dim; ++i) {
        if (!dig[a][i]) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          if (!dig[b][j]) continue;
          const auto& bp = basis_product[i][j];
          for (std::size_t k = 0; k < dim; ++k) p[k] += dig[a][i] * dig[b][j] * bp[k];
        }
      }
      add[a][b] = add[b][a] = index(s);
      mul[a][b] = mul[b][a] = index(p);
    }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) labels.push_back(element_name(x));
  return trusted(std::move(add), std::move(mul), std::move(name), std::move(labels));
}

ProductLayout::ProductLayout(std::vector<std::size_t> factor_orders) : orders(std::move(factor_orders)) {
  std::size_t s = 1;
  for (auto o : orders) {
    strides.push_back(s);
    s *= o;
  }
}

std::size_t ProductLayout::total() const {
  std::size_t t = 1;
  for (auto o : orders) t *= o;
  return t;
}

std::vector<Elem> ProductLayout::split(Elem x) const {
  std::vector<Elem> parts(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) parts[i] = component(x, i);
  return parts;
}

Elem ProductLayout::join(const std::vector<Elem>& parts) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) x += parts[i] * strides[i];
  return static_cast<Elem>(x);
}

FiniteRing FiniteRing::product(const std::vector<const FiniteRing*>& factors) {
  std::vector<std::size_t> orders;
  for (auto* f : factors) orders.push_back(f->order());
  ProductLayout layout(orders);
  const std::size_t n = layout.total();
  if (n > kMaxRingOrder) throw Error("OrderBoundExceeded", "product ring order " + std::to_string(n) + " exceeds " + std::to_string(kMaxRingOrder));
  std::vector<std::vector<Elem>> parts(n);
  for (std::size_t x = 0; x < n; ++x) parts[x] = layout.split(static_cast<Elem>(x));
  Table add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  std::vector<Elem> ps(factors.size()), pm(factors.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i) {
        ps[i] = factors[i]->add(parts[a][i], parts[b][i]);
        pm[i] = factors[i]->mul(parts[a][i], parts[b][i]);
      }
      add[a][b] = layout.join(ps);
      mul[a][b] = layout.join(pm);
    }
  std::vector<std::string> labels;
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? " x " : "") + factors[i]->name();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::string> ls;
    for (std::size_t i = 0; i < factors.size(); ++i) ls.push_back(factors[i]->label(parts[x][i]));
    labels.push_back(tuple_label(ls));
  }
  if (factors.empty()) return FiniteRing();
  return trusted(std::move(add), std::move(mul), name, std::move(labels));
}

Elem FiniteRing::from_int(Integer n) const {
  Elem acc = zero_, base = n >= 0 ? one_ : neg_[one_];
  std::uint64_t k = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1;
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

Elem FiniteRing::power(Elem a, std::size_t k) const {
  Elem acc = one_, base = a;
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

Elem SubringView::to_local(Elem ambient) const {
  if (local[ambient] == npos) throw Error("NotInSubring", "element " + std::to_string(ambient) + " outside subring");
  return static_cast<Elem>(local[ambient]);
}

SubringView subset_ring(const FiniteRing& r, const ElementSet& members,
                        const std::string& name) {
  SubringView v;
  v.embed = members.elements();
  v.local.assign(r.order(), SubringView::npos);
  for (std::size_t i = 0; i < v.embed.size(); ++i) v.local[v.embed[i]] = i;
  const std::size_t n = v.embed.size();
  FiniteRing::Table add(n, std::vector<Elem>(n)), mul(n, std::vector<Elem>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(r.label(v.embed[a]));
    for (std::size_t b = 0; b < n; ++b) {
      add[a][b] = v.to_local(r.add(v.embed[a], v.embed[b]));
      mul[a][b] = v.to_local(r.mul(v.embed[a], v.embed[b]));
    }
  }
  v.ring = FiniteRing::from_trusted_tables(std::move(add), std::move(mul), name, std::move(labels));
  return v;
}

QuotientRing quotient(const FiniteRing& r, const ElementSet& ideal) {
  const std::size_t n = r.order();
  const auto members = ideal.elements();
  std::vector<Elem> rep(n);
  for (Elem x = 0; x < n; ++x) {
    Elem best = x;
    for (Elem i : members) best = std::min(best, r.add(x, i));
    rep[x] = best;
  }
  QuotientRing q;
  std::vector<std::size_t> index(n, SubringView::npos);
  for (Elem x = 0; x < n; ++x)
    if (rep[x] == x) {
      index[x] = q.lift.size();
      q.lift.push_back(x);
    }
  q.project.resize(n);
  for (Elem x = 0; x < n; ++x) q.project[x] = static_cast<Elem>(index[rep[x]]);
  const std::size_t m = q.lift.size();
  FiniteRing::Table add(m, std::vector<Elem>(m)), mul(m, std::vector<Elem>(m));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back("[" + r.label(q.lift[a]) + "]");
    for (std::size_t b = 0; b < m; ++b) {
      add[a][b] = q.project[r.add(q.lift[a], q.lift[b])];
      mul[a][b] = q.project[r.mul(q.lift[a], q.lift[b])];
    }
  }
  q.ring = FiniteRing::from_trusted_tables(std::move(add), std::move(mul), r.name() + "/I", std::move(labels));
  return q;
}

bool is_ring_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  const auto m = s.elements();
  for (Elem a : m) {
    for (Elem b : m)
      if (!s.contains(r.add(a, b))) return false;
    for (Elem x = 0; x < r.order(); ++x)
      if (!s.contains(r.mul(x, a))) return false;
  }
  return true;
}

ElementSet principal_ideal(const FiniteRing& r, Elem x) {
  ElementSet s(r.order());
  for (Elem y = 0; y < r.order(); ++y) s.insert(r.mul(y, x));
  return s;
}

ElementSet ideal_sum(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  ElementSet s(r.order());
  const auto mb = b.elements();
  a.for_each([&](Elem x) {
    for (Elem y : mb) s.insert(r.add(x, y));
  });
  return s;
}

ElementSet ideal_closure(const FiniteRing& r, const ElementSet& gens) {
  ElementSet s(r.order());
  s.insert(r.zero());
  gens.for_each([&](Elem g) {
    if (!s.contains(g)) s = ideal_sum(r, s, principal_ideal(r, g));
  });
  return s;
}

std::vector<Elem> ideal_generators(const FiniteRing& r, const ElementSet& ideal) {
  std::vector<Elem> gens;
  ElementSet s(r.order());
  s.insert(r.zero());
  ideal.for_each([&](Elem x) {
    if (s.contains(x)) return;
    gens.push_back(x);
    s = ideal_sum(r, s, principal_ideal(r, x));
  });
  return gens;
}

ElementSet image_set(const std::vector<Elem>& map, const ElementSet& s, std::size_t target_order) {
  ElementSet out(target_order);
  s.for_each([&](Elem x) { out.insert(map[x]); });
  return out;
}

ElementSet preimage_set(const std::vector<Elem>& map, const ElementSet& s) {
  ElementSet out(map.size());
  for (Elem x = 0; x < map.size(); ++x)
    if (s.contains(map[x])) out.insert(x);
  return out;
}

std::vector<Elem> idempotents(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x)
    if (r.is_idempotent(x)) out.push_back(x);
  return out;
}

std::vector<ElementSet> enumerate_ring_ideals_bruteforce(const FiniteRing& r) {
  std::vector<ElementSet> principals;
  {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Elem x = 0; x < r.order(); ++x) {
      auto p = principal_ideal(r, x);
      if (seen.insert(p).second) principals.push_back(std::move(p));
    }
  }
  ElementSet zero(r.order());
  zero.insert(r.zero());
  std::unordered_set<ElementSet, ElementSetHash> found{zero};
  std::deque<ElementSet> queue{zero};
  while (!queue.empty()) {
    const ElementSet cur = queue.front();
    queue.pop_front();
    for (const auto& p : principals) {
      if (p.is_subset_of(cur)) continue;
      auto next = ideal_sum(r, cur, p);
      if (found.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  sort_sets(out);
  return out;
}

std::vector<ElementSet> enumerate_ring_ideals(const FiniteRing& r, std::size_t bound) {
  if (r.order() > bound)
    throw Error("OrderBoundExceeded", "ring order " + std::to_string(r.order()) + " exceeds bound " + std::to_string(bound));
  const std::size_t n = r.order();
  if (n == 1) return {ElementSet::full(1)};
  // Primitive idempotents: nonzero e with no idempotent strictly below it.
  const auto idem = idempotents(r);
  std::vector<Elem> primitive;
  for (Elem e : idem) {
    if (e == r.zero()) continue;
    bool minimal = true;
    for (Elem f : idem)
      if (f != r.zero() && f != e && r.mul(e, f) == f) {
        minimal = false;
        break;
      }
    if (minimal) primitive.push_back(e);
  }
  // Ideals of each local factor eR, as subsets of R.
  std::vector<std::vector<ElementSet>> local;
  for (Elem e : primitive) {
    auto er = principal_ideal(r, e);
    auto view = subset_ring(r, er);
    std::vector<ElementSet> ids;
    for (const auto& li : enumerate_ring_ideals_bruteforce(view.ring)) {
      ElementSet s(n);
      li.for_each([&](Elem x) { s.insert(view.embed[x]); });
      ids.push_back(std::move(s));
    }
    local.push_back(std::move(ids));
  }
  std::vector<ElementSet> out;
  std::vector<std::size_t> choice(primitive.size(), 0);
  while (true) {
    ElementSet s(n);
    for (Elem x = 0; x < n; ++x) {
      bool in = true;
      for (std::size_t i = 0; i < primitive.size() && in; ++i)
        in = local[i][choice[i]].contains(r.mul(primitive[i], x));
      if (in) s.insert(x);
    }
    out.push_back(std::move(s));
    std::size_t i = 0;
    while (i < choice.size() && choice[i] + 1 == local[i].size()) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }
  sort_sets(out);
  return out;
}

bool is_prime_ideal(const FiniteRing& r, const ElementSet& p) {
  if (p.contains(r.one())) return false;
  for (Elem x = 0; x < r.order(); ++x) {
    if (p.contains(x)) continue;
    for (Elem y = x; y < r.order(); ++y)
      if (!p.contains(y) && p.contains(r.mul(x, y))) return false;
  }
  return true;
}

std::vector<ElementSet> prime_ideals(const FiniteRing& r, std::size_t bound) {
  std::vector<ElementSet> out;
  for (auto& i : enumerate_ring_ideals(r, bound))
    if (is_prime_ideal(r, i)) out.push_back(std::move(i));
  return out;
}

bool is_integral_domain(const FiniteRing& r) {
  ElementSet zero(r.order());
  zero.insert(r.zero());
  return is_prime_ideal(r, zero);
}

std::string render_set(const FiniteRing& r, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Elem x) {
    out += (first ? "" : ",") + r.label(x);
    first = false;
  });
  return out + "}";
}

}  // namespace nakaoka
