#include "nakaoka/groups.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nakaoka/errors.hpp"

namespace nakaoka {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (auto x : xs) {
    if (!first) out << ',';
    out << x;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

std::vector<Elem> mask_elements(GroupMask m) {
  std::vector<Elem> out;
  while (m) {
    out.push_back(static_cast<Elem>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

FiniteGroup FiniteGroup::trusted(Table cayley, std::string name,
                                 std::vector<std::string> labels) {
  FiniteGroup g;
  const std::size_t n = cayley.size();
  g.table_ = std::move(cayley);
  g.name_ = std::move(name);
  for (Elem e = 0; e < n; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = g.table_[e][x] == x && g.table_[x][e] == x;
    if (ok) {
      g.identity_ = e;
      break;
    }
  }
  g.inverse_.assign(n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (g.table_[x][y] == g.identity_) g.inverse_[x] = y;
  if (labels.size() != n) {
    labels.clear();
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup FiniteGroup::from_cayley(Table cayley, std::string name,
                                     std::vector<std::string> labels) {
  const std::size_t n = cayley.size();
  if (n == 0) throw Error("MalformedTable", "empty Cayley table");
  for (std::size_t r = 0; r < n; ++r) {
    if (cayley[r].size() != n)
      throw Error("MalformedTable", "row " + std::to_string(r) + " has wrong length");
    for (auto v : cayley[r])
      if (v >= n)
        throw Error("MalformedTable", "entry out of range in row " + std::to_string(r));
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> seen_row(n), seen_col(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen_row[cayley[r][c]])
        throw Error("NotLatinSquare", "row " + std::to_string(r) + " repeats entry " +
                                          std::to_string(cayley[r][c]) + " at column " +
                                          std::to_string(c));
      seen_row[cayley[r][c]] = true;
      if (seen_col[cayley[c][r]])
        throw Error("NotLatinSquare", "column " + std::to_string(r) + " repeats entry " +
                                          std::to_string(cayley[c][r]) + " at row " +
                                          std::to_string(c));
      seen_col[cayley[c][r]] = true;
    }
  }
  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = cayley[e][x] == x && cayley[x][e] == x;
    if (ok) identity = e;
  }
  if (identity == n) throw Error("NoIdentity", "no two-sided identity element");
  for (std::size_t x = 0; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y)
      found = cayley[x][y] == identity && cayley[y][x] == identity;
    if (!found) throw Error("NoInverse", "element " + std::to_string(x));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
          throw Error("NotAssociative", "triple " + tuple_str({a, b, c}));
  return trusted(std::move(cayley), std::move(name), std::move(labels));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error("InvalidParameter", "cyclic group of order 0");
  Table t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Elem>((a + b) % n);
    labels[a] = a == 0 ? "e" : (a == 1 ? "a" : "a^" + std::to_string(a));
  }
  return trusted(std::move(t), "C" + std::to_string(n), std::move(labels));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  // index = i + na * j for (a_i, b_j)
  Table t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem i = a.mul(static_cast<Elem>(x % na), static_cast<Elem>(y % na));
      const Elem j = b.mul(static_cast<Elem>(x / na), static_cast<Elem>(y / na));
      t[x][y] = static_cast<Elem>(i + na * j);
    }
    labels[x] = "(" + a.label(static_cast<Elem>(x % na)) + "," +
                b.label(static_cast<Elem>(x / na)) + ")";
  }
  return trusted(std::move(t), a.name() + "x" + b.name(), std::move(labels));
}

FiniteGroup FiniteGroup::product_of_cyclic(const std::vector<std::size_t>& orders) {
  if (orders.empty()) return cyclic(1);
  FiniteGroup g = cyclic(orders.front());
  for (std::size_t i = 1; i < orders.size(); ++i) g = direct_product(g, cyclic(orders[i]));
  if (orders.size() > 1) {
    // Plain (i,j,...) labels read better than nested cyclic labels.
    std::vector<std::string> labels(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::size_t rest = x;
      std::string s = "(";
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rest % orders[i]);
        rest /= orders[i];
      }
      labels[x] = s + ")";
    }
    g.labels_ = std::move(labels);
  }
  return g;
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw Error("InvalidParameter", "dihedral group needs n >= 1");
  // r^k s^j  <->  k + n*j ;  r^a s^i * r^b s^j = r^(a + (-1)^i b) s^(i+j)
  const std::size_t order = 2 * n;
  Table t(order, std::vector<Elem>(order));
  std::vector<std::string> labels(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, i = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % n, j = y / n;
      const std::size_t k = i == 0 ? (a + b) % n : (a + n - b) % n;
      t[x][y] = static_cast<Elem>(k + n * ((i + j) % 2));
    }
    std::string l = a == 0 ? "" : (a == 1 ? "r" : "r^" + std::to_string(a));
    if (i) l += "s";
    labels[x] = l.empty() ? "e" : l;
  }
  return trusted(std::move(t), "D" + std::to_string(order), std::move(labels));
}

FiniteGroup FiniteGroup::quaternion() {
  // units 1,i,j,k ; index = unit + 4*sign
  static constexpr std::array<std::array<int, 4>, 4> unit_mul = {{
      {0, 1, 2, 3},
      {1, 4, 3, 6},  // i*i=-1, i*j=k, i*k=-j   (values >= 4 carry a sign)
      {2, 7, 4, 1},  // j*i=-k, j*j=-1, j*k=i
      {3, 2, 5, 4},  // k*i=j, k*j=-i, k*k=-1
  }};
  Table t(8, std::vector<Elem>(8));
  const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> labels(8);
  for (std::size_t x = 0; x < 8; ++x) {
    for (std::size_t y = 0; y < 8; ++y) {
      const int r = unit_mul[x % 4][y % 4];
      const std::size_t sign = (x / 4 + y / 4 + static_cast<std::size_t>(r / 4)) % 2;
      t[x][y] = static_cast<Elem>(static_cast<std::size_t>(r % 4) + 4 * sign);
    }
    labels[x] = std::string(x / 4 ? "-" : "") + names[x % 4];
  }
  return trusted(std::move(t), "Q8", std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw Error("InvalidParameter", "symmetric groups supported for n <= 4");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(order, std::vector<Elem>(order));
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<int> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      t[a][b] = index_of(c);
    }
    // cycle notation on points 1..n
    std::string s;
    std::vector<bool> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i] || perms[a][i] == static_cast<int>(i)) continue;
      s += '(';
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = true;
        s += static_cast<char>('1' + j);
        j = static_cast<std::size_t>(perms[a][j]);
      }
      s += ')';
    }
    labels[a] = s.empty() ? "e" : s;
  }
  return trusted(std::move(t), "S" + std::to_string(n), std::move(labels));
}

Subgroup generate(const FiniteGroup& g, GroupMask generators) {
  const auto gens = mask_elements(generators);
  GroupMask members = singleton(g.identity());
  std::vector<Elem> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem a = queue[head];
    for (Elem s : gens) {
      const Elem b = g.mul(a, s);
      if (!mask_contains(members, b)) {
        members |= singleton(b);
        queue.push_back(b);
      }
    }
  }
  return {members, queue.size()};
}

GroupMask conjugate_mask(const FiniteGroup& g, Elem by, GroupMask s) {
  GroupMask out = 0;
  for (Elem x : mask_elements(s)) out |= singleton(g.conjugate(by, x));
  return out;
}

SubgroupLattice::SubgroupLattice(FiniteGroup group, std::size_t bound)
    : group_(std::move(group)) {
  const std::size_t n = group_.order();
  if (n > bound || n > 64)
    throw Error("OrderBoundExceeded", "group order " + std::to_string(n) + " exceeds bound " +
                                          std::to_string(std::min<std::size_t>(bound, 64)));

  struct Found {
    Subgroup sub;
    GroupMask gens;
  };
  std::vector<Found> found{{generate(group_, 0), 0}};
  std::unordered_set<GroupMask> seen{found[0].sub.members};
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Found cur = found[head];
    for (Elem x = 0; x < n; ++x) {
      if (cur.sub.contains(x)) continue;
      const GroupMask gens = cur.gens | singleton(x);
      Subgroup s = generate(group_, gens);
      if (seen.insert(s.members).second) found.push_back({s, gens});
    }
  }

  subgroups_.reserve(found.size());
  for (const auto& f : found) subgroups_.push_back(f.sub);
  std::sort(subgroups_.begin(), subgroups_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return mask_elements(a.members) < mask_elements(b.members);
  });

  const std::size_t m = subgroups_.size();
  std::unordered_map<GroupMask, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) index[subgroups_[i].members] = i;

  inclusion_.assign(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) inclusion_[i][j] = subgroups_[i].is_subset_of(subgroups_[j]);

  conj_.assign(n, std::vector<std::size_t>(m));
  for (Elem g = 0; g < n; ++g)
    for (std::size_t i = 0; i < m; ++i)
      conj_[g][i] = index.at(conjugate_mask(group_, g, subgroups_[i].members));

  class_of_.assign(m, m);
  normal_.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (class_of_[i] != m) continue;
    std::vector<std::size_t> cls;
    for (Elem g = 0; g < n; ++g) cls.push_back(conj_[g][i]);
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (auto j : cls) class_of_[j] = classes_.size();
    normal_[i] = cls.size() == 1;
    reps_.push_back(cls.front());
    classes_.push_back(std::move(cls));
  }

  names_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (i == 0) {
      names_[i] = "e";
    } else if (i + 1 == m) {
      names_[i] = "G";
    } else {
      names_[i] = "H" + std::to_string(i);
      for (Elem x : mask_elements(subgroups_[i].members)) {
        if (generate(group_, singleton(x)).members == subgroups_[i].members) {
          names_[i] = "<" + group_.label(x) + ">";
          break;
        }
      }
    }
  }
}

std::size_t SubgroupLattice::index_of(GroupMask members) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (subgroups_[i].members == members) return i;
  throw Error("NotASubgroup", "element set is not a subgroup");
}

std::size_t SubgroupLattice::first_of_order(std::size_t order) const {
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (subgroups_[i].order == order) return i;
  throw Error("NotASubgroup", "no subgroup of order " + std::to_string(order));
}

std::string SubgroupLattice::name(std::size_t i) const { return names_[i]; }

bool is_subconjugate_within(const SubgroupLattice& lat, std::size_t i, std::size_t k,
                            GroupMask within) {
  for (Elem g : mask_elements(within))
    if (lat.included(lat.conjugate(g, i), k)) return true;
  return false;
}

bool is_subconjugate(const SubgroupLattice& lat, std::size_t i, std::size_t k) {
  return is_subconjugate_within(lat, i, k, lat[lat.whole()].members);
}

DoubleCosetDecomposition double_cosets(const FiniteGroup& g, GroupMask left, GroupMask right,
                                       GroupMask ambient) {
  DoubleCosetDecomposition d;
  d.left = left;
  d.right = right;
  const auto lefts = mask_elements(left);
  const auto rights = mask_elements(right);
  std::vector<Elem> order{g.identity()};
  for (Elem x : mask_elements(ambient))
    if (x != g.identity()) order.push_back(x);
  GroupMask covered = 0;
  for (Elem x : order) {
    if (mask_contains(covered, x)) continue;
    for (Elem l : lefts)
      for (Elem k : rights) covered |= singleton(g.mul(g.mul(l, x), k));
    d.reps.push_back(x);
    const GroupMask conj = conjugate_mask(g, g.inv(x), left);
    d.stabilizers.push_back(right & conj);
  }
  return d;
}

std::vector<Elem> left_coset_reps(const FiniteGroup& g, GroupMask k, GroupMask ambient) {
  std::vector<Elem> reps;
  std::vector<Elem> order{g.identity()};
  for (Elem x : mask_elements(ambient))
    if (x != g.identity()) order.push_back(x);
  GroupMask covered = 0;
  const auto ks = mask_elements(k);
  for (Elem x : order) {
    if (mask_contains(covered, x)) continue;
    reps.push_back(x);
    for (Elem y : ks) covered |= singleton(g.mul(x, y));
  }
  return reps;
}

GroupMask normalizer(const FiniteGroup& g, GroupMask h, GroupMask ambient) {
  GroupMask n = 0;
  for (Elem x : mask_elements(ambient))
    if (conjugate_mask(g, x, h) == h) n |= singleton(x);
  return n;
}

std::vector<Elem> weyl_group(const SubgroupLattice& lat, std::size_t h) {
  const auto& g = lat.group();
  const GroupMask n = normalizer(g, lat[h].members, lat[lat.whole()].members);
  return left_coset_reps(g, lat[h].members, n);
}

bool is_dedekind(const SubgroupLattice& lat) {
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (!lat.normal(i)) return false;
  return true;
}

GroupMask EmbeddedSubgroup::to_ambient(GroupMask own) const {
  GroupMask out = 0;
  for (Elem x : mask_elements(own)) out |= singleton(embed[x]);
  return out;
}

Elem EmbeddedSubgroup::from_ambient_elem(Elem g) const {
  const auto it = std::lower_bound(embed.begin(), embed.end(), g);
  if (it == embed.end() || *it != g)
    throw Error("NotASubgroup", "element outside embedded subgroup");
  return static_cast<Elem>(it - embed.begin());
}

GroupMask EmbeddedSubgroup::from_ambient(GroupMask ambient) const {
  GroupMask out = 0;
  for (Elem x : mask_elements(ambient)) out |= singleton(from_ambient_elem(x));
  return out;
}

EmbeddedSubgroup subgroup_as_group(const SubgroupLattice& lat, std::size_t h) {
  const auto& g = lat.group();
  EmbeddedSubgroup e;
  e.ambient_members = lat[h].members;
  e.embed = mask_elements(e.ambient_members);
  const std::size_t n = e.embed.size();
  FiniteGroup::Table t(n, std::vector<Elem>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = e.from_ambient_elem(g.mul(e.embed[a], e.embed[b]));
    labels[a] = g.label(e.embed[a]);
  }
  e.group = FiniteGroup::from_cayley(std::move(t), g.name() + "|" + lat.name(h), std::move(labels));
  return e;
}

}  // namespace nakaoka
