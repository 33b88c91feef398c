#include "nakaoka/lattice.hpp"

#include <algorithm>
#include <utility>

#include "nakaoka/errors.hpp"

namespace nakaoka {

Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("ArithmeticOverflow", "integer addition");
  return r;
}

Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error("ArithmeticOverflow", "integer subtraction");
  return r;
}

Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("ArithmeticOverflow", "integer product");
  return r;
}

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer floor_mod(Integer a, Integer b) { return a - floor_div(a, b) * b; }

namespace {

// row_a <- x*row_a + y*row_b ; row_b <- u*row_a + v*row_b  (unimodular when xv - yu = ±1)
void combine(IntVector& a, IntVector& b, Integer x, Integer y, Integer u, Integer v) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    const Integer na = checked_add(checked_mul(x, a[c]), checked_mul(y, b[c]));
    const Integer nb = checked_add(checked_mul(u, a[c]), checked_mul(v, b[c]));
    a[c] = na;
    b[c] = nb;
  }
}

// Extended Euclid: returns g = gcd(a,b) >= 0 with s*a + t*b = g.
Integer ext_gcd(Integer a, Integer b, Integer& s, Integer& t) {
  Integer s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const Integer q = floor_div(a, b);
    Integer r = a - q * b;
    a = b;
    b = r;
    Integer tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (a < 0) {
    a = -a;
    s0 = -s0;
    t0 = -t0;
  }
  s = s0;
  t = t0;
  return a;
}

void axpy(IntVector& dst, Integer factor, const IntVector& src) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < dst.size(); ++c)
    dst[c] = checked_sub(dst[c], checked_mul(factor, src[c]));
}

// Echelon form restricted to the first `lead` columns; rows whose leading
// block is zero are moved after the pivot rows. Returns the pivot-row count.
// With d > 0 the caller guarantees d·e_c lies in the lattice for every
// column c; those rows are appended and entries right of the working column
// are kept reduced mod d, which bounds intermediate growth.
std::size_t echelon(IntMatrix& m, std::size_t lead, Integer d = 0) {
  const std::size_t width = m.empty() ? 0 : m.front().size();
  if (d > 0)
    for (std::size_t c = 0; c < width; ++c) {
      IntVector row(width, 0);
      row[c] = d;
      m.push_back(std::move(row));
    }
  auto reduce = [&](IntVector& v, std::size_t from) {
    if (d > 0)
      for (std::size_t c = from; c < width; ++c) v[c] = floor_mod(v[c], d);
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < lead && row < m.size(); ++col) {
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      if (m[row][col] == 0) {
        std::swap(m[row], m[r]);
        continue;
      }
      const Integer a = m[row][col], b = m[r][col];
      Integer s, t;
      const Integer g = ext_gcd(a, b, s, t);
      // [s t; -b/g a/g] has determinant 1
      combine(m[row], m[r], s, t, -b / g, a / g);
      reduce(m[row], col + 1);
      reduce(m[r], col + 1);
    }
    if (m[row][col] == 0) continue;
    if (m[row][col] < 0)
      for (auto& x : m[row]) x = checked_sub(0, x);
    reduce(m[row], col + 1);
    for (std::size_t r = 0; r < row; ++r) {
      axpy(m[r], floor_div(m[r][col], m[row][col]), m[row]);
      reduce(m[r], col + 1);
    }
    ++row;
  }
  return row;
}

// Product of the pivots when `hnf` has full rank n, else 0 (also on overflow).
Integer full_rank_determinant(const IntMatrix& hnf, std::size_t n) {
  if (hnf.size() != n) return 0;
  Integer d = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (__builtin_mul_overflow(d, hnf[i][i], &d) || d > (Integer{1} << 30)) return 0;
  return d;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](Integer x) { return x == 0; });
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols) {
  for (auto& r : rows)
    if (r.size() != ncols) throw Error("DimensionMismatch", "row length differs from ncols");
  const std::size_t rank = echelon(rows, ncols);
  rows.resize(rank);
  rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
  return rows;
}

bool lattice_contains(const IntMatrix& hnf, const IntVector& v) {
  IntVector rest = v;
  std::size_t col = 0;
  for (const auto& row : hnf) {
    while (col < row.size() && row[col] == 0) {
      if (rest[col] != 0) return false;
      ++col;
    }
    if (col == row.size()) break;
    if (rest[col] % row[col] != 0) return false;
    axpy(rest, rest[col] / row[col], row);
    ++col;
  }
  return is_zero(rest);
}

bool lattice_includes(const IntMatrix& super, const IntMatrix& sub) {
  for (const auto& r : sub)
    if (!lattice_contains(super, r)) return false;
  return true;
}

IntMatrix lattice_preimage(const IntMatrix& map, std::size_t n, const IntMatrix& target) {
  const std::size_t m = map.size();
  // Rows (map·e_j | e_j) and (-t_k | 0); vectors with zero leading block
  // are exactly the pairs (map·x - t, x) with map·x = t in the target lattice.
  IntMatrix work;
  work.reserve(n + target.size());
  for (std::size_t j = 0; j < n; ++j) {
    IntVector row(m + n, 0);
    for (std::size_t i = 0; i < m; ++i) row[i] = map[i][j];
    row[m + j] = 1;
    work.push_back(std::move(row));
  }
  for (const auto& t : target) {
    IntVector row(m + n, 0);
    for (std::size_t i = 0; i < m; ++i) row[i] = checked_sub(0, t[i]);
    work.push_back(std::move(row));
  }
  // A full-rank target of determinant d contains d·Z^m, so the augmented
  // lattice contains d·Z^(m+n) and the computation can run mod d.
  const Integer d = full_rank_determinant(hermite_normal_form(target, m), m);
  const std::size_t pivots = echelon(work, m, d);
  IntMatrix kernel;
  for (std::size_t r = pivots; r < work.size(); ++r)
    kernel.emplace_back(work[r].begin() + static_cast<std::ptrdiff_t>(m), work[r].end());
  if (d > 0) {
    const std::size_t rank = echelon(kernel, n, d);
    kernel.resize(rank);
    return kernel;
  }
  return hermite_normal_form(std::move(kernel), n);
}

IntMatrix congruence_kernel(const IntMatrix& map, std::size_t n, Integer p) {
  IntMatrix target;
  if (p != 0) {
    for (std::size_t i = 0; i < map.size(); ++i) {
      IntVector row(map.size(), 0);
      row[i] = p;
      target.push_back(std::move(row));
    }
  }
  return lattice_preimage(map, n, target);
}

IntMatrix unit_lattice(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace nakaoka
