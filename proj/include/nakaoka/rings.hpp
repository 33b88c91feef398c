#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nakaoka/element_set.hpp"
#include "nakaoka/lattice.hpp"

namespace nakaoka {

/// Largest ring order the table constructors accept.
inline constexpr std::size_t kMaxRingOrder = 1024;

/// Finite commutative ring given by explicit addition and multiplication tables.
class FiniteRing {
 public:
  using Table = std::vector<std::vector<Elem>>;

  /// The zero ring.
  FiniteRing();

  /// Validates the commutative ring axioms exhaustively; throws
  /// Error("NotARing") naming the first violated axiom and tuple.
  static FiniteRing from_tables(Table add, Table mul, std::string name = {},
                                std::vector<std::string> labels = {});
  /// Same without the axiom scan, for tables derived from a validated ring.
  static FiniteRing from_trusted_tables(Table add, Table mul, std::string name = {},
                                        std::vector<std::string> labels = {}) {
    return trusted(std::move(add), std::move(mul), std::move(name), std::move(labels));
  }

  static FiniteRing zmod(std::size_t n);
  /// F_q for q a prime power <= 16.
  static FiniteRing galois_field(std::size_t q);
  /// F_q-algebra with basis b_0 = 1, b_1, ..., b_{dim-1}; basis_product(i, j)
  /// gives the coordinates of b_i b_j. Element index = sum c_i q^i.
  static FiniteRing algebra(std::size_t q, std::size_t dim,
                            const std::vector<std::vector<IntVector>>& basis_product,
                            std::string name = {});
  /// Direct product; element index = sum c_i * stride_i with stride_0 = 1.
  static FiniteRing product(const std::vector<const FiniteRing*>& factors);
  static FiniteRing product(const FiniteRing& a, const FiniteRing& b) { return product({&a, &b}); }

  std::size_t order() const noexcept { return add_.size(); }
  Elem add(Elem a, Elem b) const noexcept { return add_[a][b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a][b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add_[a][neg_[b]]; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  /// n·1
  Elem from_int(Integer n) const;
  Elem power(Elem a, std::size_t k) const;

  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool is_idempotent(Elem a) const { return mul(a, a) == a; }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.add_ == b.add_ && a.mul_ == b.mul_;
  }

 private:
  static FiniteRing trusted(Table add, Table mul, std::string name, std::vector<std::string> labels);

  Table add_, mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0, one_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Mixed-radix bookkeeping for product rings.
struct ProductLayout {
  std::vector<std::size_t> orders;
  std::vector<std::size_t> strides;

  explicit ProductLayout(std::vector<std::size_t> factor_orders);
  std::size_t size() const { return orders.size(); }
  std::size_t total() const;
  std::vector<Elem> split(Elem x) const;
  Elem join(const std::vector<Elem>& parts) const;
  Elem component(Elem x, std::size_t i) const { return static_cast<Elem>((x / strides[i]) % orders[i]); }
};

/// A ring carved out of a larger one: `embed` lists the ambient elements in
/// local index order; `local` maps ambient -> local index (or npos).
struct SubringView {
  FiniteRing ring;
  std::vector<Elem> embed;
  std::vector<std::size_t> local;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool contains(Elem ambient) const { return local[ambient] != npos; }
  Elem to_local(Elem ambient) const;
};

/// The subset `members` (closed under + and ·, with its own identity, which
/// need not be the ambient one, e.g. e·R for an idempotent e) as a ring.
SubringView subset_ring(const FiniteRing& r, const ElementSet& members,
                        const std::string& name = {});

/// R/I with projection; the representative of a coset is its least element.
struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> project;     // ambient -> quotient index
  std::vector<Elem> lift;        // quotient index -> least representative
};
QuotientRing quotient(const FiniteRing& r, const ElementSet& ideal);

// ---- ideals of a single ring ----------------------------------------------

bool is_ring_ideal(const FiniteRing& r, const ElementSet& s);
/// Smallest ideal containing `gens`.
ElementSet ideal_closure(const FiniteRing& r, const ElementSet& gens);
ElementSet principal_ideal(const FiniteRing& r, Elem x);
/// Sum of two ideals.
ElementSet ideal_sum(const FiniteRing& r, const ElementSet& a, const ElementSet& b);
/// A small generating set (greedy; every element lies in the ideal generated).
std::vector<Elem> ideal_generators(const FiniteRing& r, const ElementSet& ideal);
ElementSet image_set(const std::vector<Elem>& map, const ElementSet& s, std::size_t target_order);
ElementSet preimage_set(const std::vector<Elem>& map, const ElementSet& s);

/// All ideals, via the decomposition into local factors by primitive
/// idempotents. Sorted by (size, members). OrderBoundExceeded above `bound`.
std::vector<ElementSet> enumerate_ring_ideals(const FiniteRing& r, std::size_t bound = 64);
/// Reference enumeration: closure of sums of principal ideals.
std::vector<ElementSet> enumerate_ring_ideals_bruteforce(const FiniteRing& r);

/// Proper, and xy in P implies x in P or y in P.
bool is_prime_ideal(const FiniteRing& r, const ElementSet& p);
std::vector<ElementSet> prime_ideals(const FiniteRing& r, std::size_t bound = 64);
bool is_integral_domain(const FiniteRing& r);
std::vector<Elem> idempotents(const FiniteRing& r);

std::string render_set(const FiniteRing& r, const ElementSet& s);

}  // namespace nakaoka
