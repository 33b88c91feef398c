#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nakaoka/element_set.hpp"

namespace nakaoka {

/// A finite group given by its Cayley table. Immutable after validation.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Elem>>;

  /// The trivial group.
  FiniteGroup() : table_{{0}}, inverse_{0}, labels_{"e"} {}

  /// Validates the table; throws Error with NotLatinSquare, NoIdentity,
  /// NoInverse or NotAssociative naming the first violating tuple.
  static FiniteGroup from_cayley(Table cayley, std::string name = {},
                                 std::vector<std::string> labels = {});

  static FiniteGroup cyclic(std::size_t n);
  /// Direct product of cyclic groups C_{n_1} x ... x C_{n_k}.
  static FiniteGroup product_of_cyclic(const std::vector<std::size_t>& orders);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Dihedral group of order 2n.
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup quaternion();
  /// Symmetric group S_n for n <= 4.
  static FiniteGroup symmetric(std::size_t n);

  std::size_t order() const noexcept { return table_.size(); }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a][b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  Elem identity() const noexcept { return identity_; }
  /// g x g^-1
  Elem conjugate(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }

  const Table& cayley() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  static FiniteGroup trusted(Table cayley, std::string name, std::vector<std::string> labels);

  Table table_;
  std::vector<Elem> inverse_;
  Elem identity_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Bit mask over group elements; groups handled by the lattice have order <= 64.
using GroupMask = std::uint64_t;

inline GroupMask singleton(Elem g) { return GroupMask{1} << g; }
inline bool mask_contains(GroupMask m, Elem g) { return (m >> g) & 1u; }

struct Subgroup {
  GroupMask members = 0;
  std::size_t order = 0;

  bool contains(Elem g) const noexcept { return mask_contains(members, g); }
  bool is_subset_of(const Subgroup& other) const noexcept {
    return (members & ~other.members) == 0;
  }
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

std::vector<Elem> mask_elements(GroupMask m);

/// Subgroup generated by a set of elements.
Subgroup generate(const FiniteGroup& g, GroupMask generators);

/// g S g^-1 as a mask.
GroupMask conjugate_mask(const FiniteGroup& g, Elem by, GroupMask s);

/// All subgroups of a group with inclusion, conjugacy and normality data.
///
/// Subgroups are sorted by (order, ascending member list), so index 0 is the
/// trivial subgroup and the last index is the whole group. The representative
/// of a conjugacy class is its first member in this order.
class SubgroupLattice {
 public:
  static constexpr std::size_t kDefaultBound = 64;

  explicit SubgroupLattice(FiniteGroup group, std::size_t bound = kDefaultBound);

  const FiniteGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }

  std::size_t trivial() const noexcept { return 0; }
  std::size_t whole() const noexcept { return subgroups_.size() - 1; }

  /// included(i, j): S_i is a subgroup of S_j.
  bool included(std::size_t i, std::size_t j) const { return inclusion_[i][j]; }
  bool normal(std::size_t i) const { return normal_[i]; }

  const std::vector<std::vector<std::size_t>>& conj_classes() const noexcept {
    return classes_;
  }
  const std::vector<std::size_t>& class_reps() const noexcept { return reps_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }
  std::size_t class_rep_of(std::size_t i) const { return reps_[class_of_[i]]; }

  /// Index of g S_i g^-1.
  std::size_t conjugate(Elem g, std::size_t i) const { return conj_[g][i]; }

  /// Index of the subgroup with exactly these members; throws if absent.
  std::size_t index_of(GroupMask members) const;
  /// First subgroup (in lattice order) of the given order; throws if absent.
  std::size_t first_of_order(std::size_t order) const;

  /// Short printable name: "e", "G", "<g>" for cyclic subgroups, else "H<i>".
  std::string name(std::size_t i) const;

 private:
  FiniteGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<bool>> inclusion_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> reps_;
  std::vector<std::size_t> class_of_;
  std::vector<bool> normal_;
  std::vector<std::vector<std::size_t>> conj_;
  std::vector<std::string> names_;
};

using LatticePtr = std::shared_ptr<const SubgroupLattice>;

inline LatticePtr make_lattice(FiniteGroup g,
                               std::size_t bound = SubgroupLattice::kDefaultBound) {
  return std::make_shared<const SubgroupLattice>(std::move(g), bound);
}

/// True iff some G-conjugate of S_i is contained in S_k.
bool is_subconjugate(const SubgroupLattice& lat, std::size_t i, std::size_t k);

/// True iff some conjugate of S_i by an element of `within` lies in S_k.
bool is_subconjugate_within(const SubgroupLattice& lat, std::size_t i, std::size_t k,
                            GroupMask within);

/// Double cosets L g K inside an ambient subgroup.
struct DoubleCosetDecomposition {
  GroupMask left = 0;
  GroupMask right = 0;
  /// Representatives; the double coset of the identity always comes first
  /// with the identity as its representative.
  std::vector<Elem> reps;
  /// right ∩ rep^-1 · left · rep, one per representative.
  std::vector<GroupMask> stabilizers;
};

DoubleCosetDecomposition double_cosets(const FiniteGroup& g, GroupMask left, GroupMask right,
                                       GroupMask ambient);
inline DoubleCosetDecomposition double_cosets(const SubgroupLattice& lat, std::size_t left,
                                              std::size_t right, std::size_t ambient) {
  return double_cosets(lat.group(), lat[left].members, lat[right].members,
                       lat[ambient].members);
}

/// Representatives of the left cosets h·K inside `ambient`, identity first.
std::vector<Elem> left_coset_reps(const FiniteGroup& g, GroupMask k, GroupMask ambient);

GroupMask normalizer(const FiniteGroup& g, GroupMask h, GroupMask ambient);

/// Representatives of N_G(H)/H, identity first.
std::vector<Elem> weyl_group(const SubgroupLattice& lat, std::size_t h);

bool is_dedekind(const SubgroupLattice& lat);

/// A subgroup re-indexed as a group in its own right. Element i of `group`
/// is the i-th smallest member of the subgroup.
struct EmbeddedSubgroup {
  FiniteGroup group;
  std::vector<Elem> embed;  // own index -> ambient index
  GroupMask ambient_members = 0;

  GroupMask to_ambient(GroupMask own) const;
  GroupMask from_ambient(GroupMask ambient) const;  // ambient must lie in the subgroup
  Elem from_ambient_elem(Elem g) const;
};

EmbeddedSubgroup subgroup_as_group(const SubgroupLattice& lat, std::size_t h);

}  // namespace nakaoka
