#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liptrop/error.hpp"

namespace liptrop {

/// Enumeration and builtin-construction routines refuse groups above this
/// order unless the caller raises the cap explicitly.
inline constexpr int default_order_cap = 64;

/// A finite group given by its Cayley table. Construction checks every group
/// axiom exhaustively (associativity in O(n^3)) and computes the inverse
/// table; instances are immutable afterwards.
class FiniteGroup {
 public:
  /// `table` is row-major n*n with table[i*n+j] = index of g_i * g_j.
  /// If `declared_identity` is given it must be the two-sided identity;
  /// otherwise the identity is located by scanning.
  FiniteGroup(std::vector<int> table, int order, std::string name = "",
              std::optional<int> declared_identity = std::nullopt);

  int order() const { return n_; }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverses_[a]; }
  const std::string& name() const { return name_; }
  const std::vector<int>& inverses() const { return inverses_; }
  const std::vector<int>& flat_table() const { return table_; }

  int element_order(int a) const;
  /// Sorted multiset of element orders; an isomorphism invariant.
  std::vector<int> element_order_multiset() const;
  bool abelian() const;
  bool same_table(const FiniteGroup& other) const;

 private:
  std::string name_;
  int n_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Checks a raw square table and returns the validated group.
GroupPtr validate_group(const std::vector<std::vector<int>>& table, std::string name = "",
                        std::optional<int> declared_identity = std::nullopt);

GroupPtr cyclic_group(int n, int order_cap = default_order_cap);
GroupPtr dihedral_group(int n, int order_cap = default_order_cap);  // order 2n
GroupPtr symmetric_group(int n, int order_cap = default_order_cap);
GroupPtr quaternion_group(int order_cap = default_order_cap);
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h, int order_cap = default_order_cap);

/// Family dispatch: "cyclic"/"dihedral"/"symmetric" take one parameter,
/// "quaternion8" takes none. Unknown names raise UnsupportedFamily.
GroupPtr builtin_group(const std::string& family, const std::vector<int>& params = {},
                       int order_cap = default_order_cap);

/// The same group with elements renamed by `perm`: table'[p(i)][p(j)] = p(table[i][j]).
GroupPtr relabeled_copy(const GroupPtr& g, const std::vector<int>& perm);

/// A group isomorphism source -> target, stored as the image array.
struct GroupIso {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
  std::vector<int> inverse_map() const;
};

bool is_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& map);

/// All isomorphisms G -> H in lexicographic order of the image array, found
/// by generator backtracking with element-order pruning. Empty iff the
/// groups are not isomorphic; different orders are allowed and give empty.
std::vector<GroupIso> enumerate_isomorphisms(const GroupPtr& g, const GroupPtr& h,
                                             int order_cap = default_order_cap);
std::vector<GroupIso> enumerate_automorphisms(const GroupPtr& g,
                                              int order_cap = default_order_cap);

GroupIso identity_iso(const GroupPtr& g);
/// (outer ∘ inner)(x) = outer(inner(x)); inner.target must match outer.source.
GroupIso compose(const GroupIso& outer, const GroupIso& inner);
GroupIso inverse(const GroupIso& iso);

std::string format_multiset(const std::vector<int>& values);

}  // namespace liptrop
