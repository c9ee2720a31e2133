#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace pga {

/// Index of a group element or a carrier point. All semantics are
/// index-based; labels are for display only.
using Index = std::uint32_t;

inline constexpr Index kNone = std::numeric_limits<Index>::max();

/// A finite group given by its multiplication table.
///
/// The identity is always element 0. Instances are validated on
/// construction and immutable afterwards, so a `Group` (usually held
/// through a `GroupPtr`) can be shared freely between readers.
class Group {
public:
  std::size_t order() const { return order_; }
  Index identity() const { return 0; }

  Index mul(Index a, Index b) const { return table_[std::size_t{a} * order_ + b]; }
  Index inverse(Index a) const { return inv_[a]; }

  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Looks up an element by its display label (case-sensitive).
  /// Throws Error{UnresolvedLabel} when absent.
  Index index_of(const std::string& label) const;

  /// Row-major flattened table, table()[a * order + b] = a·b.
  std::span<const Index> table() const { return table_; }
  std::span<const Index> inverses() const { return inv_; }

  bool operator==(const Group& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

private:
  friend std::shared_ptr<const Group> make_group(std::vector<std::string>,
                                                 std::vector<Index>);
  Group() = default;

  std::size_t order_ = 0;
  std::vector<std::string> labels_;
  std::vector<Index> table_;
  std::vector<Index> inv_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Cyclic group of order n; element k is labelled "g^k" ("1" and "g" for
/// k = 0, 1). Throws Error{InvalidOrder} for n == 0.
GroupPtr build_cyclic_group(std::size_t n);

/// Validates a Cayley table eagerly: range, Latin square, identity at
/// index 0, two-sided inverses and associativity. Each failure throws with
/// a witness (row/column or triple) in the message.
GroupPtr build_group_from_cayley(std::vector<std::string> labels,
                                 const std::vector<std::vector<Index>>& table);

/// Same checks, flattened row-major input.
GroupPtr make_group(std::vector<std::string> labels, std::vector<Index> table);

/// A subgroup stored as a sorted member list.
class Subgroup {
public:
  /// Checks that `members` is a subgroup of `parent`; throws
  /// Error{Argument} otherwise.
  Subgroup(GroupPtr parent, std::vector<Index> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index a) const;

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

private:
  GroupPtr parent_;
  std::vector<Index> members_;
};

/// True iff `members` contains the identity and is closed under products
/// and inverses.
bool is_subgroup(const Group& group, std::span<const Index> members);

/// Smallest subgroup containing `seed`. Throws Error{Bounds} on an
/// out-of-range index.
Subgroup subgroup_closure(const GroupPtr& group, std::span<const Index> seed);

/// Left coset a·H as a sorted list.
std::vector<Index> left_coset(const Group& group, Index a, const Subgroup& subgroup);

}  // namespace pga
