#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pga/finite_set.hpp"
#include "pga/group.hpp"
#include "pga/validation.hpp"

namespace pga {

/// A group acting by permutations β_g on a finite set T.
///
/// Construction only checks shape: one row per group element, each row a
/// permutation of T. Whether g ↦ β_g is a homomorphism is a separate
/// question answered by validate_global_action, so corrupted fixtures can
/// still be loaded and diagnosed.
class GlobalAction {
public:
  /// perms[g][t] = β_g(t). If `stated_orbits` is given it is kept as the
  /// orbit decomposition and compared against the recomputed one during
  /// validation; otherwise the recomputed decomposition is stored.
  GlobalAction(GroupPtr group, FiniteSet carrier, std::vector<std::vector<Index>> perms,
               std::optional<std::vector<std::vector<Index>>> stated_orbits = std::nullopt);

  const GroupPtr& group() const { return group_; }
  const FiniteSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  Index apply(Index g, Index t) const { return perms_[std::size_t{g} * size() + t]; }
  /// Row-major β table, perms()[g * size() + t] = β_g(t).
  std::span<const Index> perms() const { return perms_; }

  const std::vector<std::vector<Index>>& orbit_decomposition() const { return orbits_; }

  /// Orbits under the generated equivalence, sorted, ordered by minimum.
  std::vector<std::vector<Index>> recompute_orbits() const;

  /// The orbit {β_g(t)} of t, sorted.
  std::vector<Index> orbit_of(Index t) const;

  /// {g : β_g(t) = t}, sorted.
  std::vector<Index> stabilizer_of(Index t) const;

private:
  GroupPtr group_;
  FiniteSet carrier_;
  std::vector<Index> perms_;
  std::vector<std::vector<Index>> orbits_;
};

/// Checks β_1 = id, β_g∘β_h = β_{gh}, β_{g⁻¹} = β_g⁻¹ and that the stored
/// orbit decomposition partitions T and matches the recomputed orbits.
ValidationReport validate_global_action(const GlobalAction& action);

}  // namespace pga
