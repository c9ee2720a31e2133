#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pga/error.hpp"
#include "pga/finite_set.hpp"
#include "pga/global_action.hpp"
#include "pga/group.hpp"
#include "pga/kernels.hpp"
#include "pga/validation.hpp"

namespace pga {

enum class Exec { Serial, Parallel };

/// Raw, unvalidated description of a partial action: for every group
/// element g a domain D_g and a list of (source, target) pairs for α_g.
/// Domains and maps are both explicit; validation requires the key set of
/// α_g to be exactly D_{g⁻¹} and its image exactly D_g.
struct PartialActionData {
  GroupPtr group;
  FiniteSet carrier;
  std::vector<std::vector<Index>> domains;                     // per g
  std::vector<std::vector<std::pair<Index, Index>>> maps;      // per g

  /// Empty domains and maps for every g.
  PartialActionData(GroupPtr group, FiniteSet carrier);

  /// D_1 = X and α_1 = id, the convention for an omitted identity entry.
  void set_identity_defaults();

  bool operator==(const PartialActionData&) const;
};

/// Runs every check of the partial action definition: structural checks
/// on domains and maps, the identity axiom, bijectivity of each α_g,
/// α_g(D_{g⁻¹} ∩ D_h) = D_g ∩ D_{gh}, the composition law on
/// D_{h⁻¹} ∩ D_{h⁻¹g⁻¹}, and α_{g⁻¹} = α_g⁻¹. Every failing check carries a
/// witness. Throws Error{Bounds} when an index is out of range.
ValidationReport validate_partial_action(const PartialActionData& candidate,
                                         Exec exec = Exec::Parallel);

/// Thrown when constructing a PartialAction from invalid data.
class ValidationError : public Error {
public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// A validated partial action (X, α). Immutable; queries are pure.
class PartialAction {
public:
  /// Validates and throws ValidationError on failure.
  static PartialAction create(const PartialActionData& data);

  const GroupPtr& group() const { return group_; }
  const FiniteSet& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_.size(); }

  bool in_domain(Index g, Index x) const { return member_[std::size_t{g} * size() + x] != 0; }
  /// α_g(x), or kNone when x ∉ D_{g⁻¹}.
  Index apply(Index g, Index x) const { return image_[std::size_t{g} * size() + x]; }
  const std::vector<Index>& domain(Index g) const { return domains_[g]; }

  kernels::ActionView view() const;
  /// Canonical raw form: sorted domains, maps sorted by source.
  PartialActionData data() const;

  bool operator==(const PartialAction& other) const;

private:
  PartialAction() = default;

  GroupPtr group_;
  FiniteSet carrier_;
  std::vector<std::vector<Index>> domains_;
  std::vector<std::uint8_t> member_;
  std::vector<Index> image_;
};

/// Restriction of a global action to a subset X of T, listed in the order
/// the new carrier should use: D_g = X ∩ β_g(X), α_g = β_g on D_{g⁻¹}.
/// The result is validated. Throws Error{Bounds} / Error{Argument} on
/// out-of-range or repeated indices.
PartialAction restrict_global(const GlobalAction& global, std::span<const Index> subset);

/// The same restriction without validation, for diagnosing actions that
/// may not be genuine.
PartialActionData restriction_data(const GlobalAction& global, std::span<const Index> subset);

/// Partial action induced on a partial G-subset (listed in carrier
/// order). Throws Error{Argument} if the subset is not a partial G-subset.
PartialAction restrict_to_subset(const PartialAction& action, std::span<const Index> subset);

/// O_x^α = {α_{g⁻¹}(x) : x ∈ D_g}, sorted. Also checks closure under every
/// admissible α_{h⁻¹}; a violation throws Error{TheoremViolation}.
std::vector<Index> partial_orbit(const PartialAction& action, Index x);

/// G_x = {g : x ∈ D_{g⁻¹}, α_g(x) = x}; throws Error{TheoremViolation} if
/// the set is not a subgroup.
Subgroup partial_stabilizer(const PartialAction& action, Index x);

struct UpperSets {
  std::vector<Index> upper;       // G^x = {g⁻¹ : x ∈ D_g}
  std::vector<Index> complement;  // {h : x ∉ D_{h⁻¹}}
};

/// G^x and its complement; both definitions of the complement are
/// computed and compared.
UpperSets upper_sets(const PartialAction& action, Index x);

/// Minimum point of each partial orbit, increasing. Checks that the
/// partial orbits partition X.
std::vector<Index> partial_transversal(const PartialAction& action);

struct SubsetCheck {
  bool holds = true;
  std::optional<std::pair<Index, Index>> witness;  // (g, x): x ∈ X' ∩ D_g, α_{g⁻¹}(x) ∉ X'
};

/// Is `subset` closed under every defined α_{g⁻¹}?
SubsetCheck is_partial_g_subset(const PartialAction& action, std::span<const Index> subset);

struct Coset {
  Index representative = 0;  // minimum member
  std::vector<Index> members;
  bool operator==(const Coset&) const = default;
};

/// Everything known about one point: its partial orbit, stabilizer, upper
/// set, complement and the cosets g⁻¹G_x for x ∈ D_g.
struct PartialOrbitReport {
  Index base = 0;
  std::vector<Index> orbit;
  Subgroup stabilizer;
  std::vector<Index> upper;
  std::vector<Index> upper_complement;
  std::vector<Coset> cosets;
};

/// Builds the report and checks its invariants (|orbit|·|G_x| = |G^x|,
/// |G_x| divides |complement|, cosets partition G^x); a failure throws
/// Error{TheoremViolation}.
PartialOrbitReport partial_orbit_report(const PartialAction& action, Index x);

/// Cosets g⁻¹G_x for x ∈ D_g, ordered by representative.
std::vector<Coset> upper_cosets(const PartialAction& action, Index x, const Subgroup& stabilizer);

}  // namespace pga
