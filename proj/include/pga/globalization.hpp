#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pga/global_action.hpp"
#include "pga/partial_action.hpp"
#include "pga/validation.hpp"

namespace pga {

inline constexpr std::size_t kDefaultMaxSize = 1'000'000;

/// An enveloping action (T, β) of a partial action together with the
/// embedding X ↪ T.
struct Globalization {
  GlobalAction action;
  std::vector<Index> embedding;  // X point -> T point
  /// For every T point, the (g, x) whose class it is: the point is β_g(x).
  std::vector<std::pair<Index, Index>> witness_labels;
};

/// Quotient of G × X by (g, x) ~ (h, y) ⇔ x ∈ D_{g⁻¹h}, α_{h⁻¹g}(x) = y, with
/// β_h[(g, x)] = [(hg, x)] and x ↦ [(1, x)].
///
/// The relation is checked to be an equivalence before quotienting, and the
/// result is checked for minimality, D_g = X ∩ β_g(X) and α_g = β_g on
/// D_{g⁻¹}; a failure throws Error{TheoremViolation}. T lists the embedded
/// X first (same order and labels), then fresh points "t1", "t2", ...
/// grouped by orbit in transversal order and, inside an orbit, by the
/// smallest (g, x) of their class. Throws Error{Resource} when
/// |G|·|X| > max_size.
Globalization globalize(const PartialAction& action, std::size_t max_size = kDefaultMaxSize,
                        Exec exec = Exec::Parallel);

/// Checks a candidate globalization against a partial action:
///   global.*        β is an action with the stated orbits
///   restriction     embedding(D_g) = embedding(X) ∩ β_g(embedding(X))
///   map-identity    β_g(embedding(x)) = embedding(α_g(x)) on D_{g⁻¹}
///   minimality      T = ∪_g β_g(embedding(X))
///   round-trip      restricting β to embedding(X) gives back the input
///   orbit-size      |orbit of embedding(x)| = global_orbit_size(x)
///   burnside        Burnside count = number of partial orbits
///   orbit-trace     O_x ∩ X = O_x^α and the stabilizers agree
/// Failures are report entries, never exceptions (except Error{Argument}
/// for a structurally incompatible embedding).
ValidationReport verify_globalization(const PartialAction& action, const Globalization& glob);

/// Looks for a bijection Φ : T₁ → T₂ with Φ∘β_g = β'_g∘Φ for all g that
/// extends `fixed` (pairs (t₁, t₂)). Throws Error{Argument} for different
/// groups or a non-injective `fixed`.
std::optional<std::vector<Index>> actions_isomorphic(
    const GlobalAction& first, const GlobalAction& second,
    const std::vector<std::pair<Index, Index>>& fixed = {});

}  // namespace pga
