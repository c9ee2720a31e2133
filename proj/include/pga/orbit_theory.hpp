#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pga/global_action.hpp"
#include "pga/partial_action.hpp"

namespace pga {

/// The cosets g⁻¹G_x with x ∈ D_g, ordered by minimum element.
struct CosetSpace {
  Index base = 0;
  Subgroup stabilizer;
  std::vector<Coset> cosets;
  std::vector<Index> owner;  // group element -> coset index, kNone outside G^x

  /// Index of the coset containing `element`, or kNone if element ∉ G^x.
  Index coset_of(Index element) const;
};

CosetSpace coset_space(const PartialAction& action, Index x);

/// The partial action of G on G^x/G_x obtained by restricting left
/// translation h·(g⁻¹G_x) = hg⁻¹G_x. Carrier point i is cosets[i].
struct InducedPartialAction {
  CosetSpace space;
  PartialAction action;
};

/// Builds the induced action with domains from the closed form
/// D̄_{h⁻¹} = {g⁻¹G_x : x ∈ D_g ∩ D_{gh⁻¹}}, compares them with the
/// definitional G^x/G_x ∩ h⁻¹·(G^x/G_x), and checks that ᾱ_h maps
/// D̄_{h⁻¹} into D̄_h. Any disagreement throws Error{TheoremViolation}
/// naming h and the coset.
InducedPartialAction induced_coset_action(const PartialAction& action, Index x);

/// The definitional domain G^x/G_x ∩ u·(G^x/G_x) for every group element
/// u, as sorted coset indices. Exposed for independent cross-checks.
std::vector<std::vector<Index>> definitional_coset_domains(const Group& group, const CosetSpace& space);

/// The closed-form domains {g⁻¹G_x : x ∈ D_g ∩ D_{gu}} for every u.
std::vector<std::vector<Index>> closed_form_coset_domains(const PartialAction& action,
                                                          const CosetSpace& space);

/// A map between the carriers of two partial actions of the same group.
struct PartialGMap {
  PartialAction source;
  PartialAction target;
  std::vector<Index> mapping;  // source point -> target point
};

struct GMapCheck {
  bool holds = true;
  bool bijective = false;
  std::optional<std::pair<Index, Index>> witness;  // (g, x)
  std::string detail;
};

/// Checks x ∈ D_{g⁻¹} ⇒ Φ(x) ∈ D'_{g⁻¹} and Φ(α_g(x)) = α'_g(Φ(x)) for all
/// (g, x), and reports whether Φ is a bijection.
GMapCheck check_partial_g_map(const PartialGMap& map);

/// φ : O_x^α → G^x/G_x, α_{g⁻¹}(x) ↦ g⁻¹G_x. Checks that φ is well defined,
/// a partial G-map and a bijection; throws Error{TheoremViolation} with a
/// witness otherwise. The source carrier is the partial orbit in
/// increasing order; the target is the induced coset action.
PartialGMap orbit_stabilizer_iso(const PartialAction& action, Index x);

/// |O_x^α| + |Ḡ^x| / |G_x|, the size of the orbit of x in any
/// globalization.
std::size_t global_orbit_size(const PartialAction& action, Index x);

struct BurnsideCount {
  std::vector<std::size_t> fixed_points;  // |T_g| per group element
  std::size_t total = 0;
  std::size_t orbits = 0;
};

/// (Σ_g |T_g|) / |G|; throws Error{InvalidGlobalAction} when the division
/// is inexact.
BurnsideCount burnside_count(const GlobalAction& action, Exec exec = Exec::Parallel);
std::size_t burnside_orbit_count(const GlobalAction& action);

}  // namespace pga
