#include "support/properties.hpp"

#include <algorithm>

#include "pga/globalization.hpp"
#include "pga/orbit_theory.hpp"
#include "support/random_actions.hpp"

namespace pga::test {

namespace {

std::string name_of(const PartialAction& a, Index x) { return a.carrier().label(x); }

// The sub-action of `global` on G·subset, with its points in increasing order.
std::pair<GlobalAction, std::vector<Index>> generated_subaction(const GlobalAction& global,
                                                                const std::vector<Index>& subset) {
  std::vector<std::uint8_t> keep(global.size(), 0);
  for (Index x : subset) {
    for (Index t : global.orbit_of(x)) keep[t] = 1;
  }
  std::vector<Index> points, position(global.size(), kNone);
  std::vector<std::string> labels;
  for (Index t = 0; t < global.size(); ++t) {
    if (keep[t] == 0) continue;
    position[t] = static_cast<Index>(points.size());
    points.push_back(t);
    labels.push_back(global.carrier().label(t));
  }
  std::vector<std::vector<Index>> perms(global.group()->order(), std::vector<Index>(points.size()));
  for (Index g = 0; g < global.group()->order(); ++g) {
    for (std::size_t i = 0; i < points.size(); ++i) perms[g][i] = position[global.apply(g, points[i])];
  }
  return {GlobalAction(global.group(), FiniteSet(labels), perms), position};
}

}  // namespace

PropertyCase random_property_case(std::mt19937& rng) {
  auto group = random_group(rng, 24);
  auto global = random_global_action(rng, group, 30);
  auto subset = random_subset(rng, global.size());
  return PropertyCase{std::move(global), std::move(subset)};
}

std::vector<PropertyFailure> check_properties(const PropertyCase& c) {
  std::vector<PropertyFailure> failures;
  auto fail = [&](std::string property, std::string detail) {
    failures.push_back({std::move(property), std::move(detail)});
  };

  const auto data = restriction_data(c.global, c.subset);
  const auto report = validate_partial_action(data);
  if (!report.passed()) {
    fail("a", report.first_failure()->name);
    return failures;
  }
  const auto a = PartialAction::create(data);
  const Group& group = *a.group();

  for (Index x = 0; x < a.size(); ++x) {
    try {
      const auto orbit = partial_orbit(a, x);
      const auto stabilizer = partial_stabilizer(a, x);
      const auto sets = upper_sets(a, x);
      if (orbit.size() * stabilizer.size() != sets.upper.size()) fail("b", name_of(a, x));
      if (sets.complement.size() % stabilizer.size() != 0) fail("c", name_of(a, x));

      const auto phi = orbit_stabilizer_iso(a, x);
      const auto check = check_partial_g_map(phi);
      if (!check.holds || !check.bijective) fail("g", name_of(a, x) + ": " + check.detail);

      const auto space = coset_space(a, x);
      const auto closed = closed_form_coset_domains(a, space);
      const auto definitional = definitional_coset_domains(group, space);
      for (Index u = 0; u < group.order(); ++u) {
        // Literal reading: the coset C lies in D̄_u when every member of u⁻¹C is in G^x.
        std::vector<Index> literal;
        for (std::size_t k = 0; k < space.cosets.size(); ++k) {
          const bool inside = std::all_of(
              space.cosets[k].members.begin(), space.cosets[k].members.end(), [&](Index m) {
                return std::binary_search(sets.upper.begin(), sets.upper.end(), group.mul(group.inverse(u), m));
              });
          if (inside) literal.push_back(static_cast<Index>(k));
        }
        if (closed[u] != definitional[u] || closed[u] != literal) {
          fail("h", name_of(a, x) + " at " + group.label(u));
        }
      }
    } catch (const Error& e) {
      fail("b", name_of(a, x) + ": " + e.what());
    }
  }

  try {
    std::size_t cosets = 0;
    for (Index s : partial_transversal(a)) {
      cosets += upper_sets(a, s).upper.size() / partial_stabilizer(a, s).size();
    }
    if (cosets != a.size()) fail("b", "sum of |G^s|/|G_s| over the transversal is not |X|");
  } catch (const Error& e) {
    fail("b", e.what());
  }

  try {
    const auto glob = globalize(a);
    if (restriction_data(glob.action, glob.embedding) != a.data()) fail("d", "restriction differs");
    for (Index x = 0; x < a.size(); ++x) {
      if (global_orbit_size(a, x) != glob.action.orbit_of(glob.embedding[x]).size()) fail("e", name_of(a, x));
    }
    if (burnside_orbit_count(glob.action) != partial_transversal(a).size()) fail("f", "count differs");

    const auto [sub, position] = generated_subaction(c.global, c.subset);
    std::vector<std::pair<Index, Index>> fixed;
    for (std::size_t i = 0; i < c.subset.size(); ++i) fixed.emplace_back(glob.embedding[i], position[c.subset[i]]);
    if (!actions_isomorphic(glob.action, sub, fixed)) fail("envelope", "no isomorphism with X pinned");
  } catch (const Error& e) {
    fail("d", e.what());
  }
  return failures;
}

}  // namespace pga::test
