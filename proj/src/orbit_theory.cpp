#include "pga/orbit_theory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pga {

Index CosetSpace::coset_of(Index element) const {
  return element < owner.size() ? owner[element] : kNone;
}

CosetSpace coset_space(const PartialAction& action, Index x) {
  const Group& group = *action.group();
  auto stabilizer = partial_stabilizer(action, x);
  auto cosets = upper_cosets(action, x, stabilizer);
  std::vector<Index> owner(group.order(), kNone);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    for (Index m : cosets[i].members) owner[m] = static_cast<Index>(i);
  }
  const auto upper = upper_sets(action, x).upper;
  if (cosets.size() * stabilizer.size() != upper.size()) {
    throw Error(ErrorKind::TheoremViolation,
                "coset count times |G_x| differs from |G^x| at " + action.carrier().label(x));
  }
  return CosetSpace{x, std::move(stabilizer), std::move(cosets), std::move(owner)};
}

std::vector<std::vector<Index>> definitional_coset_domains(const Group& group, const CosetSpace& space) {
  std::vector<std::vector<Index>> out(group.order());
  for (Index u = 0; u < group.order(); ++u) {
    const Index u_inv = group.inverse(u);
    for (std::size_t c = 0; c < space.cosets.size(); ++c) {
      // c ∈ u·C  ⇔  u⁻¹·c ∈ C
      if (space.coset_of(group.mul(u_inv, space.cosets[c].representative)) != kNone) {
        out[u].push_back(static_cast<Index>(c));
      }
    }
  }
  return out;
}

std::vector<std::vector<Index>> closed_form_coset_domains(const PartialAction& action,
                                                          const CosetSpace& space) {
  const Group& group = *action.group();
  const Index x = space.base;
  std::vector<std::vector<Index>> out(group.order());
  for (Index u = 0; u < group.order(); ++u) {
    std::vector<std::uint8_t> hit(space.cosets.size(), 0);
    for (Index g = 0; g < group.order(); ++g) {
      if (action.in_domain(g, x) && action.in_domain(group.mul(g, u), x)) {
        hit[space.coset_of(group.inverse(g))] = 1;
      }
    }
    for (std::size_t c = 0; c < hit.size(); ++c) {
      if (hit[c] != 0) out[u].push_back(static_cast<Index>(c));
    }
  }
  return out;
}

namespace {

std::string coset_label(const Group& group, const Coset& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i) s += ",";
    s += group.label(c.members[i]);
  }
  return s + "}";
}

[[noreturn]] void lemma_violation(const Group& group, const CosetSpace& space, Index h, Index c,
                                  const std::string& what) {
  throw Error(ErrorKind::TheoremViolation,
              what + " (h = " + group.label(h) + ", coset " + coset_label(group, space.cosets[c]) + ")");
}

}  // namespace

InducedPartialAction induced_coset_action(const PartialAction& action, Index x) {
  const Group& group = *action.group();
  auto space = coset_space(action, x);
  const auto closed = closed_form_coset_domains(action, space);
  const auto definitional = definitional_coset_domains(group, space);
  for (Index u = 0; u < group.order(); ++u) {
    if (closed[u] != definitional[u]) {
      std::vector<Index> diff;
      std::set_symmetric_difference(closed[u].begin(), closed[u].end(), definitional[u].begin(),
                                    definitional[u].end(), std::back_inserter(diff));
      lemma_violation(group, space, group.inverse(u), diff.front(),
                      "closed-form and definitional coset domains disagree");
    }
  }

  std::vector<std::string> labels;
  for (const auto& c : space.cosets) labels.push_back(coset_label(group, c));
  PartialActionData data(action.group(), FiniteSet(std::move(labels)));
  data.domains = closed;
  for (Index h = 0; h < group.order(); ++h) {
    const Index h_inv = group.inverse(h);
    for (Index c : closed[h_inv]) {
      const Index image = space.coset_of(group.mul(h, space.cosets[c].representative));
      if (image == kNone || !std::binary_search(closed[h].begin(), closed[h].end(), image)) {
        lemma_violation(group, space, h, c, "translate of a coset in D_{h^-1} leaves D_h");
      }
      data.maps[h].emplace_back(c, image);
    }
  }
  auto report = validate_partial_action(data);
  if (!report.passed()) {
    throw Error(ErrorKind::TheoremViolation,
                "induced coset action at " + action.carrier().label(x) + " is not a partial action: " +
                    report.first_failure()->name);
  }
  return InducedPartialAction{std::move(space), PartialAction::create(data)};
}

GMapCheck check_partial_g_map(const PartialGMap& map) {
  const PartialAction& src = map.source;
  const PartialAction& dst = map.target;
  const Group& group = *src.group();
  GMapCheck out;
  if (!(group == *dst.group())) {
    out.holds = false;
    out.detail = "source and target use different groups";
    return out;
  }
  if (map.mapping.size() != src.size() ||
      std::any_of(map.mapping.begin(), map.mapping.end(), [&](Index y) { return y >= dst.size(); })) {
    out.holds = false;
    out.detail = "mapping is not a function from the source carrier to the target carrier";
    return out;
  }
  for (Index g = 0; g < group.order() && out.holds; ++g) {
    const Index g_inv = group.inverse(g);
    for (Index x = 0; x < src.size(); ++x) {
      if (!src.in_domain(g_inv, x)) continue;
      const Index fx = map.mapping[x];
      if (!dst.in_domain(g_inv, fx)) {
        out = GMapCheck{false, false, std::pair{g, x},
                        "image of " + src.carrier().label(x) + " is outside D'_" + group.label(g_inv)};
        break;
      }
      if (map.mapping[src.apply(g, x)] != dst.apply(g, fx)) {
        out = GMapCheck{false, false, std::pair{g, x},
                        "Phi(alpha_" + group.label(g) + "(" + src.carrier().label(x) + ")) != alpha'_" +
                            group.label(g) + "(Phi(" + src.carrier().label(x) + "))"};
        break;
      }
    }
  }
  std::vector<Index> sorted = map.mapping;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Index> all(dst.size());
  std::iota(all.begin(), all.end(), Index{0});
  out.bijective = sorted == all;
  return out;
}

PartialGMap orbit_stabilizer_iso(const PartialAction& action, Index x) {
  const Group& group = *action.group();
  const auto orbit = partial_orbit(action, x);
  auto source = restrict_to_subset(action, orbit);
  auto induced = induced_coset_action(action, x);

  std::vector<Index> mapping(orbit.size(), kNone);
  for (Index g = 0; g < group.order(); ++g) {
    if (!action.in_domain(g, x)) continue;
    const Index g_inv = group.inverse(g);
    const Index y = action.apply(g_inv, x);
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(orbit.begin(), orbit.end(), y) - orbit.begin());
    const Index coset = induced.space.coset_of(g_inv);
    if (mapping[pos] != kNone && mapping[pos] != coset) {
      throw Error(ErrorKind::TheoremViolation,
                  "phi is not well defined at " + action.carrier().label(y) + " (g = " + group.label(g) + ")");
    }
    mapping[pos] = coset;
  }
  PartialGMap phi{std::move(source), std::move(induced.action), std::move(mapping)};
  const auto check = check_partial_g_map(phi);
  if (!check.holds) {
    throw Error(ErrorKind::TheoremViolation, "phi is not a partial G-map: " + check.detail);
  }
  if (!check.bijective) {
    throw Error(ErrorKind::TheoremViolation,
                "phi is not a bijection onto G^x/G_x at " + action.carrier().label(x));
  }
  return phi;
}

std::size_t global_orbit_size(const PartialAction& action, Index x) {
  const auto orbit = partial_orbit(action, x);
  const auto stabilizer = partial_stabilizer(action, x);
  const auto sets = upper_sets(action, x);
  if (sets.complement.size() % stabilizer.size() != 0) {
    throw Error(ErrorKind::TheoremViolation,
                "|G_x| does not divide the complement of G^x at " + action.carrier().label(x));
  }
  return orbit.size() + sets.complement.size() / stabilizer.size();
}

BurnsideCount burnside_count(const GlobalAction& action, Exec exec) {
  const std::size_t order = action.group()->order();
  BurnsideCount out;
  out.fixed_points = exec == Exec::Parallel
                         ? kernels::parallel::fixed_point_counts(order, action.size(), action.perms())
                         : kernels::serial::fixed_point_counts(order, action.size(), action.perms());
  out.total = std::accumulate(out.fixed_points.begin(), out.fixed_points.end(), std::size_t{0});
  if (out.total % order != 0) {
    throw Error(ErrorKind::InvalidGlobalAction, "fixed-point total " + std::to_string(out.total) +
                                                    " is not divisible by |G| = " + std::to_string(order));
  }
  out.orbits = out.total / order;
  return out;
}

std::size_t burnside_orbit_count(const GlobalAction& action) { return burnside_count(action).orbits; }

}  // namespace pga
