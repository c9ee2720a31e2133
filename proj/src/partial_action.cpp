#include "pga/partial_action.hpp"

#include <algorithm>
#include <sstream>

namespace pga {

namespace {

struct Dense {
  std::vector<std::uint8_t> member;
  std::vector<Index> image;
};

void check_shape(const PartialActionData& d) {
  const std::size_t order = d.group->order();
  const std::size_t n = d.carrier.size();
  if (d.domains.size() != order || d.maps.size() != order) {
    throw Error(ErrorKind::Argument, "partial action data must have one domain and one map per group element");
  }
  for (std::size_t g = 0; g < order; ++g) {
    for (Index x : d.domains[g]) {
      if (x >= n) {
        throw Error(ErrorKind::Bounds, "domain of " + d.group->label(static_cast<Index>(g)) +
                                           " contains out-of-range point " + std::to_string(x));
      }
    }
    for (auto [s, t] : d.maps[g]) {
      if (s >= n || t >= n) {
        throw Error(ErrorKind::Bounds, "map of " + d.group->label(static_cast<Index>(g)) +
                                           " has out-of-range pair (" + std::to_string(s) + ", " +
                                           std::to_string(t) + ")");
      }
    }
  }
}

Dense densify(const PartialActionData& d) {
  const std::size_t order = d.group->order();
  const std::size_t n = d.carrier.size();
  Dense out{std::vector<std::uint8_t>(order * n, 0), std::vector<Index>(order * n, kNone)};
  for (std::size_t g = 0; g < order; ++g) {
    for (Index x : d.domains[g]) out.member[g * n + x] = 1;
    for (auto [s, t] : d.maps[g]) {
      if (out.image[g * n + s] == kNone) out.image[g * n + s] = t;
    }
  }
  return out;
}

class Labeler {
public:
  Labeler(const Group& g, const FiniteSet& x) : g_(g), x_(x) {}
  const std::string& g(Index i) const { return g_.label(i); }
  const std::string& x(Index i) const { return x_.label(i); }

private:
  const Group& g_;
  const FiniteSet& x_;
};

}  // namespace

PartialActionData::PartialActionData(GroupPtr g, FiniteSet c)
    : group(std::move(g)), carrier(std::move(c)), domains(group->order()), maps(group->order()) {}

void PartialActionData::set_identity_defaults() {
  const auto n = static_cast<Index>(carrier.size());
  domains[0].clear();
  maps[0].clear();
  for (Index x = 0; x < n; ++x) {
    domains[0].push_back(x);
    maps[0].emplace_back(x, x);
  }
}

bool PartialActionData::operator==(const PartialActionData& other) const {
  return *group == *other.group && carrier == other.carrier && domains == other.domains &&
         maps == other.maps;
}

ValidationReport validate_partial_action(const PartialActionData& d, Exec exec) {
  check_shape(d);
  const Group& group = *d.group;
  const std::size_t order = group.order();
  const std::size_t n = d.carrier.size();
  const Labeler L(group, d.carrier);
  const Dense dense = densify(d);
  auto in = [&](Index g, Index x) { return dense.member[std::size_t{g} * n + x] != 0; };
  auto at = [&](Index g, Index x) { return dense.image[std::size_t{g} * n + x]; };

  ValidationReport report;

  // Structural checks precede the axioms.
  {
    std::optional<Witness> bad;
    std::vector<std::uint8_t> seen(n);
    for (Index g = 0; g < order && !bad; ++g) {
      std::fill(seen.begin(), seen.end(), std::uint8_t{0});
      for (Index x : d.domains[g]) {
        if (seen[x]++ != 0) {
          bad = Witness{g, std::nullopt, x, "D_" + L.g(g) + " lists " + L.x(x) + " twice"};
          break;
        }
      }
    }
    if (bad) report.fail("structure.domains", order, *bad); else report.pass("structure.domains", order);
  }
  {
    std::optional<Witness> bad;
    std::size_t cases = 0;
    std::vector<std::uint8_t> seen(n);
    for (Index g = 0; g < order && !bad; ++g) {
      const Index g_inv = group.inverse(g);
      std::fill(seen.begin(), seen.end(), std::uint8_t{0});
      for (auto [s, t] : d.maps[g]) {
        ++cases;
        if (seen[s]++ != 0) {
          bad = Witness{g, std::nullopt, s, "alpha_" + L.g(g) + " has two entries for " + L.x(s)};
          break;
        }
        if (!in(g_inv, s)) {
          bad = Witness{g, std::nullopt, s,
                        "alpha_" + L.g(g) + " source " + L.x(s) + " is not in D_" + L.g(g_inv)};
          break;
        }
      }
      if (bad) break;
      for (Index x = 0; x < n; ++x) {
        if (in(g_inv, x) && seen[x] == 0) {
          bad = Witness{g, std::nullopt, x,
                        "alpha_" + L.g(g) + " is undefined at " + L.x(x) + " in D_" + L.g(g_inv)};
          break;
        }
      }
    }
    if (bad) report.fail("structure.map-sources", cases, *bad); else report.pass("structure.map-sources", cases);
  }
  {
    std::optional<Witness> bad;
    std::size_t cases = 0;
    for (Index g = 0; g < order && !bad; ++g) {
      for (auto [s, t] : d.maps[g]) {
        ++cases;
        if (!in(g, t)) {
          bad = Witness{g, std::nullopt, s,
                        "alpha_" + L.g(g) + "(" + L.x(s) + ") = " + L.x(t) + " is not in D_" + L.g(g)};
          break;
        }
      }
    }
    if (bad) report.fail("structure.map-targets", cases, *bad); else report.pass("structure.map-targets", cases);
  }

  {
    std::optional<Witness> bad;
    for (Index x = 0; x < n && !bad; ++x) {
      if (!in(0, x)) bad = Witness{0, std::nullopt, x, L.x(x) + " is missing from D_1"};
      else if (at(0, x) != x) bad = Witness{0, std::nullopt, x, "alpha_1 moves " + L.x(x)};
    }
    if (bad) report.fail("axiom.identity", n, *bad); else report.pass("axiom.identity", n);
  }

  {
    std::optional<Witness> bad;
    std::vector<Index> hit(n);
    for (Index g = 0; g < order && !bad; ++g) {
      std::fill(hit.begin(), hit.end(), kNone);
      for (auto [s, t] : d.maps[g]) {
        if (hit[t] != kNone && hit[t] != s) {
          bad = Witness{g, std::nullopt, t,
                        "alpha_" + L.g(g) + " sends " + L.x(hit[t]) + " and " + L.x(s) + " to " + L.x(t)};
          break;
        }
        hit[t] = s;
      }
      if (bad) break;
      for (Index y = 0; y < n; ++y) {
        if (in(g, y) && hit[y] == kNone) {
          bad = Witness{g, std::nullopt, y, "alpha_" + L.g(g) + " does not reach " + L.x(y) + " in D_" + L.g(g)};
          break;
        }
      }
    }
    if (bad) report.fail("bijectivity", order, *bad); else report.pass("bijectivity", order);
  }

  const kernels::ActionView view{order, n, group.table(), group.inverses(), dense.member, dense.image};

  {
    const auto w = exec == Exec::Parallel ? kernels::parallel::find_intertwining_failure(view)
                                          : kernels::serial::find_intertwining_failure(view);
    if (w) {
      std::ostringstream os;
      os << "alpha_" << L.g(w->a) << "(D_" << L.g(group.inverse(w->a)) << " n D_" << L.g(w->b)
         << ") and D_" << L.g(w->a) << " n D_" << L.g(group.mul(w->a, w->b)) << " differ at "
         << L.x(w->c);
      report.fail("axiom.intertwining", order * order, Witness{w->a, w->b, w->c, os.str()});
    } else {
      report.pass("axiom.intertwining", order * order);
    }
  }

  {
    const auto w = exec == Exec::Parallel ? kernels::parallel::find_composition_failure(view)
                                          : kernels::serial::find_composition_failure(view);
    if (w) {
      std::ostringstream os;
      os << "alpha_" << L.g(w->a) << "(alpha_" << L.g(w->b) << "(" << L.x(w->c) << ")) != alpha_"
         << L.g(group.mul(w->a, w->b)) << "(" << L.x(w->c) << ")";
      report.fail("axiom.composition", order * order * n, Witness{w->a, w->b, w->c, os.str()});
    } else {
      report.pass("axiom.composition", order * order * n);
    }
  }

  {
    std::optional<Witness> bad;
    for (Index g = 0; g < order && !bad; ++g) {
      const Index g_inv = group.inverse(g);
      for (Index x = 0; x < n; ++x) {
        if (!in(g_inv, x)) continue;
        const Index y = at(g, x);
        if (y == kNone || at(g_inv, y) != x) {
          bad = Witness{g, std::nullopt, x,
                        "alpha_" + L.g(g_inv) + " does not invert alpha_" + L.g(g) + " at " + L.x(x)};
          break;
        }
      }
    }
    if (bad) report.fail("inverse-consistency", order * n, *bad); else report.pass("inverse-consistency", order * n);
  }
  return report;
}

namespace {

std::string failure_message(const ValidationReport& report) {
  const CheckResult* f = report.first_failure();
  std::string msg = "not a partial action";
  if (f) {
    msg += ": " + f->name;
    if (f->witness && !f->witness->detail.empty()) msg += ": " + f->witness->detail;
  }
  return msg;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(ErrorKind::Validation, failure_message(report)), report_(std::move(report)) {}

PartialAction PartialAction::create(const PartialActionData& data) {
  auto report = validate_partial_action(data);
  if (!report.passed()) throw ValidationError(std::move(report));
  Dense dense = densify(data);
  PartialAction out;
  out.group_ = data.group;
  out.carrier_ = data.carrier;
  out.domains_ = data.domains;
  for (auto& dom : out.domains_) std::sort(dom.begin(), dom.end());
  out.member_ = std::move(dense.member);
  out.image_ = std::move(dense.image);
  return out;
}

kernels::ActionView PartialAction::view() const {
  return kernels::ActionView{group_->order(), size(), group_->table(), group_->inverses(), member_, image_};
}

PartialActionData PartialAction::data() const {
  PartialActionData d(group_, carrier_);
  d.domains = domains_;
  for (Index g = 0; g < group_->order(); ++g) {
    for (Index x = 0; x < size(); ++x) {
      if (apply(g, x) != kNone) d.maps[g].emplace_back(x, apply(g, x));
    }
  }
  return d;
}

bool PartialAction::operator==(const PartialAction& other) const {
  return *group_ == *other.group_ && carrier_ == other.carrier_ && member_ == other.member_ &&
         image_ == other.image_;
}

namespace {

std::vector<Index> positions_in(std::size_t universe, std::span<const Index> subset) {
  std::vector<Index> pos(universe, kNone);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const Index t = subset[i];
    if (t >= universe) {
      throw Error(ErrorKind::Bounds, "index " + std::to_string(t) + " out of range for a set of size " +
                                         std::to_string(universe));
    }
    if (pos[t] != kNone) throw Error(ErrorKind::Argument, "index " + std::to_string(t) + " listed twice");
    pos[t] = static_cast<Index>(i);
  }
  return pos;
}

}  // namespace

PartialActionData restriction_data(const GlobalAction& global, std::span<const Index> subset) {
  const auto pos = positions_in(global.size(), subset);
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  for (Index t : subset) labels.push_back(global.carrier().label(t));
  PartialActionData d(global.group(), FiniteSet(std::move(labels)));
  for (Index g = 0; g < global.group()->order(); ++g) {
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const Index target = pos[global.apply(g, subset[i])];
      if (target == kNone) continue;
      d.domains[g].push_back(target);  // β_g(X) ∩ X
      d.maps[g].emplace_back(static_cast<Index>(i), target);
    }
    std::sort(d.domains[g].begin(), d.domains[g].end());
  }
  return d;
}

PartialAction restrict_global(const GlobalAction& global, std::span<const Index> subset) {
  return PartialAction::create(restriction_data(global, subset));
}

SubsetCheck is_partial_g_subset(const PartialAction& action, std::span<const Index> subset) {
  const auto pos = positions_in(action.size(), subset);
  const Group& group = *action.group();
  for (Index g = 0; g < group.order(); ++g) {
    const Index g_inv = group.inverse(g);
    for (Index x : action.domain(g)) {
      if (pos[x] == kNone) continue;
      if (pos[action.apply(g_inv, x)] == kNone) return SubsetCheck{false, std::pair{g, x}};
    }
  }
  return SubsetCheck{};
}

PartialAction restrict_to_subset(const PartialAction& action, std::span<const Index> subset) {
  const auto check = is_partial_g_subset(action, subset);
  if (!check.holds) {
    throw Error(ErrorKind::Argument, "subset is not a partial G-subset: alpha_{g^-1} leaves it at " +
                                         action.carrier().label(check.witness->second));
  }
  const auto pos = positions_in(action.size(), subset);
  std::vector<std::string> labels;
  for (Index x : subset) labels.push_back(action.carrier().label(x));
  PartialActionData d(action.group(), FiniteSet(std::move(labels)));
  for (Index g = 0; g < action.group()->order(); ++g) {
    for (Index x : action.domain(g)) {
      if (pos[x] != kNone) d.domains[g].push_back(pos[x]);
    }
    std::sort(d.domains[g].begin(), d.domains[g].end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const Index y = action.apply(g, subset[i]);
      if (y != kNone) d.maps[g].emplace_back(static_cast<Index>(i), pos[y]);
    }
  }
  return PartialAction::create(d);
}

std::vector<Index> partial_orbit(const PartialAction& action, Index x) {
  const Group& group = *action.group();
  if (x >= action.size()) throw Error(ErrorKind::Bounds, "point index out of range");
  std::vector<std::uint8_t> in(action.size(), 0);
  std::vector<Index> orbit;
  for (Index g = 0; g < group.order(); ++g) {
    if (!action.in_domain(g, x)) continue;
    const Index y = action.apply(group.inverse(g), x);
    if (in[y] == 0) {
      in[y] = 1;
      orbit.push_back(y);
    }
  }
  std::sort(orbit.begin(), orbit.end());
  for (Index y : orbit) {
    for (Index h = 0; h < group.order(); ++h) {
      if (!action.in_domain(h, y)) continue;
      const Index z = action.apply(group.inverse(h), y);
      if (in[z] == 0) {
        throw Error(ErrorKind::TheoremViolation,
                    "partial orbit of " + action.carrier().label(x) + " is not closed: alpha_" +
                        group.label(group.inverse(h)) + "(" + action.carrier().label(y) + ") = " +
                        action.carrier().label(z));
      }
    }
  }
  return orbit;
}

Subgroup partial_stabilizer(const PartialAction& action, Index x) {
  const Group& group = *action.group();
  if (x >= action.size()) throw Error(ErrorKind::Bounds, "point index out of range");
  std::vector<Index> members;
  for (Index g = 0; g < group.order(); ++g) {
    if (action.in_domain(group.inverse(g), x) && action.apply(g, x) == x) members.push_back(g);
  }
  if (!is_subgroup(group, members)) {
    throw Error(ErrorKind::TheoremViolation,
                "stabilizer of " + action.carrier().label(x) + " is not a subgroup");
  }
  return Subgroup(action.group(), std::move(members));
}

UpperSets upper_sets(const PartialAction& action, Index x) {
  const Group& group = *action.group();
  if (x >= action.size()) throw Error(ErrorKind::Bounds, "point index out of range");
  std::vector<std::uint8_t> upper_mask(group.order(), 0);
  for (Index g = 0; g < group.order(); ++g) {
    if (action.in_domain(g, x)) upper_mask[group.inverse(g)] = 1;
  }
  UpperSets out;
  for (Index g = 0; g < group.order(); ++g) {
    (upper_mask[g] != 0 ? out.upper : out.complement).push_back(g);
  }
  std::vector<Index> complement_by_definition;
  for (Index h = 0; h < group.order(); ++h) {
    if (!action.in_domain(group.inverse(h), x)) complement_by_definition.push_back(h);
  }
  if (complement_by_definition != out.complement) {
    throw Error(ErrorKind::TheoremViolation,
                "the two descriptions of the complement of G^x disagree at " + action.carrier().label(x));
  }
  return out;
}

std::vector<Index> partial_transversal(const PartialAction& action) {
  const std::size_t n = action.size();
  std::vector<std::vector<Index>> orbits(n);
  for (Index x = 0; x < n; ++x) orbits[x] = partial_orbit(action, x);
  std::vector<Index> out;
  for (Index x = 0; x < n; ++x) {
    if (!std::binary_search(orbits[x].begin(), orbits[x].end(), x)) {
      throw Error(ErrorKind::TheoremViolation, action.carrier().label(x) + " is not in its own partial orbit");
    }
    for (Index y : orbits[x]) {
      if (orbits[y] != orbits[x]) {
        throw Error(ErrorKind::TheoremViolation, "partial orbits of " + action.carrier().label(x) + " and " +
                                                     action.carrier().label(y) + " overlap without being equal");
      }
    }
    if (orbits[x].front() == x) out.push_back(x);
  }
  return out;
}

std::vector<Coset> upper_cosets(const PartialAction& action, Index x, const Subgroup& stabilizer) {
  const Group& group = *action.group();
  std::vector<Coset> out;
  std::vector<std::uint8_t> covered(group.order(), 0);
  for (Index g = 0; g < group.order(); ++g) {
    if (!action.in_domain(g, x)) continue;
    const Index g_inv = group.inverse(g);
    if (covered[g_inv] != 0) continue;
    auto members = left_coset(group, g_inv, stabilizer);
    for (Index m : members) covered[m] = 1;
    out.push_back(Coset{members.front(), std::move(members)});
  }
  std::sort(out.begin(), out.end(),
            [](const Coset& a, const Coset& b) { return a.representative < b.representative; });
  return out;
}

PartialOrbitReport partial_orbit_report(const PartialAction& action, Index x) {
  auto orbit = partial_orbit(action, x);
  auto stabilizer = partial_stabilizer(action, x);
  auto [upper, complement] = upper_sets(action, x);
  auto cosets = upper_cosets(action, x, stabilizer);

  const std::string& name = action.carrier().label(x);
  auto violated = [&](const std::string& what) {
    throw Error(ErrorKind::TheoremViolation, what + " fails at " + name);
  };
  if (!std::binary_search(orbit.begin(), orbit.end(), x)) violated("x in its partial orbit");
  if (orbit.size() * stabilizer.size() != upper.size()) violated("|O_x| * |G_x| = |G^x|");
  if (complement.size() % stabilizer.size() != 0) violated("|G_x| divides the complement of G^x");
  std::vector<Index> joined;
  for (const auto& c : cosets) {
    if (c.members.size() != stabilizer.size()) violated("coset size");
    joined.insert(joined.end(), c.members.begin(), c.members.end());
  }
  std::sort(joined.begin(), joined.end());
  if (std::adjacent_find(joined.begin(), joined.end()) != joined.end() || joined != upper) {
    violated("cosets partition G^x");
  }
  return PartialOrbitReport{x, std::move(orbit), std::move(stabilizer), std::move(upper),
                            std::move(complement), std::move(cosets)};
}

}  // namespace pga
