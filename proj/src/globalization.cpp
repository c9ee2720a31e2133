#include "pga/globalization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pga/orbit_theory.hpp"

namespace pga {

namespace {

std::string pair_name(const PartialAction& a, std::size_t p) {
  const std::size_t n = a.size();
  return "(" + a.group()->label(static_cast<Index>(p / n)) + ", " +
         a.carrier().label(static_cast<Index>(p % n)) + ")";
}

std::vector<std::string> fresh_labels(const FiniteSet& carrier, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t k = 1; out.size() < count; ++k) {
    std::string label = "t" + std::to_string(k);
    if (!carrier.contains(label)) out.push_back(std::move(label));
  }
  return out;
}

}  // namespace

Globalization globalize(const PartialAction& action, std::size_t max_size, Exec exec) {
  const Group& group = *action.group();
  const std::size_t order = group.order();
  const std::size_t n = action.size();
  if (order * n > max_size) {
    throw Error(ErrorKind::Resource, "|G|*|X| = " + std::to_string(order * n) + " exceeds the size cap " +
                                         std::to_string(max_size));
  }
  const auto view = action.view();

  if (auto w = exec == Exec::Parallel ? kernels::parallel::find_equivalence_failure(view)
                                      : kernels::serial::find_equivalence_failure(view)) {
    throw Error(ErrorKind::TheoremViolation,
                "relation on G x X is not an equivalence: " + pair_name(action, w->first) + " ~ " +
                    pair_name(action, w->second) + " but their classes differ at " +
                    pair_name(action, w->third));
  }
  const auto minima = exec == Exec::Parallel ? kernels::parallel::class_minima(view)
                                             : kernels::serial::class_minima(view);

  // Orbit position of every point of X, via the partial transversal.
  const auto transversal = partial_transversal(action);
  std::vector<Index> orbit_rank(n, kNone);
  for (std::size_t r = 0; r < transversal.size(); ++r) {
    for (Index y : partial_orbit(action, transversal[r])) orbit_rank[y] = static_cast<Index>(r);
  }

  // Class minima (g, x) with g ≠ 1 are the fresh points.
  std::vector<std::size_t> fresh;
  for (std::size_t p = n; p < order * n; ++p) {
    if (minima[p] == p) fresh.push_back(p);
  }
  std::stable_sort(fresh.begin(), fresh.end(), [&](std::size_t a, std::size_t b) {
    return orbit_rank[a % n] < orbit_rank[b % n];
  });

  const std::size_t t_size = n + fresh.size();
  std::vector<Index> class_point(order * n, kNone);  // class minimum -> T point
  std::vector<std::pair<Index, Index>> witness(t_size);
  for (Index x = 0; x < n; ++x) {
    class_point[x] = x;
    witness[x] = {0, x};
  }
  for (std::size_t i = 0; i < fresh.size(); ++i) {
    class_point[fresh[i]] = static_cast<Index>(n + i);
    witness[n + i] = {static_cast<Index>(fresh[i] / n), static_cast<Index>(fresh[i] % n)};
  }
  auto point_of = [&](std::size_t p) { return class_point[minima[p]]; };

  std::vector<std::vector<Index>> perms(order, std::vector<Index>(t_size));
  for (Index h = 0; h < order; ++h) {
    for (std::size_t t = 0; t < t_size; ++t) {
      const auto [g, x] = witness[t];
      perms[h][t] = point_of(std::size_t{group.mul(h, g)} * n + x);
    }
  }

  std::vector<std::string> labels = action.carrier().labels();
  for (auto& l : fresh_labels(action.carrier(), fresh.size())) labels.push_back(std::move(l));

  std::vector<Index> embedding(n);
  for (Index x = 0; x < n; ++x) embedding[x] = x;

  Globalization out{GlobalAction(action.group(), FiniteSet(std::move(labels)), std::move(perms)),
                    std::move(embedding), std::move(witness)};

  // Self-checks: minimality, D_g = X ∩ β_g(X), α_g = β_g on D_{g⁻¹}.
  const GlobalAction& beta = out.action;
  std::vector<std::uint8_t> reached(t_size, 0);
  for (Index g = 0; g < order; ++g) {
    for (Index x = 0; x < n; ++x) {
      const Index t = beta.apply(g, x);
      reached[t] = 1;
      // β_g(x) lands in X exactly when x ∈ D_{g⁻¹}, and then equals α_g(x).
      const bool defined = action.in_domain(group.inverse(g), x);
      if (defined ? t != action.apply(g, x) : t < n) {
        throw Error(ErrorKind::TheoremViolation, "beta_" + group.label(g) + " disagrees with alpha_" +
                                                     group.label(g) + " at " + action.carrier().label(x));
      }
    }
  }
  if (auto it = std::find(reached.begin(), reached.end(), 0); it != reached.end()) {
    throw Error(ErrorKind::TheoremViolation, "globalization is not minimal");
  }
  return out;
}

ValidationReport verify_globalization(const PartialAction& action, const Globalization& glob) {
  const Group& group = *action.group();
  const GlobalAction& beta = glob.action;
  const std::size_t n = action.size();
  const std::size_t order = group.order();
  if (!(group == *beta.group())) throw Error(ErrorKind::Argument, "partial and global action use different groups");
  if (glob.embedding.size() != n) throw Error(ErrorKind::Argument, "embedding does not cover X");
  std::vector<Index> preimage(beta.size(), kNone);
  for (Index x = 0; x < n; ++x) {
    const Index t = glob.embedding[x];
    if (t >= beta.size()) throw Error(ErrorKind::Argument, "embedding leaves T");
    if (preimage[t] != kNone) throw Error(ErrorKind::Argument, "embedding is not injective");
    preimage[t] = x;
  }
  const auto& emb = glob.embedding;
  const auto& xl = action.carrier();

  ValidationReport report = validate_global_action(beta);

  {
    std::optional<Witness> bad;
    for (Index g = 0; g < order && !bad; ++g) {
      // Inverse of the β_g row itself, not β_{g⁻¹}: β need not be an action here.
      std::vector<Index> back(beta.size());
      for (Index t = 0; t < beta.size(); ++t) back[beta.apply(g, t)] = t;
      for (Index x = 0; x < n; ++x) {
        const bool in_image = preimage[back[emb[x]]] != kNone;
        if (in_image != action.in_domain(g, x)) {
          bad = Witness{g, std::nullopt, x,
                        xl.label(x) + (in_image ? " is in X n beta_" : " is missing from X n beta_") +
                            group.label(g) + "(X)" + (in_image ? " but not in D_" : " but lies in D_") +
                            group.label(g)};
          break;
        }
      }
    }
    if (bad) report.fail("restriction", order * n, *bad); else report.pass("restriction", order * n);
  }

  {
    std::optional<Witness> bad;
    for (Index g = 0; g < order && !bad; ++g) {
      for (Index x = 0; x < n; ++x) {
        if (!action.in_domain(group.inverse(g), x)) continue;
        if (beta.apply(g, emb[x]) != emb[action.apply(g, x)]) {
          bad = Witness{g, std::nullopt, x,
                        "beta_" + group.label(g) + "(" + xl.label(x) + ") = " +
                            beta.carrier().label(beta.apply(g, emb[x])) + " but alpha_" + group.label(g) +
                            "(" + xl.label(x) + ") = " + xl.label(action.apply(g, x))};
          break;
        }
      }
    }
    if (bad) report.fail("map-identity", order * n, *bad); else report.pass("map-identity", order * n);
  }

  {
    std::vector<std::uint8_t> reached(beta.size(), 0);
    for (Index g = 0; g < order; ++g) {
      for (Index x = 0; x < n; ++x) reached[beta.apply(g, emb[x])] = 1;
    }
    auto it = std::find(reached.begin(), reached.end(), 0);
    if (it != reached.end()) {
      const auto t = static_cast<Index>(it - reached.begin());
      report.fail("minimality", beta.size(),
                  Witness{std::nullopt, std::nullopt, std::nullopt,
                          beta.carrier().label(t) + " is not a translate of X"});
    } else {
      report.pass("minimality", beta.size());
    }
  }

  {
    const auto restricted = restriction_data(beta, emb);
    const auto original = action.data();
    std::optional<Witness> bad;
    for (Index g = 0; g < order && !bad; ++g) {
      if (restricted.domains[g] != original.domains[g]) {
        bad = Witness{g, std::nullopt, std::nullopt, "restricted domain of " + group.label(g) + " differs"};
      } else if (restricted.maps[g] != original.maps[g]) {
        bad = Witness{g, std::nullopt, std::nullopt, "restricted map of " + group.label(g) + " differs"};
      }
    }
    if (bad) report.fail("round-trip", order, *bad); else report.pass("round-trip", order);
  }

  {
    std::optional<Witness> bad;
    for (Index x = 0; x < n && !bad; ++x) {
      const std::size_t predicted = global_orbit_size(action, x);
      const std::size_t actual = beta.orbit_of(emb[x]).size();
      if (predicted != actual) {
        bad = Witness{std::nullopt, std::nullopt, x,
                      "orbit of " + xl.label(x) + " has " + std::to_string(actual) + " points, predicted " +
                          std::to_string(predicted)};
      }
    }
    if (bad) report.fail("orbit-size", n, *bad); else report.pass("orbit-size", n);
  }

  {
    const std::size_t partial_orbits = partial_transversal(action).size();
    try {
      const auto count = burnside_count(beta);
      if (count.orbits != partial_orbits) {
        report.fail("burnside", order,
                    Witness{std::nullopt, std::nullopt, std::nullopt,
                            "Burnside count " + std::to_string(count.orbits) + " but " +
                                std::to_string(partial_orbits) + " partial orbits"});
      } else {
        report.pass("burnside", order);
      }
    } catch (const Error& e) {
      report.fail("burnside", order, Witness{std::nullopt, std::nullopt, std::nullopt, e.what()});
    }
  }

  {
    std::optional<Witness> bad;
    for (Index x = 0; x < n && !bad; ++x) {
      std::vector<Index> trace;
      for (Index t : beta.orbit_of(emb[x])) {
        if (preimage[t] != kNone) trace.push_back(preimage[t]);
      }
      std::sort(trace.begin(), trace.end());
      if (trace != partial_orbit(action, x)) {
        bad = Witness{std::nullopt, std::nullopt, x, "O_x n X differs from the partial orbit of " + xl.label(x)};
      } else if (beta.stabilizer_of(emb[x]) != partial_stabilizer(action, x).members()) {
        bad = Witness{std::nullopt, std::nullopt, x,
                      "global and partial stabilizers of " + xl.label(x) + " differ"};
      }
    }
    if (bad) report.fail("orbit-trace", n, *bad); else report.pass("orbit-trace", n);
  }
  return report;
}

std::optional<std::vector<Index>> actions_isomorphic(const GlobalAction& first, const GlobalAction& second,
                                                     const std::vector<std::pair<Index, Index>>& fixed) {
  const Group& group = *first.group();
  if (!(group == *second.group())) throw Error(ErrorKind::Argument, "actions of different groups");
  {
    std::set<Index> left, right;
    for (auto [a, b] : fixed) {
      if (a >= first.size() || b >= second.size()) throw Error(ErrorKind::Bounds, "pinned point out of range");
      if (!left.insert(a).second || !right.insert(b).second) {
        throw Error(ErrorKind::Argument, "pinned correspondence is not injective");
      }
    }
  }
  if (first.size() != second.size()) return std::nullopt;

  const auto orbits1 = first.recompute_orbits();
  const auto orbits2 = second.recompute_orbits();
  {
    std::multiset<std::size_t> s1, s2;
    for (const auto& o : orbits1) s1.insert(o.size());
    for (const auto& o : orbits2) s2.insert(o.size());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<Index> orbit_id2(second.size());
  for (std::size_t i = 0; i < orbits2.size(); ++i) {
    for (Index t : orbits2[i]) orbit_id2[t] = static_cast<Index>(i);
  }

  // Representative per orbit of `first`; a pinned point if there is one.
  std::map<Index, Index> pinned(fixed.begin(), fixed.end());
  struct Slot {
    Index rep;
    std::optional<Index> forced;
    std::vector<std::pair<Index, Index>> pins;  // pinned pairs inside this orbit
  };
  std::vector<Slot> slots;
  for (const auto& o : orbits1) {
    Slot s{o.front(), std::nullopt, {}};
    for (Index t : o) {
      if (auto it = pinned.find(t); it != pinned.end()) {
        if (!s.forced) {
          s.rep = t;
          s.forced = it->second;
        }
        s.pins.emplace_back(t, it->second);
      }
    }
    slots.push_back(std::move(s));
  }
  // Forced orbits first, then larger orbits: fewer candidates early.
  std::stable_sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
    return a.forced.has_value() > b.forced.has_value();
  });

  std::vector<std::vector<Index>> stab2(second.size());
  for (Index t = 0; t < second.size(); ++t) stab2[t] = second.stabilizer_of(t);

  std::vector<Index> image(slots.size(), kNone);
  std::vector<std::uint8_t> used(orbits2.size(), 0);

  auto consistent = [&](const Slot& s, Index target) {
    if (used[orbit_id2[target]] != 0) return false;
    if (first.orbit_of(s.rep).size() != orbits2[orbit_id2[target]].size()) return false;
    if (first.stabilizer_of(s.rep) != stab2[target]) return false;
    for (auto [a, b] : s.pins) {
      bool ok = false;
      for (Index g = 0; g < group.order() && !ok; ++g) {
        if (first.apply(g, s.rep) == a) ok = second.apply(g, target) == b;
      }
      if (!ok) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == slots.size()) return true;
    const Slot& s = slots[i];
    std::vector<Index> candidates;
    if (s.forced) {
      candidates.push_back(*s.forced);
    } else {
      for (std::size_t o = 0; o < orbits2.size(); ++o) {
        if (used[o] == 0) candidates.insert(candidates.end(), orbits2[o].begin(), orbits2[o].end());
      }
    }
    for (Index target : candidates) {
      if (!consistent(s, target)) continue;
      used[orbit_id2[target]] = 1;
      image[i] = target;
      if (self(self, i + 1)) return true;
      used[orbit_id2[target]] = 0;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  std::vector<Index> phi(first.size(), kNone);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    for (Index g = 0; g < group.order(); ++g) {
      phi[first.apply(g, slots[i].rep)] = second.apply(g, image[i]);
    }
  }
  for (Index g = 0; g < group.order(); ++g) {
    for (Index t = 0; t < first.size(); ++t) {
      if (phi[first.apply(g, t)] != second.apply(g, phi[t])) return std::nullopt;
    }
  }
  return phi;
}

}  // namespace pga
