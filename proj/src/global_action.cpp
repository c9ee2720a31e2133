#include "pga/global_action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pga/error.hpp"
#include "pga/kernels.hpp"

namespace pga {

GlobalAction::GlobalAction(GroupPtr group, FiniteSet carrier, std::vector<std::vector<Index>> perms,
                           std::optional<std::vector<std::vector<Index>>> stated_orbits)
    : group_(std::move(group)), carrier_(std::move(carrier)) {
  const std::size_t n = carrier_.size();
  if (perms.size() != group_->order()) {
    throw Error(ErrorKind::InvalidGlobalAction, "expected " + std::to_string(group_->order()) +
                                                    " permutations, got " + std::to_string(perms.size()));
  }
  perms_.reserve(group_->order() * n);
  std::vector<std::uint8_t> hit(n);
  for (std::size_t g = 0; g < perms.size(); ++g) {
    if (perms[g].size() != n) {
      throw Error(ErrorKind::InvalidGlobalAction,
                  "permutation for " + group_->label(static_cast<Index>(g)) + " has wrong length");
    }
    std::fill(hit.begin(), hit.end(), std::uint8_t{0});
    for (Index t : perms[g]) {
      if (t >= n || hit[t] != 0) {
        throw Error(ErrorKind::InvalidGlobalAction,
                    "beta_" + group_->label(static_cast<Index>(g)) + " is not a permutation of T");
      }
      hit[t] = 1;
    }
    perms_.insert(perms_.end(), perms[g].begin(), perms[g].end());
  }
  if (stated_orbits) {
    orbits_ = std::move(*stated_orbits);
    for (auto& o : orbits_) std::sort(o.begin(), o.end());
  } else {
    orbits_ = recompute_orbits();
  }
}

std::vector<std::vector<Index>> GlobalAction::recompute_orbits() const {
  const std::size_t n = size();
  std::vector<Index> component(n, kNone);
  std::vector<std::vector<Index>> out;
  for (Index start = 0; start < n; ++start) {
    if (component[start] != kNone) continue;
    const auto id = static_cast<Index>(out.size());
    std::vector<Index> members{start};
    component[start] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Index g = 0; g < group_->order(); ++g) {
        const Index next = apply(g, members[i]);
        if (component[next] == kNone) {
          component[next] = id;
          members.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<Index> GlobalAction::orbit_of(Index t) const {
  std::vector<Index> out;
  out.reserve(group_->order());
  for (Index g = 0; g < group_->order(); ++g) out.push_back(apply(g, t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> GlobalAction::stabilizer_of(Index t) const {
  std::vector<Index> out;
  for (Index g = 0; g < group_->order(); ++g) {
    if (apply(g, t) == t) out.push_back(g);
  }
  return out;
}

ValidationReport validate_global_action(const GlobalAction& action) {
  ValidationReport report;
  const Group& group = *action.group();
  const std::size_t n = action.size();
  const auto& labels = action.carrier();

  {
    std::optional<Index> bad;
    for (Index t = 0; t < n && !bad; ++t) {
      if (action.apply(0, t) != t) bad = t;
    }
    if (bad) {
      report.fail("global.identity", n,
                  Witness{0, std::nullopt, *bad, "beta_1 moves " + labels.label(*bad)});
    } else {
      report.pass("global.identity", n);
    }
  }

  if (auto w = kernels::parallel::find_homomorphism_failure(group.order(), n, group.table(),
                                                            action.perms())) {
    std::ostringstream os;
    os << "beta_" << group.label(w->a) << "(beta_" << group.label(w->b) << "(" << labels.label(w->c)
       << ")) = " << labels.label(action.apply(w->a, action.apply(w->b, w->c))) << " but beta_"
       << group.label(group.mul(w->a, w->b)) << "(" << labels.label(w->c)
       << ") = " << labels.label(action.apply(group.mul(w->a, w->b), w->c));
    report.fail("global.homomorphism", group.order() * group.order() * n,
                Witness{w->a, w->b, w->c, os.str()});
  } else {
    report.pass("global.homomorphism", group.order() * group.order() * n);
  }

  {
    std::optional<std::pair<Index, Index>> bad;
    for (Index g = 0; g < group.order() && !bad; ++g) {
      for (Index t = 0; t < n; ++t) {
        if (action.apply(group.inverse(g), action.apply(g, t)) != t) {
          bad = {g, t};
          break;
        }
      }
    }
    if (bad) {
      report.fail("global.inverse", group.order() * n,
                  Witness{bad->first, std::nullopt, bad->second,
                          "beta_{g^-1} does not undo beta_" + group.label(bad->first)});
    } else {
      report.pass("global.inverse", group.order() * n);
    }
  }

  {
    const auto& stated = action.orbit_decomposition();
    std::vector<Index> count(n, 0);
    bool in_range = true;
    for (const auto& o : stated) {
      for (Index t : o) {
        if (t >= n) {
          in_range = false;
        } else {
          ++count[t];
        }
      }
    }
    auto sorted_stated = stated;
    std::sort(sorted_stated.begin(), sorted_stated.end());
    const auto recomputed = action.recompute_orbits();
    auto bad = std::find_if(count.begin(), count.end(), [](Index c) { return c != 1; });
    if (!in_range || bad != count.end()) {
      Witness w;
      if (bad != count.end()) w.x = static_cast<Index>(bad - count.begin());
      w.detail = "stated orbits do not partition T";
      report.fail("global.orbits", stated.size(), std::move(w));
    } else if (sorted_stated != recomputed) {
      report.fail("global.orbits", stated.size(),
                  Witness{std::nullopt, std::nullopt, std::nullopt,
                          "stated orbits differ from the orbits of the permutations"});
    } else {
      report.pass("global.orbits", stated.size());
    }
  }
  return report;
}

}  // namespace pga
