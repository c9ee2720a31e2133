#include "pga/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pga/error.hpp"
#include "pga/kernels.hpp"

namespace pga {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::NotAGroup: return "not-a-group";
    case ErrorKind::Layout: return "layout";
    case ErrorKind::Bounds: return "bounds";
    case ErrorKind::Argument: return "argument";
    case ErrorKind::UnresolvedLabel: return "unresolved-label";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::InvalidGlobalAction: return "invalid-global-action";
    case ErrorKind::TheoremViolation: return "theorem-violation";
    case ErrorKind::Resource: return "resource";
  }
  return "unknown";
}

Index Group::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorKind::UnresolvedLabel, "unknown group element \"" + label + "\"");
  }
  return static_cast<Index>(it - labels_.begin());
}

namespace {

[[noreturn]] void not_a_group(const std::string& what) {
  throw Error(ErrorKind::NotAGroup, "not a group: " + what);
}

}  // namespace

GroupPtr make_group(std::vector<std::string> labels, std::vector<Index> table) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "group order must be at least 1");
  if (table.size() != n * n) {
    throw Error(ErrorKind::NotAGroup, "not a group: table is not " + std::to_string(n) + "x" +
                                          std::to_string(n));
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw Error(ErrorKind::Argument, "duplicate element label \"" + l + "\"");
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) >= n) {
        std::ostringstream os;
        os << "entry (" << a << ", " << b << ") = " << at(a, b) << " is out of range";
        throw Error(ErrorKind::Bounds, os.str());
      }
    }
  }
  // Latin square: rows first, then columns.
  std::vector<std::size_t> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[at(a, b)]++ != 0) {
        not_a_group("row " + std::to_string(a) + " repeats " + std::to_string(at(a, b)));
      }
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[at(a, b)]++ != 0) {
        not_a_group("column " + std::to_string(b) + " repeats " + std::to_string(at(a, b)));
      }
    }
  }
  auto is_identity = [&](std::size_t e) {
    for (std::size_t a = 0; a < n; ++a) {
      if (at(e, a) != a || at(a, e) != a) return false;
    }
    return true;
  };
  if (!is_identity(0)) {
    for (std::size_t e = 1; e < n; ++e) {
      if (is_identity(e)) {
        throw Error(ErrorKind::Layout,
                    "identity must be element 0, found at index " + std::to_string(e));
      }
    }
    not_a_group("no identity element");
  }
  std::vector<Index> inv(n, kNone);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) == 0) {
        inv[a] = static_cast<Index>(b);
        break;
      }
    }
    if (at(inv[a], a) != 0) {
      not_a_group("element " + std::to_string(a) + " has no two-sided inverse");
    }
  }
  if (auto w = kernels::parallel::find_nonassociative(n, table)) {
    std::ostringstream os;
    os << "associativity fails for (a, b, c) = (" << w->a << ", " << w->b << ", " << w->c << ")";
    not_a_group(os.str());
  }

  std::shared_ptr<Group> g(new Group());
  g->order_ = n;
  g->labels_ = std::move(labels);
  g->table_ = std::move(table);
  g->inv_ = std::move(inv);
  return g;
}

GroupPtr build_group_from_cayley(std::vector<std::string> labels,
                                 const std::vector<std::vector<Index>>& table) {
  const std::size_t n = table.size();
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      throw Error(ErrorKind::NotAGroup, "not a group: row " + std::to_string(r) + " has length " +
                                            std::to_string(table[r].size()) + ", expected " +
                                            std::to_string(n));
    }
    flat.insert(flat.end(), table[r].begin(), table[r].end());
  }
  if (labels.size() != n) {
    throw Error(ErrorKind::Argument, std::to_string(labels.size()) + " labels for a table of order " +
                                         std::to_string(n));
  }
  return make_group(std::move(labels), std::move(flat));
}

GroupPtr build_cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "cyclic group order must be at least 1");
  std::vector<std::string> labels(n);
  std::vector<Index> table(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    labels[k] = k == 0 ? "1" : k == 1 ? "g" : "g^" + std::to_string(k);
    for (std::size_t j = 0; j < n; ++j) table[k * n + j] = static_cast<Index>((k + j) % n);
  }
  return make_group(std::move(labels), std::move(table));
}

bool is_subgroup(const Group& group, std::span<const Index> members) {
  std::vector<std::uint8_t> in(group.order(), 0);
  for (Index a : members) {
    if (a >= group.order()) return false;
    in[a] = 1;
  }
  if (in[0] == 0) return false;
  for (Index a : members) {
    if (in[group.inverse(a)] == 0) return false;
    for (Index b : members) {
      if (in[group.mul(a, b)] == 0) return false;
    }
  }
  return true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Index> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!is_subgroup(*parent_, members_)) {
    throw Error(ErrorKind::Argument, "member set is not a subgroup");
  }
}

bool Subgroup::contains(Index a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

Subgroup subgroup_closure(const GroupPtr& group, std::span<const Index> seed) {
  for (Index s : seed) {
    if (s >= group->order()) {
      throw Error(ErrorKind::Bounds, "element index " + std::to_string(s) + " out of range for order " +
                                         std::to_string(group->order()));
    }
  }
  std::vector<std::uint8_t> in(group->order(), 0);
  std::vector<Index> members{0};
  in[0] = 1;
  // Right-multiplying by the generators until nothing new appears; in a
  // finite group this also yields inverses.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Index s : seed) {
      const Index next = group->mul(members[i], s);
      if (in[next] == 0) {
        in[next] = 1;
        members.push_back(next);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

std::vector<Index> left_coset(const Group& group, Index a, const Subgroup& subgroup) {
  std::vector<Index> out;
  out.reserve(subgroup.size());
  for (Index h : subgroup.members()) out.push_back(group.mul(a, h));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pga
