#include "pga/finite_set.hpp"

#include <algorithm>
#include <set>

#include "pga/error.hpp"

namespace pga {

FiniteSet::FiniteSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw Error(ErrorKind::Argument, "duplicate point label \"" + l + "\"");
  }
}

FiniteSet FiniteSet::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + std::to_string(i));
  return FiniteSet(std::move(labels));
}

Index FiniteSet::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnresolvedLabel, "unknown point \"" + label + "\"");
  return static_cast<Index>(it - labels_.begin());
}

bool FiniteSet::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

}  // namespace pga
