#pragma once

#include <string>
#include <vector>

#include "pga/group.hpp"

namespace pga {

/// A finite carrier set: points 0..size-1 with distinct display labels.
class FiniteSet {
public:
  FiniteSet() = default;
  /// Throws Error{Argument} on a repeated label.
  explicit FiniteSet(std::vector<std::string> labels);

  /// Points labelled "<prefix>1".."<prefix>n".
  static FiniteSet numbered(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(Index x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Throws Error{UnresolvedLabel} naming the label when absent.
  Index index_of(const std::string& label) const;
  bool contains(const std::string& label) const;

  bool operator==(const FiniteSet&) const = default;

private:
  std::vector<std::string> labels_;
};

}  // namespace pga
