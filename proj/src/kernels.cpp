#include "pga/kernels.hpp"

#include <algorithm>

#ifdef PGA_HAVE_OPENMP
#include <omp.h>
#endif

namespace pga::kernels {

namespace {

template <class W>
std::optional<W> first_found(const std::vector<std::optional<W>>& per_index) {
  for (const auto& w : per_index) {
    if (w) return w;
  }
  return std::nullopt;
}

std::optional<Triple> associativity_row(std::size_t order, std::span<const Index> mul, Index a) {
  auto m = [&](Index x, Index y) { return mul[std::size_t{x} * order + y]; };
  for (Index b = 0; b < order; ++b) {
    const Index ab = m(a, b);
    for (Index c = 0; c < order; ++c) {
      if (m(ab, c) != m(a, m(b, c))) return Triple{a, b, c};
    }
  }
  return std::nullopt;
}

// Compares α_g(D_{g⁻¹} ∩ D_h) with D_g ∩ D_{gh}. `mark` is scratch of size points.
std::optional<Triple> intertwining_pair(const ActionView& v, Index g, Index h,
                                        std::vector<std::uint8_t>& mark) {
  const Index g_inv = v.inv[g];
  const Index gh = v.mul[std::size_t{g} * v.order + h];
  std::fill(mark.begin(), mark.end(), std::uint8_t{0});
  for (Index x = 0; x < v.points; ++x) {
    if (!v.in(g_inv, x) || !v.in(h, x)) continue;
    const Index y = v.at(g, x);
    if (y == kNone || y >= v.points) return Triple{g, h, x};
    mark[y] = 1;
  }
  for (Index y = 0; y < v.points; ++y) {
    const bool rhs = v.in(g, y) && v.in(gh, y);
    if ((mark[y] != 0) != rhs) return Triple{g, h, y};
  }
  return std::nullopt;
}

std::optional<Triple> intertwining_row(const ActionView& v, Index g) {
  std::vector<std::uint8_t> mark(v.points);
  for (Index h = 0; h < v.order; ++h) {
    if (auto w = intertwining_pair(v, g, h, mark)) return w;
  }
  return std::nullopt;
}

std::optional<Triple> composition_row(const ActionView& v, Index g) {
  for (Index h = 0; h < v.order; ++h) {
    const Index h_inv = v.inv[h];
    const Index gh = v.mul[std::size_t{g} * v.order + h];
    const Index gh_inv = v.inv[gh];
    for (Index x = 0; x < v.points; ++x) {
      if (!v.in(h_inv, x) || !v.in(gh_inv, x)) continue;
      const Index y = v.at(h, x);
      const Index lhs = (y == kNone || y >= v.points) ? kNone : v.at(g, y);
      const Index rhs = v.at(gh, x);
      if (lhs == kNone || lhs != rhs) return Triple{g, h, x};
    }
  }
  return std::nullopt;
}

std::size_t fixed_in_row(std::size_t points, std::span<const Index> perms, std::size_t g) {
  std::size_t count = 0;
  for (std::size_t t = 0; t < points; ++t) {
    if (perms[g * points + t] == t) ++count;
  }
  return count;
}

std::optional<Triple> homomorphism_row(std::size_t order, std::size_t points,
                                       std::span<const Index> mul,
                                       std::span<const Index> perms, Index g) {
  for (Index h = 0; h < order; ++h) {
    const Index gh = mul[std::size_t{g} * order + h];
    for (Index t = 0; t < points; ++t) {
      const Index bh = perms[std::size_t{h} * points + t];
      if (perms[std::size_t{g} * points + bh] != perms[std::size_t{gh} * points + t]) {
        return Triple{g, h, t};
      }
    }
  }
  return std::nullopt;
}

std::optional<PairWitness> equivalence_at(const ActionView& v, std::size_t p) {
  const auto related = related_pairs(v, p);
  if (!std::binary_search(related.begin(), related.end(), p)) return PairWitness{p, p, p};
  for (std::size_t q : related) {
    if (q == p) continue;
    const auto other = related_pairs(v, q);
    if (other == related) continue;
    std::vector<std::size_t> diff;
    std::set_symmetric_difference(related.begin(), related.end(), other.begin(), other.end(),
                                  std::back_inserter(diff));
    return PairWitness{p, q, diff.front()};
  }
  return std::nullopt;
}

std::size_t class_minimum(const ActionView& v, std::size_t p) {
  const auto related = related_pairs(v, p);
  return related.empty() ? p : std::min(p, related.front());
}

}  // namespace

std::vector<std::size_t> related_pairs(const ActionView& v, std::size_t p) {
  const Index g = static_cast<Index>(p / v.points);
  const Index x = static_cast<Index>(p % v.points);
  const Index g_inv = v.inv[g];
  std::vector<std::size_t> out;
  for (Index h = 0; h < v.order; ++h) {
    const Index k = v.mul[std::size_t{g_inv} * v.order + h];
    if (!v.in(k, x)) continue;
    const Index y = v.at(v.inv[k], x);
    if (y == kNone || y >= v.points) continue;
    out.push_back(pair_index(v, h, y));
  }
  return out;
}

int max_threads() {
#ifdef PGA_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

std::optional<Triple> find_nonassociative(std::size_t order, std::span<const Index> mul) {
  for (Index a = 0; a < order; ++a) {
    if (auto w = associativity_row(order, mul, a)) return w;
  }
  return std::nullopt;
}

std::optional<Triple> find_intertwining_failure(const ActionView& v) {
  for (Index g = 0; g < v.order; ++g) {
    if (auto w = intertwining_row(v, g)) return w;
  }
  return std::nullopt;
}

std::optional<Triple> find_composition_failure(const ActionView& v) {
  for (Index g = 0; g < v.order; ++g) {
    if (auto w = composition_row(v, g)) return w;
  }
  return std::nullopt;
}

std::vector<std::size_t> fixed_point_counts(std::size_t order, std::size_t points,
                                            std::span<const Index> perms) {
  std::vector<std::size_t> counts(order);
  for (std::size_t g = 0; g < order; ++g) counts[g] = fixed_in_row(points, perms, g);
  return counts;
}

std::optional<Triple> find_homomorphism_failure(std::size_t order, std::size_t points,
                                                std::span<const Index> mul,
                                                std::span<const Index> perms) {
  for (Index g = 0; g < order; ++g) {
    if (auto w = homomorphism_row(order, points, mul, perms, g)) return w;
  }
  return std::nullopt;
}

std::optional<PairWitness> find_equivalence_failure(const ActionView& v) {
  const std::size_t total = v.order * v.points;
  for (std::size_t p = 0; p < total; ++p) {
    if (auto w = equivalence_at(v, p)) return w;
  }
  return std::nullopt;
}

std::vector<std::size_t> class_minima(const ActionView& v) {
  const std::size_t total = v.order * v.points;
  std::vector<std::size_t> out(total);
  for (std::size_t p = 0; p < total; ++p) out[p] = class_minimum(v, p);
  return out;
}

}  // namespace serial

namespace parallel {

std::optional<Triple> find_nonassociative(std::size_t order, std::span<const Index> mul) {
  std::vector<std::optional<Triple>> rows(order);
  const auto n = static_cast<std::int64_t>(order);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < n; ++a) {
    rows[a] = associativity_row(order, mul, static_cast<Index>(a));
  }
  return first_found(rows);
}

std::optional<Triple> find_intertwining_failure(const ActionView& v) {
  std::vector<std::optional<Triple>> rows(v.order);
  const auto n = static_cast<std::int64_t>(v.order);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t g = 0; g < n; ++g) {
    rows[g] = intertwining_row(v, static_cast<Index>(g));
  }
  return first_found(rows);
}

std::optional<Triple> find_composition_failure(const ActionView& v) {
  std::vector<std::optional<Triple>> rows(v.order);
  const auto n = static_cast<std::int64_t>(v.order);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t g = 0; g < n; ++g) {
    rows[g] = composition_row(v, static_cast<Index>(g));
  }
  return first_found(rows);
}

std::vector<std::size_t> fixed_point_counts(std::size_t order, std::size_t points,
                                            std::span<const Index> perms) {
  std::vector<std::size_t> counts(order);
  const auto n = static_cast<std::int64_t>(order);
#pragma omp parallel for schedule(static)
  for (std::int64_t g = 0; g < n; ++g) {
    counts[g] = fixed_in_row(points, perms, static_cast<std::size_t>(g));
  }
  return counts;
}

std::optional<Triple> find_homomorphism_failure(std::size_t order, std::size_t points,
                                                std::span<const Index> mul,
                                                std::span<const Index> perms) {
  std::vector<std::optional<Triple>> rows(order);
  const auto n = static_cast<std::int64_t>(order);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t g = 0; g < n; ++g) {
    rows[g] = homomorphism_row(order, points, mul, perms, static_cast<Index>(g));
  }
  return first_found(rows);
}

std::optional<PairWitness> find_equivalence_failure(const ActionView& v) {
  const auto total = static_cast<std::int64_t>(v.order * v.points);
  std::vector<std::optional<PairWitness>> found(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t p = 0; p < total; ++p) {
    found[p] = equivalence_at(v, static_cast<std::size_t>(p));
  }
  return first_found(found);
}

std::vector<std::size_t> class_minima(const ActionView& v) {
  const auto total = static_cast<std::int64_t>(v.order * v.points);
  std::vector<std::size_t> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t p = 0; p < total; ++p) {
    out[p] = class_minimum(v, static_cast<std::size_t>(p));
  }
  return out;
}

}  // namespace parallel

}  // namespace pga::kernels
