#pragma once

// Exhaustive scans behind the validators. Every kernel exists twice:
// `serial` is the plain reference loop nest, `parallel` splits the
// outermost index across OpenMP threads. Both return the same
// lexicographically smallest witness, so results are deterministic
// regardless of thread count. Without OpenMP the parallel versions run
// sequentially.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pga/group.hpp"

namespace pga::kernels {

/// Flat, possibly invalid, partial action: member[g*points + x] says
/// x ∈ D_g, image[g*points + x] is α_g(x) or kNone.
struct ActionView {
  std::size_t order = 0;
  std::size_t points = 0;
  std::span<const Index> mul;
  std::span<const Index> inv;
  std::span<const std::uint8_t> member;
  std::span<const Index> image;

  bool in(Index g, Index x) const { return member[std::size_t{g} * points + x] != 0; }
  Index at(Index g, Index x) const { return image[std::size_t{g} * points + x]; }
};

struct Triple {
  Index a = 0;
  Index b = 0;
  Index c = 0;
  bool operator==(const Triple&) const = default;
};

/// (i, j, class-size mismatch point) for the G × X relation checks.
struct PairWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t third = 0;
  bool operator==(const PairWitness&) const = default;
};

/// Pairs (g, x) ∈ G × X are numbered g*points + x.
inline std::size_t pair_index(const ActionView& v, Index g, Index x) {
  return std::size_t{g} * v.points + x;
}

/// Pairs related to p = (g, x): all (h, α_{h⁻¹g}(x)) with x ∈ D_{g⁻¹h},
/// in increasing h. Missing images are skipped.
std::vector<std::size_t> related_pairs(const ActionView& v, std::size_t p);

namespace serial {

/// (a, b, c) with (ab)c ≠ a(bc).
std::optional<Triple> find_nonassociative(std::size_t order, std::span<const Index> mul);

/// (g, h, y): y lies in exactly one side of α_g(D_{g⁻¹} ∩ D_h) vs
/// D_g ∩ D_{gh}, or y is a source point where α_g is undefined.
std::optional<Triple> find_intertwining_failure(const ActionView& v);

/// (g, h, x) with x ∈ D_{h⁻¹} ∩ D_{h⁻¹g⁻¹} and α_g(α_h(x)) ≠ α_{gh}(x).
std::optional<Triple> find_composition_failure(const ActionView& v);

/// |Fix(β_g)| for every g; perms[g*points + t] = β_g(t).
std::vector<std::size_t> fixed_point_counts(std::size_t order, std::size_t points,
                                            std::span<const Index> perms);

/// (g, h, t) with β_g(β_h(t)) ≠ β_{gh}(t).
std::optional<Triple> find_homomorphism_failure(std::size_t order, std::size_t points,
                                                std::span<const Index> mul,
                                                std::span<const Index> perms);

/// Checks that related_pairs is an equivalence on G × X: p is related to
/// itself and every q related to p has the same related set. Witness is
/// (p, q, r) with r in the symmetric difference (r == p for reflexivity).
std::optional<PairWitness> find_equivalence_failure(const ActionView& v);

/// Minimum related pair for every pair (the canonical class member).
std::vector<std::size_t> class_minima(const ActionView& v);

}  // namespace serial

namespace parallel {

std::optional<Triple> find_nonassociative(std::size_t order, std::span<const Index> mul);
std::optional<Triple> find_intertwining_failure(const ActionView& v);
std::optional<Triple> find_composition_failure(const ActionView& v);
std::vector<std::size_t> fixed_point_counts(std::size_t order, std::size_t points,
                                            std::span<const Index> perms);
std::optional<Triple> find_homomorphism_failure(std::size_t order, std::size_t points,
                                                std::span<const Index> mul,
                                                std::span<const Index> perms);
std::optional<PairWitness> find_equivalence_failure(const ActionView& v);
std::vector<std::size_t> class_minima(const ActionView& v);

}  // namespace parallel

/// Number of threads the parallel kernels would use (1 without OpenMP).
int max_threads();

}  // namespace pga::kernels
