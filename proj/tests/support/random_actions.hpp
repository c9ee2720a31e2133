#pragma once

#include <random>
#include <vector>

#include "pga/global_action.hpp"
#include "pga/group.hpp"

namespace pga::test {

/// Group given by permutation generators on `degree` points, closed under
/// composition and turned into a Cayley table with the identity first and
/// the remaining elements in random order.
GroupPtr permutation_group(const std::vector<std::vector<Index>>& generators, std::mt19937& rng);

/// A random group of order at most `max_order`: cyclic, dihedral,
/// abelian products, A4, S4, Q8 and friends, mostly through Cayley tables.
GroupPtr random_group(std::mt19937& rng, std::size_t max_order = 24);

/// Disjoint union of one to five coset actions G/H on at most
/// `max_points` points, with the points shuffled. Falls back to a single
/// fixed point when no coset action fits.
GlobalAction random_global_action(std::mt19937& rng, const GroupPtr& group, std::size_t max_points = 30);

/// Each point kept with a random probability; order randomised.
std::vector<Index> random_subset(std::mt19937& rng, std::size_t universe);

/// Permutation action on cosets of `subgroup`, points labelled by prefix.
GlobalAction coset_action(const GroupPtr& group, const Subgroup& subgroup);

}  // namespace pga::test
