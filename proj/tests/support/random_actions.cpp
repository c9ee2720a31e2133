#include "support/random_actions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pga::test {

namespace {

using Perm = std::vector<Index>;

Perm compose(const Perm& a, const Perm& b) {  // (a·b)(i) = a(b(i))
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm cycle(std::size_t degree, std::initializer_list<Index> points) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), Index{0});
  std::vector<Index> c(points);
  for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
  return p;
}

Perm product(const std::vector<Perm>& parts) {
  Perm out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = compose(out, parts[i]);
  return out;
}

// Cyclic factors of the given orders on disjoint point blocks.
std::vector<Perm> abelian(const std::vector<std::size_t>& orders) {
  const std::size_t degree = std::accumulate(orders.begin(), orders.end(), std::size_t{0});
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (std::size_t n : orders) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), Index{0});
    for (std::size_t i = 0; i < n; ++i) p[offset + i] = static_cast<Index>(offset + (i + 1) % n);
    gens.push_back(p);
    offset += n;
  }
  return gens;
}

std::vector<Perm> dihedral(std::size_t n) {
  Perm rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Index>((i + 1) % n);
    ref[i] = static_cast<Index>((n - i) % n);
  }
  return {rot, ref};
}

}  // namespace

GroupPtr permutation_group(const std::vector<Perm>& generators, std::mt19937& rng) {
  const std::size_t degree = generators.front().size();
  Perm id(degree);
  std::iota(id.begin(), id.end(), Index{0});
  std::vector<Perm> elements{id};
  std::map<Perm, Index> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      Perm next = compose(elements[i], g);
      if (index.emplace(next, static_cast<Index>(elements.size())).second) elements.push_back(next);
    }
  }
  std::shuffle(elements.begin() + 1, elements.end(), rng);
  index.clear();
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<Index>(i);
  const std::size_t n = elements.size();
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose(elements[a], elements[b]));
  }
  std::vector<std::string> labels{"e"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return build_group_from_cayley(std::move(labels), table);
}

GroupPtr random_group(std::mt19937& rng, std::size_t max_order) {
  std::vector<std::pair<std::size_t, std::vector<Perm>>> catalogue = {
      {6, dihedral(3)},  {8, dihedral(4)},   {10, dihedral(5)}, {12, dihedral(6)},
      {14, dihedral(7)}, {16, dihedral(8)},  {18, dihedral(9)}, {20, dihedral(10)},
      {22, dihedral(11)}, {24, dihedral(12)},
      {12, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})}},            // A4
      {24, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})}},            // S4
      {8, {product({cycle(8, {0, 1, 3, 6}), cycle(8, {2, 5, 7, 4})}),
           product({cycle(8, {0, 2, 3, 7}), cycle(8, {1, 4, 6, 5})})}},  // Q8
      {8, abelian({2, 2, 2})},  {8, abelian({2, 4})},   {9, abelian({3, 3})},
      {12, abelian({2, 6})},    {16, abelian({4, 4})},  {16, abelian({2, 2, 4})},
      {18, abelian({3, 6})},    {4, abelian({2, 2})},   {6, abelian({2, 3})},
      {18, {cycle(6, {0, 1}), cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})}},  // S3 x C3
  };
  std::erase_if(catalogue, [&](const auto& e) { return e.first > max_order; });
  std::uniform_int_distribution<int> coin(0, 2);
  if (catalogue.empty() || coin(rng) == 0) {
    std::uniform_int_distribution<std::size_t> order(1, max_order);
    return build_cyclic_group(order(rng));
  }
  std::uniform_int_distribution<std::size_t> pick(0, catalogue.size() - 1);
  return permutation_group(catalogue[pick(rng)].second, rng);
}

GlobalAction coset_action(const GroupPtr& group, const Subgroup& subgroup) {
  const Group& g = *group;
  std::vector<Index> owner(g.order(), kNone);
  std::vector<Index> reps;
  for (Index a = 0; a < g.order(); ++a) {
    if (owner[a] != kNone) continue;
    for (Index m : left_coset(g, a, subgroup)) owner[m] = static_cast<Index>(reps.size());
    reps.push_back(a);
  }
  std::vector<std::vector<Index>> perms(g.order(), std::vector<Index>(reps.size()));
  for (Index h = 0; h < g.order(); ++h) {
    for (std::size_t c = 0; c < reps.size(); ++c) perms[h][c] = owner[g.mul(h, reps[c])];
  }
  return GlobalAction(group, FiniteSet::numbered(reps.size(), "c"), std::move(perms));
}

GlobalAction random_global_action(std::mt19937& rng, const GroupPtr& group, std::size_t max_points) {
  const Group& g = *group;
  std::uniform_int_distribution<Index> element(0, static_cast<Index>(g.order() - 1));
  std::uniform_int_distribution<int> seeds(0, 2);
  std::uniform_int_distribution<int> orbit_count(1, 5);

  // Collect transitive pieces G/H while they fit.
  std::vector<GlobalAction> pieces;
  std::size_t total = 0;
  const int wanted = orbit_count(rng);
  for (int attempt = 0; attempt < 20 && static_cast<int>(pieces.size()) < wanted; ++attempt) {
    std::vector<Index> seed;
    for (int k = seeds(rng); k > 0; --k) seed.push_back(element(rng));
    auto piece = coset_action(group, subgroup_closure(group, seed));
    if (total + piece.size() > max_points) continue;
    total += piece.size();
    pieces.push_back(std::move(piece));
  }
  if (pieces.empty()) {
    // Nothing fit: a single fixed point.
    std::vector<Index> all(g.order());
    std::iota(all.begin(), all.end(), Index{0});
    pieces.push_back(coset_action(group, subgroup_closure(group, all)));
    total = 1;
  }

  // Shuffle point names across the union.
  std::vector<Index> relabel(total);
  std::iota(relabel.begin(), relabel.end(), Index{0});
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<std::vector<Index>> perms(g.order(), std::vector<Index>(total));
  std::size_t offset = 0;
  for (const auto& piece : pieces) {
    for (Index h = 0; h < g.order(); ++h) {
      for (Index t = 0; t < piece.size(); ++t) {
        perms[h][relabel[offset + t]] = relabel[offset + piece.apply(h, t)];
      }
    }
    offset += piece.size();
  }
  return GlobalAction(group, FiniteSet::numbered(total, "t"), std::move(perms));
}

std::vector<Index> random_subset(std::mt19937& rng, std::size_t universe) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double keep = unit(rng);
  std::vector<Index> out;
  for (Index t = 0; t < universe; ++t) {
    if (unit(rng) < keep) out.push_back(t);
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace pga::test
