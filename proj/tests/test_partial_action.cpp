#include <gtest/gtest.h>

#include "pga/partial_action.hpp"
#include "support/fixtures.hpp"
#include "support/random_actions.hpp"

using namespace pga;
using test::c8_action;
using test::c4_action;

namespace {

// x1..x4 are points 0..3, g^k is element k.
constexpr Index x1 = 0, x2 = 1, x3 = 2, x4 = 3;

using Set = std::vector<Index>;

GlobalAction translation_action(std::size_t n) {
  auto group = build_cyclic_group(n);
  std::vector<std::vector<Index>> perms(n, std::vector<Index>(n));
  for (Index g = 0; g < n; ++g) {
    for (Index t = 0; t < n; ++t) perms[g][t] = (g + t) % n;
  }
  return GlobalAction(group, FiniteSet::numbered(n, "t"), perms);
}

PartialActionData trivial_domains(std::size_t order, std::size_t points) {
  PartialActionData d(build_cyclic_group(order), FiniteSet::numbered(points));
  d.set_identity_defaults();
  return d;
}

}  // namespace

TEST(PartialAction, JsonFixtureMatchesHandEntry) {
  EXPECT_EQ(c8_action(), PartialAction::create(test::c8_action_by_hand()));
}

TEST(PartialAction, C8ActionPassesEveryCheck) {
  const auto report = validate_partial_action(test::c8_action_by_hand());
  EXPECT_TRUE(report.passed());
  for (const char* name : {"structure.domains", "structure.map-sources", "structure.map-targets", "axiom.identity",
                           "bijectivity", "axiom.intertwining", "axiom.composition", "inverse-consistency"}) {
    ASSERT_NE(report.find(name), nullptr) << name;
    EXPECT_TRUE(report.find(name)->passed) << name;
  }
}

TEST(PartialAction, GlobalActionWithFullDomainsPasses) {
  const auto global = translation_action(5);
  const Set all{0, 1, 2, 3, 4};
  const auto data = restriction_data(global, all);
  for (const auto& d : data.domains) EXPECT_EQ(d, all);
  EXPECT_TRUE(validate_partial_action(data).passed());
}

TEST(PartialAction, RedirectedImageFailsComposition) {
  auto data = test::c8_action_by_hand();
  // α_{g²}(x3) = x3 instead of x4.
  for (auto& [s, t] : data.maps[2]) {
    if (s == x3) t = x3;
  }
  const auto report = validate_partial_action(data);
  ASSERT_FALSE(report.passed());
  const auto* composition = report.find("axiom.composition");
  ASSERT_NE(composition, nullptr);
  ASSERT_FALSE(composition->passed);
  ASSERT_TRUE(composition->witness);
  const auto& w = *composition->witness;

  // Oracle: exhaustive scan of (g, h, x) straight from the raw maps.
  auto image = [&](Index g, Index x) -> Index {
    for (auto [s, t] : data.maps[g]) {
      if (s == x) return t;
    }
    return kNone;
  };
  auto in = [&](Index g, Index x) {
    return std::find(data.domains[g].begin(), data.domains[g].end(), x) != data.domains[g].end();
  };
  std::vector<std::array<Index, 3>> failing;
  for (Index g = 0; g < 8; ++g) {
    for (Index h = 0; h < 8; ++h) {
      for (Index x = 0; x < 4; ++x) {
        if (!in((8 - h) % 8, x) || !in((16 - h - g) % 8, x)) continue;
        const Index y = image(h, x);
        const Index lhs = y == kNone ? kNone : image(g, y);
        if (lhs == kNone || lhs != image((g + h) % 8, x)) failing.push_back({g, h, x});
      }
    }
  }
  ASSERT_FALSE(failing.empty());
  EXPECT_EQ((std::array<Index, 3>{*w.g, *w.h, *w.x}), failing.front());
}

TEST(PartialAction, StructuralFailuresAreReportedSeparately) {
  {
    auto data = test::c8_action_by_hand();
    data.maps[4] = {{x1, x2}, {x2, x2}};  // duplicate target
    const auto report = validate_partial_action(data);
    EXPECT_FALSE(report.find("bijectivity")->passed);
    EXPECT_EQ(report.find("bijectivity")->witness->x, std::optional<Index>(x2));
  }
  {
    auto data = test::c8_action_by_hand();
    data.maps[4].emplace_back(x4, x4);  // x4 ∉ D_{g⁴}
    const auto report = validate_partial_action(data);
    EXPECT_FALSE(report.find("structure.map-sources")->passed);
  }
  {
    auto data = test::c8_action_by_hand();
    data.domains[6] = {x1, x2};  // D_{g⁶} no longer the image of α_{g⁶}
    const auto report = validate_partial_action(data);
    EXPECT_FALSE(report.find("structure.map-targets")->passed);
    EXPECT_FALSE(report.find("structure.map-sources")->passed);
  }
  {
    auto data = test::c8_action_by_hand();
    data.domains[2].push_back(9);
    EXPECT_THROW(validate_partial_action(data), Error);
  }
  {
    auto data = test::c8_action_by_hand();
    data.maps[0][1].second = x3;
    const auto report = validate_partial_action(data);
    EXPECT_FALSE(report.find("axiom.identity")->passed);
  }
}

TEST(PartialAction, CreateThrowsWithReport) {
  auto data = test::c8_action_by_hand();
  data.maps[2][0].second = x4;
  try {
    PartialAction::create(data);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_FALSE(e.report().passed());
    EXPECT_EQ(e.kind(), ErrorKind::Validation);
  }
}

TEST(PartialAction, EmptyCarrierIsValid) {
  auto data = trivial_domains(3, 0);
  EXPECT_TRUE(validate_partial_action(data).passed());
  auto a = PartialAction::create(data);
  EXPECT_TRUE(partial_transversal(a).empty());
}

TEST(RestrictGlobal, C8EnvelopeRestrictsToC8Action) {
  const auto action = c8_action();
  const auto glob = test::c8_envelope_fixture(action);
  const Set x{0, 1, 2, 3};
  EXPECT_EQ(restrict_global(glob.action, x), action);
}

TEST(RestrictGlobal, WholeCarrier) {
  const auto global = translation_action(4);
  const auto a = restrict_global(global, Set{0, 1, 2, 3});
  for (Index g = 0; g < 4; ++g) {
    EXPECT_EQ(a.domain(g), (Set{0, 1, 2, 3}));
    for (Index t = 0; t < 4; ++t) EXPECT_EQ(a.apply(g, t), global.apply(g, t));
  }
}

TEST(RestrictGlobal, TranslationOnTwoPoints) {
  // Frozen from direct evaluation of {0,1} ∩ ({0,1} + g) for g = 0..3.
  const auto a = restrict_global(translation_action(4), Set{0, 1});
  EXPECT_EQ(a.domain(0), (Set{0, 1}));
  EXPECT_EQ(a.domain(1), (Set{1}));
  EXPECT_EQ(a.domain(2), (Set{}));
  EXPECT_EQ(a.domain(3), (Set{0}));
}

TEST(RestrictGlobal, OutOfRange) {
  EXPECT_THROW(restrict_global(translation_action(4), Set{0, 7}), Error);
}

TEST(PartialOrbit, Examples) {
  const auto a = c8_action();
  EXPECT_EQ(partial_orbit(a, x1), (Set{x1, x2}));
  EXPECT_EQ(partial_orbit(a, x3), (Set{x3, x4}));
  EXPECT_EQ(partial_orbit(c4_action(), x3), (Set{x3, x4}));
  const auto trivial = PartialAction::create(trivial_domains(5, 4));
  for (Index x = 0; x < 4; ++x) EXPECT_EQ(partial_orbit(trivial, x), (Set{x}));
}

TEST(PartialStabilizer, Examples) {
  const auto a = c8_action();
  EXPECT_EQ(partial_stabilizer(a, x1).members(), (Set{0, 4}));
  EXPECT_EQ(partial_stabilizer(a, x3).members(), (Set{0}));
  const auto trivial = PartialAction::create(trivial_domains(5, 2));
  EXPECT_EQ(partial_stabilizer(trivial, 1).members(), (Set{0}));
}

TEST(UpperSets, Examples) {
  const auto a = c8_action();
  const auto u1 = upper_sets(a, x1);
  EXPECT_EQ(u1.upper, (Set{0, 2, 4, 6}));
  EXPECT_EQ(u1.complement.size(), 4u);

  const auto full = restrict_global(translation_action(6), Set{0, 1, 2, 3, 4, 5});
  for (Index x = 0; x < 6; ++x) {
    EXPECT_EQ(upper_sets(full, x).upper.size(), 6u);
    EXPECT_TRUE(upper_sets(full, x).complement.empty());
  }

  // Direct scan of the C4 action: x3 lies in D_1 and D_{g³} only.
  const auto u3 = upper_sets(c4_action(), x3);
  EXPECT_EQ(u3.upper, (Set{0, 1}));
  EXPECT_EQ(u3.complement, (Set{2, 3}));
}

TEST(Transversal, Examples) {
  EXPECT_EQ(partial_transversal(c8_action()), (Set{x1, x3}));
  EXPECT_EQ(partial_transversal(PartialAction::create(trivial_domains(8, 4))), (Set{0, 1, 2, 3}));
}

TEST(PartialGSubset, Examples) {
  const auto a = c8_action();
  EXPECT_TRUE(is_partial_g_subset(a, Set{x1, x2}).holds);
  EXPECT_TRUE(is_partial_g_subset(a, Set{}).holds);
  EXPECT_TRUE(is_partial_g_subset(a, Set{x1, x2, x3, x4}).holds);
  const auto check = is_partial_g_subset(a, Set{x3});
  EXPECT_FALSE(check.holds);
  // x3 ∈ D_{g⁶} and α_{g⁻⁶} = α_{g²} sends it to x4.
  ASSERT_TRUE(check.witness);
  EXPECT_EQ(check.witness->first, 6u);
  EXPECT_EQ(check.witness->second, x3);
}

TEST(PartialOrbitReport, C8ActionFirstOrbit) {
  const auto r = partial_orbit_report(c8_action(), x1);
  EXPECT_EQ(r.orbit, (Set{x1, x2}));
  EXPECT_EQ(r.stabilizer.members(), (Set{0, 4}));
  EXPECT_EQ(r.upper, (Set{0, 2, 4, 6}));
  EXPECT_EQ(r.upper_complement, (Set{1, 3, 5, 7}));
  ASSERT_EQ(r.cosets.size(), 2u);
  EXPECT_EQ(r.cosets[0], (Coset{0, {0, 4}}));
  EXPECT_EQ(r.cosets[1], (Coset{2, {2, 6}}));
}

TEST(RestrictToSubset, OrbitIsAPartialGSet) {
  const auto a = c8_action();
  const auto sub = restrict_to_subset(a, Set{x3, x4});
  EXPECT_EQ(sub.size(), 2u);
  EXPECT_EQ(sub.apply(2, 0), 1u);
  EXPECT_THROW(restrict_to_subset(a, Set{x3}), Error);
}

// Orbits partition X, y ∈ O_x ⇒ O_y = O_x, and every orbit is a partial G-subset.
TEST(PartialActionProperty, OrbitStructure) {
  std::mt19937 rng(4242);
  for (int round = 0; round < 200; ++round) {
    auto group = test::random_group(rng, 24);
    auto global = test::random_global_action(rng, group, 30);
    auto subset = test::random_subset(rng, global.size());
    const auto a = restrict_global(global, subset);
    std::vector<int> seen(a.size(), 0);
    for (Index s : partial_transversal(a)) {
      for (Index y : partial_orbit(a, s)) ++seen[y];
    }
    for (int c : seen) EXPECT_EQ(c, 1);
    for (Index x = 0; x < a.size(); ++x) {
      const auto o = partial_orbit(a, x);
      EXPECT_TRUE(is_partial_g_subset(a, o).holds);
      for (Index y : o) EXPECT_EQ(partial_orbit(a, y), o);
    }
  }
}
