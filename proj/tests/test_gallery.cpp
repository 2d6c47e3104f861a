#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace qrep;

namespace {

const Field kQ = Field::rationals();

std::set<std::pair<int, int>> edges(const AlgebraPtr& a) {
  std::set<std::pair<int, int>> out;
  for (const auto& arr : a->quiver().arrows()) out.emplace(arr.source + 1, arr.target + 1);
  return out;
}

}  // namespace

TEST(Delta, OddOrientation) {
  auto h = build_delta(5, kQ);
  EXPECT_EQ(edges(h), (std::set<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 4}, {5, 4}, {6, 4}}));
  EXPECT_EQ(h->dimension(), 11);
  EXPECT_TRUE(h->relations().empty());
}

TEST(Delta, EvenOrientation) {
  auto h = build_delta(4, kQ);
  EXPECT_EQ(h->vertex_count(), 5);
  EXPECT_EQ(h->quiver().arrow_count(), 4);
  EXPECT_EQ(edges(h), (std::set<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 4}, {3, 5}}));
  EXPECT_EQ(h->dimension(), 9);
  auto h6 = build_delta(6, kQ);
  EXPECT_EQ(edges(h6), (std::set<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 4}, {5, 4}, {5, 6}, {5, 7}}));
}

TEST(Delta, StarReversesEveryArrow) {
  for (int n = 4; n <= 8; ++n) {
    auto h = build_delta(n, kQ);
    auto hs = build_delta_star(n, kQ);
    std::set<std::pair<int, int>> rev;
    for (auto [s, t] : edges(h)) rev.emplace(t, s);
    EXPECT_EQ(edges(hs), rev);
    EXPECT_EQ(hs->dimension(), h->dimension());
  }
}

TEST(Delta, RejectsSmallN) {
  EXPECT_THROW(build_delta(3, kQ), std::invalid_argument);
  EXPECT_THROW(build_lambda(2, kQ), std::invalid_argument);
  EXPECT_THROW(Gallery({3, kQ}), std::invalid_argument);
}

TEST(Lambda, DoublesTheHereditaryDimension) {
  for (int n = 4; n <= 8; ++n) {
    auto lam = build_lambda(n, kQ);
    EXPECT_EQ(lam->dimension(), 2 * oracle::path_count(build_delta(n, kQ)->quiver()));
    EXPECT_EQ(lam->nilpotency_degree(), 3);
    for (int v = 0; v < lam->vertex_count(); ++v) {
      int cycles = 0;
      for (int b : lam->basis_between(v, v)) cycles += lam->basis_path(b).length() == 2 ? 1 : 0;
      EXPECT_EQ(cycles, 1);
    }
  }
}

TEST(Labels, IndexFormula) {
  Gallery g5({5, kQ});
  EXPECT_EQ(g5.labeled_arrow(1), std::pair(3, 4));
  EXPECT_EQ(g5.labeled_arrow(2), std::pair(5, 4));
  EXPECT_EQ(g5.labeled_arrow(3), std::pair(3, 2));
  Gallery g6({6, kQ});
  EXPECT_EQ(g6.labeled_arrow(1), std::pair(3, 4));
  EXPECT_EQ(g6.labeled_arrow(2), std::pair(5, 6));
  EXPECT_EQ(g6.labeled_arrow(3), std::pair(5, 4));
  EXPECT_EQ(g6.labeled_arrow(4), std::pair(3, 2));
  EXPECT_FALSE(arrow_label(5, 3, 1).has_value());
  EXPECT_FALSE(arrow_label(5, 6, 4).has_value());
}

TEST(Mouth, ModuleShapes) {
  EXPECT_EQ(module_E(5, 1, kQ).dims(), std::vector<int>({0, 0, 1, 1, 0, 0}));
  auto e2 = module_E(5, 2, kQ);
  EXPECT_EQ(e2.dims(), std::vector<int>({0, 0, 0, 1, 1, 1}));
  EXPECT_TRUE(e2.matrix("a5_4").is_identity());
  EXPECT_TRUE(e2.matrix("a6_4").is_identity());
  auto s1 = module_E_star(5, 1, kQ);
  EXPECT_EQ(s1.dims(), std::vector<int>({0, 0, 1, 1, 0, 0}));
  EXPECT_TRUE(s1.matrix("b4_3").is_identity());
  EXPECT_THROW(module_E(5, 0, kQ), std::out_of_range);
  EXPECT_THROW(module_E(5, 4, kQ), std::out_of_range);
}

TEST(Mouth, StarIsDualOfE) {
  Gallery g({7, kQ});
  for (int l = 1; l <= 5; ++l) {
    auto d = dual(g.e(l));
    EXPECT_EQ(d.dims(), g.e_star(l).dims());
    // The opposite quiver and Delta* share arrows up to naming; match by endpoints.
    const Quiver& from = d.algebra()->quiver();
    const Quiver& to = g.h_star()->quiver();
    std::vector<Matrix> mats;
    for (const auto& arrow : to.arrows()) {
      auto it = std::find_if(from.arrows().begin(), from.arrows().end(), [&](const auto& x) {
        return x.source == arrow.source && x.target == arrow.target;
      });
      ASSERT_NE(it, from.arrows().end());
      mats.push_back(d.matrix(static_cast<int>(it - from.arrows().begin())));
    }
    Representation moved(g.h_star(), d.dims(), mats);
    EXPECT_TRUE(are_isomorphic(moved, g.e_star(l)).is_iso());
  }
}

TEST(MouthProperty, ClassesTileOnePeriod) {
  for (int n = 4; n <= 8; ++n) {
    Gallery g({n, kQ});
    DimVector sum(std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    for (int l = 1; l <= g.mouth_size(); ++l) sum = sum + dim_vector(g.e(l));
    std::vector<int> expect(static_cast<std::size_t>(n + 1), 2);
    for (int v : {1, 2, n, n + 1}) expect[static_cast<std::size_t>(v - 1)] = 1;
    EXPECT_EQ(sum.entries, expect) << "n=" << n;
  }
}

TEST(MouthProperty, ModulesValidateOverLambda) {
  for (int n = 4; n <= 8; ++n) {
    Gallery g({n, Field::prime(2)});
    for (int l = 1; l <= g.mouth_size(); ++l) {
      EXPECT_TRUE(validate(g.e_lambda(l)).valid());
      EXPECT_TRUE(validate(g.e_star_lambda(l)).valid());
    }
  }
}

TEST(Tube, PassesForSmallCases) {
  auto r5 = verify_tube(5, Field::prime(2));
  EXPECT_TRUE(r5.passed);
  EXPECT_EQ(r5.rank_claimed, 3);
  EXPECT_EQ(r5.period, 3);
  EXPECT_EQ(r5.star_period, 3);
  auto r4 = verify_tube(4, kQ);
  EXPECT_TRUE(r4.passed);
  EXPECT_EQ(r4.rank_claimed, 2);
}

TEST(Tube, CorruptedFirstModuleIsPinpointed) {
  Gallery g({5, Field::prime(2)});
  auto e = g.e_all();
  e[0] = Representation::with_zero_maps(g.h(), e[0].dims());
  auto r = verify_tube(5, e, g.e_star_all());
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.bricks[0]);
  EXPECT_TRUE(r.bricks[1]);
  EXPECT_TRUE(r.bricks[2]);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(r.failures.front(), "E_1 is not a brick");
}

TEST(Tube, SwappedOrderBreaksTheOrbit) {
  Gallery g({6, kQ});
  auto e = g.e_all();
  std::swap(e[0], e[1]);
  auto r = verify_tube(6, e, g.e_star_all());
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.bricks[0] && r.bricks[1]);
  EXPECT_FALSE(r.tau_orbit[0].is_iso());
}

TEST(Tube, CorruptedStarFamilyFails) {
  Gallery g({5, kQ});
  auto es = g.e_star_all();
  es[2] = Representation::with_zero_maps(g.h_star(), es[2].dims());
  auto r = verify_tube(5, g.e_all(), es);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.star_bricks[2]);
  EXPECT_TRUE(std::all_of(r.bricks.begin(), r.bricks.end(), [](bool b) { return b; }));
}

TEST(ShortCycle, FiveOverGf5) {
  auto r = verify_short_cycle(5, Field::prime(5));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.entries[0].hom_e_to_star, 1);
  EXPECT_EQ(r.entries[0].hom_star_to_e, 1);
  EXPECT_EQ(r.formulas.size(), 54U);
}

TEST(ShortCycle, SixOverRationals) {
  auto r = verify_short_cycle(6, kQ);
  EXPECT_TRUE(r.passed);
  for (const auto& e : r.entries) {
    EXPECT_EQ(e.class_e, e.class_e_star);
    EXPECT_EQ(e.top_star, e.socle_e);
    EXPECT_EQ(e.top_e, e.socle_star);
  }
}

TEST(ShortCycle, CorruptedStarModuleFails) {
  Gallery g({5, kQ});
  std::vector<Representation> ms, ns;
  for (int l = 1; l <= 3; ++l) {
    ms.push_back(g.e_lambda(l));
    ns.push_back(g.e_star_lambda(l));
  }
  ns[1] = Representation::with_zero_maps(g.lambda(), ns[1].dims());
  auto r = verify_short_cycle(5, ms, ns, {});
  EXPECT_FALSE(r.passed);
  EXPECT_TRUE(r.entries[0].passed);
  EXPECT_FALSE(r.entries[1].passed);
}

TEST(ShortCycle, MismatchedClassesAreHypothesisViolations) {
  Gallery g({5, kQ});
  std::vector<Representation> ms{g.e_lambda(1)};
  std::vector<Representation> ns{g.e_star_lambda(2)};
  auto r = verify_short_cycle(5, ms, ns, {{"S3", simple(g.lambda(), 2)}});
  EXPECT_FALSE(r.passed);
  ASSERT_EQ(r.formulas.size(), 1U);
  EXPECT_EQ(r.formulas[0].first.status, FormulaReport::Status::hypothesis_violated);
  EXPECT_EQ(r.formulas[0].second.status, FormulaReport::Status::hypothesis_violated);
}
