#include <map>
#include <tuple>

#include <gtest/gtest.h>

#include "kchain/chain_graphs.hpp"
#include "kchain/closed_forms.hpp"
#include "kchain/invariant_oracles.hpp"

using namespace kchain;

TEST(BaseChain, SmallValues) {
  EXPECT_EQ(kf_gn(1), 3);
  EXPECT_EQ(kf_gn(3), Rational(50, 3));
  EXPECT_EQ(kfstar_gn(1), 27);
  EXPECT_EQ(kfstar_gn(2), Rational(298, 3));
  EXPECT_EQ(tau_gn(1), 16);
  EXPECT_EQ(tau_gn(2), 192);
  EXPECT_EQ(wiener_gn(2), 19);
  EXPECT_EQ(gutman_gn(2), 235);
  EXPECT_THROW(kf_gn(0), InvalidArgument);
  EXPECT_THROW(tau_gn(-3), InvalidArgument);
}

TEST(BaseChain, WienerAndGutmanAreIntegersFarOut) {
  for (int n = 1; n <= 1000; ++n) {
    EXPECT_TRUE(is_integer(wiener_gn(n))) << n;
    EXPECT_NO_THROW(gutman_gn(n));
  }
}

TEST(BaseChain, TauHasExpectedFactorisation) {
  for (int n = 1; n <= 40; ++n) {
    BigInt t = tau_gn(n);
    int twos = 0, threes = 0;
    while (t % 2 == 0) t /= 2, ++twos;
    while (t % 3 == 0) t /= 3, ++threes;
    EXPECT_EQ(t, 1);
    EXPECT_EQ(twos, 2 * n + 2);
    EXPECT_EQ(threes, n - 1);
  }
}

TEST(BaseChain, AgreesWithOracles) {
  for (int n = 1; n <= 10; ++n) {
    const InvariantReport r = full_report(ChainSpec(n));
    EXPECT_EQ(kf_gn(n), r.kirchhoff);
    EXPECT_EQ(kfstar_gn(n), r.mult_deg_kirchhoff);
    EXPECT_EQ(tau_gn(n), r.spanning_trees);
    EXPECT_EQ(wiener_gn(n), Rational(r.wiener));
    EXPECT_EQ(gutman_gn(n), r.gutman);
  }
}

TEST(BaseChain, KfStarBoundedByDegreeExtremes) {
  // 9 Kf <= Kf* <= 25 Kf since every degree is 3 or 5.
  for (int n = 1; n <= 200; ++n) {
    EXPECT_LE(9 * kf_gn(n), kfstar_gn(n));
    EXPECT_LE(kfstar_gn(n), 25 * kf_gn(n));
  }
}

TEST(Errata, WienerAsPrintedIsWrong) {
  EXPECT_EQ(wiener_gn(2, FormulaVariant::AsPrinted), Rational(59, 3));
  EXPECT_EQ(wiener_gn(2, FormulaVariant::Corrected), 19);
  // The printed version swaps the n^2 and n coefficients, so it agrees only at n = 1.
  EXPECT_EQ(wiener_gn(1, FormulaVariant::AsPrinted), wiener_gn(1));
  for (int n = 2; n <= 50; ++n) EXPECT_NE(wiener_gn(n, FormulaVariant::AsPrinted), wiener_gn(n));
}

TEST(Errata, InternalRowSumAsPrintedIsOffByTwo) {
  for (int n = 2; n <= 30; ++n)
    for (int i = 2; i <= n; ++i)
      EXPECT_EQ(internal_distance_sum(n, i) - internal_distance_sum(n, i, FormulaVariant::AsPrinted), 2);
  EXPECT_THROW(internal_distance_sum(5, 1), InvalidArgument);
  EXPECT_THROW(internal_gutman_sum(5, 6), InvalidArgument);
}

TEST(Errata, PrintedTableCells) {
  EXPECT_EQ(printed_kf_erratum(48), "20461.67");
  EXPECT_EQ(display2(kf_gn(48)), "20416.67");
  EXPECT_EQ(printed_kfstar_erratum(40), "184428.00");
  EXPECT_EQ(display2(kfstar_gn(40)), "284428.00");
  for (int n = 1; n <= 50; ++n) {
    if (n != 48) {
      EXPECT_FALSE(printed_kf_erratum(n));
    }
    if (n != 40) {
      EXPECT_FALSE(printed_kfstar_erratum(n));
    }
  }
}

TEST(Family, ConsistencyRules) {
  EXPECT_NO_THROW(kf_grn(3, 0, 6));
  EXPECT_THROW(kf_grn(3, 0, 5), InvalidArgument);
  EXPECT_THROW(kf_grn(3, 1, 4), InvalidArgument);
  EXPECT_THROW(kf_grn(3, 4, 6), InvalidArgument);
  EXPECT_THROW(tau_grn(3, 2, 7), InvalidArgument);
  EXPECT_NO_THROW(tau_grn(1, 2, 4));
}

TEST(Family, ReducesToBaseChain) {
  for (int n = 1; n <= 100; ++n) {
    EXPECT_EQ(kf_grn(n, 0, 6), kf_gn(n));
    EXPECT_EQ(tau_grn(n, 0, 6), tau_gn(n));
    EXPECT_EQ(Rational(wiener_grn(n, 0)), wiener_gn(n));
  }
}

TEST(Family, MatchesOracleAndDependsOnlyOnNRD) {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::tuple<int, int>, Rational> seen;
    for (const ChainSpec& s : enumerate_all_subchains(n)) {
      const int d = end_degree_sum(s).value;
      const InvariantReport r = full_report(s);
      EXPECT_EQ(kf_grn(n, s.r(), d), r.kirchhoff);
      EXPECT_EQ(tau_grn(n, s.r(), d), r.spanning_trees);
      EXPECT_EQ(wiener_grn(n, s.r()), r.wiener);
      const auto [it, fresh] = seen.emplace(std::tuple{s.r(), d}, r.kirchhoff);
      if (!fresh) {
        EXPECT_EQ(it->second, r.kirchhoff);
      }
    }
  }
}

TEST(PerVertex, RowSumsMatchBfs) {
  for (int n = 2; n <= 12; ++n) {
    const Graph g = build_chain(n);
    const auto dist = distance_matrix(g);
    const auto deg = g.degrees();
    for (int i = 2; i <= n; ++i) {
      const auto v = static_cast<std::size_t>(top_vertex(n, i));
      BigInt row = 0, weighted = 0;
      for (std::size_t u = 0; u < dist.size(); ++u) {
        row += dist[v][u];
        weighted += deg[u] * dist[v][u];
      }
      const PerVertexRows p = per_vertex_rows(n, i);
      EXPECT_EQ(p.f2, row);
      EXPECT_EQ(p.g2, deg[v] * weighted);
    }
    BigInt corner = 0;
    for (int x : dist[0]) corner += x;
    EXPECT_EQ(corner_distance_sum(n), corner);
  }
}

TEST(Ratios, DeviationsShrinkMonotonically) {
  Rational prev_kf = ratio_report(2).kf_deviation();
  Rational prev_star = ratio_report(2).kfstar_deviation();
  for (int n = 3; n <= 1000; ++n) {
    const RatioReport r = ratio_report(n);
    EXPECT_LT(r.kf_deviation(), prev_kf) << n;
    EXPECT_LT(r.kfstar_deviation(), prev_star) << n;
    if (n >= 10) {
      EXPECT_LT(r.kf_deviation(), Rational(1, n));
      EXPECT_LT(r.kfstar_deviation(), Rational(1, n));
    }
    prev_kf = r.kf_deviation();
    prev_star = r.kfstar_deviation();
  }
}

TEST(Ratios, ValuesAtOneHundred) {
  const RatioReport r = ratio_report(100);
  EXPECT_EQ(r.kf_over_w, Rational(578, 2267));
  EXPECT_NEAR(r.kfstar_over_gut_value(), 0.25498, 5e-5);
  // The as-printed Wiener formula gives the smaller ratio 175134/690201 = 0.253743.
  EXPECT_NEAR(ratio_report(100, FormulaVariant::AsPrinted).kf_over_w_value(), 0.2537434, 1e-6);
}
