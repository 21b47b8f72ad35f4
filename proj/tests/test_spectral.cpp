#include <cmath>

#include <gtest/gtest.h>

#include "kchain/closed_forms.hpp"
#include "kchain/invariant_oracles.hpp"
#include "kchain/spectral.hpp"

using namespace kchain;

TEST(Blocks, LaIsIndependentOfDeletions) {
  for (int n = 1; n <= 6; ++n) {
    const RationalMatrix base = block_pair(ChainSpec(n)).la;
    for (const ChainSpec& s : enumerate_all_subchains(n)) EXPECT_EQ(block_pair(s).la, base);
  }
}

TEST(Blocks, LaIsAWeightedPathLaplacian) {
  const RationalMatrix la = block_pair(ChainSpec(3)).la;
  EXPECT_EQ(la, (RationalMatrix{{2, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 4, -2}, {0, 0, -2, 2}}));
}

TEST(Blocks, LsIsDiagonalWithDeletionPattern) {
  for (int n = 1; n <= 6; ++n)
    for (const ChainSpec& s : enumerate_all_subchains(n)) {
      const RationalMatrix ls = block_pair(s).ls;
      EXPECT_TRUE(ls.is_diagonal());
      EXPECT_EQ(diagonal_multiset(ls), ls_spectrum(s).multiplicity);
    }
  EXPECT_EQ(ls_spectrum(ChainSpec(3)).case_tag, 2);
  EXPECT_EQ(ls_spectrum(ChainSpec(3, {1})).case_tag, 3);
  EXPECT_EQ(ls_spectrum(ChainSpec(3, {1, 4})).case_tag, 1);
}

TEST(ProductIdentity, LaplacianFactorsOverEveryDeletionSet) {
  for (int n = 1; n <= 5; ++n)
    for (const ChainSpec& s : enumerate_all_subchains(n)) {
      const ProductIdentity id = laplacian_product_identity(s);
      EXPECT_TRUE(id.holds()) << s.n() << " [" << s.deleted_string() << "]";
      EXPECT_EQ(id.full.degree(), static_cast<std::size_t>(2 * n + 2));
      EXPECT_TRUE(id.full.has_integer_coefficients());
      EXPECT_NO_THROW(decompose(s));
    }
}

TEST(ProductIdentity, NormalizedFactors) {
  for (int n = 1; n <= 10; ++n) EXPECT_TRUE(normalized_product_identity(ChainSpec(n)).holds()) << n;
}

TEST(Alpha, SumsAndProductsFromCoefficients) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(alpha_recip_sum_from_charpoly(n), alpha_recip_sum(n));
    EXPECT_EQ(alpha_product_from_charpoly(n), alpha_product(n));
  }
  EXPECT_EQ(alpha_product(3), 32);
  EXPECT_EQ(alpha_recip_sum(2), Rational(2, 3));
}

TEST(Alpha, ClosedFormRootsAgreeWithExactPolynomial) {
  for (int n = 1; n <= 20; ++n) {
    EXPECT_TRUE(alpha_roots_match(n)) << n;
    const auto alpha = alpha_closed_form(n);
    ASSERT_EQ(alpha.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(alpha.front(), 0.0);
    double sum = 0;
    for (std::size_t k = 1; k < alpha.size(); ++k) sum += 1.0 / alpha[k];
    EXPECT_NEAR(sum, to_double(alpha_recip_sum(n)), 1e-9);
  }
}

TEST(Alpha, WrongValueIsRejected) {
  // Shifting every value by far more than the tolerance loses the bracket.
  const CharPoly phi = la_char_poly(4);
  for (double a : alpha_closed_form(4)) {
    const Rational off(a + 0.01);
    const Rational slack(1e-9);
    const Rational lo = phi.evaluate(off - slack);
    const Rational hi = phi.evaluate(off + slack);
    EXPECT_EQ(lo < 0, hi < 0);
  }
}

TEST(Zeta, SumsAndProductsOverEveryDeletionSet) {
  for (int n = 1; n <= 7; ++n)
    for (const ChainSpec& s : enumerate_all_subchains(n)) {
      const Multiset z = ls_spectrum(s).multiplicity;
      EXPECT_EQ(recip_sum(z), zeta_recip_sum(s));
      EXPECT_EQ(product(z), Rational(zeta_product(s)));
    }
}

TEST(Zeta, AsPrintedSumDisagreesEverywhere) {
  for (int n = 1; n <= 5; ++n)
    for (const ChainSpec& s : enumerate_all_subchains(n))
      EXPECT_NE(zeta_recip_sum(s, FormulaVariant::AsPrinted), recip_sum(ls_spectrum(s).multiplicity));
}

TEST(Normalized, LastCoefficientsAndMinors) {
  for (int n = 1; n <= 12; ++n) {
    const NormalizedCoeffs c = normalized_coeffs(n);
    EXPECT_EQ(c.an_signed, an_signed_closed(n)) << n;
    EXPECT_EQ(c.an1_signed, an1_signed_closed(n)) << n;
    ASSERT_EQ(c.minors.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(c.minors[0], 1);
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(c.minors[static_cast<std::size_t>(i)], minor_closed(i));
      EXPECT_EQ(minor_by_recurrence(i), minor_closed(i));
    }
  }
}

TEST(Normalized, RecurrenceDoesNotStartFromCZero) {
  // (4/5)c_1 - (4/25)c_0 = 28/75, not c_2 = 4/15.
  EXPECT_NE(Rational(4, 5) * minor_by_recurrence(1) - Rational(4, 25) * minor_by_recurrence(0), minor_closed(2));
  EXPECT_EQ(Rational(4, 5) * minor_closed(2) - Rational(4, 25) * minor_closed(1), minor_closed(3));
}

TEST(Normalized, GammaEtaAndTridiagonalM) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(gamma_recip_sum(n), gamma_recip_sum_closed(n));
    EXPECT_EQ(recip_sum(eta_spectrum(n)), eta_recip_sum_closed(n));
    EXPECT_EQ(kfstar_from_spectrum(n), kfstar_gn(n));
  }
  for (int s = 0; s <= 12; ++s) EXPECT_EQ(tridiag_M_det(s), tridiag_M_det_closed(s));
  EXPECT_EQ(eta_spectrum(3), (Multiset{{Rational(6, 5), 2}, {Rational(4, 3), 2}}));
}

TEST(Reconstruction, KirchhoffFromSpectrumMatchesOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const ChainSpec& s : enumerate_all_subchains(n))
      EXPECT_EQ(kf_from_spectrum(s), full_report(s).kirchhoff);
}
