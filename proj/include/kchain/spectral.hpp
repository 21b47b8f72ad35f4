#pragma once

// Spectral machinery for G_n and G^r_n.
//
// The pairing i <-> i' splits the Laplacian spectrum into those of
// L_A = L11 + L12 and L_S = L11 - L12. The normalized blocks involve sqrt(15),
// so they are never built; the random-walk form D1^-1 L_A is similar to the
// normalized block and has the same characteristic polynomial over Q.

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "kchain/chain_graphs.hpp"
#include "kchain/closed_forms.hpp"
#include "kchain/errors.hpp"
#include "kchain/exact_linalg.hpp"
#include "kchain/matrix.hpp"
#include "kchain/rational.hpp"

namespace kchain {

using Multiset = std::map<Rational, int>;

struct BlockPair {
  RationalMatrix la;  ///< L11 + L12, tridiagonal
  RationalMatrix ls;  ///< L11 - L12, diagonal for this family
};

inline BlockPair block_pair(const ChainSpec& spec) {
  const LaplacianBlocks b = laplacian_blocks(build_subchain(spec), spec);
  return {matrix_cast<Rational>(b.l11 + b.l12), matrix_cast<Rational>(b.l11 - b.l12)};
}

struct ProductIdentity {
  CharPoly full;
  CharPoly la;
  CharPoly ls;
  [[nodiscard]] bool holds() const { return full == la * ls; }
};

/// char_poly(L) against char_poly(L_A) * char_poly(L_S), exact coefficients.
inline ProductIdentity laplacian_product_identity(const ChainSpec& spec) {
  const BlockPair blocks = block_pair(spec);
  const RationalMatrix l = matrix_cast<Rational>(laplacian(build_subchain(spec)));
  return {char_poly(l), char_poly(blocks.la), char_poly(blocks.ls)};
}

/// Same identity for the random-walk Laplacian D^-1 L and its two blocks.
inline ProductIdentity normalized_product_identity(const ChainSpec& spec) {
  const Graph g = build_subchain(spec);
  const auto deg = g.degrees();
  RationalMatrix walk = matrix_cast<Rational>(laplacian(g));
  for (std::size_t i = 0; i < walk.rows(); ++i)
    for (std::size_t j = 0; j < walk.cols(); ++j) walk(i, j) /= deg[i];
  BlockPair blocks = block_pair(spec);
  for (std::size_t i = 0; i < blocks.la.rows(); ++i)
    for (std::size_t j = 0; j < blocks.la.cols(); ++j) {
      blocks.la(i, j) /= deg[i];
      blocks.ls(i, j) /= deg[i];
    }
  return {char_poly(walk), char_poly(blocks.la), char_poly(blocks.ls)};
}

/// (L_A, L_S) for the spec. Throws InternalError if the characteristic
/// polynomial does not factor through the two blocks.
inline BlockPair decompose(const ChainSpec& spec) {
  if (!laplacian_product_identity(spec).holds()) {
    throw InternalError("char_poly(L) != char_poly(L_A) * char_poly(L_S) for n=" + std::to_string(spec.n()) +
                        " deleted={" + spec.deleted_string() + "}");
  }
  return block_pair(spec);
}

/// 8 sin^2(pi (i-1) / (2(n+1))), i = 1..n+1, nondecreasing.
inline std::vector<double> alpha_closed_form(int n) {
  detail::require_chain_length(n, "alpha_closed_form");
  std::vector<double> alpha;
  for (int i = 1; i <= n + 1; ++i) {
    const double s = std::sin(std::numbers::pi * (i - 1) / (2.0 * (n + 1)));
    alpha.push_back(8.0 * s * s);
  }
  return alpha;
}

inline CharPoly la_char_poly(int n) { return char_poly(block_pair(ChainSpec(n)).la); }

struct RootMatch {
  double value;
  bool exact_zero;    ///< Phi(value) == 0 exactly
  bool sign_change;   ///< Phi changes sign on [value - tol, value + tol]
  [[nodiscard]] bool matched() const { return exact_zero || sign_change; }
};

/// Brackets each floating closed-form eigenvalue with exact rational endpoints
/// and checks that the exact polynomial vanishes or changes sign inside.
/// Together with disjoint brackets this pins one distinct root per value.
inline std::vector<RootMatch> match_alpha_roots(int n, double tolerance = 1e-9) {
  const CharPoly phi = la_char_poly(n);
  const Rational slack(tolerance);
  std::vector<RootMatch> out;
  for (double a : alpha_closed_form(n)) {
    const Rational center(a);
    RootMatch m{a, phi.evaluate(center) == 0, false};
    if (!m.exact_zero) {
      const Rational lo = phi.evaluate(center - slack);
      const Rational hi = phi.evaluate(center + slack);
      m.sign_change = lo == 0 || hi == 0 || (lo < 0) != (hi < 0);
    }
    out.push_back(m);
  }
  return out;
}

inline bool alpha_roots_match(int n, double tolerance = 1e-9) {
  const auto matches = match_alpha_roots(n, tolerance);
  for (std::size_t k = 0; k < matches.size(); ++k) {
    if (!matches[k].matched()) return false;
    if (k > 0 && matches[k].value - matches[k - 1].value <= 2 * tolerance) return false;
  }
  return matches.size() == la_char_poly(n).degree();
}

/// Sum of 1/alpha_i over the nonzero eigenvalues of L_A: n(n+2)/12.
inline Rational alpha_recip_sum(int n) {
  detail::require_chain_length(n, "alpha_recip_sum");
  return Rational(BigInt(n) * (n + 2), 12);
}

/// Product of the nonzero eigenvalues of L_A: (n+1) 2^n.
inline BigInt alpha_product(int n) {
  detail::require_chain_length(n, "alpha_product");
  return BigInt(n + 1) * ipow(2, static_cast<std::uint64_t>(n));
}

/// Phi(L_A) = x (x^n + ... + e1 x + e0): sum of reciprocal roots is -e1/e0.
inline Rational alpha_recip_sum_from_charpoly(int n) {
  const CharPoly phi = la_char_poly(n);
  return -phi.at_power(2) / phi.at_power(1);
}

inline BigInt alpha_product_from_charpoly(int n) {
  const CharPoly phi = la_char_poly(n);
  const Rational e0 = phi.at_power(1);
  return numerator_of(n % 2 == 0 ? e0 : Rational(-e0));
}

struct LsSpectrum {
  Multiset multiplicity;
  /// 1: both end rungs deleted; 2: both kept; 3: exactly one deleted.
  int case_tag;
  friend bool operator==(const LsSpectrum&, const LsSpectrum&) = default;
};

/// Eigenvalues of L_S counted from the deletion pattern: 2 per deleted end
/// rung, 4 per deleted internal or kept end rung, 6 per kept internal rung.
inline LsSpectrum ls_spectrum(const ChainSpec& spec) {
  const int n = spec.n();
  LsSpectrum s{{}, 0};
  for (int i = 1; i <= n + 1; ++i) {
    const bool end = i == 1 || i == n + 1;
    const bool deleted = spec.is_deleted(i);
    const int value = end ? (deleted ? 2 : 4) : (deleted ? 4 : 6);
    ++s.multiplicity[Rational(value)];
  }
  switch (end_degree_sum(spec).value) {
    case 4: s.case_tag = 1; break;
    case 6: s.case_tag = 2; break;
    default: s.case_tag = 3; break;
  }
  return s;
}

inline Multiset diagonal_multiset(const RationalMatrix& m) {
  Multiset out;
  for (const auto& v : m.diagonal_entries()) ++out[v];
  return out;
}

/// (2n + r - 2d + 16)/12. A printed form of this sum has "- d" in place of
/// "- 2d"; that reading is available as AsPrinted.
inline Rational zeta_recip_sum(const ChainSpec& spec, FormulaVariant variant = FormulaVariant::Corrected) {
  const int d = end_degree_sum(spec).value;
  const int d_weight = variant == FormulaVariant::AsPrinted ? 1 : 2;
  return Rational(2 * spec.n() + spec.r() - d_weight * d + 16, 12);
}

/// 2^(n+r+2d-9) * 3^(n-r-d+5)
inline BigInt zeta_product(const ChainSpec& spec) {
  const int d = end_degree_sum(spec).value;
  return big_power_product({{2, std::int64_t{spec.n()} + spec.r() + 2 * d - 9},
                            {3, std::int64_t{spec.n()} - spec.r() - d + 5}});
}

inline Rational recip_sum(const Multiset& m) {
  Rational total = 0;
  for (const auto& [value, count] : m) total += Rational(count) / value;
  return total;
}

inline Rational product(const Multiset& m) {
  Rational total = 1;
  for (const auto& [value, count] : m) total *= rpow(value, count);
  return total;
}

inline std::vector<Rational> top_degrees(int n) {
  std::vector<Rational> d(static_cast<std::size_t>(n + 1), Rational(5));
  d.front() = 3;
  d.back() = 3;
  return d;
}

/// D1^-1 L_A with D1 = diag(3, 5, ..., 5, 3).
inline RationalMatrix normalized_LA_surrogate(int n) {
  detail::require_chain_length(n, "normalized_LA_surrogate");
  RationalMatrix m = block_pair(ChainSpec(n)).la;
  const auto d = top_degrees(n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) /= d[i];
  return m;
}

/// D1^-1 L_S; already diagonal, so it equals the normalized block exactly.
inline RationalMatrix normalized_LS_surrogate(int n) {
  detail::require_chain_length(n, "normalized_LS_surrogate");
  RationalMatrix m = block_pair(ChainSpec(n)).ls;
  const auto d = top_degrees(n);
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) /= d[i];
  return m;
}

struct NormalizedCoeffs {
  int n;
  Rational an_signed;   ///< (-1)^n a_n
  Rational an1_signed;  ///< (-1)^(n-1) a_(n-1)
  std::vector<Rational> minors;  ///< c_0 .. c_n, c_0 = 1, c_i leading i x i minor
};

/// Coefficients of Phi(D1^-1 L_A) = x^(n+1) + a_1 x^n + ... + a_n x, and the
/// leading principal minors, all computed directly from the matrix.
inline NormalizedCoeffs normalized_coeffs(int n) {
  const RationalMatrix m = normalized_LA_surrogate(n);
  const CharPoly phi = char_poly(m);
  NormalizedCoeffs out{n, 0, 0, {}};
  const auto k = static_cast<std::size_t>(n);
  const Rational& an = phi.coefficients[k];
  const Rational& an1 = phi.coefficients[k - 1];
  out.an_signed = n % 2 == 0 ? an : Rational(-an);
  out.an1_signed = (n - 1) % 2 == 0 ? an1 : Rational(-an1);
  out.minors.push_back(1);
  for (std::size_t i = 1; i <= k; ++i) out.minors.push_back(determinant(m.leading_principal(i)));
  return out;
}

/// (25n + 5)/9 * (2/5)^n
inline Rational an_signed_closed(int n) { return Rational(25 * n + 5, 9) * rpow(Rational(2, 5), n); }

/// n(25n^2 + 15n + 14)/54 * (2/5)^(n-1)
inline Rational an1_signed_closed(int n) {
  const BigInt m = n;
  return Rational(m * (25 * m * m + 15 * m + 14), 54) * rpow(Rational(2, 5), n - 1);
}

/// c_i = (5/3)(2/5)^i for i >= 1.
inline Rational minor_closed(int i) {
  if (i < 1) throw InvalidArgument("minor_closed: i must be >= 1");
  return Rational(5, 3) * rpow(Rational(2, 5), i);
}

/// c_i = (4/5)c_(i-1) - (4/25)c_(i-2) for i >= 3, seeded with c_1 = 2/3 and
/// c_2 = 4/15. The seed c_2 is not produced by the recurrence from c_0 = 1
/// because the first off-diagonal coupling is 4/15, not 4/25.
inline Rational minor_by_recurrence(int i) {
  if (i < 0) throw InvalidArgument("minor_by_recurrence: i must be >= 0");
  if (i == 0) return 1;
  Rational before = Rational(2, 3);
  if (i == 1) return before;
  Rational current = Rational(4, 15);
  for (int k = 3; k <= i; ++k) {
    Rational next = Rational(4, 5) * current - Rational(4, 25) * before;
    before = current;
    current = next;
  }
  return current;
}

/// Vieta: sum over nonzero normalized eigenvalues of 1/gamma.
inline Rational gamma_recip_sum(int n) {
  const NormalizedCoeffs c = normalized_coeffs(n);
  return c.an1_signed / c.an_signed;
}

/// n(25n^2 + 15n + 14) / (12(5n + 1))
inline Rational gamma_recip_sum_closed(int n) {
  detail::require_chain_length(n, "gamma_recip_sum_closed");
  const BigInt m = n;
  return Rational(m * (25 * m * m + 15 * m + 14), 12 * (5 * m + 1));
}

/// Tridiagonal matrix with 4/5 on the diagonal and -2/5 beside it.
inline RationalMatrix tridiag_M(int size) {
  if (size < 0) throw InvalidArgument("tridiag_M: negative size");
  const auto s = static_cast<std::size_t>(size);
  RationalMatrix m(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    m(i, i) = Rational(4, 5);
    if (i + 1 < s) {
      m(i, i + 1) = Rational(-2, 5);
      m(i + 1, i) = Rational(-2, 5);
    }
  }
  return m;
}

inline Rational tridiag_M_det(int size) { return determinant(tridiag_M(size)); }

/// (2/5)^size * (size + 1)
inline Rational tridiag_M_det_closed(int size) { return rpow(Rational(2, 5), size) * (size + 1); }

/// Diagonal of D1^-1 L_S: 6/5 with multiplicity n-1 and 4/3 twice.
inline Multiset eta_spectrum(int n) { return diagonal_multiset(normalized_LS_surrogate(n)); }

/// (5n + 4)/6
inline Rational eta_recip_sum_closed(int n) { return Rational(5 * n + 4, 6); }

/// Kf*(G_n) rebuilt as 2|E| (sum 1/gamma + sum 1/eta) from the exact
/// normalized spectrum pieces.
inline Rational kfstar_from_spectrum(int n) {
  return 2 * Rational(5 * n + 1) * (gamma_recip_sum(n) + recip_sum(eta_spectrum(n)));
}

/// Kf(G^r_n) rebuilt as |V| (sum 1/alpha + sum 1/zeta) from the exact
/// characteristic polynomial of L_A and the diagonal of L_S.
inline Rational kf_from_spectrum(const ChainSpec& spec) {
  const BlockPair blocks = block_pair(spec);
  return 2 * Rational(spec.n() + 1) * (alpha_recip_sum_from_charpoly(spec.n()) + recip_sum(diagonal_multiset(blocks.ls)));
}

}  // namespace kchain
