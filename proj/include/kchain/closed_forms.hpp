#pragma once

// Closed-form invariants of G_n and of the rung-deleted family G^r_n.
//
// Known misprints. The two formulas sit behind FormulaVariant::AsPrinted and
// the two table cells behind printed_kf_erratum / printed_kfstar_erratum:
//   W(G_n)        printed (2n^3+7n^2+6n+3)/3, correct (2n^3+6n^2+7n+3)/3
//   f_2(i, n)     printed constant term +1, correct +3
//   Kf table, G_48 printed 20461.67, formula gives 20416.67
//   Kf* table, G_40 printed 184428.00, formula gives 284428.00

#include <cstdint>
#include <optional>
#include <string>

#include "kchain/errors.hpp"
#include "kchain/rational.hpp"

namespace kchain {

enum class FormulaVariant { Corrected, AsPrinted };

namespace detail {

inline void require_chain_length(int n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
}

inline BigInt exact_div(const BigInt& num, int den, const char* what) {
  if (num % den != 0) throw InternalError(std::string(what) + ": numerator not divisible");
  return num / den;
}

}  // namespace detail

/// Kf(G_n) = (n+1)(n+2)^2 / 6
inline Rational kf_gn(int n) {
  detail::require_chain_length(n, "kf_gn");
  const BigInt m = n;
  return Rational((m + 1) * (m + 2) * (m + 2), 6);
}

/// Kf*(G_n) = (25n^3 + 65n^2 + 64n + 8) / 6
inline Rational kfstar_gn(int n) {
  detail::require_chain_length(n, "kfstar_gn");
  const BigInt m = n;
  return Rational(25 * m * m * m + 65 * m * m + 64 * m + 8, 6);
}

/// tau(G_n) = 2^(2n+2) * 3^(n-1)
inline BigInt tau_gn(int n) {
  detail::require_chain_length(n, "tau_gn");
  return big_power_product({{2, 2 * std::int64_t{n} + 2}, {3, std::int64_t{n} - 1}});
}

inline Rational wiener_gn(int n, FormulaVariant variant = FormulaVariant::Corrected) {
  detail::require_chain_length(n, "wiener_gn");
  const BigInt m = n;
  if (variant == FormulaVariant::AsPrinted) return Rational(2 * m * m * m + 7 * m * m + 6 * m + 3, 3);
  return Rational(2 * m * m * m + 6 * m * m + 7 * m + 3, 3);
}

/// Gut(G_n) = (50n^3 + 30n^2 + 103n - 21) / 3, always an integer.
inline BigInt gutman_gn(int n) {
  detail::require_chain_length(n, "gutman_gn");
  const BigInt m = n;
  return detail::exact_div(50 * m * m * m + 30 * m * m + 103 * m - 21, 3, "gutman_gn");
}

/// Distance row sum of a corner vertex: n^2 + n + 1.
inline BigInt corner_distance_sum(int n) {
  detail::require_chain_length(n, "corner_distance_sum");
  const BigInt m = n;
  return m * m + m + 1;
}

/// Distance row sum of the i-th top vertex, 2 <= i <= n.
inline BigInt internal_distance_sum(int n, int i, FormulaVariant variant = FormulaVariant::Corrected) {
  detail::require_chain_length(n, "internal_distance_sum");
  if (i < 2 || i > n) throw InvalidArgument("internal vertex index must lie in [2, n]");
  const BigInt m = n;
  const BigInt k = i;
  const int constant = variant == FormulaVariant::AsPrinted ? 1 : 3;
  return m * m - 2 * m * k + 3 * m + 2 * k * k - 4 * k + constant;
}

/// Degree-weighted distance row sum d_v * sum_u d_u d(u, v) of a corner vertex.
inline BigInt corner_gutman_sum(int n) {
  detail::require_chain_length(n, "corner_gutman_sum");
  const BigInt m = n;
  return 15 * m * m + 3 * m + 9;
}

inline BigInt internal_gutman_sum(int n, int i) {
  detail::require_chain_length(n, "internal_gutman_sum");
  if (i < 2 || i > n) throw InvalidArgument("internal vertex index must lie in [2, n]");
  const BigInt m = n;
  const BigInt k = i;
  return 25 * m * m - 50 * m * k + 55 * m + 50 * k * k - 100 * k + 75;
}

struct PerVertexRows {
  BigInt f1;
  BigInt f2;
  BigInt g1;
  BigInt g2;
};

inline PerVertexRows per_vertex_rows(int n, int i, FormulaVariant variant = FormulaVariant::Corrected) {
  return {corner_distance_sum(n), internal_distance_sum(n, i, variant), corner_gutman_sum(n),
          internal_gutman_sum(n, i)};
}

/// Rejects (r, d) pairs no deletion set can realise: both end rungs kept
/// (d = 6) leaves n-1 deletable rungs, one kept (d = 5) forces 1 <= r <= n,
/// none kept (d = 4) forces r >= 2.
inline void require_consistent_family(int n, int r, int d) {
  detail::require_chain_length(n, "closed form");
  bool ok = false;
  switch (d) {
    case 6: ok = r >= 0 && r <= n - 1; break;
    case 5: ok = r >= 1 && r <= n; break;
    case 4: ok = r >= 2 && r <= n + 1; break;
    default: ok = false;
  }
  if (!ok) {
    throw InvalidArgument("inconsistent family parameters (n=" + std::to_string(n) + ", r=" +
                          std::to_string(r) + ", d=" + std::to_string(d) + ")");
  }
}

/// Kf(G^r_n) = (n+1)(n^2 + 4n + r - 2d + 16) / 6
inline Rational kf_grn(int n, int r, int d) {
  require_consistent_family(n, r, d);
  const BigInt m = n;
  return Rational((m + 1) * (m * m + 4 * m + r - 2 * d + 16), 6);
}

/// tau(G^r_n) = 2^(2n+r+2d-10) * 3^(n-r-d+5)
inline BigInt tau_grn(int n, int r, int d) {
  require_consistent_family(n, r, d);
  return big_power_product({{2, 2 * std::int64_t{n} + r + 2 * d - 10}, {3, std::int64_t{n} - r - d + 5}});
}

/// W(G^r_n) = W(G_n) + r: each deleted rung stretches exactly one distance from 1 to 2.
inline BigInt wiener_grn(int n, int r) {
  detail::require_chain_length(n, "wiener_grn");
  if (r < 0 || r > n + 1) throw InvalidArgument("wiener_grn: r outside [0, n+1]");
  const Rational w = wiener_gn(n);
  if (!is_integer(w)) throw InternalError("wiener_gn: non-integral value");
  return numerator_of(w) + r;
}

struct RatioReport {
  int n;
  Rational kf_over_w;
  Rational kfstar_over_gut;

  [[nodiscard]] double kf_over_w_value() const { return to_double(kf_over_w); }
  [[nodiscard]] double kfstar_over_gut_value() const { return to_double(kfstar_over_gut); }
  [[nodiscard]] Rational kf_deviation() const { return abs(kf_over_w - Rational(1, 4)); }
  [[nodiscard]] Rational kfstar_deviation() const { return abs(kfstar_over_gut - Rational(1, 4)); }
};

inline RatioReport ratio_report(int n, FormulaVariant variant = FormulaVariant::Corrected) {
  return {n, kf_gn(n) / wiener_gn(n, variant), kfstar_gn(n) / Rational(gutman_gn(n))};
}

/// Printed table cells that disagree with their own formula (and with the
/// resistance oracle on the same graph).
inline std::optional<std::string> printed_kf_erratum(int n) {
  if (n == 48) return std::string("20461.67");
  return std::nullopt;
}

inline std::optional<std::string> printed_kfstar_erratum(int n) {
  if (n == 40) return std::string("184428.00");
  return std::nullopt;
}

}  // namespace kchain
