#pragma once

// Exact linear algebra over big integers and rationals. Everything here is
// fraction-free on an integer lift of the input; no floating point.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kchain/errors.hpp"
#include "kchain/matrix.hpp"
#include "kchain/rational.hpp"

namespace kchain {

inline constexpr std::size_t kDefaultCharPolyCap = 64;

/// Monic characteristic polynomial det(xI - A), coefficients in descending
/// powers: coefficients[0] == 1 multiplies x^k, coefficients[k] is the constant.
struct CharPoly {
  std::vector<Rational> coefficients{Rational(1)};

  [[nodiscard]] std::size_t degree() const { return coefficients.size() - 1; }

  /// Coefficient of x^power.
  [[nodiscard]] const Rational& at_power(std::size_t power) const {
    return coefficients.at(degree() - power);
  }

  [[nodiscard]] Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (const auto& c : coefficients) acc = acc * x + c;
    return acc;
  }

  [[nodiscard]] bool has_integer_coefficients() const {
    for (const auto& c : coefficients)
      if (!is_integer(c)) return false;
    return true;
  }

  friend CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    CharPoly p;
    p.coefficients.assign(a.coefficients.size() + b.coefficients.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coefficients.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients.size(); ++j)
        p.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
    return p;
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

  /// Human-readable form, e.g. "x^2 - 4x".
  [[nodiscard]] std::string to_string() const {
    std::string out;
    const std::size_t k = degree();
    for (std::size_t i = 0; i <= k; ++i) {
      const Rational& c = coefficients[i];
      if (c == 0) continue;
      const std::size_t power = k - i;
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1 || power == 0) out += kchain::to_string(mag);
      if (power >= 1) out += "x";
      if (power >= 2) out += "^" + std::to_string(power);
    }
    return out.empty() ? "0" : out;
  }
};

namespace detail {

inline void require_square(const auto& m, const char* what) {
  if (!m.is_square()) {
    throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
}

/// Multiplies each row by the lcm of its denominators. Returns the integer
/// matrix and the product of the row multipliers.
inline std::pair<IntMatrix, BigInt> lift_rows(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  BigInt product = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt scale = 1;
    for (const auto& q : m.row(i)) scale = lcm(scale, denominator_of(q));
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = numerator_of(m(i, j)) * (scale / denominator_of(m(i, j)));
    product *= scale;
  }
  return {std::move(out), std::move(product)};
}

/// Scales the whole matrix by the lcm of all denominators.
inline std::pair<IntMatrix, BigInt> lift_uniform(const RationalMatrix& m) {
  BigInt scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& q : m.row(i)) scale = lcm(scale, denominator_of(q));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = numerator_of(m(i, j)) * (scale / denominator_of(m(i, j)));
  return {std::move(out), std::move(scale)};
}

inline void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

}  // namespace detail

/// Bareiss one-step fraction-free elimination.
inline BigInt determinant(IntMatrix a) {
  detail::require_square(a, "determinant");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      detail::swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline Rational determinant(const RationalMatrix& m) {
  detail::require_square(m, "determinant");
  auto [lifted, scale] = detail::lift_rows(m);
  return make_rational(determinant(std::move(lifted)), scale);
}

/// Result of fraction-free Gauss-Jordan on [A | B]: det(A) and det(A)·A⁻¹·B,
/// both integral.
struct FractionFreeSolution {
  BigInt det;
  IntMatrix scaled;
};

/// Gauss-Jordan variant of Bareiss elimination on the augmented system [a | rhs].
/// Every intermediate entry is a minor of the augmented matrix, so each
/// division is exact.
inline FractionFreeSolution fraction_free_solve(const IntMatrix& a, const IntMatrix& rhs) {
  detail::require_square(a, "fraction_free_solve");
  if (rhs.rows() != a.rows()) throw DimensionMismatch("fraction_free_solve: rhs row count differs");
  const std::size_t n = a.rows();
  const std::size_t width = n + rhs.cols();
  IntMatrix w(n, width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) w(i, n + j) = rhs(i, j);
  }
  int sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) throw SingularMatrix("matrix is singular (no pivot in column " + std::to_string(k) + ")");
      detail::swap_rows(w, k, p);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt factor = w(i, k);
      for (std::size_t j = 0; j < width; ++j) {
        if (j == k) continue;
        if (factor == 0) {
          if (w(i, j) != 0) w(i, j) = w(i, j) * w(k, k) / previous;
        } else {
          w(i, j) = (w(i, j) * w(k, k) - factor * w(k, j)) / previous;
        }
      }
      w(i, k) = 0;
    }
    previous = w(k, k);
  }
  // Final pivot is det(PA) = sign·det(A); row operations already absorbed P.
  FractionFreeSolution out{sign * previous, IntMatrix(n, rhs.cols())};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) out.scaled(i, j) = sign * w(i, n + j);
  return out;
}

/// det(A) together with adj(A) = det(A)·A⁻¹.
inline FractionFreeSolution adjugate(const IntMatrix& a) {
  return fraction_free_solve(a, IntMatrix::identity(a.rows()));
}

/// Exact solution of m·x = b. The result is checked by substitution.
inline std::vector<Rational> solve(const RationalMatrix& m, std::span<const Rational> b) {
  detail::require_square(m, "solve");
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side has wrong length");
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n) = b[i];
  }
  const auto [lifted, scale] = detail::lift_rows(augmented);
  const IntMatrix lhs = lifted.block(0, 0, n, n);
  const IntMatrix rhs = lifted.block(0, n, n, 1);
  const FractionFreeSolution sol = fraction_free_solve(lhs, rhs);
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = make_rational(sol.scaled(i, 0), sol.det);
  if (m * std::span<const Rational>(x) != std::vector<Rational>(b.begin(), b.end())) {
    throw InternalError("solve: substitution check failed");
  }
  return x;
}

/// Faddeev–LeVerrier on the uniform integer lift D·A; coefficient k of A is
/// coefficient k of D·A divided by D^k.
inline CharPoly char_poly_faddeev_leverrier(const RationalMatrix& m,
                                            std::size_t cap = kDefaultCharPolyCap) {
  detail::require_square(m, "char_poly");
  const std::size_t k = m.rows();
  if (k > cap) {
    throw CapacityExceeded("char_poly: size " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  }
  const auto [b, scale] = detail::lift_uniform(m);
  std::vector<BigInt> c(k + 1);
  c[0] = 1;
  IntMatrix acc = IntMatrix::identity(k);
  for (std::size_t step = 1; step <= k; ++step) {
    IntMatrix product = b * acc;
    BigInt trace = 0;
    for (std::size_t i = 0; i < k; ++i) trace += product(i, i);
    if (trace % step != 0) throw InternalError("Faddeev-LeVerrier: inexact trace division");
    c[step] = -trace / static_cast<long>(step);
    if (step < k) {
      for (std::size_t i = 0; i < k; ++i) product(i, i) += c[step];
      acc = std::move(product);
    }
  }
  CharPoly p;
  p.coefficients.resize(k + 1);
  BigInt power = 1;
  for (std::size_t i = 0; i <= k; ++i) {
    p.coefficients[i] = Rational(c[i], power);
    power *= scale;
  }
  return p;
}

/// Three-term recurrence p_k = (x - a_k)p_{k-1} - b_{k-1}c_{k-1}p_{k-2} on the
/// leading principal minors of a tridiagonal matrix.
inline CharPoly char_poly_tridiagonal(const RationalMatrix& m) {
  detail::require_square(m, "char_poly_tridiagonal");
  if (!m.is_tridiagonal()) throw InvalidArgument("char_poly_tridiagonal: matrix is not tridiagonal");
  const std::size_t k = m.rows();
  // Ascending-power coefficient vectors.
  std::vector<Rational> before_prev{Rational(1)};
  if (k == 0) return CharPoly{};
  std::vector<Rational> prev{-m(0, 0), Rational(1)};
  for (std::size_t i = 1; i < k; ++i) {
    std::vector<Rational> next(i + 2, Rational(0));
    for (std::size_t p = 0; p < prev.size(); ++p) {
      next[p + 1] += prev[p];
      next[p] -= m(i, i) * prev[p];
    }
    const Rational coupling = m(i - 1, i) * m(i, i - 1);
    if (coupling != 0)
      for (std::size_t p = 0; p < before_prev.size(); ++p) next[p] -= coupling * before_prev[p];
    before_prev = std::move(prev);
    prev = std::move(next);
  }
  CharPoly p;
  p.coefficients.assign(prev.rbegin(), prev.rend());
  return p;
}

/// det(xI - m). Tridiagonal inputs take the minor recurrence; everything else
/// goes through Faddeev–LeVerrier.
inline CharPoly char_poly(const RationalMatrix& m, std::size_t cap = kDefaultCharPolyCap) {
  detail::require_square(m, "char_poly");
  if (m.rows() > cap) {
    throw CapacityExceeded("char_poly: size " + std::to_string(m.rows()) + " exceeds cap " +
                           std::to_string(cap));
  }
  if (m.is_tridiagonal()) return char_poly_tridiagonal(m);
  return char_poly_faddeev_leverrier(m, cap);
}

/// Effective resistance between i and j for the Laplacian `laplacian`, by
/// grounding `ground` and solving for the potentials under a unit current
/// injected at i and extracted at j. Returns 0 when i == j.
inline Rational effective_resistance(const RationalMatrix& laplacian, std::size_t i, std::size_t j,
                                     std::size_t ground = 0) {
  detail::require_square(laplacian, "effective_resistance");
  const std::size_t n = laplacian.rows();
  if (i >= n || j >= n || ground >= n) throw InvalidArgument("effective_resistance: vertex out of range");
  if (i == j) return 0;
  const auto reduced_index = [ground](std::size_t v) { return v < ground ? v : v - 1; };
  std::vector<Rational> current(n - 1, Rational(0));
  if (i != ground) current[reduced_index(i)] += 1;
  if (j != ground) current[reduced_index(j)] -= 1;
  const std::vector<Rational> potential = solve(laplacian.without(ground), current);
  const Rational vi = i == ground ? Rational(0) : potential[reduced_index(i)];
  const Rational vj = j == ground ? Rational(0) : potential[reduced_index(j)];
  return vi - vj;
}

/// All-pairs resistance matrix from one fraction-free inversion of the
/// Laplacian grounded at vertex 0: r_ij = X_ii + X_jj - 2 X_ij with X the
/// grounded inverse (X_0· = 0). Also returns det of the grounded Laplacian.
struct ResistanceTable {
  RationalMatrix resistance;
  BigInt grounded_det;
};

inline ResistanceTable resistance_table(const IntMatrix& laplacian) {
  detail::require_square(laplacian, "resistance_table");
  const std::size_t n = laplacian.rows();
  ResistanceTable out{RationalMatrix(n, n), 0};
  if (n <= 1) {
    out.grounded_det = 1;
    return out;
  }
  const FractionFreeSolution adj = adjugate(laplacian.without(0));
  out.grounded_det = adj.det;
  const auto x = [&](std::size_t a, std::size_t b) -> BigInt {
    if (a == 0 || b == 0) return 0;
    return adj.scaled(a - 1, b - 1);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Rational r = make_rational(x(a, a) + x(b, b) - 2 * x(a, b), adj.det);
      out.resistance(a, b) = r;
      out.resistance(b, a) = r;
    }
  return out;
}

}  // namespace kchain
