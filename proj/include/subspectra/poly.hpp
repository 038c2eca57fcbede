#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subspectra {

/// Univariate polynomial in λ with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree with no trailing zeros; the
/// zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  /// Ascending-degree literal, e.g. `IntPoly{-1, 0, 1}` is λ² − 1.
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(unsigned degree, const mpz_class& c = 1);
  /// λ − root
  static IntPoly linear_factor(const mpz_class& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Coefficient of λ^k; zero beyond the degree.
  mpz_class coeff(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  mpz_class leading() const;

  /// Non-negative gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// p / content(p), sign-normalized to a positive leading coefficient.
  IntPoly primitive_part() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;

  IntPoly pow(unsigned exponent) const;
  /// p(q(λ)).
  IntPoly compose(const IntPoly& q) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const mpz_class& k);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
  friend IntPoly operator*(IntPoly lhs, const mpz_class& k) { return lhs *= k; }
  friend IntPoly operator*(const mpz_class& k, IntPoly rhs) { return rhs *= k; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, descending powers: "λ^3 - 2λ + 1".
  std::string to_string(std::string_view var = "λ") const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// Exact quotient p / q over ℤ[λ], or nullopt when q does not divide p.
std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q);

/// Primitive gcd with positive leading coefficient. Throws BothZero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// Lagrange interpolation through (x_i, y_i); throws InternalInconsistency
/// if the interpolant does not have integer coefficients.
IntPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpq_class>& ys);

}  // namespace subspectra
