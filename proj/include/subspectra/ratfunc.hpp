#pragma once

#include <string>

#include "subspectra/poly.hpp"

namespace subspectra {

/// Reduced quotient of two integer polynomials.
///
/// Canonical form: gcd(num, den) is constant, den has a positive leading
/// coefficient, and the combined integer content of (num, den) is 1. Zero
/// is 0/1. Two RatFuncs are mathematically equal iff they compare equal.
class RatFunc {
 public:
  RatFunc() : den_{1} {}
  RatFunc(long c) : num_(IntPoly{c}), den_{1} {}  // NOLINT: implicit by intent
  RatFunc(IntPoly num) : num_(std::move(num)), den_{1} {}  // NOLINT
  RatFunc(IntPoly num, IntPoly den);

  /// The indeterminate λ.
  static RatFunc lambda();

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Exact value at a rational point; throws DivisionByZeroFunction at a pole.
  mpq_class eval(const mpq_class& x) const;

  /// Integer power; negative exponents require a nonzero base.
  RatFunc pow(long exponent) const;
  /// f(φ(λ)).
  RatFunc compose(const RatFunc& phi) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(std::string_view var = "λ") const;

 private:
  struct Reduced {};
  RatFunc(IntPoly num, IntPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void normalize_content();

  IntPoly num_;
  IntPoly den_;
};

/// p(N/Δ) = (Σ c_k N^k Δ^{d−k}) / Δ^d, reduced.
RatFunc compose_poly_ratfunc(const IntPoly& p, const RatFunc& phi);

/// Converts a RatFunc with constant denominator to a polynomial.
/// Throws NotPolynomial if the denominator has positive degree and
/// InternalInconsistency if the result would have non-integer coefficients.
IntPoly ratfunc_to_poly(const RatFunc& f);

}  // namespace subspectra
