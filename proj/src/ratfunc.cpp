#include "subspectra/ratfunc.hpp"

#include <utility>

#include "subspectra/error.hpp"

namespace subspectra {

namespace {

IntPoly exact_quotient(const IntPoly& p, const IntPoly& q) {
  auto out = divide_exact(p, q);
  if (!out) throw Error(ErrorCode::InternalInconsistency, "gcd does not divide operand");
  return *std::move(out);
}

// Σ c_k N^k Δ^{d−k} for d ≥ deg p.
IntPoly homogenize(const IntPoly& p, const IntPoly& n, const IntPoly& delta, int d) {
  if (p.is_zero()) return {};
  const int dp = p.degree();
  IntPoly acc = IntPoly::constant(p.leading());
  // Horner in N with growing Δ powers on the lower coefficients
  std::vector<IntPoly> dpows{IntPoly{1}};
  for (int k = 1; k <= dp; ++k) dpows.push_back(dpows.back() * delta);
  for (int k = dp - 1; k >= 0; --k) {
    acc *= n;
    acc += IntPoly::constant(p.coeff(static_cast<std::size_t>(k))) * dpows[static_cast<std::size_t>(dp - k)];
  }
  if (d > dp) acc *= delta.pow(static_cast<unsigned>(d - dp));
  return acc;
}

}  // namespace

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RatFunc RatFunc::lambda() { return RatFunc(IntPoly{0, 1}); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  if (den_.degree() > 0) {
    IntPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  normalize_content();
}

void RatFunc::normalize_content() {
  if (num_.is_zero()) {
    den_ = IntPoly{1};
    return;
  }
  mpz_class c = gcd(num_.content(), den_.content());
  if (sgn(den_.leading()) < 0) c = -c;
  if (c != 1) {
    std::vector<mpz_class> n = num_.coeffs();
    std::vector<mpz_class> d = den_.coeffs();
    for (auto& x : n) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    for (auto& x : d) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    num_ = IntPoly(std::move(n));
    den_ = IntPoly(std::move(d));
  }
}

mpq_class RatFunc::eval(const mpq_class& x) const {
  mpq_class d = den_.eval(x);
  if (sgn(d) == 0) throw Error(ErrorCode::DivisionByZeroFunction, "evaluation at a pole");
  mpq_class out = num_.eval(x) / d;
  out.canonicalize();
  return out;
}

RatFunc RatFunc::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "negative power of zero");
    RatFunc inv(den_, num_, Reduced{});
    inv.normalize_content();
    return inv.pow(-exponent);
  }
  RatFunc out(num_.pow(static_cast<unsigned>(exponent)), den_.pow(static_cast<unsigned>(exponent)),
              Reduced{});
  out.normalize_content();
  return out;
}

RatFunc RatFunc::compose(const RatFunc& phi) const {
  const int dn = num_.degree();
  const int dd = den_.degree();
  IntPoly top = homogenize(num_, phi.num_, phi.den_, std::max(dn, 0));
  IntPoly bottom = homogenize(den_, phi.num_, phi.den_, dd);
  if (dd > dn)
    top *= phi.den_.pow(static_cast<unsigned>(dd - std::max(dn, 0)));
  else if (dn > dd)
    bottom *= phi.den_.pow(static_cast<unsigned>(dn - dd));
  return RatFunc(std::move(top), std::move(bottom));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_.degree() == 0 && rhs.den_.degree() == 0) {
    // both have constant positive denominators
    *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_, Reduced{});
    normalize_content();
    return *this;
  }
  if (rhs.den_.degree() == 0 || den_.degree() == 0) {
    // p/c + a/b with b non-constant: gcd(p·b + a·c, c·b) only has content
    IntPoly n = num_ * rhs.den_ + rhs.num_ * den_;
    IntPoly d = den_ * rhs.den_;
    *this = RatFunc(std::move(n), std::move(d), Reduced{});
    normalize_content();
    return *this;
  }
  IntPoly g = poly_gcd(den_, rhs.den_);
  IntPoly b1 = exact_quotient(den_, g);
  IntPoly d1 = exact_quotient(rhs.den_, g);
  *this = RatFunc(num_ * d1 + rhs.num_ * b1, den_ * d1);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) { return *this += -rhs; }

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = RatFunc();
  IntPoly a = num_, b = den_, c = rhs.num_, d = rhs.den_;
  if (d.degree() > 0 && a.degree() > 0) {
    IntPoly g = poly_gcd(a, d);
    if (g.degree() > 0) {
      a = exact_quotient(a, g);
      d = exact_quotient(d, g);
    }
  }
  if (b.degree() > 0 && c.degree() > 0) {
    IntPoly g = poly_gcd(c, b);
    if (g.degree() > 0) {
      c = exact_quotient(c, g);
      b = exact_quotient(b, g);
    }
  }
  *this = RatFunc(a * c, b * d, Reduced{});
  normalize_content();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "division by the zero function");
  RatFunc inv(rhs.den_, rhs.num_, Reduced{});
  inv.normalize_content();
  return *this *= inv;
}

std::string RatFunc::to_string(std::string_view var) const {
  if (den_ == IntPoly{1}) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RatFunc compose_poly_ratfunc(const IntPoly& p, const RatFunc& phi) {
  if (p.is_zero()) return RatFunc();
  const int d = p.degree();
  IntPoly top = homogenize(p, phi.num(), phi.den(), d);
  return RatFunc(std::move(top), phi.den().pow(static_cast<unsigned>(d)));
}

IntPoly ratfunc_to_poly(const RatFunc& f) {
  if (f.den().degree() > 0)
    throw Error(ErrorCode::NotPolynomial, "denominator " + f.den().to_string() + " is not constant");
  const mpz_class c = f.den().leading();
  if (c == 1) return f.num();
  std::vector<mpz_class> out = f.num().coeffs();
  for (auto& x : out) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw Error(ErrorCode::InternalInconsistency,
                  "constant denominator " + c.get_str() + " leaves non-integer coefficients");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(out));
}

}  // namespace subspectra
