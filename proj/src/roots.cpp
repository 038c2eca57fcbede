#include "subspectra/roots.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numbers>

#include "subspectra/error.hpp"

namespace subspectra {

namespace {

using cld = std::complex<long double>;

// Coefficients rescaled by a common power of two so huge integers stay finite.
std::vector<long double> scaled_coefficients(const std::vector<mpz_class>& coeffs) {
  std::vector<double> mant(coeffs.size());
  std::vector<long> expo(coeffs.size());
  long max_exp = LONG_MIN;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    mant[k] = mpz_get_d_2exp(&expo[k], coeffs[k].get_mpz_t());
    if (mant[k] != 0.0) max_exp = std::max(max_exp, expo[k]);
  }
  std::vector<long double> out(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out[k] = mant[k] == 0.0 ? 0.0L : std::ldexp(static_cast<long double>(mant[k]), static_cast<int>(expo[k] - max_exp));
  return out;
}

struct Evaluation {
  cld value;
  cld derivative;
  long double backward_error;
};

Evaluation evaluate(const std::vector<long double>& c, cld z) {
  cld p = c.back();
  cld dp = 0;
  long double abs_z = std::abs(z);
  long double scale = std::abs(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    scale = scale * abs_z + std::abs(c[k]);
  }
  long double err = scale > 0 ? std::abs(p) / scale : 0.0L;
  return {p, dp, err};
}

}  // namespace

std::vector<std::complex<double>> poly_roots(const IntPoly& p, double tol, const RootOptions& options) {
  if (p.degree() < 1) throw Error(ErrorCode::InvalidParams, "poly_roots needs degree >= 1");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidParams, "tolerance must be positive");

  const auto& raw = p.coeffs();
  std::size_t zeros = 0;
  while (sgn(raw[zeros]) == 0) ++zeros;
  std::vector<std::complex<double>> roots(zeros, {0.0, 0.0});
  std::vector<mpz_class> rest(raw.begin() + static_cast<std::ptrdiff_t>(zeros), raw.end());
  const std::size_t d = rest.size() - 1;
  if (d == 0) return roots;

  const std::vector<long double> c = scaled_coefficients(rest);
  if (d == 1) {
    roots.emplace_back(static_cast<double>(-c[0] / c[1]), 0.0);
    return roots;
  }

  const long double radius = std::pow(std::abs(c[0] / c[d]), 1.0L / static_cast<long double>(d));
  std::vector<cld> z(d);
  for (std::size_t k = 0; k < d; ++k) {
    long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                            static_cast<long double>(d) + 0.4L;
    z[k] = std::polar(radius, angle);
  }

  std::vector<long double> err(d, 1.0L);
  long double worst = 1.0L;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    worst = 0.0L;
    for (std::size_t k = 0; k < d; ++k) {
      Evaluation e = evaluate(c, z[k]);
      err[k] = e.backward_error;
      if (e.value == cld(0)) continue;
      cld ratio = e.value / e.derivative;
      cld sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += 1.0L / (z[k] - z[j]);
      cld step = ratio / (1.0L - ratio * sum);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[k] -= step;
    }
    for (std::size_t k = 0; k < d; ++k) {
      err[k] = evaluate(c, z[k]).backward_error;
      worst = std::max(worst, err[k]);
    }
    if (worst < tol) {
      for (const auto& r : z) roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
      return roots;
    }
  }
  throw Error(ErrorCode::NoConvergence,
              "Aberth iteration hit the cap; best residual " + std::to_string(static_cast<double>(worst)));
}

}  // namespace subspectra
