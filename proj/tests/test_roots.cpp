#include "subspectra/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "test_util.hpp"

using namespace subspectra;
using cd = std::complex<double>;

namespace {

// Greedy nearest matching is optimal here because the targets are well separated.
double max_matching_error(std::vector<cd> got, const std::vector<cd>& want) {
  double worst = 0;
  for (const auto& w : want) {
    auto it = std::min_element(got.begin(), got.end(),
                               [&](const cd& a, const cd& b) { return std::abs(a - w) < std::abs(b - w); });
    worst = std::max(worst, std::abs(*it - w));
    got.erase(it);
  }
  return worst;
}

}  // namespace

TEST(PolyRoots, SimpleCases) {
  auto r = poly_roots(IntPoly{-1, 0, 1}, 1e-12);
  EXPECT_LT(max_matching_error(r, {1.0, -1.0}), 1e-12);
  r = poly_roots(IntPoly{0, 1}, 1e-12);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], cd(0, 0));
}

TEST(PolyRoots, SixthRootsOfUnity) {
  std::vector<cd> want;
  for (int k = 0; k < 6; ++k) want.push_back(std::polar(1.0, k * std::numbers::pi / 3));
  EXPECT_LT(max_matching_error(poly_roots(IntPoly{-1, 0, 0, 0, 0, 0, 1}, 1e-12), want), 1e-10);
}

TEST(PolyRoots, RepeatedRootsAreReturnedWithMultiplicity) {
  const auto r = poly_roots(IntPoly{0, 0, 1, -2, 1}, 1e-12);  // λ²(λ−1)²
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(std::count(r.begin(), r.end(), cd(0, 0)), 2);
  for (const auto& z : r) {
    // A double root is only conditioned to about sqrt(tol).
    if (z != cd(0, 0)) {
      EXPECT_LT(std::abs(z - 1.0), 1e-5);
    }
  }
}

TEST(PolyRoots, Errors) {
  EXPECT_ERROR_CODE(poly_roots(IntPoly{3}, 1e-12), ErrorCode::InvalidParams);
  EXPECT_ERROR_CODE(poly_roots(IntPoly{-1, 1}, 0.0), ErrorCode::InvalidParams);
  RootOptions opts;
  opts.max_iterations = 1;
  EXPECT_ERROR_CODE(poly_roots(IntPoly{1, 2, 3, 4, 5, 6, 7, 8, 9}, 1e-15, opts), ErrorCode::NoConvergence);
}

TEST(PolyRoots, VietaInvariantsOnRandomPolynomials) {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 100; ++it) {
    const int deg = static_cast<int>(testing_util::draw(rng, 1, 12));
    std::vector<mpz_class> c;
    for (int k = 0; k < deg; ++k) c.emplace_back(testing_util::draw(rng, -10, 10));
    c.emplace_back(testing_util::draw(rng, 1, 10));
    const IntPoly p(c);
    const auto roots = poly_roots(p, 1e-12);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(deg));
    cd sum = 0, prod = 1;
    for (const auto& z : roots) {
      sum += z;
      prod *= z;
    }
    const double lead = p.leading().get_d();
    const cd want_sum = -p.coeff(deg - 1).get_d() / lead;
    const cd want_prod = (deg % 2 ? -1.0 : 1.0) * p.coeff(0).get_d() / lead;
    EXPECT_LT(std::abs(sum - want_sum), 1e-8 * std::max(1.0, std::abs(want_sum))) << p.to_string();
    EXPECT_LT(std::abs(prod - want_prod), 1e-8 * std::max(1.0, std::abs(want_prod))) << p.to_string();
  }
}
