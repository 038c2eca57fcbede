#pragma once

#include <complex>
#include <vector>

#include "subspectra/poly.hpp"

namespace subspectra {

struct RootOptions {
  int max_iterations = 1000;
};

/// Numeric roots of p by Aberth–Ehrlich simultaneous iteration.
///
/// Returns deg(p) values (multiple roots repeated). Iteration stops once every
/// root has backward error |p(z)| / Σ|c_k||z|^k below `tol`; throws
/// NoConvergence with the best residual if the cap is reached first.
std::vector<std::complex<double>> poly_roots(const IntPoly& p, double tol,
                                             const RootOptions& options = {});

}  // namespace subspectra
