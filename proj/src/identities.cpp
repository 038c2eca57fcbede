#include "subspectra/identities.hpp"

#include <algorithm>

#include "subspectra/error.hpp"

namespace subspectra {

namespace {

RatFunc lambda_shift(long c) { return RatFunc(IntPoly{c, 1}); }  // λ + c

RatFunc lambda_pow(long k) { return RatFunc::lambda().pow(k); }

}  // namespace

std::pair<RatFunc, IntPoly> coronal_affine(const RatFunc& chi, const IntPoly& f, std::size_t n, long a, long b,
                                           long c) {
  if (a == 0) throw Error(ErrorCode::ZeroScale, "coronal_affine needs a nonzero scale");
  const RatFunc phi(IntPoly{-c, 1}, IntPoly{a});  // (λ − c)/a
  const RatFunc chi_phi = chi.compose(phi);
  const RatFunc denom = RatFunc(a) - RatFunc(b) * chi_phi;
  if (denom.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "a − bχ vanishes identically");
  const RatFunc f_new = RatFunc(a).pow(static_cast<long>(n) - 1) * compose_poly_ratfunc(f, phi) * denom;
  return {chi_phi / denom, ratfunc_to_poly(f_new)};
}

RatFunc coronal_rowsum(std::size_t n, long t) {
  return RatFunc(IntPoly{static_cast<long>(n)}, IntPoly{-t, 1});
}

RatFunc coronal_BC_relation(std::size_t n, long t1, long t2, const RatFunc& chi_cb) {
  const RatFunc inv_lambda = lambda_pow(-1);
  return RatFunc(static_cast<long>(n)) * inv_lambda + RatFunc(t1 * t2) * inv_lambda * chi_cb;
}

std::pair<IntPoly, IntPoly> line_digraph_charpoly_relation(const Digraph& d) {
  const IntPoly f_line = charpoly(matrix_of(line_digraph(d), MatrixKind::Adjacency));
  const IntPoly f_a = charpoly(matrix_of(d, MatrixKind::Adjacency));
  return {IntPoly::monomial(d.order(), 1) * f_line, IntPoly::monomial(d.size(), 1) * f_a};
}

IntPoly subdivision_charpoly(const Digraph& d) {
  if (d.size() == 0) throw Error(ErrorCode::EmptyArcSet, "subdivision needs at least one arc");
  const IntPoly f = charpoly(matrix_of(d, MatrixKind::Adjacency));
  const long shift = static_cast<long>(d.size()) - static_cast<long>(d.order());
  return ratfunc_to_poly(lambda_pow(shift) * RatFunc(f.compose(IntPoly::monomial(2, 1))));
}

IntPoly subdivision_charpoly_graph(const Graph& g, SubdivisionRoute route) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "subdivision needs at least one edge");
  const long shift = static_cast<long>(g.size()) - static_cast<long>(g.order());
  if (route == SubdivisionRoute::Q) {
    const IntPoly f_q = charpoly(matrix_of(g, MatrixKind::SignlessLaplacian));
    return ratfunc_to_poly(lambda_pow(shift) * RatFunc(f_q.compose(IntPoly::monomial(2, 1))));
  }
  const IntPoly f_line = charpoly(matrix_of(line_graph(g), MatrixKind::Adjacency));
  return ratfunc_to_poly(lambda_pow(-shift) * RatFunc(f_line.compose(IntPoly{-2, 0, 1})));
}

bool RegularIdentities::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.holds(); });
}

RegularIdentities regular_identities(const Digraph& d, std::size_t r) {
  if (r == 0 || !is_r_out_regular(d, r))
    throw Error(ErrorCode::NotOutRegular, "digraph is not " + std::to_string(r) + "-out-regular");
  const long n = static_cast<long>(d.order());
  const long rl = static_cast<long>(r);
  const IntMatrix a = matrix_of(d, MatrixKind::Adjacency);
  const IntMatrix l = matrix_of(d, MatrixKind::Laplacian);
  const IntMatrix q = matrix_of(d, MatrixKind::SignlessLaplacian);
  const IntMatrix a_line = matrix_of(line_digraph(d), MatrixKind::Adjacency);

  RegularIdentities out;
  out.chi = coronal_rowsum(d.order(), rl);
  const RatFunc f_a = charpoly(a);
  const RatFunc r_minus_lambda(IntPoly{rl, -1});
  const RatFunc sign = n % 2 == 0 ? RatFunc(1) : RatFunc(-1);

  out.checks = {
      {"chi_A = n/(λ-r)", coronal(a), out.chi},
      {"chi_L(λ-r) = chi_A", coronal(l).compose(lambda_shift(-rl)), coronal(a)},
      {"chi_Q(λ+r) = chi_A", coronal(q).compose(lambda_shift(rl)), coronal(a)},
      {"chi_A(L(D))/r = chi_A", coronal(a_line) / RatFunc(rl), coronal(a)},
      {"(-1)^n f_L(r-λ) = f_A", sign * compose_poly_ratfunc(charpoly(l), r_minus_lambda), f_a},
      {"f_Q(λ+r) = f_A", compose_poly_ratfunc(charpoly(q), lambda_shift(rl)), f_a},
      {"λ^{n(1-r)} f_A(L(D)) = f_A", lambda_pow(n * (1 - rl)) * RatFunc(charpoly(a_line)), f_a},
  };
  return out;
}

}  // namespace subspectra
