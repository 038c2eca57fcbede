#include "subspectra/formulas.hpp"

#include "subspectra/error.hpp"

namespace subspectra {

namespace {

// Shorthand for the factors every formula is built from.
const RatFunc kLambda = RatFunc::lambda();

RatFunc lin(long c) { return RatFunc(IntPoly{c, 1}); }  // λ + c
RatFunc num(long c) { return RatFunc(c); }

RatFunc at(const IntPoly& f, const RatFunc& phi) { return compose_poly_ratfunc(f, phi); }

RatFunc signed_power(long n) { return n % 2 == 0 ? num(1) : num(-1); }

struct Factor {
  IntPoly f;
  RatFunc chi;
};

Factor factor_of(const Digraph& d, MatrixKind kind) {
  const IntMatrix m = matrix_of(d, kind);
  return {charpoly(m), coronal(m)};
}

long out_regularity(const Digraph& d1) {
  const long r = static_cast<long>(degrees(d1).out.front());
  if (!is_r_out_regular(d1, static_cast<std::size_t>(r)))
    throw Error(ErrorCode::NotOutRegular, "L and Q closed forms need an out-regular D1");
  return r;
}

RatFunc adjacency_form(ProductKind kind, const Digraph& d1, const Digraph& d2) {
  const long n1 = static_cast<long>(d1.order()), m1 = static_cast<long>(d1.size());
  const Factor a1 = factor_of(d1, MatrixKind::Adjacency);
  const Factor a2 = factor_of(d2, MatrixKind::Adjacency);
  const RatFunc sq = kLambda * kLambda;

  switch (kind) {
    case ProductKind::SvJoin:
      return kLambda.pow(m1 - n1) * at(a1.f, sq) * RatFunc(a2.f) *
             (num(1) - kLambda * a1.chi.compose(sq) * a2.chi);
    case ProductKind::SaJoin:
      return kLambda.pow(m1 - n1) * at(a1.f, sq) * RatFunc(a2.f) *
             (num(1) - kLambda * (sq * a1.chi.compose(sq) - num(n1)) * a2.chi);
    case ProductKind::SvCorona:
      return kLambda.pow(m1 - n1) * RatFunc(a2.f).pow(n1) * at(a1.f, sq - kLambda * a2.chi);
    case ProductKind::SaCorona:
      return (kLambda - a2.chi).pow(m1 - n1) * RatFunc(a2.f).pow(m1) * at(a1.f, sq - kLambda * a2.chi);
  }
  return {};
}

RatFunc laplacian_form(ProductKind kind, const Digraph& d1, const Digraph& d2) {
  const long n1 = static_cast<long>(d1.order()), n2 = static_cast<long>(d2.order());
  const long r = out_regularity(d1);
  const IntPoly f1 = charpoly(matrix_of(d1, MatrixKind::Laplacian));
  const IntPoly f2 = charpoly(matrix_of(d2, MatrixKind::Laplacian));
  const RatFunc sign = signed_power(n1);

  switch (kind) {
    case ProductKind::SvJoin: {
      const RatFunc inner = (lin(-r - n2)) * lin(-1);
      return sign * lin(-1).pow(n1 * (r - 1)) * at(f2, lin(-n1)) * at(f1, num(r) - inner) *
             (num(1) - lin(-1) * num(n1 * n2) / (lin(-n1) * (inner - num(r))));
    }
    case ProductKind::SaJoin: {
      const RatFunc inner = lin(-r) * lin(-1 - n2);
      return sign * lin(-1 - n2).pow(n1 * (r - 1)) * at(f2, lin(-n1 * r)) * at(f1, num(r) - inner) *
             (num(1) - num(r * n1 * n2) * lin(-r) / (lin(-n1 * r) * (inner - num(r))));
    }
    case ProductKind::SvCorona:
      return sign * lin(-1).pow((r - 1) * n1) * at(f1, num(0) - kLambda * kLambda + kLambda * num(n2 + r + 1)) *
             at(f2, lin(-1)).pow(n1);
    case ProductKind::SaCorona: {
      const RatFunc shifted = lin(-1 - n2) - num(n2) / lin(-1);
      return sign * shifted.pow((r - 1) * n1) * at(f1, num(r) - lin(-r) * shifted) * at(f2, lin(-1)).pow(n1 * r);
    }
  }
  return {};
}

RatFunc signless_form(ProductKind kind, const Digraph& d1, const Digraph& d2) {
  const long n1 = static_cast<long>(d1.order()), n2 = static_cast<long>(d2.order());
  const long r = out_regularity(d1);
  const IntPoly f1 = charpoly(matrix_of(d1, MatrixKind::SignlessLaplacian));
  const Factor q2 = factor_of(d2, MatrixKind::SignlessLaplacian);

  switch (kind) {
    case ProductKind::SvJoin: {
      const RatFunc inner = lin(-r - n2) * lin(-1);
      return lin(-1).pow(n1 * (r - 1)) * at(q2.f, lin(-n1)) * at(f1, num(r) + inner) *
             (num(1) - lin(-1) * num(n1) * q2.chi.compose(lin(-n1)) / (inner - num(r)));
    }
    case ProductKind::SaJoin: {
      const RatFunc inner = lin(-r) * lin(-1 - n2);
      return lin(-1 - n2).pow(n1 * (r - 1)) * at(q2.f, lin(-n1 * r)) * at(f1, num(r) + inner) *
             (num(1) - num(n1 * r) * lin(-r) * q2.chi.compose(lin(-n1 * r)) / (inner - num(r)));
    }
    case ProductKind::SvCorona:
      return lin(-1).pow((r - 1) * n1) * at(f1, num(r) + lin(-1) * (lin(-r - n2) - q2.chi.compose(lin(-1)))) *
             at(q2.f, lin(-1)).pow(n1);
    case ProductKind::SaCorona: {
      const RatFunc shifted = lin(-1 - n2) - q2.chi.compose(lin(-1));
      return shifted.pow((r - 1) * n1) * at(f1, num(r) + lin(-r) * shifted) * at(q2.f, lin(-1)).pow(n1 * r);
    }
  }
  return {};
}

}  // namespace

IntPoly closed_form_charpoly(ProductKind kind, MatrixKind matrix, const Digraph& d1, const Digraph& d2) {
  if (d1.size() == 0) throw Error(ErrorCode::EmptyArcSet, "products subdivide D1, which has no arcs");
  switch (matrix) {
    case MatrixKind::Adjacency: return ratfunc_to_poly(adjacency_form(kind, d1, d2));
    case MatrixKind::Laplacian: return ratfunc_to_poly(laplacian_form(kind, d1, d2));
    case MatrixKind::SignlessLaplacian: return ratfunc_to_poly(signless_form(kind, d1, d2));
    default: break;
  }
  throw Error(ErrorCode::UnsupportedMatrixKind, "closed forms exist for A, L and Q only");
}

IntPoly closed_form_charpoly(ProductKind kind, MatrixKind matrix, const Graph& g1, const Graph& g2) {
  if (matrix != MatrixKind::Adjacency)
    throw Error(ErrorCode::UnsupportedMatrixKind, "graph products have adjacency closed forms only");
  if (g1.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "products subdivide G1, which has no edges");
  const long n1 = static_cast<long>(g1.order()), m1 = static_cast<long>(g1.size());
  // S(G1) enters through its line graph: B·Bᵀ = Q(G1), Bᵀ·B = A(L(G1)) + 2I.
  const IntMatrix line = matrix_of(line_graph(g1), MatrixKind::Adjacency);
  const IntPoly f_line = charpoly(line);
  const RatFunc chi_line = coronal(line);
  const IntMatrix a2 = matrix_of(g2, MatrixKind::Adjacency);
  const IntPoly f2 = charpoly(a2);
  const RatFunc chi2 = coronal(a2);
  const RatFunc shifted_sq = kLambda * kLambda - num(2);

  RatFunc value;
  switch (kind) {
    case ProductKind::SvJoin:
      value = kLambda.pow(n1 - m1 - 1) * at(f_line, shifted_sq) * RatFunc(f2) *
              (kLambda - (num(n1) + num(4) * chi_line.compose(shifted_sq)) * chi2);
      break;
    case ProductKind::SaJoin:
      value = kLambda.pow(n1 - m1) * at(f_line, shifted_sq) * RatFunc(f2) *
              (num(1) - kLambda * chi_line.compose(shifted_sq) * chi2);
      break;
    case ProductKind::SvCorona:
      value = (kLambda - chi2).pow(n1 - m1) * RatFunc(f2).pow(n1) * at(f_line, shifted_sq - kLambda * chi2);
      break;
    case ProductKind::SaCorona:
      value = kLambda.pow(n1 - m1) * RatFunc(f2).pow(m1) * at(f_line, shifted_sq - kLambda * chi2);
      break;
  }
  return ratfunc_to_poly(value);
}

IntPoly regular_corollary_charpoly(ProductKind kind, std::size_t n1, std::size_t r, std::size_t n2, std::size_t s,
                                   const IntPoly& fa1, const IntPoly& fa2) {
  if (kind != ProductKind::SvJoin && kind != ProductKind::SaJoin)
    throw Error(ErrorCode::InvalidParams, "the regular shortcut covers joins only");
  if (fa1.degree() != static_cast<long>(n1) || fa2.degree() != static_cast<long>(n2))
    throw Error(ErrorCode::DimensionMismatch, "charpoly degrees must equal n1 and n2");
  const long weight = static_cast<long>(n1 * n2) * (kind == ProductKind::SaJoin ? static_cast<long>(r) : 1);
  const RatFunc sq = kLambda * kLambda;
  const RatFunc bracket =
      num(1) - kLambda * num(weight) / ((sq - num(static_cast<long>(r))) * lin(-static_cast<long>(s)));
  const RatFunc value = kLambda.pow(static_cast<long>(n1) * (static_cast<long>(r) - 1)) * at(fa1, sq) *
                        RatFunc(fa2) * bracket;
  return ratfunc_to_poly(value);
}

}  // namespace subspectra
