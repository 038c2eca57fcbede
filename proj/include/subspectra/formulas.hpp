#pragma once

#include "subspectra/products.hpp"

namespace subspectra {

/// Closed-form charpoly of matrix_of(build_product(kind, d1, d2), matrix),
/// evaluated from the spectra and coronals of the factors alone.
///
/// matrix ∈ {Adjacency, Laplacian, SignlessLaplacian}. L and Q need D1 to be
/// r-out-regular (NotOutRegular otherwise). Throws EmptyArcSet when D1 has
/// no arcs and UnsupportedMatrixKind for any other matrix kind.
IntPoly closed_form_charpoly(ProductKind kind, MatrixKind matrix, const Digraph& d1, const Digraph& d2);

/// Graph analogue, Adjacency only (UnsupportedMatrixKind otherwise).
IntPoly closed_form_charpoly(ProductKind kind, MatrixKind matrix, const Graph& g1, const Graph& g2);

/// Shortcut for joins with D1 r-out-regular and D2 s-out-regular, needing only
/// f_{A(D1)} and f_{A(D2)}. kind must be SvJoin or SaJoin (InvalidParams).
/// Throws DimensionMismatch if the degrees of fa1, fa2 differ from n1, n2.
IntPoly regular_corollary_charpoly(ProductKind kind, std::size_t n1, std::size_t r, std::size_t n2, std::size_t s,
                                   const IntPoly& fa1, const IntPoly& fa2);

}  // namespace subspectra
