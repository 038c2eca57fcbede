#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subspectra/digraph.hpp"

namespace subspectra {

/// Coronal and charpoly of M' = aM + bJ + cI from those of the n×n matrix M.
/// Throws ZeroScale when a = 0.
std::pair<RatFunc, IntPoly> coronal_affine(const RatFunc& chi, const IntPoly& f, std::size_t n, long a, long b,
                                           long c);

/// n/(λ − t): the coronal of any n×n matrix whose row sums all equal t.
RatFunc coronal_rowsum(std::size_t n, long t);

/// χ_{BC} = n/λ + (t1·t2/λ)·χ_{CB} for B (n×m) with column sums t1 and
/// C (m×n) with row sums t2.
RatFunc coronal_BC_relation(std::size_t n, long t1, long t2, const RatFunc& chi_cb);

/// (λⁿ·f_{A(L(D))}, λᵐ·f_{A(D)}), computed independently. Throws EmptyArcSet.
std::pair<IntPoly, IntPoly> line_digraph_charpoly_relation(const Digraph& d);

/// λ^{m−n}·f_{A(D)}(λ²), the charpoly of A(S(D)). Throws EmptyArcSet.
IntPoly subdivision_charpoly(const Digraph& d);

enum class SubdivisionRoute { Q, Line };

/// Charpoly of A(S(G)) either as λ^{m−n} f_{Q(G)}(λ²) or as
/// λ^{n−m} f_{A(L(G))}(λ² − 2). Throws EmptyEdgeSet.
IntPoly subdivision_charpoly_graph(const Graph& g, SubdivisionRoute route);

struct IdentityCheck {
  std::string name;
  RatFunc lhs;
  RatFunc rhs;
  bool holds() const { return lhs == rhs; }
};

struct RegularIdentities {
  RatFunc chi;  // n/(λ − r)
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
};

/// Coronal and charpoly relations between A, L, Q and A(L(D)) for an
/// r-out-regular digraph, each side computed from its own matrix.
/// Throws NotOutRegular.
RegularIdentities regular_identities(const Digraph& d, std::size_t r);

}  // namespace subspectra
