#pragma once

#include <string>

#include "subspectra/digraph.hpp"

namespace subspectra {

/// The four subdivision products. Forward/backward (non-symmetric) join
/// variants are deliberately absent.
enum class ProductKind {
  SvJoin,    // subdivision-vertex join
  SaJoin,    // subdivision-arc join
  SvCorona,  // subdivision-vertex corona
  SaCorona,  // subdivision-arc corona
};

std::string to_string(ProductKind kind);
/// Accepts "svj", "saj", "svc", "sac". Throws InvalidParams.
ProductKind parse_product_kind(const std::string& name);

/// Builds the product in block order V(D1), I(D1), then D2 (joins) or the
/// copies of D2 (coronas), each copy contiguous and ordered by owner id.
/// Throws EmptyArcSet when D1 has no arcs.
Digraph build_product(ProductKind kind, const Digraph& d1, const Digraph& d2);

/// Graph analogue: single edges instead of 2-cycles. Throws EmptyEdgeSet.
Graph build_product(ProductKind kind, const Graph& g1, const Graph& g2);

/// Predicted strong connectivity of the product, read off D1 alone.
bool product_strongly_connected(ProductKind kind, const Digraph& d1, const Digraph& d2);

/// Vertex count of the product without building it.
std::size_t product_order(ProductKind kind, std::size_t n1, std::size_t m1, std::size_t n2);

}  // namespace subspectra
