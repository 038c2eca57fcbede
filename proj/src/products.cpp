#include "subspectra/products.hpp"

#include "subspectra/error.hpp"

namespace subspectra {

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::SvJoin: return "svj";
    case ProductKind::SaJoin: return "saj";
    case ProductKind::SvCorona: return "svc";
    case ProductKind::SaCorona: return "sac";
  }
  return "?";
}

ProductKind parse_product_kind(const std::string& name) {
  if (name == "svj") return ProductKind::SvJoin;
  if (name == "saj") return ProductKind::SaJoin;
  if (name == "svc") return ProductKind::SvCorona;
  if (name == "sac") return ProductKind::SaCorona;
  throw Error(ErrorCode::InvalidParams, "unknown product kind '" + name + "'");
}

std::size_t product_order(ProductKind kind, std::size_t n1, std::size_t m1, std::size_t n2) {
  switch (kind) {
    case ProductKind::SvJoin:
    case ProductKind::SaJoin: return n1 + m1 + n2;
    case ProductKind::SvCorona: return n1 + m1 + n1 * n2;
    case ProductKind::SaCorona: return n1 + m1 + m1 * n2;
  }
  return 0;
}

namespace {

void add_pair(std::vector<Arc>& arcs, Vertex u, Vertex v) {
  arcs.emplace_back(u, v);
  arcs.emplace_back(v, u);
}

void add_copy(std::vector<Arc>& arcs, const Digraph& d2, Vertex offset) {
  for (const auto& [u, v] : d2.arcs()) arcs.emplace_back(offset + u, offset + v);
}

}  // namespace

Digraph build_product(ProductKind kind, const Digraph& d1, const Digraph& d2) {
  if (d1.size() == 0) throw Error(ErrorCode::EmptyArcSet, "products subdivide D1, which has no arcs");
  const std::size_t n1 = d1.order(), m1 = d1.size(), n2 = d2.order();
  const Vertex base = n1 + m1;

  std::vector<Arc> arcs = subdivision(d1).arcs();
  switch (kind) {
    case ProductKind::SvJoin:
    case ProductKind::SaJoin: {
      add_copy(arcs, d2, base);
      // Joins attach D2 to V(D1) or to I(D1).
      const Vertex first = kind == ProductKind::SvJoin ? 0 : n1;
      const std::size_t count = kind == ProductKind::SvJoin ? n1 : m1;
      for (Vertex v = first; v < first + count; ++v)
        for (Vertex w = 0; w < n2; ++w) add_pair(arcs, v, base + w);
      break;
    }
    case ProductKind::SvCorona:
    case ProductKind::SaCorona: {
      const Vertex first = kind == ProductKind::SvCorona ? 0 : n1;
      const std::size_t count = kind == ProductKind::SvCorona ? n1 : m1;
      for (std::size_t k = 0; k < count; ++k) {
        const Vertex offset = base + k * n2;
        add_copy(arcs, d2, offset);
        for (Vertex w = 0; w < n2; ++w) add_pair(arcs, first + k, offset + w);
      }
      break;
    }
  }
  return Digraph(product_order(kind, n1, m1, n2), std::move(arcs));
}

Graph build_product(ProductKind kind, const Graph& g1, const Graph& g2) {
  if (g1.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "products subdivide G1, which has no edges");
  return underlying_graph(build_product(kind, oriented(g1), oriented(g2)));
}

bool product_strongly_connected(ProductKind kind, const Digraph& d1, const Digraph&) {
  if (d1.size() == 0) throw Error(ErrorCode::EmptyArcSet, "products subdivide D1, which has no arcs");
  switch (kind) {
    case ProductKind::SvJoin: return true;
    case ProductKind::SaJoin: {
      const auto deg = degrees(d1);
      return deg.min_out() >= 1 && deg.min_in() >= 1;
    }
    case ProductKind::SvCorona:
    case ProductKind::SaCorona: return is_strongly_connected(d1);
  }
  return false;
}

}  // namespace subspectra
