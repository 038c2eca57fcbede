#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subspectra/matrix.hpp"

namespace subspectra {

using Vertex = std::size_t;
using Arc = std::pair<Vertex, Vertex>;

/// Simple digraph: no loops, no repeated arcs; 2-cycles allowed.
///
/// Arcs are kept sorted by (tail, head). That order is the canonical arc
/// numbering e_1..e_m used by incidence matrices, subdivision vertex ids
/// and corona copy indexing.
class Digraph {
 public:
  /// Validates and canonicalizes. Throws InvalidParams (n = 0),
  /// VertexOutOfRange, LoopArc or DuplicateArc.
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t order() const { return n_; }
  std::size_t size() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
};

/// Simple undirected graph; each edge stored as (u, v) with u < v, sorted.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Arc> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Arc>& edges() const { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_;
  std::vector<Arc> edges_;
};

inline Digraph digraph_from_arcs(std::size_t n, std::vector<Arc> arcs) { return Digraph(n, std::move(arcs)); }

struct Degrees {
  std::vector<std::size_t> out;
  std::vector<std::size_t> in;

  std::size_t min_out() const;  // δ⁺
  std::size_t min_in() const;   // δ⁻
};

Degrees degrees(const Digraph& d);
bool is_r_out_regular(const Digraph& d, std::size_t r);

/// True iff every vertex reaches vertex 0 and is reached from it.
bool is_strongly_connected(const Digraph& d);

/// S(D): vertex n + j subdivides the j-th canonical arc. Throws EmptyArcSet.
Digraph subdivision(const Digraph& d);
/// L(D): one vertex per arc, j → k iff head(e_j) = tail(e_k). Throws EmptyArcSet.
Digraph line_digraph(const Digraph& d);

Graph subdivision_graph(const Graph& g);
Graph line_graph(const Graph& g);

/// Orients each edge u → v (u < v); the arc order then matches the edge order.
Digraph oriented(const Graph& g);
/// Underlying graph; 2-cycles collapse to a single edge.
Graph underlying_graph(const Digraph& d);

enum class MatrixKind {
  Adjacency,          // A
  Laplacian,          // L = D_out − A
  SignlessLaplacian,  // Q = D_out + A
  OutDegree,
  InDegree,
  InIncidence,   // B_in, n × m
  OutIncidence,  // B_out, n × m
  Incidence,     // B(G), graphs only
};

/// Standard matrices in canonical vertex/arc order. Incidence kinds throw
/// EmptyArcSet when m = 0.
IntMatrix matrix_of(const Digraph& d, MatrixKind kind);
/// Supports Adjacency, SignlessLaplacian and Incidence; other kinds throw
/// UnsupportedMatrixKind.
IntMatrix matrix_of(const Graph& g, MatrixKind kind);

/// Text format: "n m" then m lines "tail head". Arcs are re-canonicalized.
Digraph read_digraph(std::istream& in);
void write_digraph(std::ostream& out, const Digraph& d);
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// Single-line description, e.g. "3: 0>1 1>2 2>0", used in reports.
std::string describe(const Digraph& d);
std::string describe(const Graph& g);

}  // namespace subspectra
