#include "subspectra/digraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "subspectra/error.hpp"

namespace subspectra {

namespace {

void check_vertices(std::size_t n, const std::vector<Arc>& arcs) {
  if (n == 0) throw Error(ErrorCode::InvalidParams, "vertex count must be positive");
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(u));
  }
}

void sort_unique(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end());
  auto dup = std::adjacent_find(arcs.begin(), arcs.end());
  if (dup != arcs.end())
    throw Error(ErrorCode::DuplicateArc,
                "(" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeats");
}

std::vector<bool> reachable(std::size_t n, const std::vector<std::vector<Vertex>>& adj, Vertex start) {
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  check_vertices(n_, arcs_);
  sort_unique(arcs_);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

Graph::Graph(std::size_t n, std::vector<Arc> edges) : n_(n), edges_(std::move(edges)) {
  check_vertices(n_, edges_);
  for (auto& e : edges_)
    if (e.first > e.second) std::swap(e.first, e.second);
  sort_unique(edges_);
}

std::size_t Degrees::min_out() const { return *std::min_element(out.begin(), out.end()); }
std::size_t Degrees::min_in() const { return *std::min_element(in.begin(), in.end()); }

Degrees degrees(const Digraph& d) {
  Degrees deg{std::vector<std::size_t>(d.order(), 0), std::vector<std::size_t>(d.order(), 0)};
  for (const auto& [u, v] : d.arcs()) {
    ++deg.out[u];
    ++deg.in[v];
  }
  return deg;
}

bool is_r_out_regular(const Digraph& d, std::size_t r) {
  const auto out = degrees(d).out;
  return std::all_of(out.begin(), out.end(), [r](std::size_t k) { return k == r; });
}

bool is_strongly_connected(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<std::vector<Vertex>> fwd(n), rev(n);
  for (const auto& [u, v] : d.arcs()) {
    fwd[u].push_back(v);
    rev[v].push_back(u);
  }
  const auto a = reachable(n, fwd, 0);
  const auto b = reachable(n, rev, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (!a[v] || !b[v]) return false;
  return true;
}

Digraph subdivision(const Digraph& d) {
  if (d.size() == 0) throw Error(ErrorCode::EmptyArcSet, "subdivision needs at least one arc");
  const std::size_t n = d.order();
  std::vector<Arc> arcs;
  arcs.reserve(2 * d.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    const auto& [u, v] = d.arcs()[j];
    arcs.emplace_back(u, n + j);
    arcs.emplace_back(n + j, v);
  }
  return Digraph(n + d.size(), std::move(arcs));
}

Digraph line_digraph(const Digraph& d) {
  if (d.size() == 0) throw Error(ErrorCode::EmptyArcSet, "line digraph needs at least one arc");
  const auto& e = d.arcs();
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < e.size(); ++j)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[j].second == e[k].first) arcs.emplace_back(j, k);
  return Digraph(e.size(), std::move(arcs));
}

Graph subdivision_graph(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "subdivision needs at least one edge");
  const std::size_t n = g.order();
  std::vector<Arc> edges;
  for (std::size_t j = 0; j < g.size(); ++j) {
    edges.emplace_back(g.edges()[j].first, n + j);
    edges.emplace_back(g.edges()[j].second, n + j);
  }
  return Graph(n + g.size(), std::move(edges));
}

Graph line_graph(const Graph& g) {
  if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "line graph needs at least one edge");
  const auto& e = g.edges();
  std::vector<Arc> edges;
  for (std::size_t j = 0; j < e.size(); ++j)
    for (std::size_t k = j + 1; k < e.size(); ++k)
      if (e[j].first == e[k].first || e[j].first == e[k].second || e[j].second == e[k].first ||
          e[j].second == e[k].second)
        edges.emplace_back(j, k);
  return Graph(e.size(), std::move(edges));
}

Digraph oriented(const Graph& g) { return Digraph(g.order(), g.edges()); }

Graph underlying_graph(const Digraph& d) {
  std::vector<Arc> edges;
  for (const auto& [u, v] : d.arcs())
    if (u < v || !d.has_arc(v, u)) edges.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(d.order(), std::move(edges));
}

IntMatrix matrix_of(const Digraph& d, MatrixKind kind) {
  const std::size_t n = d.order();
  const std::size_t m = d.size();
  switch (kind) {
    case MatrixKind::Adjacency:
    case MatrixKind::Laplacian:
    case MatrixKind::SignlessLaplacian: {
      IntMatrix out(n, n);
      const long sign = kind == MatrixKind::Laplacian ? -1 : 1;
      for (const auto& [u, v] : d.arcs()) out(u, v) = sign;
      if (kind != MatrixKind::Adjacency) {
        const auto deg = degrees(d);
        for (std::size_t i = 0; i < n; ++i) out(i, i) = static_cast<unsigned long>(deg.out[i]);
      }
      return out;
    }
    case MatrixKind::OutDegree:
    case MatrixKind::InDegree: {
      const auto deg = degrees(d);
      const auto& v = kind == MatrixKind::OutDegree ? deg.out : deg.in;
      IntMatrix out(n, n);
      for (std::size_t i = 0; i < n; ++i) out(i, i) = static_cast<unsigned long>(v[i]);
      return out;
    }
    case MatrixKind::InIncidence:
    case MatrixKind::OutIncidence: {
      if (m == 0) throw Error(ErrorCode::EmptyArcSet, "incidence matrix needs at least one arc");
      IntMatrix out(n, m);
      for (std::size_t j = 0; j < m; ++j) {
        const auto& [u, v] = d.arcs()[j];
        out(kind == MatrixKind::InIncidence ? v : u, j) = 1;
      }
      return out;
    }
    case MatrixKind::Incidence:
      break;
  }
  throw Error(ErrorCode::UnsupportedMatrixKind, "digraphs have in- and out-incidence matrices only");
}

IntMatrix matrix_of(const Graph& g, MatrixKind kind) {
  const std::size_t n = g.order();
  switch (kind) {
    case MatrixKind::Adjacency:
    case MatrixKind::SignlessLaplacian: {
      IntMatrix out(n, n);
      std::vector<std::size_t> deg(n, 0);
      for (const auto& [u, v] : g.edges()) {
        out(u, v) = 1;
        out(v, u) = 1;
        ++deg[u];
        ++deg[v];
      }
      if (kind == MatrixKind::SignlessLaplacian)
        for (std::size_t i = 0; i < n; ++i) out(i, i) = static_cast<unsigned long>(deg[i]);
      return out;
    }
    case MatrixKind::Incidence: {
      if (g.size() == 0) throw Error(ErrorCode::EmptyEdgeSet, "incidence matrix needs at least one edge");
      IntMatrix out(n, g.size());
      for (std::size_t j = 0; j < g.size(); ++j) {
        out(g.edges()[j].first, j) = 1;
        out(g.edges()[j].second, j) = 1;
      }
      return out;
    }
    default:
      break;
  }
  throw Error(ErrorCode::UnsupportedMatrixKind, "graphs support A, Q and the incidence matrix");
}

namespace {

std::pair<std::size_t, std::vector<Arc>> read_pairs(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::ParseError, "expected header 'n m'");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " arc lines");
    if (u < 0 || v < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex id");
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::ParseError, "trailing content after arc list");
  return {static_cast<std::size_t>(n), std::move(arcs)};
}

void write_pairs(std::ostream& out, std::size_t n, const std::vector<Arc>& arcs) {
  out << n << ' ' << arcs.size() << '\n';
  for (const auto& [u, v] : arcs) out << u << ' ' << v << '\n';
}

std::string describe_pairs(std::size_t n, const std::vector<Arc>& arcs, char sep) {
  std::ostringstream os;
  os << n << ':';
  for (const auto& [u, v] : arcs) os << ' ' << u << sep << v;
  return os.str();
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  auto [n, arcs] = read_pairs(in);
  return Digraph(n, std::move(arcs));
}

void write_digraph(std::ostream& out, const Digraph& d) { write_pairs(out, d.order(), d.arcs()); }

Graph read_graph(std::istream& in) {
  auto [n, edges] = read_pairs(in);
  return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) { write_pairs(out, g.order(), g.edges()); }

std::string describe(const Digraph& d) { return describe_pairs(d.order(), d.arcs(), '>'); }
std::string describe(const Graph& g) { return describe_pairs(g.order(), g.edges(), '-'); }

}  // namespace subspectra
