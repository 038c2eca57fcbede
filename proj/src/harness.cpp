#include "subspectra/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "subspectra/block.hpp"
#include "subspectra/error.hpp"
#include "subspectra/formulas.hpp"
#include "subspectra/identities.hpp"

namespace subspectra {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::InvalidParams, "uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) {
  return mix_seed(master + (static_cast<std::uint64_t>(trial) + 1) * 0x9E3779B97F4A7C15ULL);
}

namespace {

void check_gen(const GenSpec& spec) {
  if (spec.n == 0) throw Error(ErrorCode::InvalidParams, "n must be positive");
  if (spec.p_den == 0 || spec.p_num > spec.p_den) throw Error(ErrorCode::InvalidParams, "p must lie in [0, 1]");
  if (spec.family == Family::ROutRegular && (spec.r < 1 || spec.r + 1 > spec.n))
    throw Error(ErrorCode::InvalidParams, "r must lie in [1, n-1]");
}

}  // namespace

Digraph generate_digraph(const GenSpec& spec) {
  check_gen(spec);
  if (spec.family == Family::ErGraph) throw Error(ErrorCode::InvalidParams, "ER_GRAPH yields a graph");
  std::mt19937_64 rng(spec.seed);
  std::vector<Arc> arcs;
  if (spec.family == Family::ErDigraph) {
    for (Vertex u = 0; u < spec.n; ++u)
      for (Vertex v = 0; v < spec.n; ++v)
        if (u != v && uniform_below(rng, spec.p_den) < spec.p_num) arcs.emplace_back(u, v);
    return Digraph(spec.n, std::move(arcs));
  }
  // Out-neighbourhoods are independent uniform r-subsets (partial Fisher–Yates).
  std::vector<Vertex> others;
  for (Vertex u = 0; u < spec.n; ++u) {
    others.clear();
    for (Vertex v = 0; v < spec.n; ++v)
      if (v != u) others.push_back(v);
    for (std::size_t k = 0; k < spec.r; ++k) {
      const auto j = k + uniform_below(rng, others.size() - k);
      std::swap(others[k], others[j]);
      arcs.emplace_back(u, others[k]);
    }
  }
  return Digraph(spec.n, std::move(arcs));
}

Graph generate_graph(const GenSpec& spec) {
  check_gen(spec);
  if (spec.family != Family::ErGraph) throw Error(ErrorCode::InvalidParams, "only ER_GRAPH yields a graph");
  std::mt19937_64 rng(spec.seed);
  std::vector<Arc> edges;
  for (Vertex u = 0; u < spec.n; ++u)
    for (Vertex v = u + 1; v < spec.n; ++v)
      if (uniform_below(rng, spec.p_den) < spec.p_num) edges.emplace_back(u, v);
  return Graph(spec.n, std::move(edges));
}

std::variant<Digraph, Graph> generate(const GenSpec& spec) {
  if (spec.family == Family::ErGraph) return generate_graph(spec);
  return generate_digraph(spec);
}

bool strongly_connected_by_closure(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<char> reach(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) reach[i * n + i] = 1;
  for (const auto& [u, v] : d.arcs()) reach[u * n + v] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k * n + j]) reach[i * n + j] = 1;
  return std::all_of(reach.begin(), reach.end(), [](char c) { return c != 0; });
}

namespace {

constexpr std::size_t kMaxAttempts = 1000;
constexpr std::size_t kOracleCap = 6;

// Thrown by a check whose draw violates the theorem's hypotheses.
struct Skip {};

struct Mismatch {
  Value expected;
  Value actual;
};

std::optional<Mismatch> compare(Value expected, Value actual) {
  if (expected == actual) return std::nullopt;
  return Mismatch{std::move(expected), std::move(actual)};
}

IntPoly truth(bool b) { return IntPoly::constant(b ? 1 : 0); }

std::string flat(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

struct Trial {
  std::mt19937_64 rng;
  std::string d1;
  std::string d2;

  std::uint64_t below(std::uint64_t k) { return uniform_below(rng, k); }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  std::size_t size_in(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  GenSpec er(Family family, std::size_t lo, std::size_t hi) {
    static constexpr std::uint64_t kProbs[3][2] = {{3, 10}, {1, 2}, {4, 5}};
    GenSpec g;
    g.family = family;
    g.n = size_in(lo, hi);
    const auto& p = kProbs[below(3)];
    g.p_num = p[0];
    g.p_den = p[1];
    g.seed = rng();
    return g;
  }
  Digraph er_digraph(std::size_t lo, std::size_t hi) { return generate_digraph(er(Family::ErDigraph, lo, hi)); }
  Graph er_graph(std::size_t lo, std::size_t hi) { return generate_graph(er(Family::ErGraph, lo, hi)); }

  std::pair<Digraph, std::size_t> regular(std::size_t lo, std::size_t hi) {
    GenSpec g;
    g.family = Family::ROutRegular;
    g.n = size_in(std::max<std::size_t>(lo, 2), hi);
    g.r = 1 + below(std::min<std::size_t>(3, g.n - 1));
    g.seed = rng();
    return {generate_digraph(g), g.r};
  }

  IntMatrix matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = range(lo, hi);
    return m;
  }
};

using Check = std::function<std::optional<Mismatch>(Trial&, const Bounds&)>;

std::size_t oracle_size(const Bounds& b) { return std::min(b.max_n1, kOracleCap); }

RatFunc coronal_checked(const IntMatrix& m) {
  return m.rows() <= kCoronalOracleMax ? coronal_oracle(m) : coronal(m);
}

// ---- identity layer -------------------------------------------------------

std::optional<Mismatch> check_line_digraph(Trial& t, const Bounds& b) {
  const Digraph d = t.er_digraph(1, b.max_n1);
  if (d.size() == 0) throw Skip{};
  t.d1 = describe(d);
  const IntMatrix b_out = matrix_of(d, MatrixKind::OutIncidence);
  const IntMatrix b_in = matrix_of(d, MatrixKind::InIncidence);
  const bool factors = b_out * b_in.transpose() == matrix_of(d, MatrixKind::Adjacency) &&
                       b_in.transpose() * b_out == matrix_of(line_digraph(d), MatrixKind::Adjacency);
  if (!factors) return compare(truth(true), truth(false));
  const auto [lhs, rhs] = line_digraph_charpoly_relation(d);
  return compare(rhs, lhs);
}

std::optional<Mismatch> check_determinant_lemma(Trial& t, const Bounds& b) {
  const std::size_t n = t.size_in(1, oracle_size(b));
  const IntMatrix m = t.matrix(n, n, -3, 3);
  long alpha = t.range(-3, 2);
  if (alpha >= 0) ++alpha;
  t.d1 = flat(m);
  t.d2 = "alpha=" + std::to_string(alpha);
  const RatFunc lhs(charpoly(m - IntMatrix::ones(n, n) * alpha), charpoly(m));
  return compare(RatFunc(1) + RatFunc(alpha) * coronal_oracle(m), lhs);
}

std::optional<Mismatch> check_affine(Trial& t, const Bounds& b) {
  static constexpr long kScales[] = {-2, -1, 1, 2};
  const std::size_t n = t.size_in(1, oracle_size(b));
  const IntMatrix m = t.matrix(n, n, -3, 3);
  const long a = kScales[t.below(4)];
  const long bb = t.range(-3, 3);
  const long c = t.range(-3, 3);
  t.d1 = flat(m);
  t.d2 = "a=" + std::to_string(a) + " b=" + std::to_string(bb) + " c=" + std::to_string(c);
  const IntMatrix explicit_m = m * a + IntMatrix::ones(n, n) * bb + IntMatrix::scalar(n, c);
  const auto [chi, f] = coronal_affine(coronal(m), charpoly(m), n, a, bb, c);
  if (auto mm = compare(charpoly_oracle(explicit_m), f)) return mm;
  return compare(coronal_oracle(explicit_m), chi);
}

std::optional<Mismatch> check_rowsum(Trial& t, const Bounds& b) {
  const std::size_t n = t.size_in(1, oracle_size(b));
  const long target = t.range(-3, 3);
  IntMatrix m = t.matrix(n, n, -3, 3);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class rest = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) rest += m(i, j);
    m(i, n - 1) = target - rest;
  }
  t.d1 = flat(m);
  t.d2 = "t=" + std::to_string(target);
  return compare(coronal_oracle(m), coronal_rowsum(n, target));
}

std::optional<Mismatch> check_bc_relation(Trial& t, const Bounds& b) {
  const std::size_t n = t.size_in(1, oracle_size(b));
  const std::size_t m = t.size_in(1, oracle_size(b));
  const long t1 = t.range(-3, 3), t2 = t.range(-3, 3);
  IntMatrix bm = t.matrix(n, m, -2, 2);
  IntMatrix cm = t.matrix(m, n, -2, 2);
  // Force column sums of B to t1 and row sums of C to t2.
  for (std::size_t j = 0; j < m; ++j) {
    mpz_class rest = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) rest += bm(i, j);
    bm(n - 1, j) = t1 - rest;
  }
  for (std::size_t i = 0; i < m; ++i) {
    mpz_class rest = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) rest += cm(i, j);
    cm(i, n - 1) = t2 - rest;
  }
  t.d1 = "B=" + flat(bm) + " t1=" + std::to_string(t1);
  t.d2 = "C=" + flat(cm) + " t2=" + std::to_string(t2);
  return compare(coronal_oracle(bm * cm), coronal_BC_relation(n, t1, t2, coronal(cm * bm)));
}

std::optional<Mismatch> check_line_graph_coronal(Trial& t, const Bounds& b) {
  const Graph g = t.er_graph(2, b.max_n1);
  if (g.size() == 0) throw Skip{};
  t.d1 = describe(g);
  const RatFunc chi_line = coronal(matrix_of(line_graph(g), MatrixKind::Adjacency));
  const RatFunc rhs = coronal_BC_relation(g.order(), 2, 2, chi_line.compose(RatFunc(IntPoly{-2, 1})));
  return compare(coronal_checked(matrix_of(g, MatrixKind::SignlessLaplacian)), rhs);
}

std::optional<Mismatch> check_line_digraph_coronal(Trial& t, const Bounds& b) {
  const Digraph d = t.er_digraph(1, b.max_n1);
  if (d.size() == 0) throw Skip{};
  t.d1 = describe(d);
  const RatFunc chi_line = coronal(matrix_of(line_digraph(d), MatrixKind::Adjacency));
  return compare(coronal_checked(matrix_of(d, MatrixKind::Adjacency)),
                 coronal_BC_relation(d.order(), 1, 1, chi_line));
}

BlockSpec random_block(Trial& t, BlockShape shape) {
  BlockSpec spec;
  spec.shape = shape;
  spec.r = t.size_in(1, 3);
  spec.s = t.size_in(1, 3);
  spec.t = t.size_in(1, 3);
  spec.ell = t.below(2) == 0 ? 1 : spec.r;
  spec.sign = t.below(2) == 0 ? 1 : -1;
  spec.alpha = t.range(-2, 2);
  spec.beta = t.range(-2, 2);
  spec.gamma = t.range(-2, 2);
  spec.b = t.matrix(spec.r, spec.s, -2, 2);
  spec.c = t.matrix(spec.s, spec.r, -2, 2);
  if (shape == BlockShape::General) {
    spec.a = t.matrix(spec.r, spec.r, -2, 2);
    spec.d = t.matrix(spec.s, spec.s, -2, 2);
    spec.e = t.matrix(spec.t, spec.t, -2, 2);
  } else {
    spec.f = t.matrix(spec.t, spec.t, -2, 2);
  }
  t.d1 = to_string(shape) + " r=" + std::to_string(spec.r) + " s=" + std::to_string(spec.s) +
         " t=" + std::to_string(spec.t) + " ell=" + std::to_string(spec.ell) + " sign=" + std::to_string(spec.sign);
  t.d2 = flat(assemble_block(spec));
  return spec;
}

std::optional<Mismatch> check_general_block(Trial& t, const Bounds&) {
  const BlockSpec spec = random_block(t, BlockShape::General);
  return compare(charpoly(assemble_block(spec)), blockcharpoly(spec));
}

std::optional<Mismatch> check_shaped_block(Trial& t, const Bounds&) {
  static constexpr BlockShape kShapes[] = {BlockShape::M1, BlockShape::M2, BlockShape::M3, BlockShape::M4};
  const BlockSpec spec = random_block(t, kShapes[t.below(4)]);
  return compare(charpoly(assemble_block(spec)), blockcharpoly(spec));
}

std::optional<Mismatch> check_regular(Trial& t, const Bounds& b) {
  const auto [d, r] = t.regular(2, b.max_n1);
  t.d1 = describe(d);
  t.d2 = "r=" + std::to_string(r);
  for (const auto& c : regular_identities(d, r).checks)
    if (!c.holds()) return compare(c.rhs, c.lhs);
  return std::nullopt;
}

std::optional<Mismatch> check_subdivision(Trial& t, const Bounds& b) {
  const Digraph d = t.er_digraph(1, b.max_n1);
  if (d.size() == 0) throw Skip{};
  t.d1 = describe(d);
  return compare(charpoly(matrix_of(subdivision(d), MatrixKind::Adjacency)), subdivision_charpoly(d));
}

std::optional<Mismatch> check_subdivision_graph(Trial& t, const Bounds& b) {
  const Graph g = t.er_graph(2, b.max_n1);
  if (g.size() == 0) throw Skip{};
  t.d1 = describe(g);
  const IntPoly direct = charpoly(matrix_of(subdivision_graph(g), MatrixKind::Adjacency));
  if (auto mm = compare(direct, subdivision_charpoly_graph(g, SubdivisionRoute::Q))) return mm;
  return compare(direct, subdivision_charpoly_graph(g, SubdivisionRoute::Line));
}

// ---- products -------------------------------------------------------------

Check digraph_formula(std::vector<ProductKind> kinds, std::vector<MatrixKind> matrices, bool regular_d1) {
  return [=](Trial& t, const Bounds& b) -> std::optional<Mismatch> {
    const Digraph d1 = regular_d1 ? t.regular(2, b.max_n1).first : t.er_digraph(2, b.max_n1);
    if (d1.size() == 0) throw Skip{};
    const Digraph d2 = t.er_digraph(1, b.max_n2);
    t.d1 = describe(d1);
    t.d2 = describe(d2);
    for (ProductKind kind : kinds) {
      const Digraph product = build_product(kind, d1, d2);
      for (MatrixKind mk : matrices)
        if (auto mm = compare(charpoly(matrix_of(product, mk)), closed_form_charpoly(kind, mk, d1, d2))) return mm;
    }
    return std::nullopt;
  };
}

Check graph_formula(std::vector<ProductKind> kinds) {
  return [=](Trial& t, const Bounds& b) -> std::optional<Mismatch> {
    const Graph g1 = t.er_graph(2, b.max_n1);
    if (g1.size() == 0) throw Skip{};
    const Graph g2 = t.er_graph(1, b.max_n2);
    t.d1 = describe(g1);
    t.d2 = describe(g2);
    for (ProductKind kind : kinds) {
      const IntPoly direct = charpoly(matrix_of(build_product(kind, g1, g2), MatrixKind::Adjacency));
      if (auto mm = compare(direct, closed_form_charpoly(kind, MatrixKind::Adjacency, g1, g2))) return mm;
    }
    return std::nullopt;
  };
}

Check regular_shortcut(ProductKind kind) {
  return [=](Trial& t, const Bounds& b) -> std::optional<Mismatch> {
    const auto [d1, r] = t.regular(2, b.max_n1);
    const std::size_t n2 = t.size_in(1, b.max_n2);
    const std::size_t s = t.below(n2);
    Digraph d2(n2, {});
    if (s > 0) {
      GenSpec g;
      g.family = Family::ROutRegular;
      g.n = n2;
      g.r = s;
      g.seed = t.rng();
      d2 = generate_digraph(g);
    }
    t.d1 = describe(d1);
    t.d2 = describe(d2);
    const IntPoly direct = charpoly(matrix_of(build_product(kind, d1, d2), MatrixKind::Adjacency));
    const IntPoly shortcut = regular_corollary_charpoly(kind, d1.order(), r, n2, s,
                                                        charpoly(matrix_of(d1, MatrixKind::Adjacency)),
                                                        charpoly(matrix_of(d2, MatrixKind::Adjacency)));
    return compare(direct, shortcut);
  };
}

Check connectivity(ProductKind kind) {
  return [=](Trial& t, const Bounds& b) -> std::optional<Mismatch> {
    const Digraph d1 = t.er_digraph(2, b.max_n1);
    if (d1.size() == 0) throw Skip{};
    const Digraph d2 = t.er_digraph(1, b.max_n2);
    t.d1 = describe(d1);
    t.d2 = describe(d2);
    const bool brute = strongly_connected_by_closure(build_product(kind, d1, d2));
    return compare(truth(brute), truth(product_strongly_connected(kind, d1, d2)));
  };
}

const std::vector<std::pair<std::string, Check>>& theorem_table() {
  using PK = ProductKind;
  using MK = MatrixKind;
  static const std::vector<std::pair<std::string, Check>> table = {
      {"lem2.1", check_line_digraph},
      {"lem2.3", check_determinant_lemma},
      {"lem2.5", check_affine},
      {"lem2.6", check_rowsum},
      {"prop2.7", check_bc_relation},
      {"cor2.8", check_line_graph_coronal},
      {"cor2.9", check_line_digraph_coronal},
      {"prop2.10", check_general_block},
      {"cor2.11", check_shaped_block},
      {"prop2.12", check_regular},
      {"sec3.digraph", check_subdivision},
      {"sec3.graph", check_subdivision_graph},
      {"thm4.graphjoin", graph_formula({PK::SvJoin, PK::SaJoin})},
      {"thm4.2", digraph_formula({PK::SvJoin}, {MK::Adjacency}, false)},
      {"cor4.3", regular_shortcut(PK::SvJoin)},
      {"thm4.4", digraph_formula({PK::SvJoin}, {MK::Laplacian, MK::SignlessLaplacian}, true)},
      {"prop4.svj.conn", connectivity(PK::SvJoin)},
      {"prop4.saj.conn", connectivity(PK::SaJoin)},
      {"thm4.6", digraph_formula({PK::SaJoin}, {MK::Adjacency}, false)},
      {"cor4.7", regular_shortcut(PK::SaJoin)},
      {"thm4.8", digraph_formula({PK::SaJoin}, {MK::Laplacian, MK::SignlessLaplacian}, true)},
      {"thm5.graphcorona", graph_formula({PK::SvCorona, PK::SaCorona})},
      {"thm5.svc.A", digraph_formula({PK::SvCorona}, {MK::Adjacency}, false)},
      {"thm5.svc.LQ", digraph_formula({PK::SvCorona}, {MK::Laplacian, MK::SignlessLaplacian}, true)},
      {"thm5.sac.A", digraph_formula({PK::SaCorona}, {MK::Adjacency}, false)},
      {"thm5.sac.LQ", digraph_formula({PK::SaCorona}, {MK::Laplacian, MK::SignlessLaplacian}, true)},
  };
  return table;
}

const Check& find_check(const std::string& theorem) {
  for (const auto& [id, check] : theorem_table())
    if (id == theorem) return check;
  throw Error(ErrorCode::UnknownTheorem, "unknown theorem id '" + theorem + "'");
}

// FNV-1a, so different theorems draw unrelated instances from one master seed.
std::uint64_t id_hash(const std::string& id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

void check_bounds(const Bounds& b) {
  if (b.max_n1 < 2) throw Error(ErrorCode::InvalidParams, "max-n1 must be at least 2");
  if (b.max_n2 < 1) throw Error(ErrorCode::InvalidParams, "max-n2 must be at least 1");
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& entry : theorem_table()) out.push_back(entry.first);
    return out;
  }();
  return ids;
}

TrialOutcome run_trial(const std::string& theorem, std::uint64_t seed, const Bounds& bounds) {
  const Check& check = find_check(theorem);
  check_bounds(bounds);
  for (std::size_t k = 0; k < kMaxAttempts; ++k) {
    Trial t{std::mt19937_64(mix_seed(seed + k)), {}, {}};
    TrialOutcome out;
    out.skipped = k;
    try {
      if (auto mm = check(t, bounds))
        out.failure = Failure{0, seed, t.d1, t.d2, std::move(mm->expected), std::move(mm->actual), {}};
    } catch (const Skip&) {
      continue;
    } catch (const Error& e) {
      out.failure = Failure{0, seed, t.d1, t.d2, IntPoly{}, IntPoly{}, e.what()};
    }
    return out;
  }
  throw Error(ErrorCode::InternalInconsistency, "no admissible instance after " + std::to_string(kMaxAttempts) +
                                                    " draws for " + theorem);
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUBSPECTRA_THREADS"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    const char* end = env + std::strlen(env);
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end)
      throw Error(ErrorCode::InvalidParams, std::string("SUBSPECTRA_THREADS is not a count: ") + env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

VerificationReport verify(const std::string& theorem, std::size_t trials, std::uint64_t seed, const Bounds& bounds,
                          std::size_t threads) {
  find_check(theorem);
  check_bounds(bounds);
  const auto start = std::chrono::steady_clock::now();

  const std::uint64_t base = seed ^ id_hash(theorem);
  std::vector<TrialOutcome> outcomes(trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      try {
        outcomes[i] = run_trial(theorem, trial_seed(base, i), bounds);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min(resolve_threads(threads), std::max<std::size_t>(trials, 1));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  VerificationReport report;
  report.theorem = theorem;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    report.skipped += outcomes[i].skipped;
    if (outcomes[i].failure) {
      Failure f = std::move(*outcomes[i].failure);
      f.trial = i;
      report.failures.push_back(std::move(f));
    }
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace subspectra
