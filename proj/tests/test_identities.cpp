#include "subspectra/identities.hpp"

#include "subspectra/harness.hpp"
#include "test_util.hpp"

using namespace subspectra;
using testing_util::draw;
using testing_util::random_matrix;

namespace {

const Digraph kP2(2, {{0, 1}});
const Digraph kC3(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph kTwoCycle(2, {{0, 1}, {1, 0}});

RatFunc rf(IntPoly n, IntPoly d) { return RatFunc(std::move(n), std::move(d)); }
RatFunc lambda_plus(long c) { return RatFunc(IntPoly{c, 1}); }

Digraph random_digraph(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return generate_digraph({Family::ErDigraph, static_cast<std::size_t>(draw(rng, lo, hi)), 1, 2, 1, rng()});
}

}  // namespace

TEST(CoronalAffine, ScalarExample) {
  const auto [chi, f] = coronal_affine(rf(IntPoly{1}, IntPoly{0, 1}), IntPoly{0, 1}, 1, 2, 3, 1);
  EXPECT_EQ(chi, rf(IntPoly{1}, IntPoly{-4, 1}));
  EXPECT_EQ(f, IntPoly({-4, 1}));
}

TEST(CoronalAffine, PureShiftAndNegation) {
  const IntMatrix a = matrix_of(kC3, MatrixKind::Adjacency);
  const auto [chi, f] = coronal_affine(coronal(a), charpoly(a), 3, 1, 0, 2);
  EXPECT_EQ(chi, coronal(a).compose(lambda_plus(-2)));
  // L = rI − A for the 1-out-regular C3.
  const auto [chi_l, f_l] = coronal_affine(coronal(a), charpoly(a), 3, -1, 0, 1);
  EXPECT_EQ(f_l, charpoly(matrix_of(kC3, MatrixKind::Laplacian)));
  EXPECT_EQ(chi_l, coronal(matrix_of(kC3, MatrixKind::Laplacian)));
  EXPECT_EQ(-f_l.compose(IntPoly{1, -1}), charpoly(a));
}

TEST(CoronalAffine, ZeroScaleIsRejected) {
  EXPECT_ERROR_CODE(coronal_affine(RatFunc(1), IntPoly{0, 1}, 1, 0, 1, 1), ErrorCode::ZeroScale);
}

TEST(CoronalAffine, MatchesExplicitMatrixAndInverts) {
  std::mt19937_64 rng(51);
  constexpr long kScales[] = {-2, -1, 1, 2};
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = draw(rng, 1, 5);
    const IntMatrix m = random_matrix(rng, n, n, -3, 3);
    const long a = kScales[draw(rng, 0, 3)], b = draw(rng, -3, 3), c = draw(rng, -3, 3);
    const IntMatrix explicit_m = m * a + IntMatrix::ones(n, n) * b + IntMatrix::scalar(n, c);
    const auto [chi, f] = coronal_affine(coronal(m), charpoly(m), n, a, b, c);
    EXPECT_EQ(chi, coronal_oracle(explicit_m));
    EXPECT_EQ(f, charpoly_oracle(explicit_m));
    if (a == 1 || a == -1) {
      // M = a⁻¹(M' − bJ − cI) = aM' − abJ − acI when a = ±1.
      const auto [chi_back, f_back] = coronal_affine(chi, f, n, a, -a * b, -a * c);
      EXPECT_EQ(chi_back, coronal(m));
      EXPECT_EQ(f_back, charpoly(m));
    }
  }
}

TEST(CoronalRowsum, Examples) {
  EXPECT_EQ(coronal_rowsum(3, 1), coronal(matrix_of(kC3, MatrixKind::Adjacency)));
  EXPECT_EQ(coronal_rowsum(1, 0), rf(IntPoly{1}, IntPoly{0, 1}));
  EXPECT_EQ(coronal_rowsum(2, 2), coronal_oracle(IntMatrix::ones(2, 2)));
}

TEST(CoronalBCRelation, IdentityBReducesToRowsum) {
  std::mt19937_64 rng(52);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = draw(rng, 1, 5);
    const long t = draw(rng, -3, 3);
    IntMatrix c = random_matrix(rng, n, n, -3, 3);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class rest = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) rest += c(i, j);
      c(i, n - 1) = t - rest;
    }
    EXPECT_EQ(coronal_BC_relation(n, 1, t, coronal(c)), coronal_rowsum(n, t));
  }
}

TEST(CoronalBCRelation, IncidencePairs) {
  std::mt19937_64 rng(53);
  for (int it = 0; it < 100; ++it) {
    const Digraph d = random_digraph(rng, 1, 5);
    if (d.size() == 0) continue;
    const RatFunc chi_line = coronal(matrix_of(line_digraph(d), MatrixKind::Adjacency));
    EXPECT_EQ(coronal_oracle(matrix_of(d, MatrixKind::Adjacency)), coronal_BC_relation(d.order(), 1, 1, chi_line));

    const Graph g = underlying_graph(d);
    if (g.size() == 0) continue;
    const RatFunc chi_lg = coronal(matrix_of(line_graph(g), MatrixKind::Adjacency));
    EXPECT_EQ(coronal_oracle(matrix_of(g, MatrixKind::SignlessLaplacian)),
              coronal_BC_relation(g.order(), 2, 2, chi_lg.compose(lambda_plus(-2))));
  }
}

TEST(LineDigraphRelation, Examples) {
  auto [lhs, rhs] = line_digraph_charpoly_relation(kC3);
  EXPECT_EQ(lhs, IntPoly({0, 0, 0, -1, 0, 0, 1}));
  EXPECT_EQ(rhs, lhs);
  std::tie(lhs, rhs) = line_digraph_charpoly_relation(kP2);
  EXPECT_EQ(lhs, IntPoly::monomial(3));
  EXPECT_EQ(rhs, lhs);
  std::tie(lhs, rhs) = line_digraph_charpoly_relation(kTwoCycle);
  EXPECT_EQ(lhs, IntPoly({0, 0, -1, 0, 1}));
  EXPECT_EQ(rhs, lhs);
  EXPECT_ERROR_CODE(line_digraph_charpoly_relation(Digraph(2, {})), ErrorCode::EmptyArcSet);
}

TEST(LineDigraphRelation, RandomDigraphs) {
  std::mt19937_64 rng(54);
  for (int it = 0; it < 100; ++it) {
    const Digraph d = random_digraph(rng, 1, 5);
    if (d.size() == 0) continue;
    const auto [lhs, rhs] = line_digraph_charpoly_relation(d);
    EXPECT_EQ(lhs, rhs) << describe(d);
  }
}

TEST(SubdivisionCharpoly, Examples) {
  EXPECT_EQ(charpoly_oracle(matrix_of(subdivision(kC3), MatrixKind::Adjacency)), IntPoly({-1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(subdivision_charpoly(kC3), IntPoly({-1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(subdivision_charpoly(kP2), IntPoly::monomial(3));
  const Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  const IntPoly direct = charpoly_oracle(matrix_of(subdivision_graph(triangle), MatrixKind::Adjacency));
  EXPECT_EQ(subdivision_charpoly_graph(triangle, SubdivisionRoute::Q), direct);
  EXPECT_EQ(subdivision_charpoly_graph(triangle, SubdivisionRoute::Line), direct);
  EXPECT_EQ(direct.degree(), 6);
  EXPECT_ERROR_CODE(subdivision_charpoly(Digraph(1, {})), ErrorCode::EmptyArcSet);
  EXPECT_ERROR_CODE(subdivision_charpoly_graph(Graph(2, {}), SubdivisionRoute::Q), ErrorCode::EmptyEdgeSet);
}

TEST(SubdivisionCharpoly, RandomDigraphsAndGraphs) {
  std::mt19937_64 rng(55);
  for (int it = 0; it < 100; ++it) {
    const Digraph d = random_digraph(rng, 1, 5);
    if (d.size() == 0) continue;
    EXPECT_EQ(subdivision_charpoly(d), charpoly(matrix_of(subdivision(d), MatrixKind::Adjacency)));
    const Graph g = underlying_graph(d);
    const IntPoly direct = charpoly(matrix_of(subdivision_graph(g), MatrixKind::Adjacency));
    EXPECT_EQ(subdivision_charpoly_graph(g, SubdivisionRoute::Q), direct);
    EXPECT_EQ(subdivision_charpoly_graph(g, SubdivisionRoute::Line), direct);
  }
}

TEST(RegularIdentities, Examples) {
  const auto c3 = regular_identities(kC3, 1);
  EXPECT_EQ(c3.chi, rf(IntPoly{3}, IntPoly{-1, 1}));
  EXPECT_TRUE(c3.all_hold());
  // f_L(λ) = (λ − 1)³ + 1
  EXPECT_EQ(charpoly(matrix_of(kC3, MatrixKind::Laplacian)), IntPoly({0, 3, -3, 1}));
  const auto two = regular_identities(kTwoCycle, 1);
  EXPECT_EQ(two.chi, rf(IntPoly{2}, IntPoly{-1, 1}));
  EXPECT_TRUE(two.all_hold());
  const Digraph k3(3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  const auto complete = regular_identities(k3, 2);
  EXPECT_EQ(complete.chi, rf(IntPoly{3}, IntPoly{-2, 1}));
  EXPECT_TRUE(complete.all_hold());
  EXPECT_ERROR_CODE(regular_identities(kP2, 1), ErrorCode::NotOutRegular);
  EXPECT_ERROR_CODE(regular_identities(kC3, 2), ErrorCode::NotOutRegular);
}

TEST(RegularIdentities, RandomOutRegularDigraphs) {
  std::mt19937_64 rng(56);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = draw(rng, 2, 5);
    const std::size_t r = draw(rng, 1, std::min<long>(3, n - 1));
    GenSpec g;
    g.family = Family::ROutRegular;
    g.n = n;
    g.r = r;
    g.seed = rng();
    const Digraph d = generate_digraph(g);
    const auto result = regular_identities(d, r);
    for (const auto& check : result.checks) EXPECT_TRUE(check.holds()) << check.name << " on " << describe(d);
  }
}
