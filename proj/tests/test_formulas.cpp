#include "subspectra/formulas.hpp"

#include "subspectra/harness.hpp"
#include "test_util.hpp"

using namespace subspectra;
using testing_util::draw;
using testing_util::draw_n;

namespace {

const Digraph kP2(2, {{0, 1}});
const Digraph kK1(1, {});
const Digraph kC3(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph kTwoCycle(2, {{0, 1}, {1, 0}});

constexpr ProductKind kKinds[] = {ProductKind::SvJoin, ProductKind::SaJoin, ProductKind::SvCorona,
                                  ProductKind::SaCorona};

IntPoly direct(ProductKind kind, MatrixKind mk, const Digraph& d1, const Digraph& d2) {
  return charpoly(matrix_of(build_product(kind, d1, d2), mk));
}

Digraph random_regular(std::mt19937_64& rng, std::size_t& r) {
  GenSpec g;
  g.family = Family::ROutRegular;
  g.n = draw_n(rng, 2, 5);
  g.r = draw_n(rng, 1, std::min<long>(3, static_cast<long>(g.n) - 1));
  g.seed = rng();
  r = g.r;
  return generate_digraph(g);
}

}  // namespace

TEST(ClosedForm, OracleConfirmedSmallProducts) {
  const IntPoly svj{-1, 0, -2, 0, 1};
  const IntPoly saj{0, 0, -1, 0, 1};
  const IntPoly svc{0, 1, 0, -2, 0, 1};
  EXPECT_EQ(charpoly_oracle(matrix_of(build_product(ProductKind::SvJoin, kP2, kK1), MatrixKind::Adjacency)), svj);
  EXPECT_EQ(charpoly_oracle(matrix_of(build_product(ProductKind::SaJoin, kP2, kK1), MatrixKind::Adjacency)), saj);
  EXPECT_EQ(charpoly_oracle(matrix_of(build_product(ProductKind::SvCorona, kP2, kK1), MatrixKind::Adjacency)), svc);
  EXPECT_EQ(closed_form_charpoly(ProductKind::SvJoin, MatrixKind::Adjacency, kP2, kK1), svj);
  EXPECT_EQ(closed_form_charpoly(ProductKind::SaJoin, MatrixKind::Adjacency, kP2, kK1), saj);
  EXPECT_EQ(closed_form_charpoly(ProductKind::SvCorona, MatrixKind::Adjacency, kP2, kK1), svc);
  EXPECT_EQ(closed_form_charpoly(ProductKind::SaCorona, MatrixKind::Adjacency, kP2, kK1), saj);
}

TEST(ClosedForm, CycleJoinedWithSingleVertex) {
  // Bipartite 7-vertex product: only odd powers survive.
  const IntPoly want{0, -4, 0, -3, 0, -3, 0, 1};
  EXPECT_EQ(charpoly_oracle(matrix_of(build_product(ProductKind::SvJoin, kC3, kK1), MatrixKind::Adjacency)), want);
  EXPECT_EQ(closed_form_charpoly(ProductKind::SvJoin, MatrixKind::Adjacency, kC3, kK1), want);
  EXPECT_EQ(regular_corollary_charpoly(ProductKind::SvJoin, 3, 1, 1, 0, IntPoly{-1, 0, 0, 1}, IntPoly{0, 1}), want);
  const IntPoly arc_join = charpoly_oracle(matrix_of(build_product(ProductKind::SaJoin, kC3, kK1),
                                                     MatrixKind::Adjacency));
  EXPECT_EQ(regular_corollary_charpoly(ProductKind::SaJoin, 3, 1, 1, 0, IntPoly{-1, 0, 0, 1}, IntPoly{0, 1}),
            arc_join);
}

TEST(ClosedForm, RegularShortcutOnTwoCycle) {
  EXPECT_EQ(regular_corollary_charpoly(ProductKind::SvJoin, 2, 1, 1, 0, IntPoly{-1, 0, 1}, IntPoly{0, 1}),
            closed_form_charpoly(ProductKind::SvJoin, MatrixKind::Adjacency, kTwoCycle, kK1));
}

TEST(ClosedForm, Errors) {
  EXPECT_ERROR_CODE(closed_form_charpoly(ProductKind::SvJoin, MatrixKind::Laplacian, kP2, kK1),
                    ErrorCode::NotOutRegular);
  EXPECT_ERROR_CODE(closed_form_charpoly(ProductKind::SvJoin, MatrixKind::Adjacency, Digraph(2, {}), kK1),
                    ErrorCode::EmptyArcSet);
  EXPECT_ERROR_CODE(closed_form_charpoly(ProductKind::SvJoin, MatrixKind::OutDegree, kC3, kK1),
                    ErrorCode::UnsupportedMatrixKind);
  const Graph k2(2, {{0, 1}});
  EXPECT_ERROR_CODE(closed_form_charpoly(ProductKind::SvJoin, MatrixKind::SignlessLaplacian, k2, k2),
                    ErrorCode::UnsupportedMatrixKind);
  EXPECT_ERROR_CODE(regular_corollary_charpoly(ProductKind::SvCorona, 3, 1, 1, 0, IntPoly{-1, 0, 0, 1}, IntPoly{0, 1}),
                    ErrorCode::InvalidParams);
  EXPECT_ERROR_CODE(regular_corollary_charpoly(ProductKind::SvJoin, 2, 1, 1, 0, IntPoly{-1, 0, 0, 1}, IntPoly{0, 1}),
                    ErrorCode::DimensionMismatch);
}

TEST(ClosedForm, AdjacencyAgreesWithConstructionOnRandomPairs) {
  std::mt19937_64 rng(61);
  for (int it = 0; it < 60; ++it) {
    const Digraph d1 = generate_digraph({Family::ErDigraph, draw_n(rng, 2, 5), 1, 2, 1, rng()});
    const Digraph d2 = generate_digraph({Family::ErDigraph, draw_n(rng, 1, 4), 1, 2, 1, rng()});
    if (d1.size() == 0) continue;
    for (ProductKind kind : kKinds) {
      const IntPoly f = closed_form_charpoly(kind, MatrixKind::Adjacency, d1, d2);
      EXPECT_EQ(f, direct(kind, MatrixKind::Adjacency, d1, d2)) << to_string(kind) << ' ' << describe(d1);
      EXPECT_EQ(f.degree(), static_cast<int>(product_order(kind, d1.order(), d1.size(), d2.order())));
    }
  }
}

TEST(ClosedForm, LaplacianAndSignlessAgreeForOutRegularFirstFactor) {
  std::mt19937_64 rng(62);
  for (int it = 0; it < 40; ++it) {
    std::size_t r = 0;
    const Digraph d1 = random_regular(rng, r);
    const Digraph d2 = generate_digraph({Family::ErDigraph, draw_n(rng, 1, 4), 1, 2, 1, rng()});
    for (ProductKind kind : kKinds) {
      const IntPoly l = closed_form_charpoly(kind, MatrixKind::Laplacian, d1, d2);
      EXPECT_EQ(l, direct(kind, MatrixKind::Laplacian, d1, d2)) << to_string(kind) << ' ' << describe(d1);
      EXPECT_EQ(l.coeff(0), 0) << "Laplacian row sums vanish";
      EXPECT_EQ(closed_form_charpoly(kind, MatrixKind::SignlessLaplacian, d1, d2),
                direct(kind, MatrixKind::SignlessLaplacian, d1, d2))
          << to_string(kind) << ' ' << describe(d1);
    }
  }
}

TEST(ClosedForm, LaplacianOfSecondFactorHasRowsumCoronal) {
  std::mt19937_64 rng(63);
  for (int it = 0; it < 30; ++it) {
    const Digraph d = generate_digraph({Family::ErDigraph, draw_n(rng, 1, 5), 1, 2, 1, rng()});
    EXPECT_EQ(coronal(matrix_of(d, MatrixKind::Laplacian)), RatFunc(IntPoly{static_cast<long>(d.order())}, IntPoly{0, 1}));
  }
}

TEST(ClosedForm, GraphProductsAgreeWithConstruction) {
  std::mt19937_64 rng(64);
  for (int it = 0; it < 60; ++it) {
    const Graph g1 = generate_graph({Family::ErGraph, draw_n(rng, 2, 5), 1, 2, 1, rng()});
    const Graph g2 = generate_graph({Family::ErGraph, draw_n(rng, 1, 4), 1, 2, 1, rng()});
    if (g1.size() == 0) continue;
    for (ProductKind kind : kKinds)
      EXPECT_EQ(closed_form_charpoly(kind, MatrixKind::Adjacency, g1, g2),
                charpoly(matrix_of(build_product(kind, g1, g2), MatrixKind::Adjacency)))
          << to_string(kind) << ' ' << describe(g1) << " / " << describe(g2);
  }
}

TEST(ClosedForm, RegularShortcutsAgreeWithGeneralFormulas) {
  std::mt19937_64 rng(65);
  for (int it = 0; it < 40; ++it) {
    std::size_t r = 0, s = 0;
    const Digraph d1 = random_regular(rng, r);
    const Digraph d2 = random_regular(rng, s);
    const IntPoly f1 = charpoly(matrix_of(d1, MatrixKind::Adjacency));
    const IntPoly f2 = charpoly(matrix_of(d2, MatrixKind::Adjacency));
    for (ProductKind kind : {ProductKind::SvJoin, ProductKind::SaJoin})
      EXPECT_EQ(regular_corollary_charpoly(kind, d1.order(), r, d2.order(), s, f1, f2),
                closed_form_charpoly(kind, MatrixKind::Adjacency, d1, d2));
  }
}
