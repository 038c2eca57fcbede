#include "subspectra/matrix.hpp"

#include "test_util.hpp"

using namespace subspectra;
using testing_util::draw;
using testing_util::random_matrix;

namespace {

const IntMatrix kP2{{0, 1}, {0, 0}};
const IntMatrix kTwoCycle{{0, 1}, {1, 0}};
const IntMatrix kC3{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};

RatFunc rf(IntPoly n, IntPoly d) { return RatFunc(std::move(n), std::move(d)); }

}  // namespace

TEST(IntMatrix, BasicsAndKron) {
  EXPECT_EQ(IntMatrix::identity(2) * kP2, kP2);
  EXPECT_EQ(kP2.transpose(), IntMatrix({{0, 0}, {1, 0}}));
  EXPECT_EQ(kron(IntMatrix::identity(2), IntMatrix::ones(1, 2)), IntMatrix({{1, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_EQ(kC3.trace(), 0);
  EXPECT_ERROR_CODE(kP2 * IntMatrix::ones(3, 1), ErrorCode::DimensionMismatch);
  EXPECT_ERROR_CODE(IntMatrix({{1, 2}, {3}}), ErrorCode::DimensionMismatch);
}

TEST(Bareiss, SmallDeterminants) {
  EXPECT_EQ(bareiss_det(IntMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(bareiss_det(IntMatrix{{0, 1}, {1, 0}}), -1);  // needs a pivot swap
  EXPECT_EQ(bareiss_det(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_ERROR_CODE(bareiss_det(IntMatrix::ones(2, 3)), ErrorCode::NotSquare);
}

TEST(Charpoly, OracleConfirmedFixtures) {
  // Each fixture is first checked against the independent oracle.
  EXPECT_EQ(charpoly_oracle(kP2), IntPoly({0, 0, 1}));
  EXPECT_EQ(charpoly_oracle(kTwoCycle), IntPoly({-1, 0, 1}));
  EXPECT_EQ(charpoly_oracle(kC3), IntPoly({-1, 0, 0, 1}));
  EXPECT_EQ(charpoly(kP2), IntPoly({0, 0, 1}));
  EXPECT_EQ(charpoly(kTwoCycle), IntPoly({-1, 0, 1}));
  EXPECT_EQ(charpoly(kC3), IntPoly({-1, 0, 0, 1}));
}

TEST(Charpoly, Errors) {
  EXPECT_ERROR_CODE(charpoly(IntMatrix::ones(2, 3)), ErrorCode::NotSquare);
  EXPECT_ERROR_CODE(charpoly_oracle(IntMatrix::identity(11)), ErrorCode::TooLarge);
  EXPECT_ERROR_CODE(coronal_oracle(IntMatrix::identity(7)), ErrorCode::TooLarge);
}

TEST(Charpoly, MatchesOracleOnRandomMatrices) {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = draw(rng, 1, 8);
    const IntMatrix m = random_matrix(rng, n, n, -5, 5);
    const IntPoly f = charpoly(m);
    EXPECT_EQ(f, charpoly_oracle(m));
    EXPECT_EQ(f.degree(), static_cast<int>(n));
    EXPECT_EQ(f.leading(), 1);
  }
}

TEST(Coronal, OracleConfirmedFixtures) {
  EXPECT_EQ(coronal_oracle(IntMatrix::zeros(1, 1)), rf(IntPoly{1}, IntPoly{0, 1}));
  EXPECT_EQ(coronal_oracle(kP2), rf(IntPoly{1, 2}, IntPoly{0, 0, 1}));
  EXPECT_EQ(coronal_oracle(kTwoCycle), rf(IntPoly{2}, IntPoly{-1, 1}));
  EXPECT_EQ(coronal(IntMatrix::zeros(1, 1)), rf(IntPoly{1}, IntPoly{0, 1}));
  EXPECT_EQ(coronal(kP2), rf(IntPoly{1, 2}, IntPoly{0, 0, 1}));
  EXPECT_EQ(coronal(kC3), rf(IntPoly{3}, IntPoly{-1, 1}));
}

TEST(Coronal, MatchesOracleOnRandomMatrices) {
  std::mt19937_64 rng(4);
  for (int it = 0; it < 120; ++it) {
    const std::size_t n = draw(rng, 1, 6);
    const IntMatrix m = random_matrix(rng, n, n, -5, 5);
    EXPECT_EQ(coronal(m), coronal_oracle(m));
  }
}

TEST(Coronal, DeterminantLemmaAsRatFuncIdentity) {
  // det(λI − M + αJ) / det(λI − M) = 1 + α·χ_M(λ)
  std::mt19937_64 rng(6);
  for (int it = 0; it < 100; ++it) {
    const std::size_t n = draw(rng, 1, 6);
    const IntMatrix m = random_matrix(rng, n, n, -3, 3);
    const long alpha = draw(rng, -3, 3);
    const RatFunc lhs(charpoly(m - IntMatrix::ones(n, n) * alpha), charpoly(m));
    EXPECT_EQ(lhs, RatFunc(1) + RatFunc(alpha) * coronal_oracle(m));
  }
}

TEST(RatMatrix, InverseAndDeterminant) {
  const RatMatrix a(IntMatrix{{2, 1}, {7, 4}});
  const RatMatrix inv = a.inverse();
  EXPECT_EQ(inv(0, 0), 4);
  EXPECT_EQ(inv(0, 1), -1);
  EXPECT_EQ(inv(1, 0), -7);
  EXPECT_EQ(inv(1, 1), 2);
  EXPECT_EQ(a.det(), 1);
  EXPECT_ERROR_CODE(RatMatrix(IntMatrix{{1, 2}, {2, 4}}).inverse(), ErrorCode::DivisionByZeroFunction);
}

TEST(RatMatrix, SchurComplementDeterminant) {
  // det [[M1, M2], [M3, λI − D]] = det(λI − D) · det(M1 − M2 (λI − D)⁻¹ M3)
  std::mt19937_64 rng(12);
  for (int it = 0; it < 60; ++it) {
    const std::size_t p = draw(rng, 1, 3), q = draw(rng, 1, 3);
    const IntMatrix m1 = random_matrix(rng, p, p, -3, 3);
    const IntMatrix m2 = random_matrix(rng, p, q, -3, 3);
    const IntMatrix m3 = random_matrix(rng, q, p, -3, 3);
    const IntMatrix d = random_matrix(rng, q, q, -3, 3);
    const IntPoly fd = charpoly(d);
    long lambda = 0;
    while (sgn(fd.eval(mpz_class(lambda))) == 0) ++lambda;
    const IntMatrix m4 = IntMatrix::scalar(q, lambda) - d;

    IntMatrix whole(p + q, p + q);
    whole.set_block(0, 0, m1);
    whole.set_block(0, p, m2);
    whole.set_block(p, 0, m3);
    whole.set_block(p, p, m4);

    const RatMatrix inv4 = RatMatrix(m4).inverse();
    RatMatrix schur(p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        mpq_class v = m1(i, j);
        for (std::size_t a = 0; a < q; ++a)
          for (std::size_t b = 0; b < q; ++b) v -= mpq_class(m2(i, a)) * inv4(a, b) * mpq_class(m3(b, j));
        schur(i, j) = v;
      }
    EXPECT_EQ(mpq_class(bareiss_det(whole)), mpq_class(bareiss_det(m4)) * schur.det());
  }
}
