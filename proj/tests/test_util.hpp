#pragma once

#include <gtest/gtest.h>

#include <random>

#include "subspectra/error.hpp"
#include "subspectra/matrix.hpp"

// Asserts that `stmt` throws subspectra::Error carrying `expected_code`.
#define EXPECT_ERROR_CODE(stmt, expected_code)              \
  EXPECT_THROW(                                             \
      {                                                     \
        try {                                               \
          stmt;                                             \
        } catch (const subspectra::Error& e_) {             \
          EXPECT_EQ(e_.code(), expected_code) << e_.what(); \
          throw;                                            \
        }                                                   \
      },                                                    \
      subspectra::Error)

namespace testing_util {

inline long draw(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline std::size_t draw_n(std::mt19937_64& rng, long lo, long hi) { return static_cast<std::size_t>(draw(rng, lo, hi)); }

inline subspectra::IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                                           long hi) {
  subspectra::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = draw(rng, lo, hi);
  return m;
}

inline subspectra::IntPoly random_poly(std::mt19937_64& rng, int degree, long lo, long hi) {
  std::vector<mpz_class> c;
  for (int k = 0; k <= degree; ++k) c.emplace_back(draw(rng, lo, hi));
  return subspectra::IntPoly(std::move(c));
}

}  // namespace testing_util
