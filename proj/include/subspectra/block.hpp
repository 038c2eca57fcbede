#pragma once

#include <string>

#include "subspectra/matrix.hpp"

namespace subspectra {

enum class BlockShape {
  General,  // [[A, B, ±I_ℓ⊗J_{r/ℓ,t}], [C, D, O], [±I_ℓ⊗J_{t,r/ℓ}, O, I_ℓ⊗E]]
  M1,       // J-coupling on the first row block
  M2,       // J-coupling on the second row block
  M3,       // I_r⊗J coupling, r copies of γI+F
  M4,       // I_s⊗J coupling, s copies of γI+F
};

std::string to_string(BlockShape shape);

/// Parameters of the 3×3 block matrices with J/I⊗J coupling.
///
/// M1–M4 use αI_r, βI_s, γI_t + F as diagonal blocks; General uses the
/// payload matrices a (r×r), d (s×s), e (t×t) and the Kronecker width ell.
struct BlockSpec {
  BlockShape shape = BlockShape::M1;
  long alpha = 0;
  long beta = 0;
  long gamma = 0;
  std::size_t r = 1;
  std::size_t s = 1;
  std::size_t t = 1;
  std::size_t ell = 1;  // General only; 1 or r
  int sign = 1;         // ±1 on both coupling blocks
  IntMatrix b;          // r × s
  IntMatrix c;          // s × r
  IntMatrix f;          // t × t (M1–M4)
  IntMatrix a;          // r × r (General)
  IntMatrix d;          // s × s (General)
  IntMatrix e;          // t × t (General)

  /// Throws DimensionMismatch when blocks disagree with r, s, t, ℓ.
  void validate() const;
  std::size_t dimension() const;
};

/// The explicit block matrix described by `spec`.
IntMatrix assemble_block(const BlockSpec& spec);

/// Closed-form characteristic polynomial of the assembled matrix.
///
/// M1–M4 are evaluated in exact rational-function arithmetic from f/χ of
/// F and of BC (or CB). For General the whole right-hand side
/// f_D · f_E^ℓ · det(λI − A − χ_E(I_ℓ⊗J) − B(λI − D)⁻¹C) is evaluated
/// exactly at integer points avoiding the zeros of f_D and f_E, then
/// interpolated.
IntPoly blockcharpoly(const BlockSpec& spec);

}  // namespace subspectra
