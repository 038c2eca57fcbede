#include "subspectra/block.hpp"

#include "subspectra/error.hpp"

namespace subspectra {

std::string to_string(BlockShape shape) {
  switch (shape) {
    case BlockShape::General: return "M";
    case BlockShape::M1: return "M1";
    case BlockShape::M2: return "M2";
    case BlockShape::M3: return "M3";
    case BlockShape::M4: return "M4";
  }
  return "?";
}

namespace {

void expect_dims(const IntMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " must be " + std::to_string(rows) + "x" +
                                                  std::to_string(cols));
}

RatFunc lambda_minus(long c) { return RatFunc(IntPoly{-c, 1}); }

}  // namespace

void BlockSpec::validate() const {
  if (r == 0 || s == 0 || t == 0) throw Error(ErrorCode::DimensionMismatch, "r, s, t must be positive");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::DimensionMismatch, "sign must be +1 or -1");
  expect_dims(b, r, s, "B");
  expect_dims(c, s, r, "C");
  if (shape == BlockShape::General) {
    if (ell != 1 && ell != r) throw Error(ErrorCode::DimensionMismatch, "ell must be 1 or r");
    expect_dims(a, r, r, "A");
    expect_dims(d, s, s, "D");
    expect_dims(e, t, t, "E");
  } else {
    expect_dims(f, t, t, "F");
  }
}

std::size_t BlockSpec::dimension() const {
  switch (shape) {
    case BlockShape::General: return r + s + ell * t;
    case BlockShape::M1:
    case BlockShape::M2: return r + s + t;
    case BlockShape::M3: return r + s + r * t;
    case BlockShape::M4: return r + s + s * t;
  }
  return 0;
}

IntMatrix assemble_block(const BlockSpec& spec) {
  spec.validate();
  const std::size_t r = spec.r, s = spec.s, t = spec.t;
  const mpz_class sign = spec.sign;
  IntMatrix m(spec.dimension(), spec.dimension());
  m.set_block(0, r, spec.b);
  m.set_block(r, 0, spec.c);
  if (spec.shape == BlockShape::General) {
    const std::size_t ell = spec.ell;
    const IntMatrix couple = sign * kron(IntMatrix::identity(ell), IntMatrix::ones(r / ell, t));
    m.set_block(0, 0, spec.a);
    m.set_block(r, r, spec.d);
    m.set_block(0, r + s, couple);
    m.set_block(r + s, 0, couple.transpose());
    m.set_block(r + s, r + s, kron(IntMatrix::identity(ell), spec.e));
    return m;
  }
  m.set_block(0, 0, IntMatrix::scalar(r, spec.alpha));
  m.set_block(r, r, IntMatrix::scalar(s, spec.beta));
  const IntMatrix tail = IntMatrix::scalar(t, spec.gamma) + spec.f;
  switch (spec.shape) {
    case BlockShape::M1: {
      const IntMatrix j = sign * IntMatrix::ones(r, t);
      m.set_block(0, r + s, j);
      m.set_block(r + s, 0, j.transpose());
      m.set_block(r + s, r + s, tail);
      break;
    }
    case BlockShape::M2: {
      const IntMatrix j = sign * IntMatrix::ones(s, t);
      m.set_block(r, r + s, j);
      m.set_block(r + s, r, j.transpose());
      m.set_block(r + s, r + s, tail);
      break;
    }
    case BlockShape::M3: {
      const IntMatrix j = sign * kron(IntMatrix::identity(r), IntMatrix::ones(1, t));
      m.set_block(0, r + s, j);
      m.set_block(r + s, 0, j.transpose());
      m.set_block(r + s, r + s, kron(IntMatrix::identity(r), tail));
      break;
    }
    case BlockShape::M4: {
      const IntMatrix j = sign * kron(IntMatrix::identity(s), IntMatrix::ones(1, t));
      m.set_block(r, r + s, j);
      m.set_block(r + s, r, j.transpose());
      m.set_block(r + s, r + s, kron(IntMatrix::identity(s), tail));
      break;
    }
    case BlockShape::General: break;
  }
  return m;
}

namespace {

IntPoly general_charpoly(const BlockSpec& spec) {
  const std::size_t r = spec.r, s = spec.s, ell = spec.ell;
  const std::size_t n = spec.dimension();
  const IntPoly f_d = charpoly(spec.d);
  const IntPoly f_e = charpoly(spec.e);
  const RatFunc chi_e = coronal(spec.e);
  const IntMatrix k = kron(IntMatrix::identity(ell), IntMatrix::ones(r / ell, r / ell));

  std::vector<mpz_class> xs;
  std::vector<mpq_class> ys;
  for (long x = 0; xs.size() < n + 1; ++x) {
    const mpz_class xz = x;
    const mpz_class fd = f_d.eval(xz);
    const mpz_class fe = f_e.eval(xz);
    if (sgn(fd) == 0 || sgn(fe) == 0) continue;  // pole of χ_E or of (λI − D)⁻¹
    const mpq_class chi = chi_e.eval(mpq_class(xz));

    RatMatrix shifted_d(s);
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) shifted_d(i, j) = (i == j ? mpq_class(x) : mpq_class(0)) - mpq_class(spec.d(i, j));
    const RatMatrix inv = shifted_d.inverse();

    RatMatrix inner(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        mpq_class v = (i == j ? mpq_class(x) : mpq_class(0)) - mpq_class(spec.a(i, j)) - chi * mpq_class(k(i, j));
        // (B (λI − D)⁻¹ C)_{ij}
        for (std::size_t p = 0; p < s; ++p) {
          if (sgn(spec.b(i, p)) == 0) continue;
          for (std::size_t q = 0; q < s; ++q)
            v -= mpq_class(spec.b(i, p)) * inv(p, q) * mpq_class(spec.c(q, j));
        }
        inner(i, j) = v;
      }
    mpz_class fe_pow;
    mpz_pow_ui(fe_pow.get_mpz_t(), fe.get_mpz_t(), ell);
    mpq_class value = mpq_class(fd * fe_pow) * inner.det();
    value.canonicalize();
    xs.push_back(xz);
    ys.push_back(value);
  }
  return interpolate(xs, ys);
}

}  // namespace

IntPoly blockcharpoly(const BlockSpec& spec) {
  spec.validate();
  if (spec.shape == BlockShape::General) return general_charpoly(spec);

  const long r = static_cast<long>(spec.r), s = static_cast<long>(spec.s);
  const RatFunc lam_a = lambda_minus(spec.alpha);
  const RatFunc lam_b = lambda_minus(spec.beta);
  const RatFunc lam_g = lambda_minus(spec.gamma);
  const RatFunc f_f = compose_poly_ratfunc(charpoly(spec.f), lam_g);
  const RatFunc chi_f = coronal(spec.f).compose(lam_g);

  RatFunc value;
  switch (spec.shape) {
    case BlockShape::M1: {
      const IntMatrix bc = spec.b * spec.c;
      const RatFunc arg = lam_a * lam_b;
      value = lam_b.pow(s - r) * f_f * compose_poly_ratfunc(charpoly(bc), arg) *
              (RatFunc(1) - lam_b * chi_f * coronal(bc).compose(arg));
      break;
    }
    case BlockShape::M2: {
      const IntMatrix cb = spec.c * spec.b;
      const RatFunc arg = lam_a * lam_b;
      value = lam_a.pow(r - s) * f_f * compose_poly_ratfunc(charpoly(cb), arg) *
              (RatFunc(1) - lam_a * chi_f * coronal(cb).compose(arg));
      break;
    }
    case BlockShape::M3: {
      const IntMatrix bc = spec.b * spec.c;
      value = lam_b.pow(s - r) * f_f.pow(r) * compose_poly_ratfunc(charpoly(bc), lam_b * (lam_a - chi_f));
      break;
    }
    case BlockShape::M4: {
      const IntMatrix cb = spec.c * spec.b;
      value = lam_a.pow(r - s) * f_f.pow(s) * compose_poly_ratfunc(charpoly(cb), lam_a * (lam_b - chi_f));
      break;
    }
    case BlockShape::General: break;
  }
  return ratfunc_to_poly(value);
}

}  // namespace subspectra
