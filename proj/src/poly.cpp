#include "subspectra/poly.hpp"

#include <algorithm>
#include <utility>

#include "subspectra/error.hpp"

namespace subspectra {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(unsigned degree, const mpz_class& c) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear_factor(const mpz_class& root) {
  return IntPoly(std::vector<mpz_class>{-root, 1});
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

mpz_class IntPoly::leading() const { return coeffs_.empty() ? mpz_class(0) : coeffs_.back(); }

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPoly out = *this;
  if (g != 1)
    for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return out;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += mpq_class(*it);
  }
  acc.canonicalize();
  return acc;
}

IntPoly IntPoly::pow(unsigned exponent) const {
  IntPoly result = IntPoly{1};
  IntPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPoly IntPoly::compose(const IntPoly& q) const {
  IntPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += IntPoly::constant(*it);
  }
  return acc;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& k) {
  if (sgn(k) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= k;
  return *this;
}

std::string IntPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::optional<IntPoly> divide_exact(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZeroFunction, "polynomial division by zero");
  if (p.is_zero()) return IntPoly{};
  if (p.degree() < q.degree()) return std::nullopt;
  std::vector<mpz_class> rem = p.coeffs();
  const auto& qc = q.coeffs();
  const int dq = q.degree();
  const mpz_class& lq = qc.back();
  std::vector<mpz_class> quot(static_cast<std::size_t>(p.degree() - dq + 1));
  mpz_class t;
  for (int k = p.degree(); k >= dq; --k) {
    const mpz_class& r = rem[static_cast<std::size_t>(k)];
    if (sgn(r) == 0) continue;
    if (!mpz_divisible_p(r.get_mpz_t(), lq.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), r.get_mpz_t(), lq.get_mpz_t());
    const int shift = k - dq;
    for (int j = 0; j <= dq; ++j)
      mpz_submul(rem[static_cast<std::size_t>(shift + j)].get_mpz_t(), t.get_mpz_t(),
                 qc[static_cast<std::size_t>(j)].get_mpz_t());
    quot[static_cast<std::size_t>(shift)] = t;
  }
  for (int k = 0; k < dq; ++k)
    if (sgn(rem[static_cast<std::size_t>(k)]) != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

namespace {

mpz_class max_norm(const IntPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p.coeffs())
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

// Primitive polynomial remainder sequence; inputs primitive and nonzero.
IntPoly gcd_prs(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntPoly{1};
    std::vector<mpz_class> r = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const mpz_class lb = bc.back();
    int dr = a.degree();
    while (dr >= db) {
      const mpz_class lr = r[static_cast<std::size_t>(dr)];
      const int shift = dr - db;
      for (auto& c : r) c *= lb;
      for (int j = 0; j <= db; ++j)
        mpz_submul(r[static_cast<std::size_t>(shift + j)].get_mpz_t(), lr.get_mpz_t(),
                   bc[static_cast<std::size_t>(j)].get_mpz_t());
      r.pop_back();
      --dr;
      while (dr >= 0 && sgn(r[static_cast<std::size_t>(dr)]) == 0) {
        r.pop_back();
        --dr;
      }
      if (dr >= db) {
        // keep coefficient growth in check
        IntPoly tmp(std::move(r));
        tmp = tmp.primitive_part();
        r = tmp.coeffs();
        dr = tmp.degree();
      }
    }
    a = std::move(b);
    b = IntPoly(std::move(r)).primitive_part();
  }
  return a.primitive_part();
}

// Heuristic gcd by evaluation at a large integer and balanced base-ξ
// reconstruction. Returns nullopt when the candidate fails to divide.
std::optional<IntPoly> gcd_heuristic(const IntPoly& f, const IntPoly& g) {
  mpz_class bound = std::min(max_norm(f), max_norm(g));
  mpz_class xi = 2 * bound + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class h;
    mpz_class fv = f.eval(xi);
    mpz_class gv = g.eval(xi);
    mpz_gcd(h.get_mpz_t(), fv.get_mpz_t(), gv.get_mpz_t());
    std::vector<mpz_class> cand;
    mpz_class half = xi / 2;
    while (sgn(h) != 0) {
      mpz_class c;
      mpz_fdiv_r(c.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
      if (c > half) c -= xi;
      cand.push_back(c);
      h -= c;
      mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), xi.get_mpz_t());
    }
    IntPoly candidate = IntPoly(std::move(cand)).primitive_part();
    if (!candidate.is_zero() && divide_exact(f, candidate) && divide_exact(g, candidate))
      return candidate;
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  if (p.is_zero()) return q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.degree() == 0 || b.degree() == 0) return IntPoly{1};
  if (a == b) return a;
  if (auto h = gcd_heuristic(a, b)) return *h;
  return gcd_prs(std::move(a), std::move(b));
}

IntPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpq_class>& ys) {
  const std::size_t n = xs.size();
  if (n == 0 || ys.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "interpolation needs matching nonempty point sets");
  // Newton divided differences
  std::vector<mpq_class> dd = ys;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - level]);
      dd[i].canonicalize();
    }
  // Horner expansion of the Newton form with rational coefficients
  std::vector<mpq_class> acc{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    std::vector<mpq_class> next(acc.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] -= acc[j] * mpq_class(xs[k]);
    }
    next[0] += dd[k];
    acc = std::move(next);
  }
  std::vector<mpz_class> out(acc.size());
  for (std::size_t j = 0; j < acc.size(); ++j) {
    acc[j].canonicalize();
    if (acc[j].get_den() != 1)
      throw Error(ErrorCode::InternalInconsistency, "interpolant has a non-integer coefficient");
    out[j] = acc[j].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace subspectra
