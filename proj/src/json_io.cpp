#include "subspectra/json_io.hpp"

#include "subspectra/error.hpp"

namespace subspectra {

namespace {

mpz_class parse_integer(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "big integers are encoded as decimal strings");
  mpz_class z;
  if (z.set_str(j.get<std::string>(), 10) != 0)
    throw Error(ErrorCode::ParseError, "not a decimal integer: " + j.get<std::string>());
  return z;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const IntPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"coeffs", coeffs}};
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const VerificationReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json entry{{"trial", f.trial}, {"seed", f.seed}, {"d1", f.d1}, {"d2", f.d2},
               {"expected", to_json(f.expected)}, {"actual", to_json(f.actual)}};
    if (!f.error.empty()) entry["error"] = f.error;
    failures.push_back(entry);
  }
  return Json{{"theorem", report.theorem}, {"trials", report.trials}, {"skipped", report.skipped},
              {"seed", report.seed},       {"failures", failures},    {"elapsed_ms", report.elapsed_ms}};
}

IntPoly poly_from_json(const Json& j) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw Error(ErrorCode::ParseError, "'coeffs' must be an array");
  std::vector<mpz_class> out;
  for (const auto& c : coeffs) out.push_back(parse_integer(c));
  return IntPoly(std::move(out));
}

RatFunc ratfunc_from_json(const Json& j) {
  IntPoly den = poly_from_json(field(j, "den"));
  if (den.is_zero()) throw Error(ErrorCode::ParseError, "zero denominator");
  return RatFunc(poly_from_json(field(j, "num")), std::move(den));
}

IntMatrix matrix_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  const Json& cols = field(j, "cols");
  const Json& entries = field(j, "entries");
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned() || !entries.is_array())
    throw Error(ErrorCode::ParseError, "malformed matrix header");
  const auto r = rows.get<std::size_t>(), c = cols.get<std::size_t>();
  if (entries.size() != r) throw Error(ErrorCode::ParseError, "row count disagrees with 'rows'");
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!entries[i].is_array() || entries[i].size() != c)
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = parse_integer(entries[i][k]);
  }
  return m;
}

}  // namespace subspectra
