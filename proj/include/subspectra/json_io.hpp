#pragma once

#include <json.hpp>

#include "subspectra/harness.hpp"

namespace subspectra {

using Json = nlohmann::ordered_json;

/// {"coeffs": ["c0", "c1", …]}, decimal strings, ascending degree.
Json to_json(const IntPoly& p);
/// {"num": {...}, "den": {...}} in canonical form.
Json to_json(const RatFunc& f);
/// {"rows": r, "cols": c, "entries": [["…"]]}.
Json to_json(const IntMatrix& m);
Json to_json(const Value& v);
Json to_json(const VerificationReport& report);

/// Inverses of the encodings above; throw ParseError on malformed input.
IntPoly poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

}  // namespace subspectra
