#pragma once

#include "cusp/cyclotomic.hpp"
#include "cusp/polynomial.hpp"
#include "json.hpp"

namespace cusp {

using Json = nlohmann::ordered_json;
using CycRationalFunction = RationalFunction<CycNumber>;

/// {"N": int, "coeffs": ["a/b", ...]}
Json to_json(const CycNumber& x);
CycNumber cyc_from_json(const Json& j);

/// {"N": int, "num": [[deg, [coeffs...]], ...], "den": [...]}; the monomial
/// shift is folded into the numerator degrees.
Json to_json(const CycRationalFunction& f);
CycRationalFunction rational_function_from_json(const Json& j);

/// Human-readable "(...)/(...)" with X as the variable.
std::string to_string(const CycRationalFunction& f);

}  // namespace cusp
