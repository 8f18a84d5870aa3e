#pragma once

// JSON forms of the library's values. Coefficients travel as decimal
// strings so that no precision is lost.

#include <json.hpp>

#include "kch/braid.hpp"
#include "kch/ideal.hpp"
#include "kch/ngalg.hpp"
#include "kch/poly.hpp"
#include "kch/ratfunc.hpp"

namespace kch {

using Json = nlohmann::json;

/// {"vars": [...], "invertible": [...]}
Json table_to_json(const VarTablePtr& t);
VarTablePtr table_from_json(const Json& j);

/// {"vars": [...], "invertible": [...], "terms": [{"exp": [...], "num": "...", "den": "..."}]}
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);
/// Reads terms onto an existing table; the "vars" entry, if present, must match it.
LaurentPoly poly_from_json(const Json& j, const VarTablePtr& table);

/// {"num": poly, "den": poly}
Json to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

/// {"ring": {"vars", "invertible", "eliminate": [names]}, "generators": [poly...]}
Json to_json(const IdealGens& g);
IdealGens ideal_from_json(const Json& j);

/// Ideal form plus "labels", "braid" {"strands", "letters"} and "components".
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

/// Strand numbers are 1-based, as in braid words.
Json to_json(const ClosureInfo& c);

}  // namespace kch
