#pragma once

#include <json.hpp>

#include "stirsys/csys.hpp"
#include "stirsys/identities.hpp"
#include "stirsys/multipoly.hpp"
#include "stirsys/quotient.hpp"
#include "stirsys/unipoly.hpp"

namespace stirsys {

using Json = nlohmann::ordered_json;

// MultiPoly <-> JSON array of [i, j, k, coeff] records ([i, j, k, m, coeff]
// when the term involves t), descending exponent-lex order, coefficients as
// decimal strings.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);
Json poly_to_json(const RatPoly& p);

Json pointset_to_json(const PointSet& R);
PointSet pointset_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& b);
Json cmatrix_to_json(const CMatrix& m);
Json reduction_to_json(const ReductionResult& r);
Json report_to_json(const IdentityReport& r);

}  // namespace stirsys
