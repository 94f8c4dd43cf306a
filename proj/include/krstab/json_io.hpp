#pragma once

#include "json.hpp"

#include "krstab/straighten.hpp"

namespace krstab {

using Json = nlohmann::json;

// Serialization. Term order in polynomial JSON is diagonal-descending for
// reproducible golden files.
Json to_json(const Minor& m);        // {"rows":[...],"cols":[...]}
Json to_json(const Shape& s);        // [s1,...]
Json to_json(const Bitableau& b);    // {"factors":[...]}
Json to_json(const TwoRowArray& a);  // {"u":[...],"v":[...]}
Json to_json(const Monomial& m);     // {"cells":[[i,j,e],...]}
Json to_json(const Multidegree& v);  // {"rows":[...],"cols":[...]}
Json to_json(const Polynomial& p);   // {"terms":[{"mono":...,"coef":"p/q"},...]}
Json to_json(const StandardRep& r);  // {"terms":[{"bitableau":...,"coef":"p/q"},...]}

// Parsing; all validation errors surface as invalid_input (or the specific
// domain error, e.g. not_canonical_error from the TwoRowArray constructor).
Minor minor_from_json(const Json& j);
Shape shape_from_json(const Json& j);
Bitableau bitableau_from_json(const Json& j);
TwoRowArray array_from_json(const Json& j);
Monomial monomial_from_json(const Json& j);
Multidegree multidegree_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);

} // namespace krstab
