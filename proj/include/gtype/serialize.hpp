// Text and JSON forms for the algebra types.
//
// The expression parser builds a RationalFunction from strings like
// "(t^2+13*t+49)*(t^2+5*t+1)^3/t"; every tabulated map in the family
// database is entered this way rather than as raw coefficient arrays.
// Polynomial text output follows the "c0 + c1*x + ..." convention; JSON
// coefficient arrays carry exact "num/den" strings.

#ifndef GTYPE_SERIALIZE_HPP
#define GTYPE_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "gtype/ratfunc.hpp"

namespace gtype {

// full arithmetic expressions over one variable: + - * / ^ ( ) integers
RationalFunction parse_ratfunc(std::string_view expr, char var = 't');
// same grammar, but the result must be a polynomial
Poly parse_poly(std::string_view expr, char var = 'x');

std::string poly_to_text(const Poly& p, char var = 'x');
Poly poly_from_text(std::string_view s, char var = 'x');

nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::ordered_json ratfunc_to_json(const RationalFunction& f);

} // namespace gtype

#endif
