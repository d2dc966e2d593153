#ifndef NRK_IO_HPP
#define NRK_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "nrk/arakelov.hpp"
#include "nrk/number_field.hpp"
#include "nrk/relations.hpp"

namespace nrk::io {

using json = nlohmann::json;

/* integer or "p/q" string; `key` names the offending field in errors */
mpq_class parse_rational(const json& j, const std::string& key);
mpz_class parse_integer(const json& j, const std::string& key);
std::string to_string(const mpq_class& q);

/* { "poly": [c0, ..., 1], "integral_basis": [[...]], "maximal": bool } */
NumberField parse_field(const json& j);
json field_record(const NumberField& k);

/* expression in x: rationals, + - * /, ^ with integer exponents, parentheses */
FieldElement parse_expression(const NumberField& k, const std::string& text);
/* expression string, coefficient array, or { "coeffs": [...] } */
FieldElement parse_element(const NumberField& k, const json& j, const std::string& key);
json element_record(const FieldElement& a);

/* { "support": [element, ...], "multiplicities": [int, ...] } */
BlochElement parse_bloch_element(const NumberField& k, const json& j);

/* rows of rational strings or integers */
QMatrix parse_rational_matrix(const json& j, const std::string& key, size_t cols);

/* fixed significant digits, deterministic */
std::string format(const Real& x, int digits);

}  // namespace nrk::io

#endif
