#ifndef GMUB_JSON_IO_HPP
#define GMUB_JSON_IO_HPP

#include <json.hpp>

#include "gmub/cyc_linalg.hpp"
#include "gmub/finite_field.hpp"
#include "gmub/gl2.hpp"
#include "gmub/gunitary.hpp"
#include "gmub/mub.hpp"
#include "gmub/polytope.hpp"

namespace gmub {

using Json = nlohmann::ordered_json;

// numerators and denominators are emitted as decimal strings: coefficient
// growth in exact eigenvector arithmetic routinely exceeds any fixed-width
// integer
Json to_json(const FieldSpec& spec);
Json to_json(const FieldElement& e);
Json to_json(const CycNumber& x);
Json to_json(const CycVector& v);
Json to_json(const CycMatrix& m);
Json to_json(const GL2Mat& g);
Json to_json(const ProjPoint& z);
Json to_json(const MUBSet& mub);
Json to_json(const WignerTable& w);
Json to_json(const EigenResult& r, mpfr_prec_t precision);

std::string decimal_string(const CycNumber& x, mpfr_prec_t precision);

}  // namespace gmub

#endif
