#pragma once

#include "kmlab/hermlattice.hpp"
#include "kmlab/ikeda.hpp"
#include "kmlab/numfield.hpp"
#include "kmlab/polygauss.hpp"
#include "kmlab/wedge.hpp"
#include "kmlab/weil.hpp"

#include "json.hpp"

#include <string>

namespace kmlab {

// Exact round-trippable encodings: rationals as "p/q" strings, field elements
// as 4-tuples over {1, i, sqrt2, i sqrt2}, coefficients as (pi-power, value)
// pairs.
std::string rational_str(const Rational& q);
Rational parse_rational(const nlohmann::json& j);  // int, "p/q", or "a.bc"

nlohmann::json to_json(const FieldElem& x);
nlohmann::json to_json(const Coefficient& c);
nlohmann::json to_json(const PolyGaussian& f);
nlohmann::json to_json(const KMForm& form);
nlohmann::json to_json(const IkedaReport& rep);  // the zero-certificate report

// {"min_poly": [c0, ..., 1]} (monic, degree 1 or 2 with real roots).
NumberFieldBasis field_from_json(const nlohmann::json& j);

// {"disc": d < 0, "rank": r, "gram": [[[a, b], ...], ...]} with entry a + b w.
HermitianLattice lattice_from_json(const nlohmann::json& j);

// [{"b": [coords], "i": int, "vol": rational-or-decimal, "mult": int}]
VolumeTable volume_table_from_json(const nlohmann::json& j);

// One row per distinct b: coordinates, |coefficient|, arg(coefficient) of the
// assembled q-expansion term (sum of vol * mult) e_*(b tau).
std::string qexpansion_csv(const NumberFieldBasis& F, const VolumeTable& table,
                           const std::vector<std::complex<double>>& tau);

}  // namespace kmlab
