#pragma once

// JSON views of the report types, with stable field order. Arbitrary
// precision integers are emitted as decimal strings; structural quantities
// (dimensions, degrees, exponents of the theorem) stay JSON numbers.

#include <nlohmann/json.hpp>

#include "hypaut/jacobian.hpp"
#include "hypaut/tables.hpp"

namespace hypaut {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Interpretation i);
const char* to_string(Verdict v);
const char* to_string(Reason r);
const char* to_string(WitnessFamily f);
const char* to_string(PrimalityCertainty c);

ordered_json to_json(const AdmissibilityVerdict& v);
ordered_json to_json(const ExtremalReport& r);
ordered_json to_json(const PrimeOrderBound& b);
ordered_json to_json(const Factorization& f);
ordered_json to_json(const GorinovBound& b);
ordered_json to_json(const GorinovConjectureReport& r);
ordered_json to_json(const Form& f);
Form form_from_json(const ordered_json& j);
ordered_json to_json(const Signature& s);
ordered_json to_json(const Witness& w);
ordered_json to_json(const SingularityType& t);
ordered_json to_json(const CMType& c);
ordered_json to_json(const PpavReport& r);
ordered_json to_json(const GradedPieceReport& r);

// Spectrum in the xi-power notation, e.g. "{xi^2, xi^6, xi^7, xi^8, xi^10}".
std::string spectrum_xi_notation(const CMType& c);

std::string cycles_to_string(const std::vector<Cycle>& cycles);

}  // namespace hypaut
