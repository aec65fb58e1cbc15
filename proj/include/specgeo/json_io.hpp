#pragma once

#include "specgeo/certificates.hpp"
#include "specgeo/character.hpp"
#include "specgeo/covers.hpp"
#include "specgeo/forms.hpp"
#include "specgeo/poly.hpp"

#include "json.hpp"

namespace specgeo {

using Json = nlohmann::ordered_json;

// Big integers and rationals serialize as decimal strings throughout, so
// consumers never face integer-width ambiguity.

Json poly_to_json(const IntegerPolynomial& p);  // coefficients ascending
IntegerPolynomial poly_from_json(const Json& j);

Json group_to_json(const GroupPtr& g);      // encodings in hex, hashes included
Json subgroup_to_json(const Subgroup& h);   // member indices plus hash

Json character_table_to_json(const CharacterTable& t);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);  // evidence round-trip

Json spectrum_to_json(const TraceSpectrum& s);  // trace string -> multiplicity

Json cocompactness_to_json(const CocompactnessVerdict& v);

// FNV-1a over the compact dump; used for report file names.
uint64_t json_content_hash(const Json& j);
std::string hash_hex(uint64_t h);

}  // namespace specgeo
