#pragma once

#include <json.hpp>

#include <string>

#include "hforge/equivalence.hpp"

namespace hforge {

using json = nlohmann::json;

// Matrix files: one matrix per file.
//   exact: {"n":7,"backend":"exact","d":3,"entries":[[{"x":"-1/1","y":"0/1"},...],...]}
//   float: {"n":4,"backend":"float","entries":[[{"re":1.0,"im":0.0},...],...]}
json chm_to_json(const Chm& h);
Chm chm_from_json(const json& j);

// 0/1 and +-1/0 square matrices: {"order":n,"rows":[[...],...]}
json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const json& j);

// {"n":7,"spectra":[{"d":2,"pairs":[{"value_sq":"0/1","mult":54},...]},...]}
// float spectra carry {"value":..,"mult":..} pairs instead.
json fingerprint_to_json(const Fingerprint& f);

json haagerup_to_json(const HaagerupSet& s);

// {"d":8,"seed":1,"count":100000,"histogram":{"0":...,"128":...}}
json census_to_json(const CensusResult& c);

json certificate_to_json(const InequivalenceCertificate& c);
json compare_to_json(const CompareOutcome& o);
json certify_to_json(const CertifyOutcome& o);

json scalar_to_json(const QuadExt& z);
QuadExt scalar_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace hforge
