#pragma once

#include "curv2k/extremum.hpp"
#include "curv2k/identities.hpp"
#include "curv2k/second_kind.hpp"

#include <string>
#include <vector>

namespace curv2k {

/// Shortest representation with up to 17 significant digits; round-trips
/// through strtod exactly.
std::string json_double(double v);

/// {"n":..,"representation":"rank4","entries":[..row-major..]}
std::string tensor_to_json(const CurvatureTensor& r);
CurvatureTensor tensor_from_json(const std::string& text);

/// {"n":..,"N":..,"eigenvalues":[..],"mean":..,"trace_check":bool}
std::string spectrum_to_json(int n, const Spectrum& sp, bool trace_check);
struct SpectrumDocument {
  int n = 0;
  int N = 0;
  Spectrum sp;
  bool trace_check = false;
};
SpectrumDocument spectrum_from_json(const std::string& text);

std::string report_to_json_line(const IdentityReport& rep);
std::string reports_to_table(const std::vector<IdentityReport>& reps);
std::string reports_to_csv(const std::vector<IdentityReport>& reps);

std::string spectrum_to_table(int n, const Spectrum& sp, bool trace_check);
std::string spectrum_to_csv(int n, const Spectrum& sp, bool trace_check);

std::string extremum_report_to_json(const ExtremumReport& rep);
std::string extremum_report_to_table(const ExtremumReport& rep);

std::string sharpness_to_json(const SharpnessWitness& w);
std::string sharpness_to_table(const SharpnessWitness& w);

}  // namespace curv2k
