#include "curv2k/serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace curv2k {

std::string json_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // %.17g may emit "inf"/"nan"; the schemas here never contain them, but be
  // strict anyway so malformed output cannot silently parse as a string.
  std::string s(buf);
  if (s.find_first_of("in") != std::string::npos && s.find_first_of("0123456789") == std::string::npos)
    throw std::invalid_argument("json_double: non-finite value");
  return s;
}

namespace {

std::string json_doubles(const std::vector<double>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += json_double(vs[i]);
  }
  return out + "]";
}

std::string table_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string tensor_to_json(const CurvatureTensor& r) {
  std::string out = "{\"n\":" + std::to_string(r.dim()) + ",\"representation\":\"rank4\",\"entries\":";
  out += json_doubles(r.tensor().entries());
  return out + "}";
}

CurvatureTensor tensor_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  const int n = doc.at("n").get<int>();
  if (doc.at("representation").get<std::string>() != "rank4")
    throw std::invalid_argument("tensor_from_json: unsupported representation");
  const auto entries = doc.at("entries").get<std::vector<double>>();
  Tensor4 t(n);
  if (entries.size() != t.entries().size())
    throw std::invalid_argument("tensor_from_json: entry count != n^4");
  t.entries() = entries;
  return CurvatureTensor::from_tensor(std::move(t));
}

std::string spectrum_to_json(int n, const Spectrum& sp, bool trace_check) {
  std::string out = "{\"n\":" + std::to_string(n);
  out += ",\"N\":" + std::to_string(sp.eigenvalues.size());
  out += ",\"eigenvalues\":" + json_doubles(sp.eigenvalues);
  out += ",\"mean\":" + json_double(sp.mean);
  out += std::string(",\"trace_check\":") + (trace_check ? "true" : "false");
  return out + "}";
}

SpectrumDocument spectrum_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  SpectrumDocument out;
  out.n = doc.at("n").get<int>();
  out.N = doc.at("N").get<int>();
  out.sp.eigenvalues = doc.at("eigenvalues").get<std::vector<double>>();
  out.sp.mean = doc.at("mean").get<double>();
  out.trace_check = doc.at("trace_check").get<bool>();
  return out;
}

std::string report_to_json_line(const IdentityReport& rep) {
  std::string out = "{\"name\":\"" + rep.name + "\"";
  out += std::string(",\"applicable\":") + (rep.applicable ? "true" : "false");
  out += ",\"lhs\":" + json_double(rep.lhs);
  out += ",\"rhs\":" + json_double(rep.rhs);
  out += ",\"abs_err\":" + json_double(rep.abs_err);
  out += ",\"rel_err\":" + json_double(rep.rel_err);
  out += std::string(",\"pass\":") + (rep.pass ? "true" : "false");
  out += ",\"tolerance\":" + json_double(rep.tolerance);
  if (!rep.note.empty()) out += ",\"note\":\"" + rep.note + "\"";
  return out + "}";
}

std::string reports_to_table(const std::vector<IdentityReport>& reps) {
  std::ostringstream os;
  os << "identity             status  lhs            rhs            rel_err     \n";
  for (const auto& rep : reps) {
    char line[160];
    const char* status = !rep.applicable ? "n/a " : (rep.pass ? "pass" : "FAIL");
    std::snprintf(line, sizeof line, "%-20s %-7s %-14s %-14s %-12s\n", rep.name.c_str(), status,
                  table_double(rep.lhs).c_str(), table_double(rep.rhs).c_str(),
                  table_double(rep.rel_err).c_str());
    os << line;
  }
  return os.str();
}

std::string reports_to_csv(const std::vector<IdentityReport>& reps) {
  std::string out = "name,applicable,lhs,rhs,abs_err,rel_err,pass,tolerance\n";
  for (const auto& rep : reps) {
    out += rep.name + "," + (rep.applicable ? "true" : "false") + "," + json_double(rep.lhs) +
           "," + json_double(rep.rhs) + "," + json_double(rep.abs_err) + "," +
           json_double(rep.rel_err) + "," + (rep.pass ? "true" : "false") + "," +
           json_double(rep.tolerance) + "\n";
  }
  return out;
}

std::string spectrum_to_table(int n, const Spectrum& sp, bool trace_check) {
  std::ostringstream os;
  os << "n = " << n << ", N = " << sp.eigenvalues.size() << "\n";
  os << "eigenvalues:";
  for (double v : sp.eigenvalues) os << " " << table_double(v);
  os << "\nmean = " << table_double(sp.mean);
  os << "\ntrace_check = " << (trace_check ? "true" : "false") << "\n";
  return os.str();
}

std::string spectrum_to_csv(int n, const Spectrum& sp, bool trace_check) {
  std::string out = "n,N,index,eigenvalue,mean,trace_check\n";
  for (std::size_t j = 0; j < sp.eigenvalues.size(); ++j) {
    out += std::to_string(n) + "," + std::to_string(sp.eigenvalues.size()) + "," +
           std::to_string(j + 1) + "," + json_double(sp.eigenvalues[j]) + "," +
           json_double(sp.mean) + "," + (trace_check ? "true" : "false") + "\n";
  }
  return out;
}

namespace {

std::string json_rational(const Rational& r) { return "\"" + to_fraction_string(r) + "\""; }

const char* conclusion_name(ExtremumReport::Conclusion c) {
  return c == ExtremumReport::Conclusion::nonneg_min_attained ? "nonneg_min_attained"
                                                              : "counterexample_found";
}

}  // namespace

std::string extremum_report_to_json(const ExtremumReport& rep) {
  std::string out = "{\"n\":" + std::to_string(rep.n);
  out += ",\"theta\":" + json_rational(rep.theta_used);
  out += ",\"theta_float\":" + json_double(rep.theta_f);
  out += ",\"seed\":" + std::to_string(rep.seed);
  out += ",\"budget\":" + std::to_string(rep.budget);
  out += ",\"candidate_values\":[";
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) {
    const auto& cp = rep.candidates[i];
    if (i) out += ",";
    out += "{\"m\":" + std::to_string(cp.m) + ",\"f\":" + json_rational(cp.f_value) +
           ",\"f_float\":" + json_double(to_double(cp.f_value)) + "}";
  }
  out += "],\"oracle_min\":" + json_double(rep.oracle_min);
  out += ",\"oracle_argmin\":" + json_doubles(rep.oracle_argmin);
  out += std::string(",\"conclusion\":\"") + conclusion_name(rep.conclusion) + "\"";
  out += ",\"equality_cases\":[";
  for (std::size_t i = 0; i < rep.equality_cases.size(); ++i) {
    if (i) out += ",";
    out += "\"" + rep.equality_cases[i] + "\"";
  }
  return out + "]}";
}

std::string extremum_report_to_table(const ExtremumReport& rep) {
  std::ostringstream os;
  os << "n = " << rep.n << ", theta = " << to_fraction_string(rep.theta_used) << " ("
     << table_double(rep.theta_f) << "), budget = " << rep.budget << ", seed = " << rep.seed
     << "\n";
  os << "candidate f(lambda^m):\n";
  for (const auto& cp : rep.candidates)
    os << "  m = " << cp.m << ":  " << to_fraction_string(cp.f_value) << "  ("
       << table_double(to_double(cp.f_value)) << ")\n";
  os << "oracle_min = " << table_double(rep.oracle_min) << "\n";
  os << "oracle_argmin (lambda):";
  for (double v : rep.oracle_argmin) os << " " << table_double(v);
  os << "\nconclusion = " << conclusion_name(rep.conclusion) << "\n";
  if (!rep.equality_cases.empty()) {
    os << "equality cases:";
    for (const auto& s : rep.equality_cases) os << " [" << s << "]";
    os << "\n";
  }
  return os.str();
}

std::string sharpness_to_json(const SharpnessWitness& w) {
  std::string out = "{\"n\":" + std::to_string(w.n);
  out += ",\"theta\":" + json_rational(w.theta);
  out += ",\"theta_float\":" + json_double(to_double(w.theta));
  out += ",\"lambda\":[";
  for (std::size_t i = 0; i < w.lambda.size(); ++i) {
    if (i) out += ",";
    out += json_rational(w.lambda[i]);
  }
  out += "],\"f\":" + json_rational(w.f_value);
  out += ",\"f_float\":" + json_double(to_double(w.f_value));
  out += std::string(",\"negative\":") + (w.negative ? "true" : "false");
  return out + "}";
}

std::string sharpness_to_table(const SharpnessWitness& w) {
  std::ostringstream os;
  os << "n = " << w.n << ", theta = " << to_fraction_string(w.theta) << " ("
     << table_double(to_double(w.theta)) << ")\n";
  os << "lambda^1 = (" << to_fraction_string(w.lambda.front()) << ", "
     << to_fraction_string(w.lambda.back()) << " x" << (w.lambda.size() - 1) << ")\n";
  os << "f(lambda^1) = " << to_fraction_string(w.f_value) << " ("
     << table_double(to_double(w.f_value)) << ")\n";
  os << "witness = " << (w.negative ? "yes (f < 0)" : "no (f >= 0)") << "\n";
  return os.str();
}

}  // namespace curv2k
