#include "hecke/error.hpp"
#include "hecke/report.hpp"

#include <cstdio>
#include <sstream>

namespace hecke {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotQuadraticExtension: return "NotQuadraticExtension";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::NotSigmaFixed: return "NotSigmaFixed";
    case ErrorCode::NonIntegralWeight: return "NonIntegralWeight";
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::UnsupportedVariant: return "UnsupportedVariant";
    case ErrorCode::SigmaFixedPoint: return "SigmaFixedPoint";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptySolutionSpace: return "EmptySolutionSpace";
    case ErrorCode::InconsistentSystem: return "InconsistentSystem";
    case ErrorCode::WrongOrderForCharacter: return "WrongOrderForCharacter";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void Report::add_exact(std::string name, bool ok, nlohmann::json lhs, nlohmann::json rhs) {
  entries.push_back({std::move(name), ok, std::move(lhs), std::move(rhs), 0.0});
}

void Report::add_numeric(std::string name, double value, double tol, bool want_below) {
  const bool ok = want_below ? value < tol : value > tol;
  entries.push_back({std::move(name), ok, format_double(value),
                     std::string(want_below ? "< " : "> ") + format_double(tol), tol});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto e : other.entries) {
    e.check = prefix + e.check;
    entries.push_back(std::move(e));
  }
}

bool Report::passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += !e.passed;
  return n;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["check"] = e.check;
    j["status"] = e.passed ? "pass" : "fail";
    j["lhs"] = e.lhs;
    j["rhs"] = e.rhs;
    j["tolerance"] = e.tolerance;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& e : entries)
    os << (e.passed ? "  ok   " : "  FAIL ") << e.check << "  " << e.lhs.dump() << " vs "
       << e.rhs.dump() << '\n';
  return os.str();
}

}  // namespace hecke
