#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hecke/ecurve.hpp"
#include "json.hpp"

namespace hecke {

// Coefficients a1,a2,a3,a4,a6, each a coefficient vector over F_p (constant term first).
struct CurveSpec {
  std::string name;
  unsigned p = 0, k = 1;
  std::array<std::vector<unsigned>, 5> coeffs;
};

const std::vector<CurveSpec>& builtin_corpus();
std::optional<CurveSpec> find_named(const std::vector<CurveSpec>& corpus, const std::string& name);

Curve make_curve(const CurveSpec& spec, unsigned cap = kDefaultFieldCap);
CurveSpec spec_of(const Curve& c, const std::string& name = "");

nlohmann::ordered_json spec_to_json(const CurveSpec& s);
CurveSpec spec_from_json(const nlohmann::json& j);
std::string corpus_to_jsonl(const std::vector<CurveSpec>& corpus);
std::vector<CurveSpec> corpus_from_jsonl(const std::string& text);

// Parses "[a1,a2,a3,a4,a6]" / "a1,a2,a3,a4,a6" or the short form "[a4,a6]"; an entry is
// an integer (constant) or a coefficient list.
std::array<std::vector<unsigned>, 5> parse_coeffs(const std::string& text, unsigned p);

}  // namespace hecke
