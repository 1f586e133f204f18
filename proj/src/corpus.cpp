#include "hecke/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

const std::vector<CurveSpec>& builtin_corpus() {
  static const std::vector<CurveSpec> corpus = {
      {"X2", 2, 1, {{{0}, {0}, {1}, {1}, {1}}}},       // y^2 + y = x^3 + x + 1
      {"X3", 3, 1, {{{0}, {0}, {0}, {2}, {2}}}},       // y^2 = x^3 + 2x + 2
      {"X4", 2, 2, {{{0}, {0}, {1}, {0}, {0, 1}}}},    // y^2 + y = x^3 + t over F_4
      {"X5", 3, 1, {{{0}, {0}, {0}, {1}, {2}}}},       // y^2 = x^3 + x + 2
      {"X6", 3, 1, {{{0}, {0}, {0}, {2}, {0}}}},       // y^2 = x^3 + 2x
      {"E23", 2, 1, {{{0}, {0}, {1}, {0}, {0}}}},      // y^2 + y = x^3
  };
  return corpus;
}

std::optional<CurveSpec> find_named(const std::vector<CurveSpec>& corpus, const std::string& name) {
  for (const auto& s : corpus)
    if (s.name == name) return s;
  return std::nullopt;
}

Curve make_curve(const CurveSpec& spec, unsigned cap) {
  const Field F = Field::make(spec.p, spec.k, cap);
  std::array<FieldElem, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<unsigned> c = spec.coeffs[i];
    for (auto& v : c) v %= spec.p;
    a[i] = F.from_coeffs(c);
  }
  return Curve::make(F, a);
}

CurveSpec spec_of(const Curve& c, const std::string& name) {
  const Field& F = c.field();
  CurveSpec s{name, F.characteristic(), F.degree(), {}};
  for (std::size_t i = 0; i < 5; ++i) {
    auto v = F.coeffs(c.coeffs()[i]);
    while (v.size() > 1 && v.back() == 0) v.pop_back();
    s.coeffs[i] = v;
  }
  return s;
}

nlohmann::ordered_json spec_to_json(const CurveSpec& s) {
  nlohmann::ordered_json j;
  j["name"] = s.name;
  j["p"] = s.p;
  j["k"] = s.k;
  auto& c = j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& v : s.coeffs) c.push_back(v);
  return j;
}

namespace {

std::vector<unsigned> coeff_entry(const nlohmann::json& e, unsigned p) {
  auto red = [p](long long v) { return static_cast<unsigned>(((v % p) + p) % p); };
  if (e.is_number_integer()) return {red(e.get<long long>())};
  if (e.is_array()) {
    std::vector<unsigned> v;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw std::invalid_argument("coefficient entries must be integers");
      v.push_back(red(x.get<long long>()));
    }
    if (v.empty()) v.push_back(0);
    return v;
  }
  throw std::invalid_argument("coefficient must be an integer or a list of integers");
}

std::array<std::vector<unsigned>, 5> coeffs_from_json(const nlohmann::json& arr, unsigned p) {
  if (!arr.is_array() || (arr.size() != 5 && arr.size() != 2))
    throw std::invalid_argument("expected 5 long-Weierstrass coefficients or 2 short-form ones");
  std::array<std::vector<unsigned>, 5> c{{{0}, {0}, {0}, {0}, {0}}};
  if (arr.size() == 2) {
    c[3] = coeff_entry(arr[0], p);
    c[4] = coeff_entry(arr[1], p);
  } else {
    for (std::size_t i = 0; i < 5; ++i) c[i] = coeff_entry(arr[i], p);
  }
  return c;
}

}  // namespace

CurveSpec spec_from_json(const nlohmann::json& j) {
  CurveSpec s;
  s.name = j.value("name", "");
  s.p = j.at("p").get<unsigned>();
  s.k = j.value("k", 1u);
  if (s.p < 2) throw std::invalid_argument("p must be at least 2");
  s.coeffs = coeffs_from_json(j.at("coeffs"), s.p);
  return s;
}

std::string corpus_to_jsonl(const std::vector<CurveSpec>& corpus) {
  std::string out;
  for (const auto& s : corpus) out += spec_to_json(s).dump() + "\n";
  return out;
}

std::vector<CurveSpec> corpus_from_jsonl(const std::string& text) {
  std::vector<CurveSpec> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(spec_from_json(nlohmann::json::parse(line)));
  }
  return out;
}

std::array<std::vector<unsigned>, 5> parse_coeffs(const std::string& text, unsigned p) {
  std::string t = text;
  if (t.find('[') != 0) t = "[" + t + "]";
  return coeffs_from_json(nlohmann::json::parse(t), p);
}

}  // namespace hecke
