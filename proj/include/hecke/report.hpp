#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hecke {

struct CheckEntry {
  std::string check;
  bool passed = false;
  nlohmann::json lhs;
  nlohmann::json rhs;
  double tolerance = 0.0;  // 0 for exact checks
};

struct Report {
  std::vector<CheckEntry> entries;

  void add_exact(std::string name, bool ok, nlohmann::json lhs, nlohmann::json rhs);
  // Passes when value < tol (want_below) or value > tol.
  void add_numeric(std::string name, double value, double tol, bool want_below = true);
  void merge(const Report& other, const std::string& prefix);
  bool passed() const;
  std::size_t failures() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// Fixed-width scientific rendering so reports are byte-stable.
std::string format_double(double v);

}  // namespace hecke
