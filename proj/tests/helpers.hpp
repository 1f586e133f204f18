#pragma once

#include <map>
#include <string>

#include "hecke/corpus.hpp"
#include "hecke/picard.hpp"

namespace testutil {

inline hecke::Curve named_curve(const std::string& name) {
  return hecke::make_curve(*hecke::find_named(hecke::builtin_corpus(), name));
}

// Class data is expensive enough to share across test cases.
inline hecke::ClassDataPtr named(const std::string& name) {
  static std::map<std::string, hecke::ClassDataPtr> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto cd = hecke::build_class_data(named_curve(name));
  cache.emplace(name, cd);
  return cd;
}

inline hecke::Curve curve_from(unsigned p, unsigned k, std::array<unsigned, 5> packed) {
  const auto F = hecke::Field::make(p, k);
  std::array<hecke::FieldElem, 5> a;
  for (int i = 0; i < 5; ++i) a[i] = hecke::FieldElem{packed[i]};
  return hecke::Curve::make(F, a);
}

}  // namespace testutil
