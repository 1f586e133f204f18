#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hecke/ecurve.hpp"

namespace hecke {

// Index into ClassData::group0.points (a point of X(F_q), equivalently a class in Cl^0 X).
struct PointId {
  std::uint32_t value = 0;
  auto operator<=>(const PointId&) const = default;
};

// Index into ClassData::group0p.points (a point of X'(F_{q^2})).
struct ExtPointId {
  std::uint32_t value = 0;
  auto operator<=>(const ExtPointId&) const = default;
};

struct TClass {
  ExtPointId rep;
  bool is_half = false;
  auto operator<=>(const TClass&) const = default;
};

struct SClass {
  PointId rep;
  auto operator<=>(const SClass&) const = default;
};

// omega(D) = sign_on_x0^deg(D) * omega0(D - deg(D) x0)
struct QuadChar {
  std::vector<int> values;  // omega0, indexed by PointId
  int sign_on_x0 = 1;

  int operator()(long degree, PointId P) const {
    const int s = (degree % 2 != 0) ? sign_on_x0 : 1;
    return s * values[P.value];
  }
};

struct ClassData {
  Curve curve;
  Curve curve2;
  Embedding emb;
  PointGroup group0;
  PointGroup group0p;
  GroupTable table0;
  GroupTable table0p;

  unsigned q = 0;
  std::vector<ExtPointId> embed_point;             // by PointId
  std::vector<std::int32_t> base_of;               // by ExtPointId, -1 off the image
  std::vector<ExtPointId> sigma;                   // Frobenius on X'
  std::vector<bool> is_double;                     // 2Cl^0 X membership, by PointId
  std::vector<PointId> two_torsion;                // Cl^0 X [2]
  std::vector<std::uint32_t> coset_of;             // X' point -> coset index of Q
  std::vector<ExtPointId> coset_rep;               // minimal point per coset
  std::vector<std::uint32_t> q_two_torsion;        // coset indices of Q[2]
  std::vector<TClass> tclasses;
  std::vector<std::int32_t> tclass_of_coset;       // -1 for the zero coset
  std::vector<SClass> sclasses;
  std::vector<std::uint32_t> sclass_of;            // by PointId

  unsigned h = 0, h2 = 0, hp = 0, h2p = 0, r = 0, rp = 0;
  bool h2p_equals_h2 = true;

  std::uint32_t npoints() const { return static_cast<std::uint32_t>(group0.size()); }
  std::uint32_t nextpoints() const { return static_cast<std::uint32_t>(group0p.size()); }
  const Point& point(PointId P) const { return group0.points[P.value]; }
  const Point& ext_point(ExtPointId P) const { return group0p.points[P.value]; }

  PointId add(PointId a, PointId b) const { return {table0.add(a.value, b.value)}; }
  PointId sub(PointId a, PointId b) const { return {table0.sub(a.value, b.value)}; }
  PointId neg(PointId a) const { return {table0.neg(a.value)}; }
  PointId dbl(PointId a) const { return {table0.dbl(a.value)}; }
  bool is_two_torsion(PointId a) const { return table0.dbl(a.value) == 0; }
  bool congruent_mod_doubles(PointId a, PointId b) const { return is_double[sub(a, b).value]; }

  ExtPointId ext_add(ExtPointId a, ExtPointId b) const { return {table0p.add(a.value, b.value)}; }
  ExtPointId ext_sub(ExtPointId a, ExtPointId b) const { return {table0p.sub(a.value, b.value)}; }
  ExtPointId ext_neg(ExtPointId a) const { return {table0p.neg(a.value)}; }
  bool sigma_fixed(ExtPointId a) const { return base_of[a.value] >= 0; }

  // Index into tclasses of the class of D, or nullopt if [D] = 0 in Q.
  std::optional<std::uint32_t> tclass_index(ExtPointId D) const;
};

using ClassDataPtr = std::shared_ptr<const ClassData>;

ClassDataPtr build_class_data(const Curve& curve, unsigned cap = kDefaultFieldCap);

std::vector<TClass> t_classes(const ClassData& cd);
SClass s_class_of(const ClassData& cd, const Point& y);
// P + sigma P, pulled back to X(F_q).
Point trace_to_base(const ClassData& cd, const Point& P);
PointId trace_to_base(const ClassData& cd, ExtPointId P);
// Nontrivial omega0 first by enumeration order, each with sign +1 then -1.
std::vector<QuadChar> quadratic_characters(const ClassData& cd);

}  // namespace hecke
