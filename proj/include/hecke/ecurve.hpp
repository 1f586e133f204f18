#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "hecke/ffield.hpp"

namespace hecke {

// Infinity sorts before every affine point; affine points by (x, y).
struct Point {
  bool infinity = true;
  FieldElem x{}, y{};

  static Point at_infinity() { return {}; }
  static Point affine(FieldElem x, FieldElem y) { return {false, x, y}; }

  bool operator==(const Point& o) const {
    return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
  }
  std::strong_ordering operator<=>(const Point& o) const {
    if (infinity || o.infinity) return o.infinity <=> infinity;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
  }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
class Curve {
 public:
  static Curve make(const Field& f, const std::array<FieldElem, 5>& a);

  const Field& field() const { return field_; }
  const std::array<FieldElem, 5>& coeffs() const { return a_; }
  FieldElem a1() const { return a_[0]; }
  FieldElem a2() const { return a_[1]; }
  FieldElem a3() const { return a_[2]; }
  FieldElem a4() const { return a_[3]; }
  FieldElem a6() const { return a_[4]; }

  FieldElem discriminant() const;
  bool on_curve(const Point& P) const;
  Point negate(const Point& P) const;
  Point add(const Point& P, const Point& Q) const;
  Point multiply(long n, const Point& P) const;

 private:
  Curve(Field f, std::array<FieldElem, 5> a) : field_(std::move(f)), a_(a) {}
  FieldElem disc_unchecked() const;
  void require(const Point& P) const;
  Point add_unchecked(const Point& P, const Point& Q) const;
  Field field_;
  std::array<FieldElem, 5> a_;
};

FieldElem long_weierstrass_discriminant(const Field& f, const std::array<FieldElem, 5>& a);

struct PointGroup {
  std::vector<Point> points;  // canonical order
  std::uint32_t n1 = 0, n2 = 0;
  std::vector<Point> generators;

  std::size_t size() const { return points.size(); }
  // Position in the canonical order; PointNotOnCurve if absent.
  std::uint32_t index_of(const Point& P) const;
};

PointGroup enumerate_points(const Curve& c);
PointGroup group_structure(PointGroup pg, const Curve& c);

// Addition on point indices, precomputed for a finished PointGroup.
class GroupTable {
 public:
  GroupTable() = default;
  GroupTable(const PointGroup& pg, const Curve& c);

  std::uint32_t size() const { return n_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[std::size_t(a) * n_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t dbl(std::uint32_t a) const { return add(a, a); }
  std::uint32_t multiply(long n, std::uint32_t a) const;
  std::uint32_t order_of(std::uint32_t a) const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> add_, neg_;
};

Curve base_change(const Curve& c, const Embedding& emb);

}  // namespace hecke
