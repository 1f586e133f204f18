#include "hecke/ecurve.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

FieldElem long_weierstrass_discriminant(const Field& F, const std::array<FieldElem, 5>& a) {
  auto k = [&](long n) { return F.from_int(n); };
  auto m = [&](FieldElem u, FieldElem v) { return F.mul(u, v); };
  auto s = [&](FieldElem u, FieldElem v) { return F.add(u, v); };
  const auto [a1, a2, a3, a4, a6] = a;
  const FieldElem b2 = s(m(a1, a1), m(k(4), a2));
  const FieldElem b4 = s(m(k(2), a4), m(a1, a3));
  const FieldElem b6 = s(m(a3, a3), m(k(4), a6));
  FieldElem b8 = s(m(m(a1, a1), a6), m(k(4), m(a2, a6)));
  b8 = F.sub(b8, m(a1, m(a3, a4)));
  b8 = s(b8, m(a2, m(a3, a3)));
  b8 = F.sub(b8, m(a4, a4));
  FieldElem d = F.neg(m(m(b2, b2), b8));
  d = F.sub(d, m(k(8), m(b4, m(b4, b4))));
  d = F.sub(d, m(k(27), m(b6, b6)));
  d = s(d, m(k(9), m(b2, m(b4, b6))));
  return d;
}

Curve Curve::make(const Field& f, const std::array<FieldElem, 5>& a) {
  for (auto c : a)
    if (!f.contains(c)) throw Error(ErrorCode::FieldMismatch, "coefficient outside field");
  if (long_weierstrass_discriminant(f, a) == f.zero())
    throw Error(ErrorCode::SingularCurve, "discriminant vanishes");
  return Curve(f, a);
}

FieldElem Curve::discriminant() const { return long_weierstrass_discriminant(field_, a_); }

bool Curve::on_curve(const Point& P) const {
  if (P.infinity) return true;
  const Field& F = field_;
  if (!F.contains(P.x) || !F.contains(P.y)) return false;
  const FieldElem x = P.x, y = P.y;
  const FieldElem lhs = F.add(F.mul(y, y), F.add(F.mul(a1(), F.mul(x, y)), F.mul(a3(), y)));
  FieldElem rhs = F.mul(x, F.mul(x, x));
  rhs = F.add(rhs, F.mul(a2(), F.mul(x, x)));
  rhs = F.add(rhs, F.mul(a4(), x));
  rhs = F.add(rhs, a6());
  return lhs == rhs;
}

void Curve::require(const Point& P) const {
  if (!on_curve(P)) throw Error(ErrorCode::PointNotOnCurve, "point not on curve");
}

Point Curve::negate(const Point& P) const {
  require(P);
  if (P.infinity) return P;
  const Field& F = field_;
  return Point::affine(P.x, F.sub(F.neg(P.y), F.add(F.mul(a1(), P.x), a3())));
}

Point Curve::add(const Point& P, const Point& Q) const {
  require(P);
  require(Q);
  return add_unchecked(P, Q);
}

Point Curve::add_unchecked(const Point& P, const Point& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  const Field& F = field_;
  FieldElem lambda;
  if (P.x == Q.x) {
    // Q = -P or a vertical tangent
    const FieldElem den = F.add(F.add(F.mul(F.from_int(2), P.y), F.mul(a1(), P.x)), a3());
    if (P.y != Q.y || den == F.zero()) return Point::at_infinity();
    FieldElem num = F.mul(F.from_int(3), F.mul(P.x, P.x));
    num = F.add(num, F.mul(F.from_int(2), F.mul(a2(), P.x)));
    num = F.add(num, a4());
    num = F.sub(num, F.mul(a1(), P.y));
    lambda = F.div(num, den);
  } else {
    lambda = F.div(F.sub(Q.y, P.y), F.sub(Q.x, P.x));
  }
  const FieldElem nu = F.sub(P.y, F.mul(lambda, P.x));
  FieldElem x3 = F.add(F.mul(lambda, lambda), F.mul(a1(), lambda));
  x3 = F.sub(F.sub(F.sub(x3, a2()), P.x), Q.x);
  FieldElem y3 = F.neg(F.mul(F.add(lambda, a1()), x3));
  y3 = F.sub(F.sub(y3, nu), a3());
  return Point::affine(x3, y3);
}

Point Curve::multiply(long n, const Point& P) const {
  require(P);
  Point base = n < 0 ? negate(P) : P;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Point r = Point::at_infinity();
  for (; e; e >>= 1, base = add_unchecked(base, base))
    if (e & 1) r = add_unchecked(r, base);
  return r;
}

std::uint32_t PointGroup::index_of(const Point& P) const {
  auto it = std::lower_bound(points.begin(), points.end(), P);
  if (it == points.end() || !(*it == P)) throw Error(ErrorCode::PointNotOnCurve, "point not in group");
  return static_cast<std::uint32_t>(it - points.begin());
}

PointGroup enumerate_points(const Curve& c) {
  PointGroup pg;
  pg.points.push_back(Point::at_infinity());
  const auto els = c.field().elements();
  for (FieldElem x : els)
    for (FieldElem y : els)
      if (c.on_curve(Point::affine(x, y))) pg.points.push_back(Point::affine(x, y));
  return pg;
}

GroupTable::GroupTable(const PointGroup& pg, const Curve& c)
    : n_(static_cast<std::uint32_t>(pg.size())) {
  add_.resize(std::size_t(n_) * n_);
  neg_.resize(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    neg_[i] = pg.index_of(c.negate(pg.points[i]));
    for (std::uint32_t j = i; j < n_; ++j) {
      const std::uint32_t s = pg.index_of(c.add(pg.points[i], pg.points[j]));
      add_[std::size_t(i) * n_ + j] = s;
      add_[std::size_t(j) * n_ + i] = s;
    }
  }
}

std::uint32_t GroupTable::multiply(long n, std::uint32_t a) const {
  std::uint32_t base = n < 0 ? neg(a) : a;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  std::uint32_t r = 0;
  for (; e; e >>= 1, base = add(base, base))
    if (e & 1) r = add(r, base);
  return r;
}

std::uint32_t GroupTable::order_of(std::uint32_t a) const {
  std::uint32_t k = 1;
  for (std::uint32_t cur = a; cur != 0; cur = add(cur, a)) ++k;
  return k;
}

PointGroup group_structure(PointGroup pg, const Curve& c) {
  const GroupTable T(pg, c);
  const std::uint32_t N = T.size();
  std::vector<std::uint32_t> ord(N);
  for (std::uint32_t i = 0; i < N; ++i) ord[i] = T.order_of(i);

  // The exponent is attained by some element; the first such in canonical order is P.
  const std::uint32_t n2 = *std::max_element(ord.begin(), ord.end());
  const std::uint32_t n1 = N / n2;
  std::uint32_t P = 0;
  while (ord[P] != n2) ++P;

  std::vector<bool> inP(N, false);
  for (std::uint32_t k = 0, cur = 0; k < n2; ++k, cur = T.add(cur, P)) inP[cur] = true;

  pg.n1 = n1;
  pg.n2 = n2;
  pg.generators = {pg.points[P]};
  if (n1 > 1) {
    // Complement: first point of order n1 meeting <P> trivially.
    for (std::uint32_t Q = 1; Q < N; ++Q) {
      if (ord[Q] != n1) continue;
      bool trivial = true;
      for (std::uint32_t k = 1, cur = Q; k < n1; ++k, cur = T.add(cur, Q))
        if (inP[cur]) trivial = false;
      if (trivial) {
        pg.generators.push_back(pg.points[Q]);
        break;
      }
    }
    if (pg.generators.size() != 2)
      throw Error(ErrorCode::InvariantViolation, "no complement generator found");
  }
  return pg;
}

Curve base_change(const Curve& c, const Embedding& emb) {
  if (!(emb.src == c.field())) throw Error(ErrorCode::FieldMismatch, "embedding source differs from curve field");
  std::array<FieldElem, 5> a{};
  for (std::size_t i = 0; i < 5; ++i) a[i] = emb(c.coeffs()[i]);
  return Curve::make(emb.dst, a);
}

}  // namespace hecke
