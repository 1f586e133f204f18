#include "hecke/picard.hpp"

#include <algorithm>

namespace hecke {

std::optional<std::uint32_t> ClassData::tclass_index(ExtPointId D) const {
  const std::int32_t t = tclass_of_coset[coset_of[D.value]];
  if (t < 0) return std::nullopt;
  return static_cast<std::uint32_t>(t);
}

ClassDataPtr build_class_data(const Curve& curve, unsigned cap) {
  const Field& F = curve.field();
  const Field F2 = Field::make(F.characteristic(), 2 * F.degree(), cap);
  Embedding emb = embed_subfield(F, F2);
  Curve curve2 = base_change(curve, emb);

  PointGroup g0 = group_structure(enumerate_points(curve), curve);
  PointGroup g0p = group_structure(enumerate_points(curve2), curve2);
  GroupTable t0(g0, curve);
  GroupTable t0p(g0p, curve2);

  auto cd = std::make_shared<ClassData>(ClassData{.curve = std::move(curve),
                                                  .curve2 = std::move(curve2),
                                                  .emb = std::move(emb),
                                                  .group0 = std::move(g0),
                                                  .group0p = std::move(g0p),
                                                  .table0 = std::move(t0),
                                                  .table0p = std::move(t0p)});
  ClassData& c = *cd;
  c.q = F.order();
  const std::uint32_t n = c.npoints(), np = c.nextpoints();

  c.embed_point.resize(n);
  c.base_of.assign(np, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const Point& P = c.group0.points[i];
    const Point img = P.infinity ? P : Point::affine(c.emb(P.x), c.emb(P.y));
    const std::uint32_t j = c.group0p.index_of(img);
    c.embed_point[i] = {j};
    c.base_of[j] = static_cast<std::int32_t>(i);
  }

  c.sigma.resize(np);
  for (std::uint32_t j = 0; j < np; ++j) {
    const Point& P = c.group0p.points[j];
    const Point s = P.infinity ? P
                               : Point::affine(frobenius_map(F2, P.x, F), frobenius_map(F2, P.y, F));
    c.sigma[j] = {c.group0p.index_of(s)};
    if ((c.sigma[j].value == j) != (c.base_of[j] >= 0))
      throw Error(ErrorCode::NotSigmaFixed, "Frobenius-fixed points differ from embedded points");
  }

  c.is_double.assign(n, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    c.is_double[c.table0.dbl(i)] = true;
    if (c.table0.dbl(i) == 0) c.two_torsion.push_back({i});
  }

  // Q = Cl^0 X' / image; cosets listed in order of their minimal point.
  c.coset_of.assign(np, UINT32_MAX);
  for (std::uint32_t j = 0; j < np; ++j) {
    if (c.coset_of[j] != UINT32_MAX) continue;
    const std::uint32_t idx = static_cast<std::uint32_t>(c.coset_rep.size());
    c.coset_rep.push_back({j});
    for (std::uint32_t i = 0; i < n; ++i) c.coset_of[c.table0p.add(j, c.embed_point[i].value)] = idx;
  }
  const std::uint32_t ncos = static_cast<std::uint32_t>(c.coset_rep.size());
  for (std::uint32_t k = 0; k < ncos; ++k)
    if (c.base_of[c.table0p.dbl(c.coset_rep[k].value)] >= 0) c.q_two_torsion.push_back(k);

  c.h = n;
  c.h2 = static_cast<unsigned>(c.two_torsion.size());
  c.hp = ncos;
  c.h2p = static_cast<unsigned>(c.q_two_torsion.size());
  if ((c.h + c.h2) % 2 || (c.hp + c.h2p) % 2)
    throw Error(ErrorCode::InvariantViolation, "r or r' not integral");
  c.r = (c.h + c.h2) / 2 - 1;
  c.rp = (c.hp + c.h2p) / 2 - 1;
  c.h2p_equals_h2 = c.h2p == c.h2;
  if (c.hp != 2 * (c.q + 1) - c.h)
    throw Error(ErrorCode::InvariantViolation, "h' != 2(q+1) - h");
  if (std::size_t(c.h) * c.hp != np) throw Error(ErrorCode::InvariantViolation, "h h' != #X'");

  // +- classes of nonzero cosets
  c.tclass_of_coset.assign(ncos, -1);
  for (std::uint32_t k = 1; k < ncos; ++k) {
    if (c.tclass_of_coset[k] >= 0) continue;
    const std::uint32_t kneg = c.coset_of[c.table0p.neg(c.coset_rep[k].value)];
    const ExtPointId rep = std::min(c.coset_rep[k], c.coset_rep[kneg]);
    const bool half = c.base_of[c.table0p.dbl(rep.value)] >= 0;
    const auto t = static_cast<std::int32_t>(c.tclasses.size());
    c.tclasses.push_back({rep, half});
    c.tclass_of_coset[k] = c.tclass_of_coset[kneg] = t;
  }
  if (c.tclasses.size() != c.rp) throw Error(ErrorCode::InvariantViolation, "#TClass != r'");

  c.sclass_of.assign(n, UINT32_MAX);
  for (std::uint32_t y = 0; y < n; ++y) {
    if (c.sclass_of[y] != UINT32_MAX) continue;
    const auto idx = static_cast<std::uint32_t>(c.sclasses.size());
    c.sclasses.push_back({{y}});
    for (std::uint32_t z = y; z < n; ++z)
      if (c.is_double[c.table0.sub(z, y)]) c.sclass_of[z] = idx;
  }
  if (c.sclasses.size() != c.h2) throw Error(ErrorCode::InvariantViolation, "#SClass != h2");
  return cd;
}

std::vector<TClass> t_classes(const ClassData& cd) { return cd.tclasses; }

SClass s_class_of(const ClassData& cd, const Point& y) {
  if (!cd.curve.on_curve(y)) throw Error(ErrorCode::PointNotOnCurve, "point not on curve");
  return cd.sclasses[cd.sclass_of[cd.group0.index_of(y)]];
}

PointId trace_to_base(const ClassData& cd, ExtPointId P) {
  const ExtPointId t = cd.ext_add(P, cd.sigma[P.value]);
  if (cd.base_of[t.value] < 0) throw Error(ErrorCode::NotSigmaFixed, "trace is not Frobenius-fixed");
  return {static_cast<std::uint32_t>(cd.base_of[t.value])};
}

Point trace_to_base(const ClassData& cd, const Point& P) {
  if (!cd.curve2.on_curve(P)) throw Error(ErrorCode::PointNotOnCurve, "point not on X'");
  return cd.point(trace_to_base(cd, ExtPointId{cd.group0p.index_of(P)}));
}

std::vector<QuadChar> quadratic_characters(const ClassData& cd) {
  // A homomorphism to {+-1} is fixed by its values on the generators; a value -1
  // is allowed only on a generator of even order.
  const auto& gens = cd.group0.generators;
  std::vector<std::uint32_t> gid, gord;
  for (const auto& g : gens) {
    gid.push_back(cd.group0.index_of(g));
    gord.push_back(cd.table0.order_of(gid.back()));
  }
  const std::uint32_t n = cd.npoints();

  // Coordinates of every point in terms of the generators.
  std::vector<std::array<std::uint32_t, 2>> coord(n, {0, 0});
  {
    const std::uint32_t o0 = gord.empty() ? 1 : gord[0];
    const std::uint32_t o1 = gord.size() > 1 ? gord[1] : 1;
    for (std::uint32_t a = 0; a < o0; ++a)
      for (std::uint32_t b = 0; b < o1; ++b) {
        std::uint32_t pt = 0;
        if (!gid.empty()) pt = cd.table0.multiply(a, gid[0]);
        if (gid.size() > 1) pt = cd.table0.add(pt, cd.table0.multiply(b, gid[1]));
        coord[pt] = {a, b};
      }
  }

  std::vector<QuadChar> out;
  const unsigned ng = static_cast<unsigned>(gid.size());
  for (unsigned mask = 1; mask < (1u << ng); ++mask) {
    bool ok = true;
    for (unsigned i = 0; i < ng; ++i)
      if ((mask >> i & 1) && gord[i] % 2) ok = false;
    if (!ok) continue;
    std::vector<int> vals(n);
    for (std::uint32_t P = 0; P < n; ++P) {
      unsigned e = 0;
      for (unsigned i = 0; i < ng; ++i)
        if (mask >> i & 1) e += coord[P][i];
      vals[P] = e % 2 ? -1 : 1;
    }
    out.push_back({vals, 1});
    out.push_back({vals, -1});
  }
  if (out.size() != 2 * cd.h2 - 2)
    throw Error(ErrorCode::InvariantViolation, "quadratic character count != 2h2-2");
  return out;
}

}  // namespace hecke
