#include <cmath>

#include "hecke/spectra.hpp"

namespace hecke {

cplx CharacterSpec::value_at(const ClassData& cd, PointId x) const {
  const double w = omega ? (*omega)(1, x) : 1.0;
  return w * std::exp(-s * std::log(static_cast<double>(cd.q)));
}

bool CharacterSpec::squares_to_one(const ClassData& cd, double tol) const {
  return std::abs(std::exp(-2.0 * s * std::log(static_cast<double>(cd.q))) - 1.0) < tol;
}

HeckeMatrix hecke_matrix(const HeckeGraph& g) {
  HeckeMatrix H;
  H.cols = g.vertices;
  for (const Vertex& v : g.vertices)
    if (g.interior(v)) H.rows.push_back(v);
  H.entries.assign(H.rows.size(), std::vector<std::uint64_t>(H.cols.size(), 0));
  for (std::size_t i = 0; i < H.rows.size(); ++i)
    for (const auto& e : g.edges.at(H.rows[i])) {
      const auto j = std::lower_bound(H.cols.begin(), H.cols.end(), e.target) - H.cols.begin();
      H.entries[i][static_cast<std::size_t>(j)] = e.m;
    }
  return H;
}

std::vector<Vertex> nucleus_zero_domain(const ClassData& cd) {
  std::vector<Vertex> dom;
  for (std::uint32_t i = 0; i < cd.tclasses.size(); ++i) dom.push_back(Tr{i});
  for (std::uint32_t i = 0; i < cd.sclasses.size(); ++i) dom.push_back(Si{i});
  dom.push_back(S0{});
  for (std::uint32_t i = 0; i < cd.npoints(); ++i) {
    const Vertex v = make_dec(cd, 0, {i});
    if (std::get<Dec>(v).point.value == i) dom.push_back(v);
  }
  return dom;
}

CuspSpace cusp_space(const ClassData& cd) {
  const std::vector<Vertex> dom = nucleus_zero_domain(cd);
  auto col = [&](const Vertex& v) -> std::ptrdiff_t {
    auto it = std::lower_bound(dom.begin(), dom.end(), v);
    return (it != dom.end() && *it == v) ? it - dom.begin() : -1;
  };

  // (Phi_x f)(v) = 0 for all x and delta(v) <= 1, with f = 0 on c_D, deg D >= 1.
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::uint32_t x = 0; x < cd.npoints(); ++x) {
    std::vector<Vertex> rowv = dom;
    for (std::uint32_t i = 0; i < cd.npoints(); ++i) rowv.push_back(Dec{1, {i}});
    for (const Vertex& v : rowv) {
      std::vector<std::uint64_t> row(dom.size(), 0);
      bool any = false;
      for (const auto& [w, m] : neighbours(cd, {x}, v))
        if (auto j = col(w); j >= 0) {
          row[static_cast<std::size_t>(j)] += m;
          any = true;
        }
      if (any) rows.push_back(std::move(row));
    }
  }
  IntMatrix M(rows.size(), dom.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j) M(i, j) = rows[i][j];

  CuspSpace V;
  for (auto& v : exact_nullspace(M)) V.basis.push_back({dom, std::move(v)});
  V.dimension = V.basis.size();

  const std::size_t expect = cd.rp + 1 - cd.h2;
  if (V.dimension != expect)
    throw Error(ErrorCode::DimensionMismatch,
                "cusp space dimension " + std::to_string(V.dimension) + " != r'+1-h2 = " + std::to_string(expect));
  for (const auto& f : V.basis) {
    for (std::size_t j = 0; j < dom.size(); ++j) {
      const bool allowed = std::holds_alternative<Tr>(dom[j]) || std::holds_alternative<S0>(dom[j]) ||
                           dom[j] == Vertex{Dec{0, {0}}};
      if (!allowed && f.values[j] != 0)
        throw Error(ErrorCode::InvariantViolation, "cusp form supported outside {t_D, s0, c0}");
    }
    if (linear_functionals(cd, f).C != 0)
      throw Error(ErrorCode::InvariantViolation, "cusp form with nonzero C functional");
  }
  return V;
}

ToroidalCuspResult toroidal_cusp_check(const ClassData& cd, const CuspSpace& V0) {
  ToroidalCuspResult out;
  const std::size_t d = V0.basis.size();
  std::vector<Rational> trow(d);
  for (std::size_t i = 0; i < d; ++i) trow[i] = linear_functionals(cd, V0.basis[i]).T;

  std::vector<std::vector<Rational>> members;
  if (d > 0) {
    for (const auto& coeff : rational_nullspace({trow}, d)) {
      std::vector<Rational> f(V0.basis[0].domain.size(), Rational(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < f.size(); ++j) f[j] += coeff[i] * V0.basis[i].values[j];
      members.push_back(std::move(f));
    }
  }
  out.subspace_dimension = members.size();

  std::size_t bad = 0;
  for (const auto& vals : members) {
    const ExactForm f{V0.basis[0].domain, vals};
    if (f.at(Dec{0, {0}}) != 0 || f.at(S0{}) != 0) ++bad;
  }
  out.report.add_exact("toroidal cusp subspace dimension", true, out.subspace_dimension, out.subspace_dimension);
  out.report.add_exact("toroidal cusp forms vanish at c0 and s0", bad == 0, bad, 0);
  return out;
}

EigenPair eigenvalue_profile(const ClassData& cd, const CharacterSpec& chi, PointId x) {
  const cplx c = chi.value_at(cd, x);
  const double rq = std::sqrt(static_cast<double>(cd.q));
  return {rq * (1.0 / c + c), rq * (1.0 / c - c)};
}

}  // namespace hecke
