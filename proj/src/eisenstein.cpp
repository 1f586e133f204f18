#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

#include "hecke/spectra.hpp"

namespace hecke {

namespace {

struct EigenRow {
  PointId x;
  std::size_t col;  // column of the row vertex
};

// Stacked (Phi_x - lambda_x) rows for every rational x, followed by the rows that
// isolate the Eisenstein line: cusp values depend on P only through omega0(P), and
// the solution is orthogonal (vertex measure) to the cusp forms.
struct System {
  std::vector<Vertex> dom;
  Eigen::MatrixXcd A;
  std::vector<EigenRow> eigen_rows;
};

std::size_t col_of(const std::vector<Vertex>& dom, const Vertex& v) {
  return static_cast<std::size_t>(std::lower_bound(dom.begin(), dom.end(), v) - dom.begin());
}

System assemble(const ClassData& cd, const CharacterSpec& chi, int depth, bool with_constraints) {
  auto alias = std::shared_ptr<const ClassData>(std::shared_ptr<const ClassData>(), &cd);
  System S;
  std::vector<HeckeGraph> graphs;
  for (std::uint32_t x = 0; x < cd.npoints(); ++x) graphs.push_back(build_graph(alias, {x}, depth));
  S.dom = graphs.front().vertices;
  const std::size_t n = S.dom.size();

  std::vector<Eigen::VectorXcd> rows;
  for (const auto& g : graphs) {
    const cplx lam = eigenvalue_profile(cd, chi, g.place).lambda;
    for (const Vertex& v : g.vertices) {
      if (!g.interior(v)) continue;
      Eigen::VectorXcd row = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
      for (const auto& e : g.edges.at(v)) row(static_cast<Eigen::Index>(col_of(S.dom, e.target))) += double(e.m);
      const std::size_t c = col_of(S.dom, v);
      row(static_cast<Eigen::Index>(c)) -= lam;
      rows.push_back(std::move(row));
      S.eigen_rows.push_back({g.place, c});
    }
  }

  if (with_constraints) {
    for (int k = 1; k <= depth; ++k)
      for (std::uint32_t P = 1; P < cd.npoints(); ++P) {
        Eigen::VectorXcd row = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
        const double w = chi.omega ? chi.omega->values[P] : 1.0;
        row(static_cast<Eigen::Index>(col_of(S.dom, Dec{k, {P}}))) = 1.0;
        row(static_cast<Eigen::Index>(col_of(S.dom, Dec{k, {0}}))) = -w;
        rows.push_back(std::move(row));
      }
    const CuspSpace V0 = cusp_space(cd);
    if (!V0.basis.empty()) {
      const auto mu = vertex_measure(cd, 1);
      for (const auto& b : V0.basis) {
        Eigen::VectorXcd row = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
        for (std::size_t j = 0; j < b.domain.size(); ++j) {
          if (b.values[j] == 0) continue;
          const double w = static_cast<double>(mu.at(b.domain[j]) * b.values[j]);
          row(static_cast<Eigen::Index>(col_of(S.dom, b.domain[j]))) = w;
        }
        rows.push_back(std::move(row));
      }
    }
  }

  S.A.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < rows.size(); ++i) S.A.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return S;
}

std::vector<Eigen::VectorXcd> numeric_nullspace(const Eigen::MatrixXcd& A, double tol) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * top) ++rank;
  std::vector<Eigen::VectorXcd> out;
  for (Eigen::Index j = rank; j < A.cols(); ++j) out.push_back(svd.matrixV().col(j));
  return out;
}

ComplexForm normalized(const std::vector<Vertex>& dom, const Eigen::VectorXcd& v) {
  const double top = v.cwiseAbs().maxCoeff();
  const std::size_t c0 = col_of(dom, Dec{0, {0}});
  std::size_t pivot = c0;
  if (std::abs(v(static_cast<Eigen::Index>(c0))) <= kRankTolerance * top) {
    pivot = 0;
    while (std::abs(v(static_cast<Eigen::Index>(pivot))) <= kRankTolerance * top) ++pivot;
  }
  const cplx scale = v(static_cast<Eigen::Index>(pivot));
  ComplexForm f{dom, std::vector<cplx>(dom.size())};
  for (std::size_t i = 0; i < dom.size(); ++i) f.values[i] = v(static_cast<Eigen::Index>(i)) / scale;
  return f;
}

}  // namespace

double normalized_T(const ClassData& cd, const ComplexForm& f) {
  double top = 0.0;
  for (std::size_t i = 0; i < f.domain.size(); ++i)
    if (delta(f.domain[i]) <= 1) top = std::max(top, std::abs(f.values[i]));
  if (top == 0.0) return 0.0;
  return std::abs(linear_functionals(cd, f).T) / top;
}

EisensteinSolution eisenstein_solve(const ClassData& cd, const CharacterSpec& chi, int depth, double rank_tol) {
  if (depth < 4) throw Error(ErrorCode::DepthTooSmall, "Eisenstein solves need depth >= 4");
  EisensteinSolution sol;
  sol.raw_dimension = numeric_nullspace(assemble(cd, chi, depth, false).A, rank_tol).size();
  const System S = assemble(cd, chi, depth, true);
  const auto null = numeric_nullspace(S.A, rank_tol);
  if (null.empty()) throw Error(ErrorCode::EmptySolutionSpace, "no eigenfunction within tolerance");
  sol.dimension = null.size();
  for (const auto& v : null) sol.basis.push_back(normalized(S.dom, v));
  return sol;
}

DerivativeSolution eisenstein_derivative_solve(const ClassData& cd, int order, const CharacterSpec& chi,
                                               const ComplexForm& E, int depth, double rank_tol) {
  if (depth < 4) throw Error(ErrorCode::DepthTooSmall, "Eisenstein solves need depth >= 4");
  const bool sq1 = chi.squares_to_one(cd);
  if (order == 1 && sq1) throw Error(ErrorCode::WrongOrderForCharacter, "order 1 needs chi^2 != 1");
  if (order == 2 && !sq1) throw Error(ErrorCode::WrongOrderForCharacter, "order 2 needs chi^2 = 1");
  if (order != 1 && order != 2) throw Error(ErrorCode::WrongOrderForCharacter, "order must be 1 or 2");

  const System S = assemble(cd, chi, depth, true);
  const double lq = std::log(static_cast<double>(cd.q));
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(S.A.rows());
  for (std::size_t i = 0; i < S.eigen_rows.size(); ++i) {
    const auto [x, c] = S.eigen_rows[i];
    const EigenPair ev = eigenvalue_profile(cd, chi, x);
    const cplx coef = order == 1 ? lq * ev.lambda_minus : lq * lq * ev.lambda;
    b(static_cast<Eigen::Index>(i)) = coef * E.at(S.dom[c]);
  }

  DerivativeSolution out;
  out.g = {S.dom, std::vector<cplx>(S.dom.size(), 0.0)};
  const double bn = b.norm();
  if (bn == 0.0) return out;

  Eigen::BDCSVD<Eigen::MatrixXcd> svd(S.A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rank_tol);
  Eigen::VectorXcd g = svd.solve(b);
  out.residual = (S.A * g - b).norm() / bn;
  if (out.residual > kResidualTolerance)
    throw Error(ErrorCode::InconsistentSystem, "derivative system residual " + format_double(out.residual));

  Eigen::VectorXcd e(static_cast<Eigen::Index>(S.dom.size()));
  for (std::size_t i = 0; i < S.dom.size(); ++i) e(static_cast<Eigen::Index>(i)) = E.at(S.dom[i]);
  g -= (e.dot(g) / e.squaredNorm()) * e;
  for (std::size_t i = 0; i < S.dom.size(); ++i) out.g.values[i] = g(static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace hecke
