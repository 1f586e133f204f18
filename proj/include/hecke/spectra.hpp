#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hecke/heckegraph.hpp"

namespace hecke {

using BigInt = boost::multiprecision::cpp_int;
using cplx = std::complex<double>;

// Values on a sorted vertex domain; vertices outside the domain read as zero.
template <class Scalar>
struct FormVector {
  std::vector<Vertex> domain;
  std::vector<Scalar> values;

  Scalar at(const Vertex& v) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), v);
    if (it == domain.end() || !(*it == v)) return Scalar(0);
    return values[static_cast<std::size_t>(it - domain.begin())];
  }
};
using ExactForm = FormVector<Rational>;
using ComplexForm = FormVector<cplx>;

struct CharacterSpec {
  cplx s{0.0, 0.0};
  std::optional<QuadChar> omega;

  // chi(x) = omega(x) q^{-s} for a degree-1 place x
  cplx value_at(const ClassData& cd, PointId x) const;
  // chi^2 is trivial on all places: q^{-2s} = 1
  bool squares_to_one(const ClassData& cd, double tol = 1e-9) const;
};

struct HeckeMatrix {
  std::vector<Vertex> rows;
  std::vector<Vertex> cols;
  std::vector<std::vector<std::uint64_t>> entries;  // rows x cols
};

HeckeMatrix hecke_matrix(const HeckeGraph& g);

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  BigInt& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Right nullspace over Q by fraction-free elimination; each basis vector has a 1 at its free column.
std::vector<std::vector<Rational>> exact_nullspace(const IntMatrix& M);
std::size_t exact_rank(const IntMatrix& M);
// Same, for a rational matrix (denominators cleared row by row).
std::vector<std::vector<Rational>> rational_nullspace(const std::vector<std::vector<Rational>>& rows,
                                                      std::size_t cols);

struct CuspSpace {
  std::size_t dimension = 0;
  std::vector<ExactForm> basis;
};

// Domain of the cusp system: traces, s-classes, s0 and degree-0 classes.
std::vector<Vertex> nucleus_zero_domain(const ClassData& cd);
CuspSpace cusp_space(const ClassData& cd);

template <class Scalar>
struct Functionals {
  Scalar C;
  Scalar T;
};

template <class Scalar>
Functionals<Scalar> linear_functionals(const ClassData& cd, const FormVector<Scalar>& f) {
  const Vertex c0 = Dec{0, {0}};
  Scalar C = f.at(c0) + Scalar(cd.q - 1) * f.at(S0{});
  Scalar T = f.at(c0);
  for (std::uint32_t i = 0; i < cd.tclasses.size(); ++i)
    T += Scalar(cd.tclasses[i].is_half ? 1 : 2) * f.at(Tr{i});
  return {C, T};
}

struct ToroidalCuspResult {
  std::size_t subspace_dimension = 0;
  Report report;
};
ToroidalCuspResult toroidal_cusp_check(const ClassData& cd, const CuspSpace& V0);

struct EigenPair {
  cplx lambda;
  cplx lambda_minus;
};
EigenPair eigenvalue_profile(const ClassData& cd, const CharacterSpec& chi, PointId x);

struct EisensteinSolution {
  std::size_t dimension = 0;      // after isolating constraints
  std::size_t raw_dimension = 0;  // eigen-equations alone
  std::vector<ComplexForm> basis;
};

inline constexpr int kDefaultDepth = 6;
inline constexpr double kRankTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-8;

// rank_tol is relative to the largest singular value.
EisensteinSolution eisenstein_solve(const ClassData& cd, const CharacterSpec& chi, int depth = kDefaultDepth,
                                    double rank_tol = kRankTolerance);

struct DerivativeSolution {
  ComplexForm g;
  double residual = 0.0;
};
DerivativeSolution eisenstein_derivative_solve(const ClassData& cd, int order, const CharacterSpec& chi,
                                               const ComplexForm& E, int depth = kDefaultDepth,
                                               double rank_tol = kRankTolerance);

// |T(f)| divided by the largest |f| over vertices with delta <= 1.
double normalized_T(const ClassData& cd, const ComplexForm& f);

}  // namespace hecke
