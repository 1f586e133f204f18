#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hecke/spectra.hpp"

namespace hecke {

// Integer coefficients, constant term first.
struct IntPoly {
  std::vector<long long> c;

  cplx eval(cplx T) const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const;
  std::string to_string() const;
};

struct RationalFunc {
  IntPoly num, den;
  cplx eval(cplx T) const { return num.eval(T) / den.eval(T); }
};

struct ZetaSeries {
  unsigned q = 0;
  RationalFunc zeta_F, L_chi, zeta_Fprime;

  cplx zeta_F_at(cplx s) const;
  cplx L_at(cplx s) const;
  cplx zeta_Fprime_at(cplx s) const;
};

ZetaSeries zeta_series(unsigned q, unsigned h, unsigned hp);
ZetaSeries zeta_series(const ClassData& cd);

struct ZeroPair {
  std::array<cplx, 2> T_roots;
  std::array<cplx, 2> s_reps;  // Im in (-pi/ln q, pi/ln q]
  long long a = 0;             // h - q - 1
  long long disc = 0;          // a^2 - 4q
  Rational modulus_sq;         // |T_root|^2 from the quadratic formula
  bool order2_flag = false;    // zeta_{F'} has a pair of zeros of order 2
  int max_pair_order = 0;
};

ZeroPair zeta_zeros(unsigned q, unsigned h);
ZeroPair zeta_zeros(const ClassData& cd);

// Principal representative of s modulo 2 pi i / ln q.
cplx principal_s(cplx s, unsigned q);

Report check_identities(const ClassData& cd);

struct ToroidalGenerator {
  std::string kind;  // "E", "E1", "R"
  cplx s;
  std::optional<std::size_t> omega;  // index into quadratic_characters
  double normalized_T = 0.0;
  std::size_t dimension = 0;
};

struct ToroidalReport {
  Report report;
  std::vector<ToroidalGenerator> generators;
  std::string branch;
};

ToroidalReport toroidal_report(const ClassData& cd, int depth = kDefaultDepth, double rank_tol = kRankTolerance);

}  // namespace hecke
