#include "hecke/lfun.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace hecke {

namespace {

constexpr double kPi = std::numbers::pi;

cplx T_of(cplx s, unsigned q) { return std::exp(-s * std::log(double(q))); }

}  // namespace

cplx IntPoly::eval(cplx T) const {
  cplx acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * T + double(c[i]);
  return acc;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  IntPoly r{std::vector<long long>(c.size() + o.c.size() - 1, 0)};
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  return r;
}

bool IntPoly::operator==(const IntPoly& o) const {
  const std::size_t n = std::max(c.size(), o.c.size());
  for (std::size_t i = 0; i < n; ++i)
    if ((i < c.size() ? c[i] : 0) != (i < o.c.size() ? o.c[i] : 0)) return false;
  return true;
}

std::string IntPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const long long v = c[i];
    if (first) os << (v < 0 ? "-" : "");
    else os << (v < 0 ? " - " : " + ");
    const long long a = v < 0 ? -v : v;
    if (a != 1 || i == 0) os << a;
    if (i >= 1) os << 'T';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

cplx ZetaSeries::zeta_F_at(cplx s) const { return zeta_F.eval(T_of(s, q)); }
cplx ZetaSeries::L_at(cplx s) const { return L_chi.eval(T_of(s, q)); }
cplx ZetaSeries::zeta_Fprime_at(cplx s) const { return zeta_Fprime.eval(T_of(s, q)); }

ZetaSeries zeta_series(unsigned q_, unsigned h_, unsigned hp_) {
  const long long q = q_, h = h_, hp = hp_;
  const long long a = h - q - 1;
  ZetaSeries z;
  z.q = q_;
  z.zeta_F = {{{1, a, q}}, IntPoly{{1, -1}} * IntPoly{{1, -q}}};
  z.L_chi = {{{1, -a, q}}, IntPoly{{1, 1}} * IntPoly{{1, q}}};
  z.zeta_Fprime = {{{1, 0, h * hp - q * q - 1, 0, q * q}}, IntPoly{{1, 0, -1}} * IntPoly{{1, 0, -q * q}}};
  return z;
}

ZetaSeries zeta_series(const ClassData& cd) { return zeta_series(cd.q, cd.h, cd.hp); }

cplx principal_s(cplx s, unsigned q) {
  const double period = 2.0 * kPi / std::log(double(q));
  double im = std::remainder(s.imag(), period);  // in [-period/2, period/2]
  if (im <= -period / 2) im += period;
  return {s.real(), im};
}

ZeroPair zeta_zeros(unsigned q_, unsigned h_) {
  const long long q = q_, a = static_cast<long long>(h_) - q - 1;
  ZeroPair z;
  z.a = a;
  z.disc = a * a - 4 * q;
  // qT^2 + aT + 1 = 0
  const cplx root = z.disc < 0 ? cplx(0.0, std::sqrt(double(-z.disc))) : cplx(std::sqrt(double(z.disc)), 0.0);
  z.T_roots = {(-double(a) + root) / (2.0 * q), (-double(a) - root) / (2.0 * q)};
  if (z.disc <= 0) z.modulus_sq = Rational(a * a - z.disc, 4 * q * q);
  else z.modulus_sq = Rational(-1);  // real distinct roots: no common modulus
  const double lq = std::log(double(q));
  for (int i = 0; i < 2; ++i) z.s_reps[i] = principal_s(-std::log(z.T_roots[i]) / lq, q_);

  // Zeros of zeta_{F'} as values of T (s mod 2 pi i/ln q <-> T), with multiplicity,
  // from the quartic in U = T^2.
  const ZetaSeries zs = zeta_series(q_, h_, static_cast<unsigned>(2 * (q + 1) - static_cast<long long>(h_)));
  const auto& nc = zs.zeta_Fprime.num.c;  // 1 + b U + q^2 U^2
  const double b = double(nc[2]), qq = double(nc[4]);
  const cplx sd = std::sqrt(cplx(b * b - 4.0 * qq, 0.0));
  std::vector<cplx> roots;
  for (cplx U : {(-b + sd) / (2.0 * qq), (-b - sd) / (2.0 * qq)}) {
    roots.push_back(std::sqrt(U));
    roots.push_back(-std::sqrt(U));
  }
  const double tol = 1e-7;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    int mult = 0;
    for (std::size_t j = i; j < roots.size(); ++j)
      if (!used[j] && std::abs(roots[j] - roots[i]) < tol) {
        used[j] = true;
        ++mult;
      }
    // s and 1-s coincide iff T = 1/(qT)
    const bool self = std::abs(roots[i] * roots[i] * double(q) - 1.0) < tol;
    const int order = self ? mult / 2 : mult;
    z.max_pair_order = std::max(z.max_pair_order, order);
  }
  z.order2_flag = z.max_pair_order == 2;
  return z;
}

ZeroPair zeta_zeros(const ClassData& cd) { return zeta_zeros(cd.q, cd.h); }

Report check_identities(const ClassData& cd) {
  Report rep;
  const long long q = cd.q, h = cd.h, hp = cd.hp;
  rep.add_exact("h' = 2(q+1) - h", hp == 2 * (q + 1) - h, hp, 2 * (q + 1) - h);
  rep.add_exact("h h' = #X'(F_q2)", h * hp == static_cast<long long>(cd.nextpoints()), h * hp, cd.nextpoints());
  rep.add_exact("h2' = h2 (empirical)", cd.h2p == cd.h2, cd.h2p, cd.h2);
  rep.add_exact("hh' - q^2 - 1 = 2q - (h-q-1)^2", h * hp - q * q - 1 == 2 * q - (h - q - 1) * (h - q - 1),
                h * hp - q * q - 1, 2 * q - (h - q - 1) * (h - q - 1));

  const ZetaSeries zs = zeta_series(cd);
  rep.add_exact("zeta_F' numerator = zeta_F num * L num",
                zs.zeta_Fprime.num == zs.zeta_F.num * zs.L_chi.num, zs.zeta_Fprime.num.to_string(),
                (zs.zeta_F.num * zs.L_chi.num).to_string());
  rep.add_exact("zeta_F' denominator = zeta_F den * L den",
                zs.zeta_Fprime.den == zs.zeta_F.den * zs.L_chi.den, zs.zeta_Fprime.den.to_string(),
                (zs.zeta_F.den * zs.L_chi.den).to_string());
  long long at1 = 0;
  for (auto c : zs.zeta_F.num.c) at1 += c;
  rep.add_exact("zeta_F numerator at T=1 equals h", at1 == h, at1, h);

  const ZeroPair zp = zeta_zeros(cd);
  const Rational want(1, q);
  rep.add_exact("|T_root|^2 = 1/q (exact)", zp.modulus_sq == want, zp.modulus_sq.str(), want.str());

  // Functional equation at fixed pseudo-random points.
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<unsigned long long>(q * 1000 + h));
  std::uniform_real_distribution<double> re(-1.0, 2.0), im(-3.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    cplx s(re(rng), im(rng));
    const cplx a = zs.zeta_F_at(s), b = zs.zeta_F_at(1.0 - s);
    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  rep.add_numeric("functional equation zeta_F(1-s) = zeta_F(s)", worst, 1e-10);

  const cplx s_half(0.5, kPi / (2.0 * std::log(double(q))));
  const double zval = std::abs(zs.zeta_F_at(s_half));
  const bool l1 = zp.order2_flag, l2 = zval < 1e-10, l3 = h == q + 1;
  rep.add_exact("double zero pair <=> zero at 1/2 + pi i/(2 ln q) <=> h = q+1", l1 == l2 && l2 == l3,
                nlohmann::json::array({l1, l2, l3}), l3 ? "all true" : "all false");
  rep.add_numeric(l3 ? "zeta_F vanishes at 1/2 + pi i/(2 ln q)" : "zeta_F nonzero at 1/2 + pi i/(2 ln q)",
                  zval, l3 ? 1e-10 : 1e-3, l3);
  return rep;
}

ToroidalReport toroidal_report(const ClassData& cd, int depth, double rank_tol) {
  ToroidalReport out;
  const ZeroPair zp = zeta_zeros(cd);
  const double lq = std::log(double(cd.q));
  const cplx sE = principal_s(zp.s_reps[0] - 0.5, cd.q);
  const bool special = cd.h == cd.q + 1;

  auto solve_E = [&](cplx s, const std::string& kind) {
    ToroidalGenerator g{kind, s, std::nullopt, 0.0, 0};
    const auto sol = eisenstein_solve(cd, CharacterSpec{s, std::nullopt}, depth, rank_tol);
    g.dimension = sol.dimension;
    g.normalized_T = normalized_T(cd, sol.basis.front());
    return std::make_pair(g, sol.basis.front());
  };

  auto [g0, E] = solve_E(sE, "E");
  out.generators.push_back(g0);
  if (!special) {
    out.generators.push_back(solve_E(principal_s(sE + cplx(0.0, kPi / lq), cd.q), "E").first);
  } else {
    const auto d = eisenstein_derivative_solve(cd, 1, CharacterSpec{sE, std::nullopt}, E, depth, rank_tol);
    out.generators.push_back({"E1", sE, std::nullopt, normalized_T(cd, d.g), 1});
  }
  const auto W = quadratic_characters(cd);
  for (std::size_t i = 0; i < W.size(); ++i) {
    const auto sol = eisenstein_solve(cd, CharacterSpec{cplx(0.5, 0.0), W[i]}, depth, rank_tol);
    out.generators.push_back({"R", cplx(0.5, 0.0), i, normalized_T(cd, sol.basis.front()), sol.dimension});
  }

  for (const auto& g : out.generators) {
    std::string name = g.kind;
    if (g.omega) name += "[omega " + std::to_string(*g.omega) + "]";
    name += " at s=" + format_double(g.s.real()) + (g.s.imag() < 0 ? "-" : "+") +
            format_double(std::abs(g.s.imag())) + "i";
    out.report.add_numeric(name + " |T|", g.normalized_T, kResidualTolerance);
    if (g.kind != "E1") out.report.add_exact(name + " dimension 1", g.dimension == 1, g.dimension, 1);
  }
  out.report.add_exact("generator count = 2 h2", out.generators.size() == 2 * cd.h2, out.generators.size(),
                       2 * cd.h2);
  const bool char2 = cd.curve.field().characteristic() == 2;
  out.branch = (char2 && special) ? "1 or 2, undecided" : "1-dimensional";
  return out;
}

}  // namespace hecke
