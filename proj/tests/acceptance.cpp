// One line per acceptance criterion. Exit status is 0 when the red lines are exactly the
// documented known-red set; --strict fails on any red line.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "hecke/commands.hpp"
#include "hecke/lfun.hpp"

using namespace hecke;
using testutil::named;

namespace {

const std::set<int> kKnownRed = {1};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

std::string structure(unsigned n1, unsigned n2) {
  if (n1 == 1) return "Z/" + std::to_string(n2);
  if (n1 == n2) return "(Z/" + std::to_string(n1) + ")^2";
  return "Z/" + std::to_string(n1) + " x Z/" + std::to_string(n2);
}

std::vector<Curve> all_curves(unsigned p) {
  const Field F = Field::make(p, 1);
  std::vector<Curve> out;
  unsigned n = p * p * p * p * p;
  for (unsigned v = 0; v < n; ++v) {
    std::array<FieldElem, 5> a;
    unsigned x = v;
    for (auto& c : a) c = FieldElem{x % p}, x /= p;
    if (long_weierstrass_discriminant(F, a) == F.zero()) continue;
    out.push_back(Curve::make(F, a));
  }
  return out;
}

std::vector<Curve> random_curves(unsigned p, unsigned k, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Field F = Field::make(p, k);
  std::uniform_int_distribution<unsigned> d(0, F.order() - 1);
  std::vector<Curve> out;
  while (int(out.size()) < n) {
    std::array<FieldElem, 5> a;
    for (auto& x : a) x = FieldElem{d(rng)};
    if (long_weierstrass_discriminant(F, a) == F.zero()) continue;
    out.push_back(Curve::make(F, a));
  }
  return out;
}

const char* const kCorpus[] = {"X2", "X3", "X4", "X5", "X6", "E23"};

Outcome ac1() {
  struct Want {
    const char* name;
    unsigned h;
    std::string cl, clp;
    unsigned rp;
  };
  const Want want[] = {{"X2", 1, "Z/1", "Z/5", 2},
                       {"X3", 1, "Z/1", "Z/7", 3},
                       {"X4", 1, "Z/1", "Z/9", 4},
                       {"X5", 4, "Z/4", "(Z/4)^2", 2},
                       {"X6", 4, "(Z/2)^2", "(Z/4)^2", 3}};
  Outcome o;
  for (const auto& w : want) {
    const auto& cd = *named(w.name);
    const std::string cl = structure(cd.group0.n1, cd.group0.n2);
    const std::string clp = structure(cd.group0p.n1, cd.group0p.n2);
    if (cd.h != w.h || cl != w.cl || clp != w.clp || cd.rp != w.rp) {
      std::ostringstream s;
      s << w.name << " got (" << cd.h << "; " << cl << "; " << clp << "; " << cd.rp << ") want (" << w.h << "; "
        << w.cl << "; " << w.clp << "; " << w.rp << ")";
      o.fail(s.str());
    }
  }
  if (o.pass) o.detail = "all five corpus curves match";
  return o;
}

Outcome ac2() {
  Outcome o;
  std::size_t n = 0;
  auto check = [&](const Curve& c) {
    const Field& F = c.field();
    const unsigned q = F.order();
    const Field F2 = Field::make(F.characteristic(), 2 * F.degree());
    const std::size_t h = enumerate_points(c).size();
    const std::size_t np = enumerate_points(base_change(c, embed_subfield(F, F2))).size();
    // h' = #X'(F_{q^2}) / #X(F_q)
    if (np % h != 0 || np / h != 2 * (q + 1) - h) o.fail("h' mismatch over F_" + std::to_string(q));
    ++n;
  };
  for (unsigned p : {2u, 3u})
    for (const auto& c : all_curves(p)) check(c);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}})
    for (const auto& c : random_curves(p, k, 25, 1000 * p + k)) check(c);
  if (o.pass) o.detail = std::to_string(n) + " curves";
  return o;
}

Outcome ac3() {
  Outcome o;
  std::size_t graphs = 0;
  for (const char* name : kCorpus) {
    const auto cd = named(name);
    for (std::uint32_t x = 0; x < cd->npoints(); ++x) {
      const auto g = build_graph(cd, {x}, 6);
      if (!verify_graph(g).passed()) o.fail(std::string(name) + " x=" + std::to_string(x));
      ++graphs;
    }
  }
  if (component_count(build_graph(named("X6"), {0}, 6)) != 4) o.fail("X6 components");
  if (component_count(build_graph(named("X5"), {1}, 6)) != 2) o.fail("X5 components");

  // X2 against the hand drawing, t-vertices interchangeable
  const auto g = build_graph(named("X2"), {0}, 4);
  auto lab = [](const Vertex& v) { return std::holds_alternative<Tr>(v) ? std::string("t") : vertex_label(v); };
  std::multiset<std::tuple<std::string, std::string, std::uint64_t>> got, want = {
      {"t", "s[0]", 3},        {"t", "s[0]", 3},        {"s[0]", "t", 1},        {"s[0]", "t", 1},
      {"s[0]", "s0", 1},       {"s0", "s[0]", 2},       {"s0", "c[1,0]", 1},     {"c[0,0]", "c[1,0]", 3},
      {"c[1,0]", "s0", 1},     {"c[1,0]", "c[0,0]", 1}, {"c[1,0]", "c[2,0]", 1}, {"c[2,0]", "c[1,0]", 2},
      {"c[2,0]", "c[3,0]", 1}, {"c[3,0]", "c[2,0]", 2}, {"c[3,0]", "c[4,0]", 1}, {"c[4,0]", "c[3,0]", 2}};
  for (const auto& [v, es] : g.edges)
    for (const auto& e : es) got.insert({lab(e.origin), lab(e.target), e.m});
  if (got != want) o.fail("X2 adjacency differs from the drawing");
  if (o.pass) o.detail = std::to_string(graphs) + " graphs at depth 6, X2 drawing matched";
  return o;
}

Outcome ac4() {
  Outcome o;
  const std::pair<const char*, std::size_t> want[] = {{"X2", 2}, {"X3", 3}, {"X4", 4}, {"X5", 1}, {"X6", 0}};
  std::ostringstream dims;
  for (auto [name, d] : want) {
    const auto& cd = *named(name);
    const CuspSpace V = cusp_space(cd);
    dims << name << "=" << V.dimension << " ";
    if (V.dimension != d || d != cd.rp + 1 - cd.h2) o.fail(std::string(name) + " dimension");
    for (const auto& f : V.basis) {
      for (std::size_t i = 0; i < f.domain.size(); ++i) {
        const Vertex& v = f.domain[i];
        const bool allowed = std::holds_alternative<Tr>(v) || std::holds_alternative<S0>(v) || v == Vertex(Dec{0, {0}});
        if (!allowed && f.values[i] != 0) o.fail(std::string(name) + " support");
      }
      if (linear_functionals(cd, f).C != 0) o.fail(std::string(name) + " C != 0");
    }
  }
  const CuspSpace V5 = cusp_space(*named("X5"));
  if (V5.basis.empty() || V5.basis[0].at(Dec{0, {0}}) == 0) o.fail("X5 cusp vector vanishes at c0");
  if (o.pass) o.detail = dims.str() + "(X5 nonzero at c0)";
  return o;
}

Outcome ac5() {
  Outcome o;
  std::ostringstream dims;
  for (const char* name : kCorpus) {
    const auto& cd = *named(name);
    const CuspSpace V = cusp_space(cd);
    // kernel of T restricted to V, recomputed here
    std::vector<Rational> Trow;
    for (const auto& f : V.basis) Trow.push_back(linear_functionals(cd, f).T);
    const auto K = V.basis.empty() ? std::vector<std::vector<Rational>>{} : rational_nullspace({Trow}, Trow.size());
    dims << name << "=" << K.size() << " ";
    for (const auto& coef : K) {
      Rational at_c0 = 0, at_s0 = 0;
      for (std::size_t i = 0; i < coef.size(); ++i) {
        at_c0 += coef[i] * V.basis[i].at(Dec{0, {0}});
        at_s0 += coef[i] * V.basis[i].at(S0{});
      }
      if (at_c0 != 0 || at_s0 != 0) o.fail(std::string(name) + " toroidal cusp form nonzero at c0/s0");
    }
    const auto lib = toroidal_cusp_check(cd, V);
    if (!lib.report.passed() || lib.subspace_dimension != K.size()) o.fail(std::string(name) + " library check");
  }
  if (o.pass) o.detail = "toroidal cusp dims " + dims.str();
  return o;
}

Outcome ac6() {
  Outcome o;
  const cplx control[] = {{0.3, 0.7}, {-0.2, 0.1}, {0.37, 0.0}, {0.11, 1.3}, {-0.41, -0.6}};
  double worst_zero = 0, best_control = 1e300;
  for (const char* name : kCorpus) {
    const auto& cd = *named(name);
    const ZeroPair zp = zeta_zeros(cd);
    for (const cplx sz : zp.s_reps) {
      const cplx s = principal_s(sz - 0.5, cd.q);
      const auto sol = eisenstein_solve(cd, {s, std::nullopt});
      if (sol.dimension != 1) o.fail(std::string(name) + " eigenspace at zero");
      worst_zero = std::max(worst_zero, normalized_T(cd, sol.basis.front()));
    }
    for (const cplx s : control) {
      const auto sol = eisenstein_solve(cd, {s, std::nullopt});
      best_control = std::min(best_control, normalized_T(cd, sol.basis.front()));
    }
    const cplx sE = principal_s(zp.s_reps[0] - 0.5, cd.q);
    if (cd.h == cd.q + 1) {
      const CharacterSpec chi{sE, std::nullopt};
      const auto E = eisenstein_solve(cd, chi).basis.front();
      try {
        const auto d = eisenstein_derivative_solve(cd, 1, chi, E);
        if (normalized_T(cd, d.g) >= 1e-8) o.fail(std::string(name) + " T(E1)");
      } catch (const Error& e) {
        o.fail(std::string(name) + " order-1 solve: " + e.what());
      }
    }
    if (std::string(name) == "X4") {
      const CharacterSpec chi{sE, std::nullopt};
      const auto E = eisenstein_solve(cd, chi).basis.front();
      try {
        eisenstein_derivative_solve(cd, 2, chi, E);
      } catch (const Error& e) {
        o.fail(std::string("X4 order-2 solve: ") + e.what());
      }
    }
    for (const auto& w : quadratic_characters(cd)) {
      const auto sol = eisenstein_solve(cd, {cplx(0.5, 0), w});
      if (normalized_T(cd, sol.basis.front()) >= 1e-8) o.fail(std::string(name) + " T(R)");
    }
    const auto tr = toroidal_report(cd);
    if (tr.generators.size() != 2 * cd.h2 || !tr.report.passed()) o.fail(std::string(name) + " generators");
  }
  if (worst_zero >= 1e-8) o.fail("T at a zero " + format_double(worst_zero));
  if (best_control <= 1e-3) o.fail("T at a control point " + format_double(best_control));
  if (o.pass) o.detail = "max T at zeros " + format_double(worst_zero) + ", min T at controls " + format_double(best_control);
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const char* name : kCorpus)
    if (!check_identities(*named(name)).passed()) o.fail(std::string(name) + " identities");
  std::size_t n = 0, special = 0;
  for (unsigned p : {2u, 3u})
    for (const auto& c : all_curves(p)) {
      const auto cd = build_class_data(c);
      const double lq = std::log(double(cd->q));
      const ZeroPair zp = zeta_zeros(*cd);
      const bool a = zp.order2_flag;
      const bool b = std::abs(zeta_series(*cd).zeta_F_at(cplx(0.5, M_PI / (2 * lq)))) < 1e-10;
      const bool c3 = cd->h == cd->q + 1;
      if (a != b || b != c3) o.fail("lemma equivalence");
      if (zp.modulus_sq != Rational(1, cd->q)) o.fail("|T|^2 != 1/q");
      if (!check_identities(*cd).passed()) o.fail("identities on scan");
      special += c3;
      ++n;
    }
  if (!zeta_zeros(*named("E23")).order2_flag) o.fail("E23 true branch");
  if (o.pass) o.detail = std::to_string(n) + " curves, " + std::to_string(special) + " with h = q+1";
  return o;
}

Outcome ac8() {
  Outcome o;
  std::size_t n = 0;
  for (const char* name : kCorpus) {
    const auto& cd = *named(name);
    const std::uint64_t q = cd.q;
    std::set<std::uint32_t> reached;
    for (std::uint32_t z = 0; z < cd.nextpoints(); ++z) {
      if (cd.sigma_fixed({z})) continue;
      const auto nb = deg2_c0_neighbors(cd, {z});
      if (nb.size() != 2 || nb[0].weight != q + 1 || nb[1].weight != q * q - q) o.fail(std::string(name) + " weights");
      for (const auto& e : nb)
        if (const auto* t = std::get_if<Tr>(&e.vertex)) reached.insert(t->index);
      ++n;
    }
    if (reached.size() != cd.tclasses.size()) o.fail(std::string(name) + " not surjective");
  }
  if (o.pass) o.detail = std::to_string(n) + " points z";
  return o;
}

Outcome ac9() {
  Outcome o;
  std::ostringstream a, b, e1, e2;
  const int r1 = run_command({"scan", "--q", "3", "--format", "json"}, a, e1);
  const int r2 = run_command({"scan", "--q", "3", "--format", "json"}, b, e2);
  if (r1 != 0 || r2 != 0) o.fail("scan exit code");
  if (a.str() != b.str()) o.fail("reports differ");
  if (o.pass) o.detail = std::to_string(a.str().size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::function<Outcome()>> criteria = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9};
  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const int id = int(i) + 1;
    if (!o.pass) red.insert(id);
    char t[32];
    std::snprintf(t, sizeof t, "%.2fs", secs);
    std::cout << "AC" << id << " " << (o.pass ? "PASS" : "FAIL") << " [" << t << "] " << o.detail
              << (!o.pass && kKnownRed.count(id) ? " (known red, see README)" : "") << "\n";
  }
  if (strict) return red.empty() ? 0 : 1;
  return red == kKnownRed ? 0 : 1;
}
