#include "hecke/commands.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hecke/corpus.hpp"
#include "hecke/lfun.hpp"

namespace hecke {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string named, coeffs, corpus_file, x, s = "0", format = "text", output;
  unsigned p = 0, k = 1;
  int depth = kDefaultDepth;
  double tolerance = kRankTolerance;
  int omega = -1;
  unsigned q = 0;
  unsigned random = 0;
  std::uint64_t seed = 20240601;
  bool dump_corpus = false;
};

struct Output {
  ojson json;
  std::string text;
  bool ok = true;
};

std::string cplx_text(cplx z) {
  char buf[96];
  // tiny values print as 0 so that -0.0000000000 never appears
  auto clean = [](double v) { return std::abs(v) < 5e-11 ? 0.0 : v; };
  std::snprintf(buf, sizeof buf, "%.10f%+.10fi", clean(z.real()), clean(z.imag()));
  return buf;
}

ojson cplx_json(cplx z) { return cplx_text(z); }

cplx parse_complex(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?[0-9.eE]+)?\s*(?:([+-])\s*([0-9.eE]*)\s*i)?\s*$)");
  static const std::regex pure(R"(^\s*([+-]?[0-9.eE]*)\s*i\s*$)");
  std::smatch m;
  try {
    if (std::regex_match(text, m, pure)) {
      const std::string c = m[1].str();
      const double im = (c.empty() || c == "+") ? 1.0 : c == "-" ? -1.0 : std::stod(c);
      return {0.0, im};
    }
    if (std::regex_match(text, m, re) && (m[1].matched || m[2].matched)) {
      const double re_part = m[1].matched ? std::stod(m[1].str()) : 0.0;
      double im = 0.0;
      if (m[2].matched) {
        im = m[3].str().empty() ? 1.0 : std::stod(m[3].str());
        if (m[2].str() == "-") im = -im;
      }
      return {re_part, im};
    }
  } catch (const std::exception&) {
  }
  throw UsageError("cannot parse complex number '" + text + "' (expected a+bi)");
}

std::string point_text(const Field& F, const Point& P) {
  if (P.infinity) return "inf";
  return "(" + F.to_string(P.x) + "," + F.to_string(P.y) + ")";
}

std::string poly_text(const std::vector<unsigned>& c) {
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += "t";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::vector<CurveSpec> load_corpus(const Options& o) {
  if (o.corpus_file.empty()) return builtin_corpus();
  std::ifstream in(o.corpus_file);
  if (!in) throw UsageError("cannot read corpus file " + o.corpus_file);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return corpus_from_jsonl(ss.str());
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad corpus file: ") + e.what());
  }
}

CurveSpec resolve_spec(const Options& o) {
  if (!o.named.empty()) {
    auto s = find_named(load_corpus(o), o.named);
    if (!s) throw UsageError("unknown curve name " + o.named);
    return *s;
  }
  if (o.p == 0 || o.coeffs.empty()) throw UsageError("give --named NAME or --p P [--k K] --coeffs C");
  CurveSpec s{"", o.p, o.k, {}};
  try {
    s.coeffs = parse_coeffs(o.coeffs, o.p);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --coeffs: ") + e.what());
  }
  return s;
}

PointId resolve_place(const ClassData& cd, const std::string& x) {
  if (x.empty()) return {cd.h > 1 ? 1u : 0u};
  if (x == "inf") return {0};
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(x, &pos);
    if (pos == x.size() && v < cd.npoints()) return {static_cast<std::uint32_t>(v)};
  } catch (const std::exception&) {
  }
  throw UsageError("--x must be 'inf' or a point index below " + std::to_string(cd.npoints()));
}

ojson curve_json(const CurveSpec& s) { return spec_to_json(s); }

ojson constants_json(const ClassData& cd) {
  return {{"q", cd.q}, {"h", cd.h}, {"h2", cd.h2}, {"hp", cd.hp}, {"h2p", cd.h2p}, {"r", cd.r}, {"rp", cd.rp}};
}

std::string constants_text(const ClassData& cd) {
  std::ostringstream os;
  os << "q=" << cd.q << " h=" << cd.h << " h2=" << cd.h2 << " h'=" << cd.hp << " h2'=" << cd.h2p
     << " r=" << cd.r << " r'=" << cd.rp;
  return os.str();
}

void attach_report(Output& out, const Report& rep) {
  out.json["checks"] = rep.to_json();
  out.text += rep.to_text();
  out.ok = out.ok && rep.passed();
}

std::string group_text(const PointGroup& g) {
  if (g.n1 == 1) return "Z/" + std::to_string(g.n2);
  return "Z/" + std::to_string(g.n1) + " x Z/" + std::to_string(g.n2);
}

// ---- subcommands -------------------------------------------------------------

Output cmd_info(const CurveSpec& spec, const ClassData& cd) {
  Output out;
  const Field& F = cd.curve.field();
  const Field& F2 = cd.curve2.field();
  ojson& j = out.json;
  j["constants"] = constants_json(cd);
  j["field_modulus"] = poly_text(F.modulus());
  j["ext_field_modulus"] = poly_text(F2.modulus());
  j["group"] = {{"n1", cd.group0.n1}, {"n2", cd.group0.n2}, {"structure", group_text(cd.group0)}};
  j["ext_group"] = {{"n1", cd.group0p.n1}, {"n2", cd.group0p.n2}, {"structure", group_text(cd.group0p)}};
  auto& pts = j["points"] = ojson::array();
  for (const auto& P : cd.group0.points) pts.push_back(point_text(F, P));
  auto& gens = j["generators"] = ojson::array();
  for (const auto& P : cd.group0.generators) gens.push_back(point_text(F, P));
  auto& ts = j["tclasses"] = ojson::array();
  for (const auto& t : cd.tclasses) ts.push_back({{"rep", point_text(F2, cd.ext_point(t.rep))}, {"is_half", t.is_half}});
  auto& ss = j["sclasses"] = ojson::array();
  for (const auto& s : cd.sclasses) ss.push_back(point_text(F, cd.point(s.rep)));

  std::ostringstream os;
  os << "curve " << (spec.name.empty() ? "(unnamed)" : spec.name) << " over F_" << cd.q << " (modulus "
     << poly_text(F.modulus()) << ")\n";
  os << "  " << constants_text(cd) << "\n";
  os << "  Cl0 X   = " << group_text(cd.group0) << "\n";
  os << "  Cl0 X'  = " << group_text(cd.group0p) << "  (#X'(F_" << cd.q * cd.q << ") = " << cd.nextpoints() << ")\n";
  os << "  points:";
  for (std::size_t i = 0; i < cd.group0.size(); ++i) os << " " << i << ":" << point_text(F, cd.group0.points[i]);
  os << "\n  traces:";
  for (std::size_t i = 0; i < cd.tclasses.size(); ++i)
    os << " t[" << i << "]=" << point_text(F2, cd.ext_point(cd.tclasses[i].rep))
       << (cd.tclasses[i].is_half ? "(half)" : "");
  os << "\n  s-classes:";
  for (std::size_t i = 0; i < cd.sclasses.size(); ++i)
    os << " s[" << i << "]=" << point_text(F, cd.point(cd.sclasses[i].rep));
  os << "\n";
  out.text = os.str();

  Report rep;
  rep.add_exact("h2' = h2 (empirical)", cd.h2p == cd.h2, cd.h2p, cd.h2);
  attach_report(out, rep);
  return out;
}

Output cmd_verify(const ClassData& cd, const ClassDataPtr& cdp, int depth) {
  Output out;
  Report all;
  auto& places = out.json["places"] = ojson::array();
  std::ostringstream os;
  os << constants_text(cd) << "\n";
  for (std::uint32_t x = 0; x < cd.npoints(); ++x) {
    const HeckeGraph g = build_graph(cdp, {x}, depth);
    const Report r = verify_graph(g);
    const std::size_t comps = component_count(g);
    places.push_back({{"x", x},
                      {"point", point_text(cd.curve.field(), cd.point({x}))},
                      {"vertices", g.vertices.size()},
                      {"components", comps},
                      {"passed", r.passed()}});
    os << "x=" << x << " " << point_text(cd.curve.field(), cd.point({x})) << ": " << g.vertices.size()
       << " vertices, " << comps << " components, " << (r.passed() ? "ok" : "FAILED") << "\n";
    all.merge(r, "x=" + std::to_string(x) + ": ");
  }
  all.merge(check_identities(cd), "identities: ");
  out.text = os.str();
  attach_report(out, all);
  return out;
}

Output cmd_cusp(const ClassData& cd) {
  Output out;
  Report rep;
  std::ostringstream os;
  CuspSpace V;
  try {
    V = cusp_space(cd);
  } catch (const Error& e) {
    rep.add_exact("cusp space computed", false, e.what(), "dimension r'+1-h2");
    attach_report(out, rep);
    return out;
  }
  const std::size_t expect = cd.rp + 1 - cd.h2;
  out.json["dimension"] = V.dimension;
  os << "cusp space dimension " << V.dimension << " (r'+1-h2 = " << expect << ")\n";
  rep.add_exact("dimension = r'+1-h2", V.dimension == expect, V.dimension, expect);
  auto& basis = out.json["basis"] = ojson::array();
  for (std::size_t b = 0; b < V.basis.size(); ++b) {
    const auto& f = V.basis[b];
    ojson vals = ojson::object();
    os << "  f" << b << ":";
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
      if (f.values[i] == 0) continue;
      vals[vertex_label(f.domain[i])] = f.values[i].str();
      os << " " << vertex_label(f.domain[i]) << "=" << f.values[i].str();
    }
    const auto fn = linear_functionals(cd, f);
    os << "   C=" << fn.C.str() << " T=" << fn.T.str() << " f(c0)=" << f.at(Dec{0, {0}}).str() << "\n";
    basis.push_back({{"values", vals}, {"C", fn.C.str()}, {"T", fn.T.str()}, {"f_c0", f.at(Dec{0, {0}}).str()}});
    rep.add_exact("C(f" + std::to_string(b) + ") = 0", fn.C == 0, fn.C.str(), "0");
  }
  if (V.dimension == 1) {
    const Rational c0 = V.basis[0].at(Dec{0, {0}});
    rep.add_exact("one-dimensional cusp space: f(c0) != 0", c0 != 0, c0.str(), "nonzero");
  }
  const auto tc = toroidal_cusp_check(cd, V);
  out.json["toroidal_subspace_dimension"] = tc.subspace_dimension;
  os << "toroidal cusp subspace dimension " << tc.subspace_dimension << "\n";
  rep.merge(tc.report, "");
  out.text = os.str();
  attach_report(out, rep);
  return out;
}

Output cmd_eisenstein(const ClassData& cd, const Options& o) {
  Output out;
  CharacterSpec chi{parse_complex(o.s), std::nullopt};
  if (o.omega >= 0) {
    const auto W = quadratic_characters(cd);
    if (static_cast<std::size_t>(o.omega) >= W.size())
      throw UsageError("--omega must be below " + std::to_string(W.size()));
    chi.omega = W[static_cast<std::size_t>(o.omega)];
  }
  const auto sol = eisenstein_solve(cd, chi, o.depth, o.tolerance);
  ojson& j = out.json;
  j["s"] = cplx_json(chi.s);
  j["omega"] = o.omega;
  j["dimension"] = sol.dimension;
  j["raw_dimension"] = sol.raw_dimension;
  auto& ev = j["eigenvalues"] = ojson::array();
  std::ostringstream os;
  os << "s = " << cplx_text(chi.s) << (o.omega >= 0 ? " twisted by omega " + std::to_string(o.omega) : "") << "\n";
  os << "solution dimension " << sol.dimension << " (eigen-equations alone: " << sol.raw_dimension << ")\n";
  for (std::uint32_t x = 0; x < cd.npoints(); ++x) {
    const auto e = eigenvalue_profile(cd, chi, {x});
    ev.push_back({{"x", x}, {"lambda", cplx_json(e.lambda)}, {"lambda_minus", cplx_json(e.lambda_minus)}});
    os << "  lambda_" << x << " = " << cplx_text(e.lambda) << "\n";
  }
  auto& bs = j["basis"] = ojson::array();
  for (const auto& f : sol.basis) {
    ojson vals = ojson::object();
    for (std::size_t i = 0; i < f.domain.size(); ++i)
      if (delta(f.domain[i]) <= 1) vals[vertex_label(f.domain[i])] = cplx_json(f.values[i]);
    const double t = normalized_T(cd, f);
    bs.push_back({{"nucleus", vals}, {"T_normalized", format_double(t)}});
    os << "  |T(E)|/max|E| = " << format_double(t) << "\n";
  }
  out.text = os.str();
  return out;
}

Output cmd_toroidal(const ClassData& cd, int depth, double tol) {
  Output out;
  const auto tr = toroidal_report(cd, depth, tol);
  auto& gens = out.json["generators"] = ojson::array();
  std::ostringstream os;
  for (const auto& g : tr.generators) {
    gens.push_back({{"kind", g.kind},
                    {"s", cplx_json(g.s)},
                    {"omega", g.omega ? ojson(*g.omega) : ojson(nullptr)},
                    {"T_normalized", format_double(g.normalized_T)}});
    os << "  " << g.kind << " s=" << cplx_text(g.s) << (g.omega ? " omega=" + std::to_string(*g.omega) : "")
       << "  |T|=" << format_double(g.normalized_T) << "\n";
  }
  out.json["generator_count"] = tr.generators.size();
  out.json["toroidal_space"] = tr.branch;
  os << "generators: " << tr.generators.size() << " (2 h2 = " << 2 * cd.h2 << ")\n";
  os << "space of toroidal forms: " << tr.branch << "\n";
  out.text = os.str();
  attach_report(out, tr.report);
  return out;
}

Output cmd_zeta(const ClassData& cd) {
  Output out;
  const auto zs = zeta_series(cd);
  const auto zp = zeta_zeros(cd);
  ojson& j = out.json;
  auto rf = [](const RationalFunc& r) { return ojson{{"num", r.num.to_string()}, {"den", r.den.to_string()}}; };
  j["zeta_F"] = rf(zs.zeta_F);
  j["L_chi"] = rf(zs.L_chi);
  j["zeta_Fprime"] = rf(zs.zeta_Fprime);
  j["T_roots"] = {cplx_json(zp.T_roots[0]), cplx_json(zp.T_roots[1])};
  j["s_reps"] = {cplx_json(zp.s_reps[0]), cplx_json(zp.s_reps[1])};
  j["modulus_sq"] = zp.modulus_sq.str();
  j["order2_flag"] = zp.order2_flag;
  std::ostringstream os;
  os << "zeta_F  = (" << zs.zeta_F.num.to_string() << ") / (" << zs.zeta_F.den.to_string() << ")\n";
  os << "L       = (" << zs.L_chi.num.to_string() << ") / (" << zs.L_chi.den.to_string() << ")\n";
  os << "zeta_F' = (" << zs.zeta_Fprime.num.to_string() << ") / (" << zs.zeta_Fprime.den.to_string() << ")\n";
  os << "roots T = " << cplx_text(zp.T_roots[0]) << ", " << cplx_text(zp.T_roots[1]) << "  |T|^2 = "
     << zp.modulus_sq.str() << "\n";
  os << "zeros s = " << cplx_text(zp.s_reps[0]) << ", " << cplx_text(zp.s_reps[1]) << "\n";
  os << "zeta_F' has a pair of zeros of order 2: " << (zp.order2_flag ? "yes" : "no") << "\n";
  out.text = os.str();
  attach_report(out, check_identities(cd));
  return out;
}

Output cmd_pullback(const ClassData& cd) {
  Output out;
  Report rep;
  const Field& F2 = cd.curve2.field();
  auto& places = out.json["places"] = ojson::array();
  std::ostringstream os;
  std::set<std::uint32_t> hit;
  std::size_t bad_weights = 0;
  for (std::uint32_t z = 0; z < cd.nextpoints(); ++z) {
    if (cd.sigma_fixed({z}) || cd.sigma[z].value < z) continue;
    const auto nb = deg2_c0_neighbors(cd, {z});
    ojson row = {{"z", point_text(F2, cd.ext_point({z}))}, {"sigma_z", point_text(F2, cd.ext_point(cd.sigma[z]))}};
    auto& arr = row["neighbors"] = ojson::array();
    os << "{" << point_text(F2, cd.ext_point({z})) << ", " << point_text(F2, cd.ext_point(cd.sigma[z])) << "}:";
    for (const auto& n : nb) {
      arr.push_back({{"vertex", vertex_label(n.vertex)}, {"weight", n.weight}});
      os << " (" << vertex_label(n.vertex) << "," << n.weight << ")";
      if (const auto* t = std::get_if<Tr>(&n.vertex)) hit.insert(t->index);
    }
    os << "\n";
    if (nb.size() != 2 || nb[0].weight != cd.q + 1 || nb[1].weight != std::uint64_t(cd.q) * cd.q - cd.q) ++bad_weights;
    places.push_back(std::move(row));
  }
  rep.add_exact("weights (q+1, q^2-q)", bad_weights == 0, bad_weights, 0);
  rep.add_exact("degree-2 places reach every trace class", hit.size() == cd.tclasses.size(), hit.size(),
                cd.tclasses.size());

  // Pullback on decomposable (degree <= 2) and trace vertices. It is injective on each kind;
  // a half trace class t_D meets the decomposable class of D - sigma D, which lies in Cl0 X.
  std::map<ExtDec, Vertex> dec_image;
  std::size_t dec_collisions = 0;
  for (int n = 0; n <= 2; ++n)
    for (std::uint32_t i = 0; i < cd.npoints(); ++i) {
      const Vertex v = make_dec(cd, n, {i});
      auto [it, fresh] = dec_image.emplace(pullback_class(cd, v), v);
      if (!fresh && !(it->second == v)) ++dec_collisions;
    }
  std::set<ExtDec> tr_image;
  std::size_t tr_collisions = 0, cross = 0, cross_non_half = 0, halves = 0;
  for (std::uint32_t i = 0; i < cd.tclasses.size(); ++i) {
    const ExtDec e = pullback_class(cd, Tr{i});
    if (!tr_image.insert(e).second) ++tr_collisions;
    halves += cd.tclasses[i].is_half;
    if (dec_image.count(e)) {
      ++cross;
      if (!cd.tclasses[i].is_half) ++cross_non_half;
    }
  }
  rep.add_exact("pullback injective on decomposable vertices", dec_collisions == 0, dec_collisions, 0);
  rep.add_exact("pullback injective on trace vertices", tr_collisions == 0, tr_collisions, 0);
  rep.add_exact("trace/decomposable coincidences are exactly the half classes",
                cross == halves && cross_non_half == 0, cross, halves);
  out.text = os.str();
  attach_report(out, rep);
  return out;
}

// ---- scan ----------------------------------------------------------------------

struct FieldParams {
  unsigned p, k;
};

FieldParams field_of_order(unsigned q) {
  for (unsigned p = 2; p <= q; ++p) {
    bool prime = true;
    for (unsigned d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) continue;
    unsigned k = 0, v = 1;
    while (v < q) {
      v *= p;
      ++k;
    }
    if (v == q) return {p, k};
    if (q % p == 0) break;
  }
  throw UsageError("--q must be a prime power");
}

Output cmd_scan(const Options& o, unsigned cap) {
  Output out;
  std::vector<Curve> curves;
  std::vector<std::string> names;
  if (!o.corpus_file.empty()) {
    for (const auto& s : load_corpus(o)) {
      curves.push_back(make_curve(s, cap));
      names.push_back(s.name);
    }
  } else {
    if (o.q == 0) throw UsageError("scan needs --q or --corpus");
    const auto [p, k] = field_of_order(o.q);
    const Field F = Field::make(p, k, cap);
    const unsigned q = F.order();
    std::vector<std::array<FieldElem, 5>> tuples;
    if (o.random == 0) {
      if (q > 5) throw UsageError("exhaustive scan is limited to q <= 5; use --random N");
      const std::uint64_t total = std::uint64_t(q) * q * q * q * q;
      for (std::uint64_t v = 0; v < total; ++v) {
        std::array<FieldElem, 5> a{};
        std::uint64_t w = v;
        for (int i = 4; i >= 0; --i, w /= q) a[static_cast<std::size_t>(i)] = {static_cast<std::uint32_t>(w % q)};
        tuples.push_back(a);
      }
    } else {
      std::mt19937_64 rng(o.seed);
      std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
      while (tuples.size() < o.random) {
        std::array<FieldElem, 5> a{};
        for (auto& c : a) c = {pick(rng)};
        if (long_weierstrass_discriminant(F, a) != F.zero()) tuples.push_back(a);
      }
    }
    for (const auto& a : tuples) {
      if (long_weierstrass_discriminant(F, a) == F.zero()) continue;
      curves.push_back(Curve::make(F, a));
      names.emplace_back();
    }
  }

  auto& arr = out.json["curves"] = ojson::array();
  std::size_t failed = 0;
  std::ostringstream os;
  std::map<unsigned, std::size_t> h_hist;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const CurveSpec spec = spec_of(curves[i], names[i]);
    ojson row = curve_json(spec);
    std::vector<std::string> failures;
    try {
      const ClassDataPtr cdp = build_class_data(curves[i], cap);
      const ClassData& cd = *cdp;
      row["constants"] = constants_json(cd);
      Report rep = check_identities(cd);
      for (std::uint32_t x = 0; x < cd.npoints(); ++x)
        rep.merge(verify_graph(build_graph(cdp, {x}, o.depth)), "x=" + std::to_string(x) + ": ");
      const CuspSpace V = cusp_space(cd);
      row["cusp_dimension"] = V.dimension;
      for (const auto& e : rep.entries)
        if (!e.passed) failures.push_back(e.check);
      ++h_hist[cd.h];
    } catch (const Error& e) {
      failures.push_back(e.what());
    }
    row["failures"] = failures;
    if (!failures.empty()) {
      ++failed;
      os << "FAIL " << spec_to_json(spec).dump() << ": " << failures.front() << "\n";
    }
    arr.push_back(std::move(row));
  }
  out.json["summary"] = {{"curves", curves.size()}, {"failed", failed}};
  auto& hh = out.json["summary"]["class_numbers"] = ojson::object();
  for (const auto& [h, n] : h_hist) hh[std::to_string(h)] = n;
  os << "scanned " << curves.size() << " smooth curves, " << failed << " with failures\n";
  os << "class numbers:";
  for (const auto& [h, n] : h_hist) os << " h=" << h << ":" << n;
  os << "\n";
  out.text = os.str();
  out.ok = failed == 0;
  return out;
}

void emit(const Output& o, const std::string& command, const Options& opt, const ojson& curve,
          std::ostream& out) {
  std::string body;
  if (opt.format == "json") {
    ojson j;
    j["schema"] = "hecke-report/1";
    j["command"] = command;
    if (!curve.is_null()) j["curve"] = curve;
    for (auto it = o.json.begin(); it != o.json.end(); ++it) j[it.key()] = it.value();
    j["status"] = o.ok ? "pass" : "fail";
    body = j.dump(2) + "\n";
  } else {
    body = o.text;
    body += o.ok ? "status: pass\n" : "status: FAIL\n";
  }
  if (opt.output.empty()) {
    out << body;
  } else {
    std::ofstream f(opt.output);
    if (!f) throw UsageError("cannot write " + opt.output);
    f << body;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hecke graphs and automorphic forms for elliptic function fields", "hecke"};
  app.require_subcommand(1);

  auto curve_opts = [&](CLI::App* sc) {
    sc->add_option("--named", o.named, "corpus curve name (X2 X3 X4 X5 X6 E23)");
    sc->add_option("--p", o.p, "field characteristic");
    sc->add_option("--k", o.k, "field degree");
    sc->add_option("--coeffs", o.coeffs, "[a1,a2,a3,a4,a6] or [a4,a6]; entries int or coefficient list");
    sc->add_option("--corpus", o.corpus_file, "JSON-lines corpus file {name,p,k,coeffs}");
    sc->add_option("--depth", o.depth, "truncation depth")->check(CLI::Range(2, 64));
    sc->add_option("--tolerance", o.tolerance, "numeric rank tolerance")->check(CLI::PositiveNumber);
    sc->add_option("--output", o.output, "write to file instead of stdout");
  };
  auto fmt = [&](CLI::App* sc, const std::vector<std::string>& allowed) {
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* info = app.add_subcommand("info", "class-group data of a curve");
  curve_opts(info);
  fmt(info, {"text", "json"});
  info->add_flag("--dump-corpus", o.dump_corpus, "print the built-in corpus as JSON lines");
  auto* graph = app.add_subcommand("graph", "build and export G_x");
  curve_opts(graph);
  o.format = "dot";
  graph->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json", "text"}));
  graph->add_option("--x", o.x, "place: point index or 'inf'");
  auto* verify = app.add_subcommand("verify", "graph invariants for every rational place");
  curve_opts(verify);
  fmt(verify, {"text", "json"});
  auto* cusp = app.add_subcommand("cusp", "exact cusp-form space");
  curve_opts(cusp);
  fmt(cusp, {"text", "json"});
  auto* eis = app.add_subcommand("eisenstein", "numeric Eisenstein eigenfunction");
  curve_opts(eis);
  fmt(eis, {"text", "json"});
  eis->add_option("--s", o.s, "complex parameter a+bi");
  eis->add_option("--omega", o.omega, "index of a quadratic character twist");
  auto* tor = app.add_subcommand("toroidal", "generators of the toroidal space");
  curve_opts(tor);
  fmt(tor, {"text", "json"});
  auto* zeta = app.add_subcommand("zeta", "zeta and L series, zeros and identities");
  curve_opts(zeta);
  fmt(zeta, {"text", "json"});
  auto* pull = app.add_subcommand("pullback", "degree-2 neighbours of c0");
  curve_opts(pull);
  fmt(pull, {"text", "json"});
  auto* scan = app.add_subcommand("scan", "verify every smooth curve over F_q or a random sample");
  curve_opts(scan);
  fmt(scan, {"text", "json"});
  scan->add_option("--q", o.q, "field order");
  scan->add_option("--random", o.random, "number of random curves instead of the exhaustive scan");
  scan->add_option("--seed", o.seed, "seed for --random");

  std::vector<std::string> argv_store{"hecke"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  // graph's default format differs; others reset to text unless given.
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  auto* sc = app.get_subcommands().front();
  const std::string command = sc->get_name();
  if (command != "graph" && sc->count("--format") == 0) o.format = "text";

  try {
    const unsigned cap = field_cap_from_env();
    if (command == "info" && o.dump_corpus) {
      out << corpus_to_jsonl(load_corpus(o));
      return 0;
    }
    if (command == "scan") {
      const Output res = cmd_scan(o, cap);
      emit(res, command, o, nullptr, out);
      return res.ok ? 0 : 1;
    }

    const CurveSpec spec = resolve_spec(o);
    const Curve curve = make_curve(spec, cap);
    const ClassDataPtr cdp = build_class_data(curve, cap);
    const ClassData& cd = *cdp;
    const ojson cj = curve_json(spec);

    if (command == "graph") {
      const HeckeGraph g = build_graph(cdp, resolve_place(cd, o.x), o.depth);
      std::string body;
      if (o.format == "text") {
        std::ostringstream os;
        for (const auto& v : g.vertices) {
          os << vertex_label(v) << " ->";
          for (const auto& e : g.edges.at(v)) os << " " << vertex_label(e.target) << "(" << e.m << ")";
          os << "\n";
        }
        body = os.str();
      } else {
        body = export_graph(g, o.format == "dot" ? GraphFormat::Dot : GraphFormat::Json, spec.name);
      }
      if (o.output.empty()) out << body;
      else std::ofstream(o.output) << body;
      return 0;
    }

    Output res;
    if (command == "info") res = cmd_info(spec, cd);
    else if (command == "verify") res = cmd_verify(cd, cdp, o.depth);
    else if (command == "cusp") res = cmd_cusp(cd);
    else if (command == "eisenstein") res = cmd_eisenstein(cd, o);
    else if (command == "toroidal") res = cmd_toroidal(cd, o.depth, o.tolerance);
    else if (command == "zeta") res = cmd_zeta(cd);
    else if (command == "pullback") res = cmd_pullback(cd);
    res.json = [&] {
      ojson j;
      j["constants"] = constants_json(cd);
      for (auto it = res.json.begin(); it != res.json.end(); ++it) j[it.key()] = it.value();
      return j;
    }();
    emit(res, command, o, cj, out);
    return res.ok ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::NonPrime:
      case ErrorCode::DegreeOutOfRange:
      case ErrorCode::CapExceeded:
      case ErrorCode::SingularCurve:
      case ErrorCode::DepthTooSmall:
      case ErrorCode::WrongOrderForCharacter:
        return 2;  // the request itself is invalid
      default:
        return 1;
    }
  }
}

}  // namespace hecke
