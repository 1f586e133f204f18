#include "hecke/heckegraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hecke {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Nbhd = std::vector<std::pair<Vertex, std::uint64_t>>;

void put(Nbhd& out, const Vertex& v, std::uint64_t m) {
  for (auto& [w, k] : out)
    if (w == v) {
      k += m;
      return;
    }
  out.emplace_back(v, m);
}

std::uint64_t half_h2(const ClassData& cd) {
  if (cd.h2 % 2) throw Error(ErrorCode::NonIntegralWeight, "weight h2/2 with h2 odd");
  return cd.h2 / 2;
}

Nbhd nbhd_s(const ClassData& cd, PointId x, PointId y) {
  Nbhd out;
  const std::uint64_t h2 = cd.h2;
  if (cd.congruent_mod_doubles(y, x)) put(out, S0{}, h2);
  // c_{z-x} for every rational z != x with z = y mod 2Cl^0; equal vertices collapse.
  std::set<Vertex> seen;
  for (std::uint32_t zi = 0; zi < cd.npoints(); ++zi) {
    const PointId z{zi};
    if (z == x || !cd.congruent_mod_doubles(z, y)) continue;
    const PointId D = cd.sub(z, x);
    const Vertex v = make_dec(cd, 0, D);
    if (!seen.insert(v).second) continue;
    put(out, v, cd.is_two_torsion(D) ? half_h2(cd) : h2);
  }
  for (std::uint32_t i = 0; i < cd.tclasses.size(); ++i) {
    const TClass& t = cd.tclasses[i];
    const PointId tr = trace_to_base(cd, t.rep);
    if (!cd.congruent_mod_doubles(y, cd.add(x, tr))) continue;
    put(out, Tr{i}, t.is_half ? half_h2(cd) : h2);
  }
  return out;
}

}  // namespace

Vertex make_dec(const ClassData& cd, int n, PointId P) {
  if (n < 0) return Dec{-n, cd.neg(P)};
  if (n == 0) return Dec{0, std::min(P, cd.neg(P))};
  return Dec{n, P};
}

int delta(const Vertex& v) {
  return std::visit(overloaded{[](const Tr&) { return -2; }, [](const Si&) { return -1; },
                               [](const S0&) { return 0; }, [](const Dec& d) { return d.n; }},
                    v);
}

std::string vertex_label(const Vertex& v) {
  return std::visit(
      overloaded{[](const Tr& t) { return "t[" + std::to_string(t.index) + "]"; },
                 [](const Si& s) { return "s[" + std::to_string(s.index) + "]"; },
                 [](const S0&) { return std::string("s0"); },
                 [](const Dec& d) {
                   return "c[" + std::to_string(d.n) + "," + std::to_string(d.point.value) + "]";
                 }},
      v);
}

Nbhd neighbours(const ClassData& cd, PointId x, const Vertex& v) {
  const std::uint64_t q = cd.q;
  const PointId O{0};
  Nbhd out;
  std::visit(
      overloaded{
          [&](const Tr& t) {
            const PointId tr = trace_to_base(cd, cd.tclasses[t.index].rep);
            put(out, Si{cd.sclass_of[cd.add(x, tr).value]}, q + 1);
          },
          [&](const Si& s) { out = nbhd_s(cd, x, cd.sclasses[s.index].rep); },
          [&](const S0&) {
            put(out, Dec{1, x}, 1);
            put(out, Si{cd.sclass_of[x.value]}, q);
          },
          [&](const Dec& d) {
            if (d.n == 0 && d.point == O) {
              put(out, Dec{1, x}, q + 1);
            } else if (d.n == 0) {
              // c_{y-x} with y = x + P
              const PointId P = d.point;
              const PointId y = cd.add(x, P);
              if (cd.is_two_torsion(P)) {
                put(out, Dec{1, y}, 2);
              } else {
                put(out, Dec{1, y}, 1);
                put(out, Dec{1, cd.sub(x, P)}, 1);
              }
              put(out, Si{cd.sclass_of[y.value]}, q - 1);
            } else if (d.n == 1 && d.point == x) {
              put(out, Dec{2, cd.add(x, x)}, 1);
              put(out, Dec{0, O}, 1);
              put(out, S0{}, q - 1);
            } else {
              put(out, make_dec(cd, d.n + 1, cd.add(d.point, x)), 1);
              put(out, make_dec(cd, d.n - 1, cd.sub(d.point, x)), q);
            }
          }},
      v);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t HeckeGraph::weight(const Vertex& from, const Vertex& to) const {
  auto it = edges.find(from);
  if (it == edges.end()) return 0;
  for (const auto& e : it->second)
    if (e.target == to) return e.m;
  return 0;
}

HeckeGraph build_graph(ClassDataPtr cdp, PointId x, int depth) {
  if (depth < 2) throw Error(ErrorCode::DepthTooSmall, "depth must be at least 2");
  const ClassData& cd = *cdp;
  if (x.value >= cd.npoints()) throw Error(ErrorCode::PointNotOnCurve, "place not a rational point");
  HeckeGraph g{cdp, x, depth, {}, {}};

  for (std::uint32_t i = 0; i < cd.tclasses.size(); ++i) g.vertices.push_back(Tr{i});
  for (std::uint32_t i = 0; i < cd.sclasses.size(); ++i) g.vertices.push_back(Si{i});
  g.vertices.push_back(S0{});
  for (std::uint32_t i = 0; i < cd.npoints(); ++i) {
    const Vertex v = make_dec(cd, 0, {i});
    if (std::get<Dec>(v).point.value == i) g.vertices.push_back(v);
  }
  for (int n = 1; n <= depth; ++n)
    for (std::uint32_t i = 0; i < cd.npoints(); ++i) g.vertices.push_back(Dec{n, {i}});
  std::sort(g.vertices.begin(), g.vertices.end());

  for (const Vertex& v : g.vertices) {
    auto& out = g.edges[v];
    const bool inner = g.interior(v);
    for (const auto& [w, m] : neighbours(cd, x, v)) {
      // Boundary vertices keep only the edges pointing back inward.
      if (!inner && delta(w) >= delta(v)) continue;
      out.push_back({v, w, m});
    }
  }
  return g;
}

std::size_t component_count(const HeckeGraph& g) {
  std::map<Vertex, std::size_t> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i]] = i;
  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& [v, out] : g.edges)
    for (const auto& e : out) {
      auto it = idx.find(e.target);
      if (it != idx.end()) parent[find(idx[v])] = find(it->second);
    }
  std::size_t n = 0;
  for (std::size_t i = 0; i < parent.size(); ++i) n += find(i) == i;
  return n;
}

Report verify_graph(const HeckeGraph& g) {
  const ClassData& cd = *g.cd;
  const std::uint64_t q = cd.q;
  Report rep;
  const std::set<Vertex> vset(g.vertices.begin(), g.vertices.end());

  std::size_t bad_sum = 0, bad_inverse = 0, bad_parity = 0, dangling = 0;
  std::set<std::uint64_t> allowed{1, 2, q - 1, q, q + 1, cd.h2};
  if (cd.h2 % 2 == 0) allowed.insert(cd.h2 / 2);
  std::size_t bad_weight = 0;
  for (const Vertex& v : g.vertices) {
    const auto& out = g.edges.at(v);
    std::uint64_t sum = 0;
    for (const auto& e : out) {
      sum += e.m;
      if (!vset.count(e.target)) ++dangling;
      if (std::abs(delta(e.target) - delta(v)) != 1) ++bad_parity;
      if (!allowed.count(e.m)) ++bad_weight;
      if (g.interior(e.target) && g.weight(e.target, v) == 0) ++bad_inverse;
    }
    if (g.interior(v) && sum != q + 1) ++bad_sum;
  }
  rep.add_exact("weight sums = q+1 on interior", bad_sum == 0, bad_sum, 0);
  rep.add_exact("inverse edges exist", bad_inverse == 0, bad_inverse, 0);
  rep.add_exact("delta parity of edges", bad_parity == 0, bad_parity, 0);
  rep.add_exact("edge targets are vertices", dangling == 0, dangling, 0);
  rep.add_exact("edge weights in the allowed set", bad_weight == 0, bad_weight, 0);

  const std::size_t comps = component_count(g);
  rep.add_exact("components = h2", comps == cd.h2, comps, cd.h2);

  // Cusps: rays starting at a degree-1 class, outward weight 1 and inward weight q up to the boundary.
  std::size_t cusps = 0;
  for (std::uint32_t i = 0; i < cd.npoints(); ++i) {
    Vertex v = Dec{1, {i}};
    bool ok = true;
    for (int n = 1; n < g.depth && ok; ++n) {
      const Vertex w = make_dec(cd, n + 1, cd.add({std::get<Dec>(v).point}, g.place));
      ok = g.weight(v, w) == 1 && g.weight(w, v) == q;
      v = w;
    }
    cusps += ok;
  }
  rep.add_exact("cusps = h", cusps == cd.h, cusps, cd.h);

  std::size_t nt = 0, ns = 0, n0 = 0, ndec0 = 0;
  std::vector<std::size_t> per_deg(g.depth + 1, 0);
  for (const Vertex& v : g.vertices) {
    if (std::holds_alternative<Tr>(v)) ++nt;
    else if (std::holds_alternative<Si>(v)) ++ns;
    else if (std::holds_alternative<S0>(v)) ++n0;
    else if (const Dec& d = std::get<Dec>(v); d.n == 0) ++ndec0;
    else ++per_deg[d.n];
  }
  bool census = nt == cd.rp && ns == cd.h2 && n0 == 1 && ndec0 == cd.r + 1;
  for (int n = 1; n <= g.depth; ++n) census = census && per_deg[n] == cd.h;
  const std::size_t expect = cd.rp + cd.h2 + 1 + (cd.r + 1) + std::size_t(cd.h) * g.depth;
  rep.add_exact("vertex census", census && g.vertices.size() == expect, g.vertices.size(), expect);
  return rep;
}

ExtDec make_ext_dec(const ClassData& cd, int n, ExtPointId P) {
  if (n < 0) return {-n, cd.ext_neg(P)};
  if (n == 0) return {0, std::min(P, cd.ext_neg(P))};
  return {n, P};
}

ExtDec pullback_class(const ClassData& cd, const Vertex& v) {
  if (const auto* d = std::get_if<Dec>(&v)) return make_ext_dec(cd, d->n, cd.embed_point[d->point.value]);
  if (const auto* t = std::get_if<Tr>(&v)) {
    const ExtPointId D = cd.tclasses[t->index].rep;
    return make_ext_dec(cd, 0, cd.ext_sub(D, cd.sigma[D.value]));
  }
  throw Error(ErrorCode::UnsupportedVariant, "pullback only defined on decomposable and trace vertices");
}

namespace {

// Decomposable part of U_z(c'_{(n,P)}) on X' for the degree-1 place z of X'. Only the
// rules needed for c'_0 and c'_z are required by the degree-2 composition.
std::vector<std::pair<ExtDec, std::uint64_t>> ext_dec_step(const ClassData& cd, ExtPointId z,
                                                           const ExtDec& v) {
  const std::uint64_t q2 = std::uint64_t(cd.q) * cd.q;
  const ExtPointId O{0};
  if (v.n == 0 && v.point == O) return {{{1, z}, q2 + 1}};
  if (v.n == 1 && v.point != z)
    return {{make_ext_dec(cd, 2, cd.ext_add(v.point, z)), 1},
            {make_ext_dec(cd, 0, cd.ext_sub(v.point, z)), q2}};
  throw Error(ErrorCode::InvariantViolation, "unexpected vertex in degree-2 composition");
}

}  // namespace

std::vector<Deg2Neighbour> deg2_c0_neighbors(const ClassData& cd, ExtPointId z) {
  if (z.value >= cd.nextpoints()) throw Error(ErrorCode::PointNotOnCurve, "not a point of X'");
  if (cd.sigma_fixed(z)) throw Error(ErrorCode::SigmaFixedPoint, "z is defined over the base field");
  const std::uint64_t q = cd.q;
  const ExtPointId sz = cd.sigma[z.value];

  // c'_0 --G_z--> c'_z --G_{sigma z}--> {c'_{z+sigma z}, c'_{z - sigma z}}
  std::map<ExtDec, std::uint64_t> composed;
  for (const auto& [v1, m1] : ext_dec_step(cd, z, {0, {0}}))
    for (const auto& [v2, m2] : ext_dec_step(cd, sz, v1)) composed[v2] += m1 * m2;

  // The composite only determines which vertices occur: they are the pullbacks of c_y and t_z.
  const PointId tr = trace_to_base(cd, z);
  const auto tz = cd.tclass_index(z);
  if (!tz) throw Error(ErrorCode::InvariantViolation, "non-fixed point in the zero class of Q");
  const Vertex cy = Dec{2, tr}, t = Tr{*tz};
  std::set<ExtDec> got;
  for (const auto& [v, m] : composed) got.insert(v);
  if (got != std::set<ExtDec>{pullback_class(cd, cy), pullback_class(cd, t)})
    throw Error(ErrorCode::InvariantViolation, "degree-2 composition reaches unexpected vertices");

  // c_y carries weight q+1; t_z takes the rest of q_y + 1 = q^2 + 1.
  const std::uint64_t total = q * q + 1;
  std::vector<Deg2Neighbour> closed{{cy, q + 1}, {t, total - (q + 1)}};
  return closed;
}

std::map<Vertex, Rational> vertex_measure(const ClassData& cd, int depth) {
  std::map<Vertex, Rational> mu;
  mu[Dec{0, {0}}] = 1;
  std::vector<HeckeGraph> graphs;
  // Non-owning handle; the graphs do not outlive this call.
  auto alias = std::shared_ptr<const ClassData>(std::shared_ptr<const ClassData>(), &cd);
  for (std::uint32_t x = 0; x < cd.npoints(); ++x) graphs.push_back(build_graph(alias, {x}, depth + 1));

  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : graphs)
      for (const auto& [v, out] : g.edges) {
        if (!g.interior(v)) continue;
        auto it = mu.find(v);
        if (it == mu.end()) continue;
        for (const auto& e : out) {
          const std::uint64_t back = g.weight(e.target, v);
          if (back == 0) continue;
          const Rational val = it->second * Rational(e.m) / Rational(back);
          auto [jt, fresh] = mu.emplace(e.target, val);
          if (fresh) changed = true;
          else if (jt->second != val)
            throw Error(ErrorCode::InvariantViolation, "measure is not consistent across places");
        }
      }
  }
  std::map<Vertex, Rational> out;
  for (auto& [v, m] : mu)
    if (delta(v) <= depth) out.emplace(v, m);
  return out;
}

}  // namespace hecke
