#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "hecke/heckegraph.hpp"

using namespace hecke;
using testutil::named;

namespace {

using NbList = std::vector<std::pair<Vertex, std::uint64_t>>;

NbList sorted(NbList v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Edge multiset with trace vertices made anonymous; the two t-vertices of X2 are interchangeable.
std::multiset<std::tuple<std::string, std::string, std::uint64_t>> anonymised(const HeckeGraph& g) {
  auto lab = [](const Vertex& v) { return std::holds_alternative<Tr>(v) ? std::string("t") : vertex_label(v); };
  std::multiset<std::tuple<std::string, std::string, std::uint64_t>> out;
  for (const auto& [v, es] : g.edges)
    for (const auto& e : es) out.insert({lab(e.origin), lab(e.target), e.m});
  return out;
}

}  // namespace

TEST_CASE("X2 neighbourhoods of the nucleus") {
  const auto& cd = *named("X2");
  const PointId x{0};
  CHECK(sorted(neighbours(cd, x, Dec{0, {0}})) == NbList{{Dec{1, {0}}, 3}});
  CHECK(sorted(neighbours(cd, x, S0{})) == NbList{{Si{0}, 2}, {Dec{1, {0}}, 1}});
  CHECK(sorted(neighbours(cd, x, Si{0})) == NbList{{Tr{0}, 1}, {Tr{1}, 1}, {S0{}, 1}});
  CHECK(sorted(neighbours(cd, x, Tr{0})) == NbList{{Si{0}, 3}});
}

TEST_CASE("X2 graph at depth 4 matches the hand drawing") {
  const auto g = build_graph(named("X2"), {0}, 4);
  CHECK(g.vertices.size() == 9);
  std::multiset<std::tuple<std::string, std::string, std::uint64_t>> want = {
      {"t", "s[0]", 3},         {"t", "s[0]", 3},         {"s[0]", "t", 1},         {"s[0]", "t", 1},
      {"s[0]", "s0", 1},        {"s0", "s[0]", 2},        {"s0", "c[1,0]", 1},      {"c[0,0]", "c[1,0]", 3},
      {"c[1,0]", "s0", 1},      {"c[1,0]", "c[0,0]", 1},  {"c[1,0]", "c[2,0]", 1},  {"c[2,0]", "c[1,0]", 2},
      {"c[2,0]", "c[3,0]", 1},  {"c[3,0]", "c[2,0]", 2},  {"c[3,0]", "c[4,0]", 1},  {"c[4,0]", "c[3,0]", 2}};
  CHECK(anonymised(g) == want);
}

TEST_CASE("graphs of the named curves verify") {
  const std::vector<std::pair<const char*, std::size_t>> comps = {
      {"X2", 1}, {"X3", 1}, {"X4", 1}, {"X5", 2}, {"X6", 4}, {"E23", 1}};
  for (auto [name, c] : comps) {
    const auto cd = named(name);
    for (std::uint32_t x = 0; x < cd->npoints(); ++x) {
      const auto g = build_graph(cd, {x}, 6);
      const Report r = verify_graph(g);
      CAPTURE(name);
      CHECK(r.passed());
      CHECK(component_count(g) == c);
      std::size_t cusps = 0;
      for (const auto& v : g.vertices)
        if (const auto* d = std::get_if<Dec>(&v); d && d->n == 6) ++cusps;
      CHECK(cusps == cd->h);
    }
  }
}

TEST_CASE("edge weights and truncation") {
  for (const char* name : {"X2", "X5", "X6", "E23"}) {
    const auto cd = named(name);
    const std::uint64_t q = cd->q;
    const auto g = build_graph(cd, {0}, 5);
    for (const auto& [v, es] : g.edges) {
      std::uint64_t sum = 0;
      for (const auto& e : es) {
        sum += e.m;
        CHECK(g.weight(e.target, v) > 0);
        CHECK(std::abs(delta(e.target) - delta(v)) <= 1);
        CHECK((e.m >= 1 && e.m <= q + 1));
      }
      if (g.interior(v)) {
        CHECK(sum == q + 1);
      } else {
        // boundary vertices keep only edges back inside
        for (const auto& e : es) CHECK(delta(e.target) < delta(v));
      }
    }
  }
}

TEST_CASE("X5 trace vertices attach by the trace congruence") {
  const auto& cd = *named("X5");
  for (std::uint32_t x = 0; x < cd.npoints(); ++x)
    for (std::uint32_t i = 0; i < cd.tclasses.size(); ++i) {
      const auto nb = neighbours(cd, {x}, Tr{i});
      REQUIRE(nb.size() == 1);
      const auto target = std::get<Si>(nb[0].first).index;
      CHECK(nb[0].second == cd.q + 1);
      if (cd.tclasses[i].is_half)
        CHECK(target == cd.sclass_of[x]);
      else
        CHECK(target != cd.sclass_of[x]);
    }
}

TEST_CASE("s-vertex out-degree identity") {
  for (const char* name : {"X3", "X5", "X6", "E23"}) {
    const auto& cd = *named(name);
    for (std::uint32_t x = 0; x < cd.npoints(); ++x)
      for (std::uint32_t j = 0; j < cd.sclasses.size(); ++j) {
        std::uint64_t sum = 0;
        for (const auto& [v, m] : neighbours(cd, {x}, Si{j})) sum += m;
        CHECK(sum == cd.q + 1);
      }
  }
}

TEST_CASE("canonical decomposable labels") {
  const auto& cd = *named("X5");
  for (std::uint32_t P = 0; P < cd.npoints(); ++P) {
    CHECK(make_dec(cd, -3, {P}) == Vertex(Dec{3, cd.neg({P})}));
    CHECK(make_dec(cd, 0, {P}) == make_dec(cd, 0, cd.neg({P})));
  }
  CHECK(delta(Dec{4, {1}}) == 4);
  CHECK(delta(S0{}) == 0);
  CHECK(delta(Si{1}) == -1);
  CHECK(delta(Tr{0}) == -2);
  CHECK(vertex_label(Dec{2, {3}}) == "c[2,3]");
  for (const Vertex& v : {Vertex(Tr{1}), Vertex(Si{0}), Vertex(S0{}), Vertex(Dec{5, {2}})})
    CHECK(parse_vertex_label(vertex_label(v)) == v);
}

TEST_CASE("graph construction is deterministic and exports round trip") {
  for (const char* name : {"X2", "X6"}) {
    const auto cd = named(name);
    const auto a = build_graph(cd, {0}, 5), b = build_graph(cd, {0}, 5);
    CHECK(export_graph(a, GraphFormat::Json, name) == export_graph(b, GraphFormat::Json, name));
    CHECK(export_graph(a, GraphFormat::Dot) == export_graph(b, GraphFormat::Dot));
    const auto back = graph_from_json(cd, export_graph(a, GraphFormat::Json, name));
    CHECK(back.vertices == a.vertices);
    CHECK(back.edges == a.edges);
    CHECK(back.depth == a.depth);
    CHECK(back.place == a.place);

    const std::string dot = export_graph(a, GraphFormat::Dot);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));
    std::size_t nodes = 0, arrows = 0, edges = 0;
    for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; pos += 2) ++arrows;
    for (const auto& [v, es] : a.edges) edges += es.size();
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);)
      if (line.find("->") == std::string::npos && line.size() > 2 && line.back() == ';') ++nodes;
    CHECK(nodes == a.vertices.size());
    CHECK(arrows == edges);
  }
}

TEST_CASE("graph errors") {
  try {
    build_graph(named("X2"), {0}, 1);
    FAIL("depth 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DepthTooSmall);
  }
  // an odd h2 cannot carry the halved s-vertex weights
  ClassData broken = *named("X6");
  broken.h2 = 3;
  try {
    neighbours(broken, {0}, Si{1});
    FAIL("odd h2 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralWeight);
  }
}

TEST_CASE("vertex measure satisfies detailed balance in every graph") {
  for (const char* name : {"X2", "X5", "X6", "E23"}) {
    const auto cd = named(name);
    const int depth = 4;
    const auto mu = vertex_measure(*cd, depth);
    CHECK(mu.at(Dec{0, {0}}) == 1);
    for (std::uint32_t x = 0; x < cd->npoints(); ++x) {
      const auto g = build_graph(cd, {x}, depth + 1);
      for (const auto& v : g.vertices) {
        if (delta(v) > depth) continue;
        REQUIRE(mu.count(v));
        CHECK(mu.at(v) > 0);
        for (const auto& e : g.edges.at(v)) {
          if (delta(e.target) > depth) continue;
          CHECK(mu.at(v) * Rational(e.m) == mu.at(e.target) * Rational(g.weight(e.target, v)));
        }
      }
    }
  }
  // X2 by hand: mu(c_x) = 3, mu(s0) = 3, mu(s_x) = 6, mu(t) = 2
  const auto mu = vertex_measure(*named("X2"), 2);
  CHECK(mu.at(Dec{1, {0}}) == 3);
  CHECK(mu.at(S0{}) == 3);
  CHECK(mu.at(Si{0}) == 6);
  CHECK(mu.at(Tr{0}) == 2);
}

TEST_CASE("pullback of classes to the quadratic extension") {
  for (const char* name : {"X2", "X5", "X6", "E23"}) {
    const auto& cd = *named(name);
    CHECK(pullback_class(cd, Dec{0, {0}}) == ExtDec{0, {0}});
    for (std::uint32_t P = 0; P < cd.npoints(); ++P)
      CHECK(pullback_class(cd, Dec{2, {P}}) == ExtDec{2, cd.embed_point[P]});
    for (std::uint32_t i = 0; i < cd.tclasses.size(); ++i) {
      const ExtPointId D = cd.tclasses[i].rep;
      const ExtDec e = pullback_class(cd, Tr{i});
      CHECK(e.n == 0);
      CHECK(e == make_ext_dec(cd, 0, cd.ext_sub(D, cd.sigma[D.value])));
    }
    for (const Vertex& v : {Vertex(S0{}), Vertex(Si{0})}) {
      try {
        pullback_class(cd, v);
        FAIL("s-vertex accepted");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnsupportedVariant);
      }
    }
  }
}

TEST_CASE("degree-2 neighbours of c0") {
  for (const char* name : {"X2", "X3", "X5", "X6", "E23"}) {
    const auto& cd = *named(name);
    const std::uint64_t q = cd.q;
    std::set<std::uint32_t> reached;
    for (std::uint32_t z = 0; z < cd.nextpoints(); ++z) {
      if (cd.sigma_fixed({z})) {
        try {
          deg2_c0_neighbors(cd, {z});
          FAIL("fixed point accepted");
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::SigmaFixedPoint);
        }
        continue;
      }
      const auto nb = deg2_c0_neighbors(cd, {z});
      REQUIRE(nb.size() == 2);
      CHECK(nb[0].vertex == Vertex(Dec{2, trace_to_base(cd, ExtPointId{z})}));
      CHECK(nb[0].weight == q + 1);
      CHECK(nb[1].vertex == Vertex(Tr{*cd.tclass_index({z})}));
      CHECK(nb[0].weight + nb[1].weight == q * q + 1);
      reached.insert(std::get<Tr>(nb[1].vertex).index);
    }
    CHECK(reached.size() == cd.tclasses.size());
  }
}
