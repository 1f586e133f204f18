#include <sstream>

#include "hecke/heckegraph.hpp"
#include "json.hpp"

namespace hecke {

namespace {

std::string point_text(const ClassData& cd, PointId P) {
  const Point& pt = cd.point(P);
  if (pt.infinity) return "inf";
  const Field& F = cd.curve.field();
  return "(" + F.to_string(pt.x) + "," + F.to_string(pt.y) + ")";
}

}  // namespace

std::string export_graph(const HeckeGraph& g, GraphFormat fmt, const std::string& curve_name) {
  const ClassData& cd = *g.cd;
  if (fmt == GraphFormat::Dot) {
    std::ostringstream os;
    os << "digraph \"G_x\" {\n";
    os << "  // x = " << point_text(cd, g.place) << ", depth " << g.depth << "\n";
    for (const Vertex& v : g.vertices) os << "  \"" << vertex_label(v) << "\";\n";
    for (const Vertex& v : g.vertices)
      for (const auto& e : g.edges.at(v))
        os << "  \"" << vertex_label(e.origin) << "\" -> \"" << vertex_label(e.target)
           << "\" [label=\"" << e.m << "\"];\n";
    os << "}\n";
    return os.str();
  }

  nlohmann::ordered_json j;
  j["schema"] = "hecke-graph/1";
  j["curve"] = curve_name;
  j["q"] = cd.q;
  j["x"] = g.place.value;
  j["x_point"] = point_text(cd, g.place);
  j["depth"] = g.depth;
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (const Vertex& v : g.vertices) vs.push_back(vertex_label(v));
  auto& es = j["edges"] = nlohmann::ordered_json::array();
  for (const Vertex& v : g.vertices)
    for (const auto& e : g.edges.at(v))
      es.push_back({{"from", vertex_label(e.origin)}, {"to", vertex_label(e.target)}, {"m", e.m}});
  j["constants"] = {{"h", cd.h}, {"h2", cd.h2}, {"hp", cd.hp}, {"h2p", cd.h2p}, {"r", cd.r}, {"rp", cd.rp}};
  return j.dump(2) + "\n";
}

Vertex parse_vertex_label(const std::string& s) {
  auto bad = [&]() { return std::invalid_argument("bad vertex label: " + s); };
  if (s == "s0") return S0{};
  if (s.size() < 4 || s[1] != '[' || s.back() != ']') throw bad();
  const std::string body = s.substr(2, s.size() - 3);
  if (s[0] == 't') return Tr{static_cast<std::uint32_t>(std::stoul(body))};
  if (s[0] == 's') return Si{static_cast<std::uint32_t>(std::stoul(body))};
  if (s[0] == 'c') {
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw bad();
    return Dec{std::stoi(body.substr(0, comma)), {static_cast<std::uint32_t>(std::stoul(body.substr(comma + 1)))}};
  }
  throw bad();
}

HeckeGraph graph_from_json(ClassDataPtr cd, const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("schema") != "hecke-graph/1") throw std::invalid_argument("unknown graph schema");
  HeckeGraph g{std::move(cd), {j.at("x").get<std::uint32_t>()}, j.at("depth").get<int>(), {}, {}};
  for (const auto& v : j.at("vertices")) {
    g.vertices.push_back(parse_vertex_label(v.get<std::string>()));
    g.edges[g.vertices.back()];
  }
  for (const auto& e : j.at("edges")) {
    const Vertex from = parse_vertex_label(e.at("from").get<std::string>());
    g.edges[from].push_back({from, parse_vertex_label(e.at("to").get<std::string>()), e.at("m").get<std::uint64_t>()});
  }
  return g;
}

}  // namespace hecke
