#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hecke/picard.hpp"
#include "hecke/report.hpp"

namespace hecke {

using Rational = boost::multiprecision::cpp_rational;

// c_D with D <-> (n, P): O + L_D, deg D = n.
struct Dec {
  int n = 0;
  PointId point;
  auto operator<=>(const Dec&) const = default;
};
struct Tr {
  std::uint32_t index = 0;  // into ClassData::tclasses
  auto operator<=>(const Tr&) const = default;
};
struct Si {
  std::uint32_t index = 0;  // into ClassData::sclasses
  auto operator<=>(const Si&) const = default;
};
struct S0 {
  auto operator<=>(const S0&) const = default;
};

// Alternative order doubles as the canonical vertex order: traces, s-classes, s0, then Dec by (n, P).
using Vertex = std::variant<Tr, Si, S0, Dec>;

Vertex make_dec(const ClassData& cd, int n, PointId P);
int delta(const Vertex& v);
std::string vertex_label(const Vertex& v);

struct WeightedEdge {
  Vertex origin;
  Vertex target;
  std::uint64_t m = 0;
  bool operator==(const WeightedEdge&) const = default;
};

struct HeckeGraph {
  ClassDataPtr cd;
  PointId place;
  int depth = 0;
  std::vector<Vertex> vertices;                        // sorted
  std::map<Vertex, std::vector<WeightedEdge>> edges;   // out-edges, targets sorted

  std::uint64_t weight(const Vertex& from, const Vertex& to) const;
  bool interior(const Vertex& v) const { return delta(v) <= depth - 1; }
};

// Full out-neighbourhood U_x(v) by the edge theorem (v with delta <= 1) or the cusp pattern.
std::vector<std::pair<Vertex, std::uint64_t>> neighbours(const ClassData& cd, PointId x, const Vertex& v);

HeckeGraph build_graph(ClassDataPtr cd, PointId x, int depth);
Report verify_graph(const HeckeGraph& g);
std::size_t component_count(const HeckeGraph& g);

// Vertex over X': Dec' (n, point of X').
struct ExtDec {
  int n = 0;
  ExtPointId point;
  auto operator<=>(const ExtDec&) const = default;
};
ExtDec make_ext_dec(const ClassData& cd, int n, ExtPointId P);
ExtDec pullback_class(const ClassData& cd, const Vertex& v);

struct Deg2Neighbour {
  Vertex vertex;
  std::uint64_t weight;
  bool operator==(const Deg2Neighbour&) const = default;
};
std::vector<Deg2Neighbour> deg2_c0_neighbors(const ClassData& cd, ExtPointId z);

// Measure on vertices of delta <= depth from detailed balance over every G_x, mu(c0) = 1.
std::map<Vertex, Rational> vertex_measure(const ClassData& cd, int depth);

enum class GraphFormat { Dot, Json };
std::string export_graph(const HeckeGraph& g, GraphFormat fmt, const std::string& curve_name = "");

// Inverse of the JSON export, against the same class data.
HeckeGraph graph_from_json(ClassDataPtr cd, const std::string& text);
Vertex parse_vertex_label(const std::string& label);

}  // namespace hecke
