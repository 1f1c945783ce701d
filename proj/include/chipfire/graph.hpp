#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chipfire/rational.hpp"

namespace chipfire {

// A point of the metric graph: either a vertex, or an interior point of an
// edge at a rational offset from the edge's tail. Offsets 0 and length(e)
// are canonicalized to the vertex form, so each point has one representation.
struct MetricPoint {
  int vertex = -1;     // >= 0 for vertex points
  int edge = -1;       // >= 0 for edge-interior points
  Rational offset;     // 0 < offset < length(edge) for edge points

  static MetricPoint at_vertex(int v) {
    MetricPoint p;
    p.vertex = v;
    return p;
  }

  bool is_vertex() const { return vertex >= 0; }

  // Canonical order: vertex points by id first, then edge points by
  // (edge index, offset).
  friend bool operator<(const MetricPoint& a, const MetricPoint& b) {
    if (a.is_vertex() != b.is_vertex()) return a.is_vertex();
    if (a.is_vertex()) return a.vertex < b.vertex;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.offset < b.offset;
  }
  friend bool operator==(const MetricPoint& a, const MetricPoint& b) {
    return a.vertex == b.vertex && a.edge == b.edge && a.offset == b.offset;
  }
  friend bool operator!=(const MetricPoint& a, const MetricPoint& b) { return !(a == b); }
};

struct EdgeRecord {
  std::string name;
  int tail;
  int head;
  Rational length;
};

// Finite connected multigraph with positive rational edge lengths; the
// combinatorial model of a metric graph. Parallel edges are allowed,
// self-loops are not. Construction mutates; everything else treats the
// graph as an immutable value.
class ModelGraph {
public:
  int add_vertex(const std::string& name);
  int add_edge(const std::string& name, int tail, int head, const Rational& length);
  int add_edge(const std::string& name, const std::string& tail, const std::string& head,
               const Rational& length);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  const EdgeRecord& edge(int e) const { return edges_.at(e); }
  std::optional<int> find_vertex(const std::string& name) const;
  std::optional<int> find_edge(const std::string& name) const;

  int degree(int v) const;
  bool is_connected() const;

  // |E| - |V| + 1 (first Betti number); throws invalid_input if disconnected.
  int genus() const;

  // gcd of all edge lengths; 0 for an edgeless graph.
  Rational length_gcd() const;

  // A point on edge e at the given offset from the tail; offsets 0 and
  // length(e) collapse to the corresponding vertex.
  MetricPoint point_on_edge(int e, const Rational& offset) const;

  std::string point_name(const MetricPoint& p) const;

  // One declaration per line: `vertex <name>` and
  // `edge <name> <tail> <head> <num>/<den>`; `#` starts a comment.
  std::string to_text() const;
  static ModelGraph parse(std::istream& in);
  static ModelGraph parse(const std::string& text);

private:
  std::vector<std::string> vertex_names_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_index_;
};

// Shortest-path distance between two points, Dijkstra over exact rationals.
Rational point_distance(const ModelGraph& g, const MetricPoint& a, const MetricPoint& b);

}  // namespace chipfire
