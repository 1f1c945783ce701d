#pragma once

#include <utility>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/graph.hpp"

namespace chipfire {

// Equal-length subdivision of a base graph. Every base edge of length k*q is
// split into k segments of length q, so chip-firing can run combinatorially
// on the subdivision vertices (the "grid"). Grid vertex ids follow the
// canonical point order: base vertices 0..V-1 first, then the interior
// subdivision points of each edge in ascending offset.
class RefinedGraph {
public:
  const ModelGraph& model() const { return model_; }
  const ModelGraph& base() const { return base_; }
  const Rational& granularity() const { return granularity_; }

  int vertex_count() const { return model_.vertex_count(); }
  int base_vertex_count() const { return base_.vertex_count(); }

  // Base-graph point for a grid vertex (bijective on the grid).
  const MetricPoint& grid_point(int refined_vertex) const { return grid_[refined_vertex]; }
  const std::vector<MetricPoint>& grid() const { return grid_; }

  // Grid vertex for a base-graph point; -1 if the point is off the grid.
  int vertex_of(const MetricPoint& base_point) const;

  // Interior grid vertices of a base edge: (first id, count), ids contiguous
  // in ascending offset order.
  std::pair<int, int> interior_range(int base_edge) const {
    return {edge_interior_first_[base_edge], static_cast<int>(edge_segments_[base_edge] - 1)};
  }
  int64_t segments(int base_edge) const { return edge_segments_[base_edge]; }

  // Aggregated adjacency: for each grid vertex, (neighbor, edge multiplicity).
  using Neighbor = std::pair<int, int>;
  const Neighbor* neighbors_begin(int v) const { return adj_.data() + adj_offset_[v]; }
  const Neighbor* neighbors_end(int v) const { return adj_.data() + adj_offset_[v + 1]; }
  int degree(int v) const { return degree_[v]; }

  friend RefinedGraph refine(const ModelGraph& base, const Rational& granularity);

private:
  ModelGraph base_;
  ModelGraph model_;
  Rational granularity_;
  std::vector<MetricPoint> grid_;
  std::vector<int> edge_interior_first_;  // per base edge, grid id of its first interior point
  std::vector<int64_t> edge_segments_;    // per base edge, length / granularity
  std::vector<int> adj_offset_;
  std::vector<Neighbor> adj_;
  std::vector<int> degree_;
};

// Subdivides every edge into length-q segments. q must divide every edge
// length exactly; genus and distances are preserved.
RefinedGraph refine(const ModelGraph& base, const Rational& granularity);

// Dense chip vector indexed by grid vertex.
using ChipVector = std::vector<int64_t>;

// Throws invalid_support if some chip sits off the grid.
ChipVector to_chip_vector(const RefinedGraph& rg, const Divisor& d);
Divisor to_divisor(const RefinedGraph& rg, const ChipVector& chips);

}  // namespace chipfire
