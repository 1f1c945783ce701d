#include "chipfire/refine.hpp"

#include <algorithm>

namespace chipfire {

namespace {
constexpr int64_t kMaxGridVertices = 2'000'000;
}

RefinedGraph refine(const ModelGraph& base, const Rational& granularity) {
  if (!granularity.is_positive()) fail(errc::invalid_granularity, "granularity must be positive");
  if (base.vertex_count() == 0) fail(errc::invalid_input, "refining an empty graph");
  if (!base.is_connected()) fail(errc::invalid_input, "refining a disconnected graph");

  RefinedGraph rg;
  rg.base_ = base;
  rg.granularity_ = granularity;

  int64_t grid_total = base.vertex_count();
  rg.edge_segments_.resize(base.edge_count());
  for (int e = 0; e < base.edge_count(); ++e) {
    int64_t k = Rational::exact_quotient(base.edge(e).length, granularity);  // throws if inexact
    rg.edge_segments_[e] = k;
    grid_total += k - 1;
    if (grid_total > kMaxGridVertices) {
      fail(errc::infeasible, "refinement would exceed " + std::to_string(kMaxGridVertices) +
                                 " grid vertices; use a coarser granularity");
    }
  }

  // Base vertices keep their ids and names.
  for (int v = 0; v < base.vertex_count(); ++v) {
    rg.model_.add_vertex(base.vertex_name(v));
    rg.grid_.push_back(MetricPoint::at_vertex(v));
  }
  rg.edge_interior_first_.resize(base.edge_count());
  for (int e = 0; e < base.edge_count(); ++e) {
    const auto& rec = base.edge(e);
    int64_t k = rg.edge_segments_[e];
    rg.edge_interior_first_[e] = rg.model_.vertex_count();
    int prev = rec.tail;
    for (int64_t j = 1; j < k; ++j) {
      int nv = rg.model_.add_vertex(rec.name + "@" + std::to_string(j));
      MetricPoint p;
      p.edge = e;
      p.offset = granularity * Rational(j);
      rg.grid_.push_back(p);
      rg.model_.add_edge(rec.name + ":" + std::to_string(j - 1), prev, nv, granularity);
      prev = nv;
    }
    rg.model_.add_edge(k == 1 ? rec.name : rec.name + ":" + std::to_string(k - 1), prev, rec.head,
                       granularity);
  }

  // Aggregated adjacency with parallel-edge multiplicities.
  int n = rg.model_.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> tmp(n);
  auto bump = [&](int a, int b) {
    for (auto& [nbr, mult] : tmp[a]) {
      if (nbr == b) {
        ++mult;
        return;
      }
    }
    tmp[a].push_back({b, 1});
  };
  for (int e = 0; e < rg.model_.edge_count(); ++e) {
    const auto& rec = rg.model_.edge(e);
    bump(rec.tail, rec.head);
    bump(rec.head, rec.tail);
  }
  rg.adj_offset_.assign(n + 1, 0);
  rg.degree_.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (auto& [nbr, mult] : tmp[v]) deg += mult;
    rg.degree_[v] = deg;
    rg.adj_offset_[v + 1] = rg.adj_offset_[v] + static_cast<int>(tmp[v].size());
  }
  rg.adj_.reserve(rg.adj_offset_[n]);
  for (int v = 0; v < n; ++v) {
    for (auto& nb : tmp[v]) rg.adj_.push_back(nb);
  }
  return rg;
}

int RefinedGraph::vertex_of(const MetricPoint& p) const {
  if (p.is_vertex()) {
    return p.vertex < base_.vertex_count() ? p.vertex : -1;
  }
  if (p.edge < 0 || p.edge >= base_.edge_count()) return -1;
  Rational steps = p.offset / granularity_;
  if (!steps.is_integer()) return -1;
  int64_t j = steps.num();
  if (j <= 0 || j >= edge_segments_[p.edge]) return -1;
  return edge_interior_first_[p.edge] + static_cast<int>(j - 1);
}

ChipVector to_chip_vector(const RefinedGraph& rg, const Divisor& d) {
  ChipVector chips(rg.vertex_count(), 0);
  for (auto& [p, c] : d) {
    int v = rg.vertex_of(p);
    if (v < 0) {
      fail(errc::invalid_support, "divisor chip off the grid at granularity " +
                                      rg.granularity().str() + ": " + rg.base().point_name(p));
    }
    chips[v] += c;
  }
  return chips;
}

Divisor to_divisor(const RefinedGraph& rg, const ChipVector& chips) {
  Divisor d;
  for (int v = 0; v < rg.vertex_count(); ++v) {
    if (chips[v] != 0) d.add(rg.grid_point(v), chips[v]);
  }
  return d;
}

}  // namespace chipfire
