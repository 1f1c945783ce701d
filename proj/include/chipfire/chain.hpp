#pragma once

#include <optional>

#include "chipfire/graph.hpp"

namespace chipfire {

// The genus-g chain of loops: marked vertices v0..vg, and between v_{i-1}
// and v_i a short edge Ii of length m and a long edge Ji of length ell.
// The interior marked vertices are 4-valent, v0 and vg are 2-valent.
struct ChainOfLoops {
  ModelGraph graph;
  int g = 0;
  Rational ell;
  Rational m;
  bool genericity_warning = false;  // set when ell < 2g-2

  int vertex(int i) const { return i; }                  // v_i
  int short_edge(int i) const { return 2 * (i - 1); }    // I_i, i in 1..g
  int long_edge(int i) const { return 2 * (i - 1) + 1; } // J_i, i in 1..g
  MetricPoint marked_point(int i) const { return MetricPoint::at_vertex(i); }

  // The union of the first i loops (vertices v0..vi); i = 0 gives the
  // single marked vertex v0. Vertex and edge names are preserved.
  ModelGraph prefix_subgraph(int i) const;
};

Rational default_long_length(int g);

// ell defaults to 2g-2 (1 when g = 1) and m to 1. Lengths must be positive;
// ell below 2g-2 only raises the genericity warning flag.
ChainOfLoops build_chain_of_loops(int g, std::optional<Rational> ell = std::nullopt,
                                  const Rational& m = Rational(1));

}  // namespace chipfire
