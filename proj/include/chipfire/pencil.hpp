#pragma once

#include "chipfire/chain.hpp"
#include "chipfire/chip_firing.hpp"
#include "chipfire/paths.hpp"

namespace chipfire {

// The divisor D_p attached to a lattice path: one chip at v0, plus on each
// ascent loop i the unique point w_i with p_{i-1}*v_{i-1} + w_i ~ p_i*v_i.
// D_p is v0-reduced, has degree g/2 + 1 and rank 1.
struct PencilDivisor {
  LatticePath path;
  Divisor divisor;
  std::vector<MetricPoint> ascent_points;  // one per ascent, in loop order
};

// Core construction on a prepared refinement. Each w_i is located by
// exhaustive scan over the grid points of its loop, certified by the
// chip-firing equivalence test; the scan must find exactly one match and
// it must agree with the circle-class congruence, otherwise a hard error.
// With certify set, also asserts that D_p is v0-reduced and has rank 1.
PencilDivisor path_to_divisor(const ChainOfLoops& chain, const RefinedGraph& rg,
                              const LatticePath& p, bool certify = true,
                              const ExecPolicy& policy = {});

// Convenience form that refines internally, halving the granularity up to
// two times if some w_i misses the grid; reports a precision error instead
// of ever approximating.
PencilDivisor path_to_divisor(const ChainOfLoops& chain, const LatticePath& p,
                              const Rational& granularity);

// Where the congruence places w_i before any chip-firing confirmation:
// the point of loop i at circle position p_i * m (mod m + ell), measured
// from v_{i-1} through the short edge.
MetricPoint predicted_ascent_point(const ChainOfLoops& chain, int loop, int p_prev, int p_cur);

}  // namespace chipfire
