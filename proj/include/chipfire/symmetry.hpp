#pragma once

#include "chipfire/chain.hpp"
#include "chipfire/chip_firing.hpp"
#include "chipfire/pencil.hpp"

namespace chipfire {

// The mirror involution of a uniform chain of loops with even genus:
// vertices map v_i -> v_{g-i}, a point at offset x on I_i / J_i maps to
// offset m-x / ell-x on I_{g+1-i} / J_{g+1-i}. The unique fixed point is
// the middle vertex v_{g/2}.
class Involution {
public:
  explicit Involution(const ChainOfLoops& chain);

  int genus() const { return g_; }

  MetricPoint map_point(const MetricPoint& p) const;
  Divisor map_divisor(const Divisor& d) const;

private:
  int g_;
  Rational ell_;
  Rational m_;
};

inline MetricPoint sigma_point(const Involution& inv, const MetricPoint& p) {
  return inv.map_point(p);
}
inline Divisor sigma_divisor(const Involution& inv, const Divisor& d) {
  return inv.map_divisor(d);
}

// The transport function of a lattice path: piecewise linear with
// f(v_i) = f_i where f_0 = 0 and f_i grows by p_{i-1} on ascents and by
// p_i on descents; slopes follow the three-piece pattern on each loop.
// Its divisor is sigma(D_{reverse(p)}) - D_p. Requires m = 1, integer ell
// with ell >= max(p), and every breakpoint on the grid.
PLFunction build_f_function(const ChainOfLoops& chain, const RefinedGraph& rg,
                            const LatticePath& p);

// Whether |D_p| is fixed by the involution, decided by the equivalence
// D_p ~ sigma(D_p). This holds exactly for palindromic paths; a
// disagreement with that criterion is reported as a hard error since it
// would falsify the correspondence.
bool is_invariant_pencil(const ChainOfLoops& chain, const RefinedGraph& rg, const LatticePath& p);

struct SigmaCheck {
  LatticePath path;
  bool invariant = false;             // |D_p| fixed by sigma
  bool equivalence_route = false;     // D_p ~ sigma(D_{reverse(p)}) via reductions
  bool f_function_route = false;      // div(f) == sigma(D_{reverse(p)}) - D_p bit-exact
  bool invariance_criterion = false;  // invariant <=> palindrome, both directions
  bool reduced_pushforward = false;   // reduce(sigma(D_p), v0) == D_{reverse(p)}
  bool passed() const {
    return equivalence_route && f_function_route && invariance_criterion && reduced_pushforward;
  }
};

// All checks for one path.
SigmaCheck check_sigma_path(const ChainOfLoops& chain, const RefinedGraph& rg,
                            const LatticePath& p);

// Runs every check for every path of the given even genus.
std::vector<SigmaCheck> verify_prop_sigma(const ChainOfLoops& chain, const RefinedGraph& rg,
                                          const ExecPolicy& policy = {});

}  // namespace chipfire
