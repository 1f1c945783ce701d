#include "chipfire/symmetry.hpp"

#include <algorithm>

namespace chipfire {

Involution::Involution(const ChainOfLoops& chain)
    : g_(chain.g), ell_(chain.ell), m_(chain.m) {
  if (chain.g % 2 != 0) {
    fail(errc::unsupported_graph, "the mirror involution needs even genus");
  }
}

MetricPoint Involution::map_point(const MetricPoint& p) const {
  if (p.is_vertex()) {
    if (p.vertex < 0 || p.vertex > g_) fail(errc::invalid_support, "vertex outside the chain");
    return MetricPoint::at_vertex(g_ - p.vertex);
  }
  if (p.edge < 0 || p.edge >= 2 * g_) fail(errc::invalid_support, "edge outside the chain");
  int loop = p.edge / 2 + 1;          // edges come in (I_i, J_i) pairs
  bool is_short = p.edge % 2 == 0;
  int mirrored_loop = g_ + 1 - loop;
  MetricPoint out;
  out.edge = 2 * (mirrored_loop - 1) + (is_short ? 0 : 1);
  out.offset = (is_short ? m_ : ell_) - p.offset;
  return out;  // interior stays interior: 0 < offset < length
}

Divisor Involution::map_divisor(const Divisor& d) const {
  Divisor out;
  for (auto& [p, c] : d) out.add(map_point(p), c);
  return out;
}

PLFunction build_f_function(const ChainOfLoops& chain, const RefinedGraph& rg,
                            const LatticePath& p) {
  validate_path(p);
  if (static_cast<int>(p.size()) != chain.g + 1) {
    fail(errc::invalid_parameter, "path length does not match chain genus");
  }
  if (chain.m != Rational(1) || !chain.ell.is_integer()) {
    fail(errc::unsupported_graph, "transport function needs m = 1 and integer ell");
  }
  int peak = *std::max_element(p.begin(), p.end());
  if (chain.ell < Rational(peak)) {
    fail(errc::unsupported_graph, "transport function needs ell >= max path height");
  }

  // Values at the marked vertices.
  std::vector<Rational> at_vertex(chain.g + 1);
  at_vertex[0] = 0;
  for (int i = 1; i <= chain.g; ++i) {
    at_vertex[i] = at_vertex[i - 1] + Rational(p[i] - p[i - 1] == 1 ? p[i - 1] : p[i]);
  }

  PLFunction f;
  f.values.resize(rg.vertex_count());
  for (int v = 0; v < rg.vertex_count(); ++v) {
    const MetricPoint& pt = rg.grid_point(v);
    if (pt.is_vertex()) {
      f.values[v] = at_vertex[pt.vertex];
      continue;
    }
    int loop = pt.edge / 2 + 1;
    bool is_short = pt.edge % 2 == 0;
    bool ascent = p[loop] - p[loop - 1] == 1;
    const Rational& base = at_vertex[loop - 1];
    const Rational& x = pt.offset;
    if (is_short) {
      f.values[v] = base + Rational(ascent ? p[loop - 1] : p[loop]) * x;
    } else if (ascent) {
      Rational breakpoint = chain.ell - Rational(p[loop - 1]);
      f.values[v] = x <= breakpoint ? base : base + (x - breakpoint);
    } else {
      Rational breakpoint = Rational(p[loop]);
      f.values[v] = x <= breakpoint ? base + x : base + breakpoint;
    }
  }

  // The slope pattern puts breakpoints at integer offsets; with a valid
  // granularity those are grid points and the slope check below can only
  // fail if that assumption broke.
  try {
    (void)div_of_pl_function(rg, f);
  } catch (const Error& e) {
    if (e.code() == errc::invalid_function) {
      fail(errc::precision_loss,
           std::string("transport function breakpoint off the grid: ") + e.what());
    }
    throw;
  }
  return f;
}

bool is_invariant_pencil(const ChainOfLoops& chain, const RefinedGraph& rg,
                         const LatticePath& p) {
  Involution inv(chain);
  PencilDivisor pencil = path_to_divisor(chain, rg, p, /*certify=*/false);
  bool invariant = is_equivalent(rg, pencil.divisor, inv.map_divisor(pencil.divisor));
  if (invariant != is_palindrome(p)) {
    fail(errc::internal, "invariance disagrees with the palindrome criterion for path " +
                             path_to_string(p));
  }
  return invariant;
}

SigmaCheck check_sigma_path(const ChainOfLoops& chain, const RefinedGraph& rg,
                            const LatticePath& p) {
  Involution inv(chain);
  SigmaCheck check;
  check.path = p;

  LatticePath rev = reverse_path(p);
  PencilDivisor dp = path_to_divisor(chain, rg, p, /*certify=*/false);
  PencilDivisor drev = path_to_divisor(chain, rg, rev, /*certify=*/false);
  Divisor mirrored_rev = inv.map_divisor(drev.divisor);

  check.equivalence_route = is_equivalent(rg, dp.divisor, mirrored_rev);

  PLFunction f = build_f_function(chain, rg, p);
  check.f_function_route = div_of_pl_function(rg, f) == mirrored_rev - dp.divisor;

  Divisor mirrored = inv.map_divisor(dp.divisor);
  bool invariant = is_equivalent(rg, dp.divisor, mirrored);
  check.invariant = invariant;
  check.invariance_criterion = invariant == is_palindrome(p);

  check.reduced_pushforward = reduce(rg, mirrored, chain.marked_point(0)) == drev.divisor;
  return check;
}

std::vector<SigmaCheck> verify_prop_sigma(const ChainOfLoops& chain, const RefinedGraph& rg,
                                          const ExecPolicy& policy) {
  std::vector<SigmaCheck> out;
  for (const auto& p : enumerate_paths(chain.g)) {
    policy.check_deadline();
    out.push_back(check_sigma_path(chain, rg, p));
  }
  return out;
}

}  // namespace chipfire
