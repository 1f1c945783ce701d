#include "chipfire/pencil.hpp"

namespace chipfire {

MetricPoint predicted_ascent_point(const ChainOfLoops& chain, int loop, int p_prev, int p_cur) {
  if (loop < 1 || loop > chain.g) fail(errc::invalid_parameter, "loop index out of range");
  Rational circumference = chain.m + chain.ell;
  // Circle class: pos(w) = p_cur*pos(v_i) - p_prev*pos(v_{i-1}) mod the
  // circumference. Positions are measured from v_{i-1}, so the second term
  // vanishes and pos(v_i) = m.
  (void)p_prev;
  Rational target = Rational(p_cur) * chain.m;
  while (target.is_negative()) target += circumference;
  while (target >= circumference) target -= circumference;

  if (target.is_zero()) return chain.marked_point(loop - 1);
  if (target == chain.m) return chain.marked_point(loop);
  if (target < chain.m) return chain.graph.point_on_edge(chain.short_edge(loop), target);
  // Positions past v_i run back along the long edge toward v_{i-1}.
  return chain.graph.point_on_edge(chain.long_edge(loop), chain.m + chain.ell - target);
}

PencilDivisor path_to_divisor(const ChainOfLoops& chain, const RefinedGraph& rg,
                              const LatticePath& p, bool certify, const ExecPolicy& policy) {
  validate_path(p);
  if (static_cast<int>(p.size()) != chain.g + 1) {
    fail(errc::invalid_parameter, "path length does not match chain genus");
  }

  PencilDivisor result;
  result.path = p;
  result.divisor.add(chain.marked_point(0), 1);

  ReduceWorkspace ws;
  for (int i = 1; i <= chain.g; ++i) {
    if (p[i] - p[i - 1] != 1) continue;  // descent loop: no extra chip

    // Grid points of loop i: both marked vertices and the interiors of
    // I_i and J_i.
    std::vector<int> candidates;
    candidates.push_back(rg.vertex_of(chain.marked_point(i - 1)));
    candidates.push_back(rg.vertex_of(chain.marked_point(i)));
    for (int e : {chain.short_edge(i), chain.long_edge(i)}) {
      auto [first, count] = rg.interior_range(e);
      for (int k = 0; k < count; ++k) candidates.push_back(first + k);
    }

    ChipVector target(rg.vertex_count(), 0);
    target[rg.vertex_of(chain.marked_point(i))] = p[i];
    reduce_in_place(rg, target, 0, ws);

    int found = -1;
    ChipVector lhs;
    for (int w : candidates) {
      lhs.assign(rg.vertex_count(), 0);
      lhs[rg.vertex_of(chain.marked_point(i - 1))] = p[i - 1];
      lhs[w] += 1;
      reduce_in_place(rg, lhs, 0, ws);
      if (lhs == target) {
        if (found >= 0) {
          fail(errc::internal, "two grid points of loop " + std::to_string(i) +
                                   " satisfy the transport equivalence");
        }
        found = w;
      }
    }
    if (found < 0) {
      fail(errc::precision_loss, "no grid point of loop " + std::to_string(i) +
                                     " satisfies the transport equivalence at granularity " +
                                     rg.granularity().str());
    }
    MetricPoint w_point = rg.grid_point(found);
    MetricPoint predicted = predicted_ascent_point(chain, i, p[i - 1], p[i]);
    if (!(w_point == predicted)) {
      fail(errc::internal, "equivalence scan and circle congruence disagree on loop " +
                               std::to_string(i) + ": " + chain.graph.point_name(w_point) +
                               " vs " + chain.graph.point_name(predicted));
    }
    result.ascent_points.push_back(w_point);
    result.divisor.add(w_point, 1);
  }

  // D_p is v0-reduced by construction of the bijection; check it.
  Divisor reduced = reduce(rg, result.divisor, chain.marked_point(0));
  if (reduced != result.divisor) {
    fail(errc::internal, "pencil divisor is not v0-reduced");
  }
  if (certify) {
    RankResult r = rank(rg, result.divisor, policy);
    if (r.rank != 1) {
      fail(errc::internal,
           "pencil divisor has rank " + std::to_string(r.rank) + ", expected 1");
    }
  }
  return result;
}

PencilDivisor path_to_divisor(const ChainOfLoops& chain, const LatticePath& p,
                              const Rational& granularity) {
  Rational q = granularity;
  for (int attempt = 0;; ++attempt) {
    try {
      RefinedGraph rg = refine(chain.graph, q);
      return path_to_divisor(chain, rg, p);
    } catch (const Error& e) {
      if (e.code() != errc::precision_loss || attempt >= 2) throw;
      q /= 2;
    }
  }
}

}  // namespace chipfire
