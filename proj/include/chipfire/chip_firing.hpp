#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/refine.hpp"

namespace chipfire {

// Execution knobs shared by the search-heavy operations. `deadline` is an
// absolute point in time; crossing it raises errc::timeout so callers can
// assemble a partial report.
struct ExecPolicy {
  int jobs = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int64_t work_limit = 100'000'000;

  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      fail(errc::timeout, "time budget exhausted");
    }
  }
};

// Scratch buffers for repeated reductions on one graph.
struct ReduceWorkspace {
  std::vector<int> dist;
  std::vector<int> queue;
  std::vector<int64_t> cut;
  std::vector<uint8_t> burnt;
};

// q-reduction in place: returns the unique divisor equivalent to `chips`
// that is effective away from q and Dhar-stable. Debt is first swept to q
// layer by layer, then Dhar's burning algorithm fires maximal legal sets.
void reduce_in_place(const RefinedGraph& rg, ChipVector& chips, int q, ReduceWorkspace& ws);

Divisor reduce(const RefinedGraph& rg, const Divisor& d, const MetricPoint& q);

// True iff the divisors differ by the divisor of a piecewise-linear
// function, decided by comparing reductions at the first vertex.
// Divisors of unequal degree are trivially inequivalent.
bool is_equivalent(const RefinedGraph& rg, const Divisor& a, const Divisor& b);

struct EmptinessResult {
  bool empty;        // |D - E| == empty set
  Divisor reduced;   // certificate: base-vertex reduction of D - E
};

// Whether |D - E| is empty, for effective E. The linear system is empty
// exactly when the reduced certificate is negative at the base vertex.
EmptinessResult emptiness_witness(const RefinedGraph& rg, const Divisor& d, const Divisor& e);

struct RankResult {
  int64_t rank;      // >= -1
  Divisor witness;   // effective, degree rank+1, with |D - witness| empty
};

// Baker-Norine rank over the grid: the largest r such that |D - E| is
// nonempty for every effective grid E of degree r. Candidates are scanned
// in canonical point order and the first failing E becomes the witness;
// with jobs > 1 the scan is a parallel map reduced by minimum index, so
// results are identical to the sequential order.
RankResult rank(const RefinedGraph& rg, const Divisor& d, const ExecPolicy& policy = {});

// Continuous piecewise-linear function with integer slopes, stored as its
// values on the grid vertices of a refinement.
struct PLFunction {
  std::vector<Rational> values;
};

// Principal divisor: at each grid vertex, the sum of incoming slopes.
// Throws invalid_function if some segment slope is not an integer.
Divisor div_of_pl_function(const RefinedGraph& rg, const PLFunction& f);

// Enumeration helpers for effective grid divisors of fixed degree
// (non-decreasing index tuples in lexicographic order).
int64_t multiset_count(int64_t n, int64_t r);
void unrank_multiset(int64_t n, int64_t r, int64_t index, std::vector<int>& out);
bool next_multiset(std::vector<int>& tuple, int64_t n);

int64_t binomial(int64_t n, int64_t k);

}  // namespace chipfire
