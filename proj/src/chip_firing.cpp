#include "chipfire/chip_firing.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace chipfire {

namespace {

// Sweep debt toward q: for each distance layer, outermost first, pull just
// enough chips across the layer boundary (a set-borrowing by the layer and
// everything beyond it) to make the layer non-negative. Afterwards only q
// may be in debt.
void sweep_debt_to_base(const RefinedGraph& rg, ChipVector& chips, int q, ReduceWorkspace& ws) {
  int n = rg.vertex_count();
  bool any_debt = false;
  for (int v = 0; v < n; ++v) {
    if (v != q && chips[v] < 0) {
      any_debt = true;
      break;
    }
  }
  if (!any_debt) return;

  ws.dist.assign(n, -1);
  ws.queue.clear();
  ws.queue.push_back(q);
  ws.dist[q] = 0;
  for (size_t head = 0; head < ws.queue.size(); ++head) {
    int v = ws.queue[head];
    for (auto it = rg.neighbors_begin(v); it != rg.neighbors_end(v); ++it) {
      if (ws.dist[it->first] < 0) {
        ws.dist[it->first] = ws.dist[v] + 1;
        ws.queue.push_back(it->first);
      }
    }
  }
  // ws.queue is BFS order, so layers are contiguous runs.
  for (size_t end = ws.queue.size(); end > 1;) {
    size_t begin = end;
    int k = ws.dist[ws.queue[end - 1]];
    while (begin > 0 && ws.dist[ws.queue[begin - 1]] == k) --begin;
    int64_t pulls = 0;
    for (size_t i = begin; i < end; ++i) {
      int v = ws.queue[i];
      if (chips[v] >= 0) continue;
      int64_t gain = 0;
      for (auto it = rg.neighbors_begin(v); it != rg.neighbors_end(v); ++it) {
        if (ws.dist[it->first] == k - 1) gain += it->second;
      }
      // gain >= 1: v has a BFS parent.
      int64_t need = (-chips[v] + gain - 1) / gain;
      pulls = std::max(pulls, need);
    }
    if (pulls > 0) {
      for (size_t i = begin; i < end; ++i) {
        int v = ws.queue[i];
        for (auto it = rg.neighbors_begin(v); it != rg.neighbors_end(v); ++it) {
          if (ws.dist[it->first] == k - 1) {
            chips[v] += pulls * it->second;
            chips[it->first] -= pulls * it->second;
          }
        }
      }
    }
    end = begin;
  }
}

}  // namespace

void reduce_in_place(const RefinedGraph& rg, ChipVector& chips, int q, ReduceWorkspace& ws) {
  int n = rg.vertex_count();
  if (q < 0 || q >= n) fail(errc::invalid_parameter, "base vertex out of range");
  if (static_cast<int>(chips.size()) != n) fail(errc::invalid_input, "chip vector size mismatch");

  sweep_debt_to_base(rg, chips, q, ws);

  ws.burnt.assign(n, 0);
  ws.cut.assign(n, 0);
  for (;;) {
    std::fill(ws.burnt.begin(), ws.burnt.end(), 0);
    std::fill(ws.cut.begin(), ws.cut.end(), 0);
    ws.queue.clear();
    ws.queue.push_back(q);
    ws.burnt[q] = 1;
    for (size_t head = 0; head < ws.queue.size(); ++head) {
      int v = ws.queue[head];
      for (auto it = rg.neighbors_begin(v); it != rg.neighbors_end(v); ++it) {
        int u = it->first;
        if (ws.burnt[u]) continue;
        ws.cut[u] += it->second;
        if (ws.cut[u] > chips[u]) {
          ws.burnt[u] = 1;
          ws.queue.push_back(u);
        }
      }
    }
    if (ws.queue.size() == static_cast<size_t>(n)) return;  // everything burned: q-reduced

    // Fire the unburnt set as many times as it stays effective. Every
    // unburnt v satisfies chips[v] >= cut[v] (it resisted the fire), so
    // times >= 1 and the loop makes progress.
    int64_t times = std::numeric_limits<int64_t>::max();
    for (int v = 0; v < n; ++v) {
      if (!ws.burnt[v] && ws.cut[v] > 0) times = std::min(times, chips[v] / ws.cut[v]);
    }
    if (times < 1 || times == std::numeric_limits<int64_t>::max()) {
      fail(errc::internal, "burning pass made no progress");
    }
    for (int v = 0; v < n; ++v) {
      if (ws.burnt[v]) continue;
      if (ws.cut[v] > 0) chips[v] -= times * ws.cut[v];
      for (auto it = rg.neighbors_begin(v); it != rg.neighbors_end(v); ++it) {
        if (ws.burnt[it->first]) chips[it->first] += times * it->second;
      }
    }
  }
}

Divisor reduce(const RefinedGraph& rg, const Divisor& d, const MetricPoint& q) {
  int qv = rg.vertex_of(q);
  if (qv < 0) fail(errc::invalid_support, "base point off the grid");
  ChipVector chips = to_chip_vector(rg, d);
  ReduceWorkspace ws;
  reduce_in_place(rg, chips, qv, ws);
  return to_divisor(rg, chips);
}

bool is_equivalent(const RefinedGraph& rg, const Divisor& a, const Divisor& b) {
  if (a.degree() != b.degree()) return false;
  ChipVector ca = to_chip_vector(rg, a);
  ChipVector cb = to_chip_vector(rg, b);
  ReduceWorkspace ws;
  reduce_in_place(rg, ca, 0, ws);
  reduce_in_place(rg, cb, 0, ws);
  return ca == cb;
}

EmptinessResult emptiness_witness(const RefinedGraph& rg, const Divisor& d, const Divisor& e) {
  if (!e.is_effective()) fail(errc::invalid_input, "E must be effective");
  ChipVector chips = to_chip_vector(rg, d - e);
  ReduceWorkspace ws;
  reduce_in_place(rg, chips, 0, ws);
  return EmptinessResult{chips[0] < 0, to_divisor(rg, chips)};
}

namespace {

// First (lowest-index) degree-r multiset E with |reduced - E| empty, or -1.
// `reduced` must already be 0-reduced, so subtracting E and re-reducing is
// cheap. Scans ascending; with several workers the chunks race but the
// winner is still the global minimum index.
int64_t find_first_failing(const RefinedGraph& rg, const ChipVector& reduced, int64_t r,
                           const ExecPolicy& policy) {
  int n = rg.vertex_count();
  int64_t total = multiset_count(n, r);
  if (total > policy.work_limit) {
    fail(errc::infeasible, "rank scan of " + std::to_string(total) + " candidates exceeds limit " +
                               std::to_string(policy.work_limit));
  }

  int jobs = std::max(1, policy.jobs);
  constexpr int64_t kChunk = 1024;
  std::atomic<int64_t> next{0};
  std::atomic<int64_t> best{std::numeric_limits<int64_t>::max()};
  std::mutex err_mutex;
  std::exception_ptr first_error;

  auto worker = [&]() {
    ReduceWorkspace ws;
    ChipVector scratch;
    std::vector<int> tuple;
    try {
      for (;;) {
        int64_t begin = next.fetch_add(kChunk);
        if (begin >= total || begin >= best.load()) return;
        policy.check_deadline();
        int64_t end = std::min(begin + kChunk, total);
        unrank_multiset(n, r, begin, tuple);
        for (int64_t idx = begin; idx < end; ++idx) {
          scratch = reduced;
          for (int v : tuple) --scratch[v];
          reduce_in_place(rg, scratch, 0, ws);
          if (scratch[0] < 0) {
            int64_t cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
          if (idx + 1 < end) next_multiset(tuple, n);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!first_error) first_error = std::current_exception();
      best.store(-2);  // poison so other workers stop early
    }
  };

  if (jobs == 1 || total <= kChunk) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  int64_t found = best.load();
  return found == std::numeric_limits<int64_t>::max() ? -1 : found;
}

}  // namespace

RankResult rank(const RefinedGraph& rg, const Divisor& d, const ExecPolicy& policy) {
  if (d.degree() < 0) return RankResult{-1, Divisor{}};

  ChipVector chips = to_chip_vector(rg, d);
  ReduceWorkspace ws;
  reduce_in_place(rg, chips, 0, ws);
  if (chips[0] < 0) return RankResult{-1, Divisor{}};

  int64_t deg = d.degree();
  std::vector<int> tuple;
  for (int64_t r = 1; r <= deg; ++r) {
    int64_t idx = find_first_failing(rg, chips, r, policy);
    if (idx >= 0) {
      unrank_multiset(rg.vertex_count(), r, idx, tuple);
      Divisor witness;
      for (int v : tuple) witness.add(rg.grid_point(v), 1);
      return RankResult{r - 1, witness};
    }
  }
  // Every degree up to deg(D) passed; any E of degree deg+1 is a witness
  // because |D - E| has negative degree.
  return RankResult{deg, single_chip(rg.grid_point(0), deg + 1)};
}

Divisor div_of_pl_function(const RefinedGraph& rg, const PLFunction& f) {
  const auto& model = rg.model();
  if (static_cast<int>(f.values.size()) != model.vertex_count()) {
    fail(errc::invalid_function, "value count does not match grid size");
  }
  ChipVector ord(model.vertex_count(), 0);
  for (int e = 0; e < model.edge_count(); ++e) {
    const auto& rec = model.edge(e);
    Rational slope = (f.values[rec.head] - f.values[rec.tail]) / rec.length;
    if (!slope.is_integer()) {
      fail(errc::invalid_function,
           "non-integer slope " + slope.str() + " on segment " + rec.name);
    }
    ord[rec.head] += slope.num();
    ord[rec.tail] -= slope.num();
  }
  return to_divisor(rg, ord);
}

int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  using u128 = unsigned __int128;
  u128 acc = 1;
  for (int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<u128>(n - k + i);
    acc /= static_cast<u128>(i);  // exact: product of i consecutive integers
    if (acc > static_cast<u128>(std::numeric_limits<int64_t>::max())) {
      fail(errc::arithmetic_overflow,
           "binomial(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 64 bits");
    }
  }
  return static_cast<int64_t>(acc);
}

int64_t multiset_count(int64_t n, int64_t r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  return binomial(n + r - 1, r);
}

bool next_multiset(std::vector<int>& tuple, int64_t n) {
  int r = static_cast<int>(tuple.size());
  for (int i = r - 1; i >= 0; --i) {
    if (tuple[i] < n - 1) {
      int v = tuple[i] + 1;
      for (int j = i; j < r; ++j) tuple[j] = v;
      return true;
    }
  }
  return false;
}

void unrank_multiset(int64_t n, int64_t r, int64_t index, std::vector<int>& out) {
  out.assign(r, 0);
  int64_t remaining = index;
  int low = 0;
  for (int64_t pos = 0; pos < r; ++pos) {
    for (int v = low; v < n; ++v) {
      int64_t block = multiset_count(n - v, r - pos - 1);
      if (remaining < block) {
        out[pos] = v;
        low = v;
        break;
      }
      remaining -= block;
    }
  }
  if (remaining != 0 && r > 0) fail(errc::internal, "multiset unrank out of range");
}

}  // namespace chipfire
