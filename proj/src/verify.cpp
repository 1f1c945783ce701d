#include "chipfire/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace chipfire {

namespace {

constexpr int kMaxPathSuiteGenus = 8;
constexpr int kMaxBrillNoetherGenus = 4;

void check_feasible(int g, int bound, bool allow_large, const std::string& suite) {
  if (g > bound && !allow_large) {
    fail(errc::infeasible, suite + " is bounded to g <= " + std::to_string(bound) +
                               " by default (pass allow_large / --allow-large to override)");
  }
}

ChainOfLoops make_chain(int g, const SuiteOptions& opts) {
  return build_chain_of_loops(g, opts.ell, Rational(1));
}

std::string describe(const Divisor& d, const ModelGraph& g) {
  std::ostringstream os;
  bool first = true;
  for (auto& [p, c] : d) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c << "*";
    os << g.point_name(p);
  }
  return first ? "0" : os.str();
}

// Partial-report wrapper: runs `body` per item, converts a timeout into a
// clean abort so callers still get the cases finished so far.
template <typename Items, typename Body>
void run_cases(VerificationReport& report, const Items& items, const ExecPolicy& policy,
               Body&& body) {
  for (const auto& item : items) {
    try {
      policy.check_deadline();
      body(item);
    } catch (const Error& e) {
      if (e.code() == errc::timeout) {
        report.aborted = true;
        report.abort_reason = "time budget exhausted after " +
                              std::to_string(report.cases.size()) + " case(s)";
        return;
      }
      throw;
    }
  }
}

}  // namespace

std::vector<int64_t> chip_transport(const ChainOfLoops& chain, const LatticePath& p,
                                    const Rational& granularity) {
  validate_path(p);
  if (static_cast<int>(p.size()) != chain.g + 1) {
    fail(errc::invalid_parameter, "path length does not match chain genus");
  }
  RefinedGraph rg = refine(chain.graph, granularity);
  PencilDivisor pencil = path_to_divisor(chain, rg, p, /*certify=*/false);
  Divisor start = 2 * pencil.divisor - single_chip(chain.marked_point(0), 2);

  std::vector<int64_t> trace;
  trace.reserve(chain.g + 1);
  for (int i = 0; i <= chain.g; ++i) {
    ModelGraph prefix = chain.prefix_subgraph(i);
    // Chips on the first i loops; edge ids 0..2i-1 and vertices 0..i carry
    // over unchanged.
    Divisor restricted;
    for (auto& [pt, c] : start) {
      if (pt.is_vertex() ? pt.vertex <= i : pt.edge < 2 * i) restricted.add(pt, c);
    }
    if (i == 0) {
      trace.push_back(restricted.coefficient(chain.marked_point(0)));
      continue;
    }
    RefinedGraph sub = refine(prefix, granularity);
    Divisor reduced = reduce(sub, restricted, chain.marked_point(i));
    trace.push_back(reduced.coefficient(chain.marked_point(i)));
  }
  return trace;
}

VerificationReport verify_prop2(int g, const SuiteOptions& opts) {
  check_feasible(g, kMaxPathSuiteGenus, opts.allow_large, "prop2");
  VerificationReport report;
  report.suite = "prop2";

  ChainOfLoops chain = make_chain(g, opts);
  RefinedGraph rg = refine(chain.graph, opts.granularity);
  Divisor two_v0_vg =
      single_chip(chain.marked_point(0), 2) + single_chip(chain.marked_point(g), 1);

  run_cases(report, enumerate_paths(g), opts.policy, [&](const LatticePath& p) {
    CaseResult c;
    c.id = path_to_string(p);
    PencilDivisor pencil = path_to_divisor(chain, rg, p, /*certify=*/false);
    Divisor doubled = 2 * pencil.divisor;

    RankResult r = rank(rg, doubled, opts.policy);
    bool rank_ok = r.rank == 2;

    EmptinessResult gap = emptiness_witness(rg, doubled, two_v0_vg);
    bool witness_ok = gap.empty;

    std::vector<int64_t> trace = chip_transport(chain, p, opts.granularity);
    bool trace_ok = trace.size() == p.size();
    for (size_t i = 0; trace_ok && i < p.size(); ++i) trace_ok = trace[i] == p[i] - 1;

    c.pass = rank_ok && witness_ok && trace_ok;
    std::ostringstream os;
    os << "rank(2Dp)=" << r.rank << (rank_ok ? "" : " EXPECTED 2");
    os << " |2Dp-2v0-vg|=" << (gap.empty ? "empty" : "NONEMPTY");
    os << " transport=";
    for (size_t i = 0; i < trace.size(); ++i) os << (i ? "," : "") << trace[i];
    if (!trace_ok) os << " EXPECTED p_i-1";
    if (!rank_ok) os << " witness=" << describe(r.witness, chain.graph);
    c.detail = os.str();
    report.cases.push_back(std::move(c));
  });
  return report;
}

VerificationReport verify_sigma(int g, const SuiteOptions& opts) {
  check_feasible(g, kMaxPathSuiteGenus, opts.allow_large, "sigma");
  VerificationReport report;
  report.suite = "sigma";

  ChainOfLoops chain = make_chain(g, opts);
  RefinedGraph rg = refine(chain.graph, opts.granularity);

  run_cases(report, enumerate_paths(g), opts.policy, [&](const LatticePath& p) {
    SigmaCheck check = check_sigma_path(chain, rg, p);
    CaseResult c;
    c.id = path_to_string(check.path);
    c.pass = check.passed();
    std::ostringstream os;
    os << (check.invariant ? "invariant" : "moving");
    os << " equivalence=" << (check.equivalence_route ? "ok" : "FAIL");
    os << " f-route=" << (check.f_function_route ? "ok" : "FAIL");
    os << " iff-palindrome=" << (check.invariance_criterion ? "ok" : "FAIL");
    os << " v0-pushforward=" << (check.reduced_pushforward ? "ok" : "FAIL");
    c.detail = os.str();
    report.cases.push_back(std::move(c));
  });
  return report;
}

VerificationReport verify_bijection(int g, const SuiteOptions& opts) {
  check_feasible(g, kMaxPathSuiteGenus, opts.allow_large, "bijection");
  VerificationReport report;
  report.suite = "bijection";

  ChainOfLoops chain = make_chain(g, opts);
  RefinedGraph rg = refine(chain.graph, opts.granularity);
  auto paths = enumerate_paths(g);

  std::vector<PencilDivisor> pencils;
  pencils.reserve(paths.size());
  for (const auto& p : paths) {
    opts.policy.check_deadline();
    pencils.push_back(path_to_divisor(chain, rg, p, /*certify=*/true, opts.policy));
  }

  // Pairwise inequivalence of the pencil divisors.
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t a = 0; a < pencils.size(); ++a) {
    for (size_t b = a + 1; b < pencils.size(); ++b) pairs.push_back({a, b});
  }
  run_cases(report, pairs, opts.policy, [&](const std::pair<size_t, size_t>& ab) {
    CaseResult c;
    c.id = path_to_string(paths[ab.first]) + " vs " + path_to_string(paths[ab.second]);
    bool equivalent = is_equivalent(rg, pencils[ab.first].divisor, pencils[ab.second].divisor);
    c.pass = !equivalent;
    c.detail = equivalent ? "EQUIVALENT (bijection broken)" : "inequivalent";
    report.cases.push_back(std::move(c));
  });
  if (report.aborted) return report;

  // Exhaustive census of rank-1 classes at small genus: every effective
  // v0-reduced grid divisor of degree d is the canonical representative of
  // its class, so counting the rank-1 ones counts the pencils.
  if (g <= 4) {
    CaseResult census;
    census.id = "census-g" + std::to_string(g);
    int d = g / 2 + 1;
    int n = rg.vertex_count();
    int64_t total = multiset_count(n, d);
    int64_t reduced_count = 0;
    std::vector<Divisor> rank_one;
    try {
      std::vector<int> tuple(d, 0);
      ReduceWorkspace ws;
      ChipVector chips;
      for (int64_t idx = 0; idx < total; ++idx, next_multiset(tuple, n)) {
        if (idx % 512 == 0) opts.policy.check_deadline();
        chips.assign(n, 0);
        for (int v : tuple) ++chips[v];
        ChipVector copy = chips;
        reduce_in_place(rg, copy, 0, ws);
        if (copy != chips) continue;  // not v0-reduced
        ++reduced_count;
        Divisor divisor = to_divisor(rg, chips);
        if (rank(rg, divisor, opts.policy).rank == 1) rank_one.push_back(divisor);
      }
      int64_t expected = catalan_count(d);
      bool count_ok = static_cast<int64_t>(rank_one.size()) == expected;
      // They must be exactly the pencil divisors.
      bool match_ok = count_ok;
      if (count_ok) {
        for (auto& pencil : pencils) {
          match_ok = match_ok && std::find(rank_one.begin(), rank_one.end(), pencil.divisor) !=
                                     rank_one.end();
        }
      }
      census.pass = count_ok && match_ok;
      std::ostringstream os;
      os << rank_one.size() << " rank-1 class(es) of degree " << d << " among " << reduced_count
         << " reduced divisors, expected " << expected
         << (match_ok ? ", all equal to pencil divisors" : ", MISMATCH with pencil divisors");
      census.detail = os.str();
      report.cases.push_back(std::move(census));
    } catch (const Error& e) {
      if (e.code() != errc::timeout) throw;
      report.aborted = true;
      report.abort_reason = "time budget exhausted during census";
    }
  }
  return report;
}

int64_t brill_noether_rho(int g, int r, int d) {
  return static_cast<int64_t>(g) - static_cast<int64_t>(r + 1) * (g - d + r);
}

VerificationReport verify_brill_noether(int g, int r, int d, const SuiteOptions& opts) {
  check_feasible(g, kMaxBrillNoetherGenus, opts.allow_large, "brill-noether");
  if (g < 1 || r < 0 || d < 0) fail(errc::invalid_parameter, "need g >= 1, r >= 0, d >= 0");
  VerificationReport report;
  report.suite = "brill-noether";

  ChainOfLoops chain = make_chain(g, opts);
  RefinedGraph rg = refine(chain.graph, opts.granularity);
  int64_t rho = brill_noether_rho(g, r, d);
  int n = rg.vertex_count();

  CaseResult c;
  std::ostringstream id;
  id << "g=" << g << " r=" << r << " d=" << d << " rho=" << rho;
  c.id = id.str();

  try {
    if (rho >= 0) {
      // Existence: find a grid divisor of degree <= d and rank exactly r.
      // The pencil divisors cover the classical r=1, d=g/2+1 case; the
      // general search walks v0-reduced effective divisors by degree.
      std::optional<Divisor> found;
      for (int degree = 0; degree <= d && !found; ++degree) {
        int64_t total = multiset_count(n, degree);
        if (total > opts.policy.work_limit) {
          fail(errc::infeasible, "existence search too large at degree " + std::to_string(degree));
        }
        std::vector<int> tuple(degree, 0);
        ReduceWorkspace ws;
        ChipVector chips;
        for (int64_t idx = 0; idx < total && !found; ++idx, next_multiset(tuple, n)) {
          if (idx % 512 == 0) opts.policy.check_deadline();
          chips.assign(n, 0);
          for (int v : tuple) ++chips[v];
          ChipVector copy = chips;
          reduce_in_place(rg, copy, 0, ws);
          if (copy != chips) continue;
          Divisor divisor = to_divisor(rg, chips);
          if (rank(rg, divisor, opts.policy).rank == r) found = divisor;
        }
      }
      c.pass = found.has_value();
      c.detail = found ? "witness " + describe(*found, chain.graph) + " has rank " +
                             std::to_string(r) + " (rho >= 0)"
                       : "NO rank-" + std::to_string(r) + " divisor of degree <= " +
                             std::to_string(d) + " found on the grid";
    } else {
      // Nonexistence evidence: no v0-reduced effective grid divisor of
      // degree <= d reaches rank r. Covers all classes with nonempty
      // linear system, at this granularity.
      std::optional<Divisor> counterexample;
      int64_t scanned = 0;
      for (int degree = 0; degree <= d && !counterexample; ++degree) {
        int64_t total = multiset_count(n, degree);
        if (total > opts.policy.work_limit) {
          fail(errc::infeasible, "grid search too large at degree " + std::to_string(degree));
        }
        std::vector<int> tuple(degree, 0);
        ReduceWorkspace ws;
        ChipVector chips;
        for (int64_t idx = 0; idx < total && !counterexample; ++idx, next_multiset(tuple, n)) {
          if (idx % 512 == 0) opts.policy.check_deadline();
          chips.assign(n, 0);
          for (int v : tuple) ++chips[v];
          ChipVector copy = chips;
          reduce_in_place(rg, copy, 0, ws);
          if (copy != chips) continue;
          ++scanned;
          Divisor divisor = to_divisor(rg, chips);
          if (rank(rg, divisor, opts.policy).rank >= r) counterexample = divisor;
        }
      }
      c.pass = !counterexample.has_value();
      std::ostringstream os;
      if (counterexample) {
        os << "COUNTEREXAMPLE " << describe(*counterexample, chain.graph) << " has rank >= " << r;
      } else {
        os << "no rank-" << r << " divisor of degree <= " << d << " among " << scanned
           << " reduced grid divisors; no counterexample at granularity "
           << opts.granularity.str() << " (evidence, not proof)";
      }
      c.detail = os.str();
    }
  } catch (const Error& e) {
    if (e.code() != errc::timeout) throw;
    report.aborted = true;
    report.abort_reason = "time budget exhausted";
    return report;
  }
  report.cases.push_back(std::move(c));
  return report;
}

std::vector<TableRow> pencil_table(int d_min, int d_max) {
  if (d_min < 2 || d_min > d_max) fail(errc::invalid_parameter, "need 2 <= d_min <= d_max");
  std::vector<TableRow> rows;
  for (int d = d_min; d <= d_max; ++d) {
    rows.push_back(TableRow{d, 2 * d - 2, catalan_count(d), symmetric_count_closed_form(d)});
  }
  return rows;
}

std::string format_table(const std::vector<TableRow>& rows, bool tsv) {
  std::ostringstream os;
  if (tsv) {
    os << "d\tg\tlambda\tlambda_prime\tratio\n";
    for (auto& r : rows) {
      os << r.d << "\t" << r.g << "\t" << r.lambda << "\t" << r.lambda_prime << "\t" << std::fixed
         << std::setprecision(6)
         << static_cast<double>(r.lambda_prime) / static_cast<double>(r.lambda) << "\n";
    }
    return os.str();
  }
  os << std::left << std::setw(4) << "d" << std::setw(4) << "g" << std::setw(10) << "lambda"
     << std::setw(14) << "lambda'" << "ratio\n";
  for (auto& r : rows) {
    os << std::left << std::setw(4) << r.d << std::setw(4) << r.g << std::setw(10) << r.lambda
       << std::setw(14) << r.lambda_prime << std::fixed << std::setprecision(6)
       << static_cast<double>(r.lambda_prime) / static_cast<double>(r.lambda) << "\n";
  }
  return os.str();
}

std::string VerificationReport::to_text(bool tsv) const {
  std::ostringstream os;
  if (tsv) {
    os << "suite\tcase\tstatus\tdetail\n";
    for (auto& c : cases) {
      os << suite << "\t" << c.id << "\t" << (c.pass ? "pass" : "fail") << "\t" << c.detail
         << "\n";
    }
  } else {
    os << "suite " << suite << "\n";
    for (auto& c : cases) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.detail << "\n";
    }
  }
  int fails = failures();
  os << (tsv ? "total\t" : "total: ") << cases.size() << (tsv ? "\t" : " case(s), ") << fails
     << (tsv ? "\t" : " failure(s)");
  if (aborted) os << (tsv ? "\taborted: " : ", ABORTED: ") << abort_reason;
  os << "\n";
  return os.str();
}

}  // namespace chipfire
