#pragma once

#include <string>
#include <vector>

#include "chipfire/chain.hpp"
#include "chipfire/chip_firing.hpp"
#include "chipfire/paths.hpp"
#include "chipfire/symmetry.hpp"

namespace chipfire {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool aborted = false;
  std::string abort_reason;

  int failures() const {
    int n = 0;
    for (auto& c : cases) n += c.pass ? 0 : 1;
    return n;
  }
  bool ok() const { return !aborted && failures() == 0; }
  std::string to_text(bool tsv = false) const;
};

struct SuiteOptions {
  Rational granularity{1};
  std::optional<Rational> ell;   // chain long length; defaults per genus
  ExecPolicy policy;
  bool allow_large = false;      // lift the documented feasibility bounds
};

// Chips of the loop-by-loop transport of 2*D_p - 2*v0: q_i is the count at
// v_i after reducing the restriction to the first i loops at v_i. The
// expected trace is q_i = p_i - 1.
std::vector<int64_t> chip_transport(const ChainOfLoops& chain, const LatticePath& p,
                                    const Rational& granularity);

// rank(2 D_p) == 2 for every path, the degree-3 witness 2*v0 + vg fails,
// and the transport trace matches p_i - 1.
VerificationReport verify_prop2(int g, const SuiteOptions& opts = {});

// D_p ~ sigma(D_{reverse p}) by two independent routes, and invariance of
// |D_p| under sigma exactly for palindromic paths.
VerificationReport verify_sigma(int g, const SuiteOptions& opts = {});

// Distinct paths give inequivalent divisors; for small genus additionally
// an exhaustive census of v0-reduced rank-1 classes of degree g/2+1, which
// must find exactly the Catalan count.
VerificationReport verify_bijection(int g, const SuiteOptions& opts = {});

// rho = g - (r+1)(g-d+r). For rho >= 0 exhibits a rank-r divisor of degree
// <= d; for rho < 0 searches the whole grid for a counterexample and
// reports the (evidence-grade) absence.
VerificationReport verify_brill_noether(int g, int r, int d, const SuiteOptions& opts = {});

struct TableRow {
  int d;
  int g;
  int64_t lambda;
  int64_t lambda_prime;
};

std::vector<TableRow> pencil_table(int d_min, int d_max);
std::string format_table(const std::vector<TableRow>& rows, bool tsv = false);

int64_t brill_noether_rho(int g, int r, int d);

}  // namespace chipfire
