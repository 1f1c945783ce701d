#include "chipfire/paths.hpp"

#include <algorithm>
#include <sstream>

#include "chipfire/chip_firing.hpp"
#include "chipfire/errors.hpp"

namespace chipfire {

void validate_path(const LatticePath& p) {
  if (p.size() < 3 || p.size() % 2 == 0) {
    fail(errc::invalid_parameter, "path needs an odd number of entries >= 3");
  }
  if (p.front() != 1 || p.back() != 1) fail(errc::invalid_parameter, "path must start and end at 1");
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) fail(errc::invalid_parameter, "path entries must stay >= 1");
    if (i > 0 && std::abs(p[i] - p[i - 1]) != 1) {
      fail(errc::invalid_parameter, "path steps must be +-1");
    }
  }
}

namespace {

void check_even_genus(int g) {
  if (g < 2 || g % 2 != 0) fail(errc::invalid_parameter, "path enumeration needs even g >= 2");
}

void extend(LatticePath& prefix, int g, std::vector<LatticePath>& out) {
  int i = static_cast<int>(prefix.size()) - 1;
  if (i == g) {
    if (prefix.back() == 1) out.push_back(prefix);
    return;
  }
  int cur = prefix.back();
  // Must be able to get back to 1 within the remaining steps.
  for (int step : {-1, +1}) {
    int nxt = cur + step;
    if (nxt < 1) continue;
    if (nxt - 1 > g - i - 1) continue;
    prefix.push_back(nxt);
    extend(prefix, g, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LatticePath> enumerate_paths(int g) {
  check_even_genus(g);
  std::vector<LatticePath> out;
  LatticePath prefix{1};
  prefix.reserve(g + 1);
  extend(prefix, g, out);
  return out;
}

std::vector<LatticePath> enumerate_symmetric_paths(int g) {
  check_even_genus(g);
  std::vector<LatticePath> out;
  for (auto& p : enumerate_paths(g)) {
    if (is_palindrome(p)) out.push_back(p);
  }
  return out;
}

LatticePath reverse_path(const LatticePath& p) {
  validate_path(p);
  return LatticePath(p.rbegin(), p.rend());
}

bool is_palindrome(const LatticePath& p) { return std::equal(p.begin(), p.end(), p.rbegin()); }

int64_t catalan_count(int d) {
  if (d < 1) fail(errc::invalid_parameter, "catalan_count needs d >= 1");
  return binomial(2 * d - 2, d - 1) / d;  // exact: Catalan number
}

int64_t symmetric_count_closed_form(int d) {
  if (d < 2) fail(errc::invalid_parameter, "symmetric count needs d >= 2");
  return binomial(d - 1, d / 2);  // ceil((d-1)/2) = floor(d/2)
}

int64_t symmetric_count_by_midheight(int d, int m) {
  if (d < 2 || m < 1 || m > d || (d - m) % 2 != 0) {
    fail(errc::invalid_parameter, "midheight count needs 1 <= m <= d with m = d (mod 2)");
  }
  int64_t k = (d - m) / 2;
  int64_t product = m * binomial(d, k);
  if (product % d != 0) fail(errc::internal, "midheight count is not integral");
  int64_t value = product / d;
  int64_t difference_form = binomial(d - 1, k) - binomial(d - 1, k - 1);
  if (value != difference_form) fail(errc::internal, "midheight count forms disagree");
  return value;
}

std::string path_to_string(const LatticePath& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  return os.str();
}

LatticePath parse_path(const std::string& text) {
  LatticePath p;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      size_t used = 0;
      p.push_back(std::stoi(tok, &used));
      if (used != tok.size()) fail(errc::parse_error, "bad path entry '" + tok + "'");
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad path entry '" + tok + "'");
    }
  }
  validate_path(p);
  return p;
}

}  // namespace chipfire
