#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chipfire {

// Lattice path p_0..p_g with p_0 = p_g = 1, every p_i >= 1 and unit steps.
// Each such path encodes one linear pencil of degree g/2 + 1 on the genus-g
// chain of loops.
using LatticePath = std::vector<int>;

// Throws invalid_parameter unless the path satisfies all constraints.
void validate_path(const LatticePath& p);

// All valid paths for even g >= 2, in lexicographic order;
// the count is catalan_count(g/2 + 1).
std::vector<LatticePath> enumerate_paths(int g);

// The palindromic paths among them; the count is
// symmetric_count_closed_form(g/2 + 1).
std::vector<LatticePath> enumerate_symmetric_paths(int g);

LatticePath reverse_path(const LatticePath& p);
bool is_palindrome(const LatticePath& p);

// (1/d) * C(2d-2, d-1), the Catalan number counting all pencils.
int64_t catalan_count(int d);

// C(d-1, ceil((d-1)/2)), the central binomial coefficient counting the
// mirror-invariant pencils.
int64_t symmetric_count_closed_form(int d);

// Number of palindromic paths with middle height m, for m = d mod 2:
// (m/d) * C(d, (d-m)/2), validated against the equivalent difference form
// C(d-1, (d-m)/2) - C(d-1, (d-m)/2 - 1).
int64_t symmetric_count_by_midheight(int d, int m);

std::string path_to_string(const LatticePath& p);   // "1,2,3,2,1"
LatticePath parse_path(const std::string& text);

}  // namespace chipfire
