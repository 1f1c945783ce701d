#include <doctest.h>

#include <map>

#include "chipfire/paths.hpp"
#include "chipfire/errors.hpp"

using namespace chipfire;

TEST_CASE("path enumeration at small genus") {
  CHECK(enumerate_paths(2) == std::vector<LatticePath>{{1, 2, 1}});
  CHECK(enumerate_paths(4) == std::vector<LatticePath>{{1, 2, 1, 2, 1}, {1, 2, 3, 2, 1}});
  auto g6 = enumerate_paths(6);
  CHECK(g6.size() == 5);
  // Lexicographic order.
  for (size_t i = 1; i < g6.size(); ++i) CHECK(g6[i - 1] < g6[i]);
  CHECK(g6.front() == LatticePath{1, 2, 1, 2, 1, 2, 1});
  CHECK(g6.back() == LatticePath{1, 2, 3, 4, 3, 2, 1});
}

TEST_CASE("path enumeration rejects bad genus") {
  CHECK_THROWS_AS(enumerate_paths(3), Error);
  CHECK_THROWS_AS(enumerate_paths(0), Error);
  CHECK_THROWS_AS(enumerate_paths(-2), Error);
  CHECK_THROWS_AS(enumerate_symmetric_paths(5), Error);
}

TEST_CASE("path validation") {
  CHECK_THROWS_AS(validate_path({1, 2}), Error);
  CHECK_THROWS_AS(validate_path({1, 2, 2}), Error);
  CHECK_THROWS_AS(validate_path({2, 1, 2}), Error);
  CHECK_THROWS_AS(validate_path({1, 0, 1}), Error);
  CHECK_THROWS_AS(validate_path({1, 2, 1, 2}), Error);
  CHECK_NOTHROW(validate_path({1, 2, 3, 2, 1}));
}

TEST_CASE("catalan counts") {
  CHECK(catalan_count(1) == 1);
  CHECK(catalan_count(2) == 1);
  CHECK(catalan_count(3) == 2);
  CHECK(catalan_count(4) == 5);
  CHECK(catalan_count(7) == 132);
  CHECK(catalan_count(10) == 4862);
  CHECK_THROWS_AS(catalan_count(0), Error);
}

TEST_CASE("enumeration count matches the Catalan closed form") {
  for (int g = 2; g <= 20; g += 2) {
    CHECK(static_cast<int64_t>(enumerate_paths(g).size()) == catalan_count(g / 2 + 1));
  }
}

TEST_CASE("symmetric closed form") {
  CHECK(symmetric_count_closed_form(2) == 1);
  CHECK(symmetric_count_closed_form(4) == 3);
  CHECK(symmetric_count_closed_form(6) == 10);
  CHECK(symmetric_count_closed_form(9) == 70);
  CHECK_THROWS_AS(symmetric_count_closed_form(1), Error);
}

TEST_CASE("symmetric enumeration matches the central binomial coefficient") {
  for (int g = 2; g <= 20; g += 2) {
    auto sym = enumerate_symmetric_paths(g);
    for (auto& p : sym) CHECK(is_palindrome(p));
    CHECK(static_cast<int64_t>(sym.size()) == symmetric_count_closed_form(g / 2 + 1));
  }
  CHECK(enumerate_symmetric_paths(4).size() == 2);
  CHECK(enumerate_symmetric_paths(6).size() == 3);
  CHECK(enumerate_symmetric_paths(2).size() == 1);
}

TEST_CASE("midheight counts against the enumeration oracle") {
  // Oracle: group the palindromic paths by their middle entry.
  for (int d = 2; d <= 8; ++d) {
    int g = 2 * d - 2;
    std::map<int, int64_t> observed;
    for (auto& p : enumerate_symmetric_paths(g)) ++observed[p[g / 2]];
    int64_t total = 0;
    for (int m = (d % 2 == 0) ? 2 : 1; m <= d; m += 2) {
      int64_t counted = symmetric_count_by_midheight(d, m);
      auto it = observed.find(m);
      CHECK(counted == (it == observed.end() ? 0 : it->second));
      total += counted;
    }
    CHECK(total == symmetric_count_closed_form(d));
  }
}

TEST_CASE("midheight counts sum to the closed form up to d = 12") {
  for (int d = 2; d <= 12; ++d) {
    int64_t total = 0;
    for (int m = (d % 2 == 0) ? 2 : 1; m <= d; m += 2) {
      total += symmetric_count_by_midheight(d, m);
    }
    CHECK(total == symmetric_count_closed_form(d));
  }
}

TEST_CASE("midheight frozen values") {
  CHECK(symmetric_count_by_midheight(3, 1) == 1);
  CHECK(symmetric_count_by_midheight(3, 3) == 1);
  CHECK(symmetric_count_by_midheight(5, 1) == 2);
  CHECK(symmetric_count_by_midheight(5, 3) == 3);
  CHECK(symmetric_count_by_midheight(5, 5) == 1);
  // The single staircase path.
  for (int d = 2; d <= 10; ++d) CHECK(symmetric_count_by_midheight(d, d) == 1);
  CHECK_THROWS_AS(symmetric_count_by_midheight(5, 2), Error);  // parity
  CHECK_THROWS_AS(symmetric_count_by_midheight(5, 7), Error);  // range
  CHECK_THROWS_AS(symmetric_count_by_midheight(5, 0), Error);
}

TEST_CASE("path reversal") {
  CHECK(reverse_path({1, 2, 1}) == LatticePath{1, 2, 1});
  CHECK(reverse_path({1, 2, 1, 2, 3, 2, 1}) == LatticePath{1, 2, 3, 2, 1, 2, 1});
  for (int g = 2; g <= 10; g += 2) {
    for (auto& p : enumerate_paths(g)) CHECK(reverse_path(reverse_path(p)) == p);
  }
}

TEST_CASE("path serialization") {
  CHECK(path_to_string({1, 2, 3, 2, 1}) == "1,2,3,2,1");
  CHECK(parse_path("1,2,3,2,1") == LatticePath{1, 2, 3, 2, 1});
  CHECK_THROWS_AS(parse_path("1,2,x"), Error);
  CHECK_THROWS_AS(parse_path("2,1,2"), Error);
}
