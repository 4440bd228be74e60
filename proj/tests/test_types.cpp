#include <doctest.h>

#include "augtk/types.hpp"

using namespace augtk;

TEST_CASE("accumulate sorts, merges duplicates and drops exact zeros") {
  auto v = SparseVector::accumulate(
      {{{7}, 2.0}, {{3}, 1.5}, {{7}, -1.0}, {{2}, 4.0}, {{3}, -1.5}});
  REQUIRE(v.size() == 2);
  CHECK(v.entries()[0] == SparseVector::Entry{{2}, 4.0});
  CHECK(v.entries()[1] == SparseVector::Entry{{7}, 1.0});
  CHECK(v.at({2}) == 4.0);
  CHECK(v.at({3}) == 0.0);   // cancelled out
  CHECK(v.at({99}) == 0.0);  // never present
  CHECK_FALSE(v.empty());
  CHECK(SparseVector{}.empty());
}

TEST_CASE("sparse-sparse dot walks the intersection") {
  auto a = SparseVector::accumulate({{{0}, 1.0}, {{2}, 2.0}, {{5}, -1.0}});
  auto b = SparseVector::accumulate({{{2}, 3.0}, {{4}, 10.0}, {{5}, 2.0}});
  CHECK(dot(a, b) == 4.0);  // 2*3 + (-1)*2
  CHECK(dot(a, SparseVector{}) == 0.0);
  CHECK(norm_squared(a) == 6.0);
  CHECK(norm_squared(SparseVector{}) == 0.0);
}

TEST_CASE("dense-sparse dot ignores ids beyond the dense extent") {
  std::vector<double> w = {1.0, 2.0, 3.0};
  auto x = SparseVector::accumulate({{{1}, 2.0}, {{9}, 100.0}});
  CHECK(dot(w, x) == 4.0);
}

TEST_CASE("domain identity compares by index only") {
  DomainId a{1, "books"};
  DomainId b{1, "dvd"};
  DomainId c{2, "books"};
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

TEST_CASE("parse errors carry an optional line number") {
  ParseError with_line("bad column", 12);
  CHECK(std::string(with_line.what()) == "line 12: bad column");
  CHECK(with_line.line() == 12);
  ParseError bare("bad");
  CHECK(std::string(bare.what()) == "bad");
  CHECK(bare.line() == 0);
}
