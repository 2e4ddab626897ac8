#include <doctest.h>

#include <stdexcept>

#include "multireg/formulas.hpp"

using namespace multireg;

TEST_SUITE_BEGIN("formulas");

TEST_CASE("d_value scan") {
  CHECK(d_value(1, 1) == 0);
  CHECK(d_value(4, 1) == 0);
  CHECK(d_value(1, 5) == 4);
  CHECK(d_value(2, 6) == 2);  // C(3,1)=3 < 6 <= C(4,2)=6
  // definition check: least d with C(d+n,d) >= s
  for (int n = 1; n <= 4; ++n) {
    for (int s = 1; s <= 40; ++s) {
      int d = d_value(n, s);
      CHECK(binomial(d + n, d) >= static_cast<std::uint64_t>(s));
      if (d > 0) CHECK(binomial(d - 1 + n, d - 1) < static_cast<std::uint64_t>(s));
    }
  }
}

TEST_CASE("reduced regularity closed form") {
  CHECK(reduced_regularity_formula(SpaceShape({3, 1}), 1) == 1);
  CHECK(reduced_regularity_formula(SpaceShape({1, 1}), 3) == 3);
  CHECK(reduced_regularity_formula(SpaceShape({2, 1}), 5) == 5);
}

TEST_CASE("regularity index bound") {
  CHECK(ri_bound(SpaceShape({2}), {2, 1, 1}) == 2);
  CHECK(ri_bound(SpaceShape({2}), {2, 2, 2}) == 3);
  CHECK(ri_bound(SpaceShape({1, 1}), {2, 2}) == 3);
  CHECK_THROWS_AS(ri_bound(SpaceShape({2}), {3}), std::invalid_argument);
  // unsorted input gets normalized
  CHECK(ri_bound(SpaceShape({2}), {1, 2, 1}) == 2);
}

TEST_CASE("fat point regularity bound") {
  CHECK(fat_bound(SpaceShape({2}), {2, 2, 2}) == 4);
  CHECK(fat_bound(SpaceShape({1, 1}), {2, 2}) == 5);
  CHECK(fat_bound(SpaceShape({2, 1}), {1, 1, 1, 1}) == 5);
}

TEST_CASE("single point regularity index value") {
  CHECK(single_point_ri(1, 1) == 0);
  CHECK(single_point_ri(3, 1) == 2);
  CHECK(single_point_ri(4, 2) == 2);
  CHECK(single_point_ri(1, 2) == -1);  // signed; callers clamp
}

TEST_CASE("binomial product inequality") {
  CHECK(binomial_inequality_check(1, 1, 1));  // 3 <= 4
  CHECK(binomial_inequality_check(2, 1, 1));  // 6 <= 9
  CHECK(binomial_inequality_check(1, 5, 7));
}

TEST_CASE("bound report pieces") {
  BoundReport r = bound_report(SpaceShape({2, 1}), {2, 2, 2});
  CHECK(r.d == std::vector<int>{1, 2});
  CHECK(r.D == 3);
  CHECK(r.reduced_reg == 3);
  CHECK(r.pair_piece == 3);
  REQUIRE(r.floor_pieces.size() == 2);
  CHECK(r.floor_pieces[0] == 3);  // [(6+2-2)/2]
  CHECK(r.floor_pieces[1] == 5);  // [(6+1-2)/1]
  CHECK(r.ri_bound == 5);
  CHECK(r.reg_bound == 7);
}

TEST_CASE("D coherence with the smallest factor") {
  for (int s = 1; s <= 12; ++s) {
    for (auto dims : {std::vector<int>{1, 1}, std::vector<int>{2, 1},
                      std::vector<int>{3, 2, 1}}) {
      SpaceShape shape(dims);
      int D = 0, d_min_factor = 0;
      int nmin = shape.min_dim();
      for (int n : dims) {
        D = std::max(D, d_value(n, s) + 1);
        if (n == nmin) d_min_factor = d_value(n, s);
      }
      CHECK(D == d_min_factor + 1);
    }
  }
}

TEST_CASE("floor identity for the threshold") {
  // min{t : n*t >= q} = [(q+n-1)/n], exhaustively
  for (int n = 1; n <= 50; ++n) {
    for (int q = 1; q <= 50; ++q) {
      int t = 0;
      while (n * t < q) ++t;
      CHECK(t == (q + n - 1) / n);
    }
  }
}

TEST_CASE("bounds never undercut the exact reduced value at k=1") {
  for (int n = 1; n <= 3; ++n) {
    for (int s = 2; s <= 8; ++s) {
      SpaceShape shape({n});
      CHECK(fat_bound(shape, std::vector<int>(s, 1)) >=
            reduced_regularity_formula(shape, s));
    }
  }
}

TEST_SUITE_END();
