#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "multireg/groebner.hpp"
#include "multireg/hilbert.hpp"

using namespace multireg;

TEST_SUITE_BEGIN("groebner");

namespace {

PolyRing p1_ring() { return PolyRing(SpaceShape({1}), PrimeField(32003)); }
PolyRing p1p1_ring() {
  return PolyRing(SpaceShape({1, 1}), PrimeField(32003));
}

Polynomial random_homogeneous(const PolyRing& R, const MultiDegree& d,
                              std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const auto& m : enumerate_monomials(R.shape(), d, R.order())) {
    terms.push_back(
        Term{m, static_cast<std::uint32_t>(rng() % R.field().p())});
  }
  return R.from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("reduced basis of monomial and principal ideals") {
  PolyRing R = p1p1_ring();
  // (x_{1,1}, x_{2,1})
  Ideal I(R, {R.variable(1), R.variable(3)});
  auto gb = I.reduced_gb();
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == R.variable(3));
  CHECK(gb[1] == R.variable(1));

  PolyRing L = p1_ring();
  Polynomial xy = L.mul(L.variable(0), L.variable(1));
  Ideal J(L, {xy});
  REQUIRE(J.reduced_gb().size() == 1);
  CHECK(J.reduced_gb()[0] == xy);
}

TEST_CASE("intersection of two coordinate points on the line") {
  PolyRing R = p1_ring();
  Ideal p0(R, {R.variable(1)});  // [1:0]
  Ideal p1(R, {R.variable(0)});  // [0:1]
  Ideal meet = intersect(p0, p1);
  REQUIRE(meet.reduced_gb().size() == 1);
  CHECK(meet.reduced_gb()[0] == R.mul(R.variable(0), R.variable(1)));
}

TEST_CASE("reduced basis is unique under generator shuffles") {
  PolyRing R = p1p1_ring();
  std::mt19937_64 rng(5);
  // a non-trivial ideal: products and sums of linear forms
  Polynomial a = R.add(R.variable(0), R.variable(1));
  Polynomial b = R.add(R.variable(2), R.scale(R.variable(3), 7));
  std::vector<Polynomial> gens = {
      R.mul(a, b), R.mul(R.variable(0), R.variable(2)),
      R.mul(a, R.variable(3)), R.mul(R.variable(1), b)};
  Ideal I(R, gens);
  auto reference = I.reduced_gb();
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    Ideal J(R, gens);
    CHECK(J.same_ideal(I));
    CHECK(J.reduced_gb() == reference);
  }
}

TEST_CASE("normal form basics") {
  PolyRing R = p1_ring();
  Polynomial xy = R.mul(R.variable(0), R.variable(1));
  Ideal I(R, {xy});
  CHECK(normal_form(R.zero(), I).is_zero());
  CHECK(normal_form(xy, I).is_zero());
  Ideal J(R, {R.variable(1)});
  CHECK(normal_form(R.variable(0), J) == R.variable(0));
}

TEST_CASE("normal form rejects foreign rings") {
  PolyRing R = p1_ring();
  PolyRing S = p1p1_ring();
  Ideal I(R, {R.variable(0)});
  CHECK_THROWS_AS(normal_form(S.variable(0), I), std::invalid_argument);
}

TEST_CASE("membership of random generator combinations") {
  PolyRing R = p1p1_ring();
  std::mt19937_64 rng(11);
  Polynomial g1 = random_homogeneous(R, MultiDegree({1, 1}), rng);
  Polynomial g2 = random_homogeneous(R, MultiDegree({2, 0}), rng);
  Ideal I(R, {g1, g2});
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial c1 = random_homogeneous(R, MultiDegree({1, 0}), rng);
    Polynomial c2 = random_homogeneous(R, MultiDegree({0, 1}), rng);
    Polynomial f = R.add(R.mul(c1, g1), R.mul(R.mul(c2, c1), g2));
    CHECK(normal_form(f, I).is_zero());
  }
}

TEST_CASE("intersection is idempotent and membership-correct") {
  PolyRing R = p1p1_ring();
  std::mt19937_64 rng(13);
  Polynomial g1 = random_homogeneous(R, MultiDegree({1, 1}), rng);
  Polynomial g2 = random_homogeneous(R, MultiDegree({0, 2}), rng);
  Polynomial h1 = random_homogeneous(R, MultiDegree({1, 0}), rng);
  Ideal I(R, {g1, g2});
  Ideal J(R, {h1, R.mul(g1, g1)});
  CHECK(intersect(I, I).same_ideal(I));

  Ideal meet = intersect(I, J);
  int checked_members = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int t1 = static_cast<int>(rng() % 4);
    int t2 = static_cast<int>(rng() % std::max<std::uint64_t>(1, 6 - t1));
    Polynomial f = random_homogeneous(R, MultiDegree({t1, t2}), rng);
    // random elements rarely lie in the ideals; g1*h1 multiples are in both
    if (trial % 2 == 0 && t1 >= 2 && t2 >= 1) {
      Polynomial u = random_homogeneous(
          R, MultiDegree({t1 - 2, t2 - 1}), rng);
      f = R.mul(u, R.mul(g1, h1));
    }
    bool in_meet = meet.contains(f);
    bool in_both = I.contains(f) && J.contains(f);
    CHECK(in_meet == in_both);
    if (in_both && !f.is_zero()) ++checked_members;
  }
  CHECK(checked_members > 0);
}

TEST_CASE("coprime principal ideals intersect to the product") {
  PolyRing R = p1_ring();
  Ideal a(R, {R.variable(0)});
  Ideal b(R, {R.variable(1)});
  Ideal meet = intersect(a, b);
  REQUIRE(meet.reduced_gb().size() == 1);
  CHECK(meet.reduced_gb()[0] == R.mul(R.variable(0), R.variable(1)));
}

TEST_CASE("squares of two coordinate points on the line") {
  PolyRing R = p1_ring();
  Ideal p0sq = power(Ideal(R, {R.variable(1)}), 2);
  Ideal p1sq = power(Ideal(R, {R.variable(0)}), 2);
  Ideal meet = intersect(p0sq, p1sq);
  REQUIRE(meet.reduced_gb().size() == 1);
  Polynomial expect = R.mul(R.mul(R.variable(0), R.variable(0)),
                            R.mul(R.variable(1), R.variable(1)));
  CHECK(meet.reduced_gb()[0] == expect);
}

TEST_CASE("colon quotients") {
  PolyRing R = p1_ring();
  Polynomial x = R.variable(0), y = R.variable(1);
  Ideal I(R, {R.mul(x, y)});
  CHECK_THROWS_AS(colon(I, R.zero()), std::invalid_argument);
  CHECK(colon(I, R.constant(3)).same_ideal(I));
  Ideal q = colon(I, x);
  REQUIRE(q.reduced_gb().size() == 1);
  CHECK(q.reduced_gb()[0] == y);
}

TEST_CASE("colon detects non-zero divisors") {
  // two points [1:0],[0:1] on the line; x0+x1 vanishes at neither
  PolyRing R = p1_ring();
  Ideal I = intersect(Ideal(R, {R.variable(1)}), Ideal(R, {R.variable(0)}));
  Polynomial L = R.add(R.variable(0), R.variable(1));
  CHECK(colon(I, L).same_ideal(I));
  // x0 vanishes at [0:1], so it is a zero divisor: the colon grows
  CHECK(!colon(I, R.variable(0)).same_ideal(I));
}

TEST_CASE("powers of a point ideal") {
  PolyRing R = p1p1_ring();
  Ideal pr(R, {R.variable(1), R.variable(3)});
  CHECK_THROWS_AS(power(pr, 0), std::invalid_argument);
  CHECK(power(pr, 1).same_ideal(pr));
  Ideal sq = power(pr, 2);
  REQUIRE(sq.gens().size() == 3);
  auto gb = sq.reduced_gb();
  REQUIRE(gb.size() == 3);
  for (const auto& g : gb) CHECK(g.term_count() == 1);
}

TEST_CASE("sums") {
  PolyRing R = p1p1_ring();
  Ideal I(R, {R.variable(1)});
  Ideal zero(R, {});
  CHECK(sum(I, zero).same_ideal(I));
  Polynomial h = R.add(R.variable(2), R.variable(3));
  Ideal with_h = sum(I, h);
  CHECK(with_h.gens().size() == 2);
  CHECK(with_h.contains(h));
  CHECK(with_h.contains(R.variable(1)));
}

TEST_CASE("minimal generator degrees of points and powers") {
  PolyRing R(SpaceShape({2, 1}), PrimeField(32003));
  // a coordinate point of P^2 x P^1
  Ideal pr(R, {R.variable(1), R.variable(2), R.variable(4)});
  auto degs = min_gen_degrees(pr, 3);
  REQUIRE(degs.size() == 1);
  CHECK(degs.at(1) == 3);  // n_1 + n_2 generators, all linear

  for (int a : {2, 3}) {
    auto pw = min_gen_degrees(power(pr, a), a + 1);
    REQUIRE(pw.size() == 1);
    CHECK(pw.count(a) == 1);
  }
}

TEST_CASE("three explicit generic points in P1xP1 are generated by degree 3") {
  PolyRing R = p1p1_ring();
  auto point_id = [&](std::uint32_t a0, std::uint32_t a1, std::uint32_t b0,
                      std::uint32_t b1) {
    // forms a1*x0 - a0*x1 and b1*y0 - b0*y1
    Polynomial f = R.sub(R.scale(R.variable(0), a1), R.scale(R.variable(1), a0));
    Polynomial g = R.sub(R.scale(R.variable(2), b1), R.scale(R.variable(3), b0));
    return Ideal(R, {f, g});
  };
  Ideal I = intersect(intersect(point_id(1, 0, 1, 0), point_id(0, 1, 0, 1)),
                      point_id(1, 1, 1, 2));
  auto degs = min_gen_degrees(I, 5);
  REQUIRE(!degs.empty());
  for (const auto& [t, count] : degs) {
    CHECK(t <= 3);
    CHECK(count > 0);
  }
}

TEST_CASE("initial ideal has the ideal's piece dimensions") {
  PolyRing R = p1p1_ring();
  std::mt19937_64 rng(23);
  Polynomial g1 = random_homogeneous(R, MultiDegree({1, 1}), rng);
  Polynomial g2 = random_homogeneous(R, MultiDegree({2, 1}), rng);
  Ideal I(R, {g1, g2});
  for (int t1 = 0; t1 <= 4; ++t1) {
    for (int t2 = 0; t2 <= 4; ++t2) {
      MultiDegree t({t1, t2});
      std::size_t by_lt = 0;
      for (const auto& m : enumerate_monomials(R.shape(), t, R.order())) {
        if (I.lt_divides(m)) ++by_lt;
      }
      CHECK(ideal_piece_rank(I, t) == by_lt);
    }
  }
}

TEST_SUITE_END();
