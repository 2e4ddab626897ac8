#include <doctest.h>

#include <stdexcept>

#include "multireg/errors.hpp"
#include "multireg/formulas.hpp"
#include "multireg/hilbert.hpp"

using namespace multireg;

TEST_SUITE_BEGIN("hilbert");

namespace {

PolyRing p1p1_ring() {
  return PolyRing(SpaceShape({1, 1}), PrimeField(32003));
}

// [1:a0 gets encoded as forms] point ideal of ([a0:a1],[b0:b1]) in P1xP1
Ideal explicit_point(const PolyRing& R, std::uint32_t a0, std::uint32_t a1,
                     std::uint32_t b0, std::uint32_t b1) {
  Polynomial f = R.sub(R.scale(R.variable(0), a1), R.scale(R.variable(1), a0));
  Polynomial g = R.sub(R.scale(R.variable(2), b1), R.scale(R.variable(3), b0));
  return Ideal(R, {f, g});
}

// three points in generic position (verified against min{dim R_t, 3} below)
Ideal three_points(const PolyRing& R) {
  return intersect(
      intersect(explicit_point(R, 1, 0, 1, 0), explicit_point(R, 0, 1, 0, 1)),
      explicit_point(R, 1, 1, 1, 2));
}

}  // namespace

TEST_CASE("multigraded values of a single point") {
  PolyRing R = p1p1_ring();
  Ideal pr(R, {R.variable(1), R.variable(3)});
  for (int t1 = 0; t1 <= 3; ++t1) {
    for (int t2 = 0; t2 <= 3; ++t2) {
      CHECK(multigraded_hilbert(pr, MultiDegree({t1, t2})) == 1);
    }
  }
}

TEST_CASE("multigraded values of three generic points") {
  PolyRing R = p1p1_ring();
  Ideal I = three_points(R);
  CHECK(multigraded_hilbert(I, MultiDegree({1, 0})) == 2);
  CHECK(multigraded_hilbert(I, MultiDegree({1, 1})) == 3);
  // full generic-position profile on a box
  for (int t1 = 0; t1 <= 3; ++t1) {
    for (int t2 = 0; t2 <= 3; ++t2) {
      MultiDegree t({t1, t2});
      CHECK(multigraded_hilbert(I, t) ==
            std::min<std::uint64_t>(dim_graded_piece(R.shape(), t), 3));
    }
  }
}

TEST_CASE("total-degree values of three generic points") {
  PolyRing R = p1p1_ring();
  Ideal I = three_points(R);
  CHECK(graded_hilbert(I, 0) == 1);
  CHECK(graded_hilbert(I, 1) == 4);
  CHECK(graded_hilbert(I, 2) == 9);   // 3+3+3 over (2,0),(1,1),(0,2)
  CHECK(graded_hilbert(I, 3) == 12);  // constant s per composition from here
}

TEST_CASE("closed-form Hilbert polynomials for reduced points") {
  HilbertPolynomial c3 = hilbert_polynomial_reduced(3, 1);
  CHECK(c3.eval_integer(0) == 3);
  CHECK(c3.eval_integer(9) == 3);
  HilbertPolynomial l3 = hilbert_polynomial_reduced(3, 2);
  for (long long t = 0; t <= 6; ++t) CHECK(l3.eval_integer(t) == 3 * (t + 1));
  HilbertPolynomial q5 = hilbert_polynomial_reduced(5, 3);
  for (long long t = 0; t <= 6; ++t)
    CHECK(q5.eval_integer(t) == 5 * (t + 2) * (t + 1) / 2);
}

TEST_CASE("empirical polynomial matches the closed form on generic points") {
  PolyRing R = p1p1_ring();
  Ideal I = three_points(R);
  int horizon = verification_horizon(R.shape(), {1, 1, 1});
  HilbertPolynomial hp = hilbert_polynomial_empirical(I, 2, horizon - 2);
  CHECK(hp == hilbert_polynomial_reduced(3, 2));
}

TEST_CASE("empirical polynomial of one reduced point") {
  PolyRing R = p1p1_ring();
  Ideal pr(R, {R.variable(1), R.variable(3)});
  HilbertPolynomial hp = hilbert_polynomial_empirical(pr, 2, 4);
  // H(t) = #{(t1,t2) : t1+t2=t} = t+1 for a single point with k=2
  CHECK(hp == hilbert_polynomial_reduced(1, 2));
  for (long long t = 0; t <= 8; ++t) CHECK(hp.eval_integer(t) == t + 1);
}

TEST_CASE("empirical polynomial of a double point in the plane") {
  PolyRing R(SpaceShape({2}), PrimeField(32003));
  Ideal pr(R, {R.variable(1), R.variable(2)});
  Ideal sq = power(pr, 2);
  HilbertPolynomial hp = hilbert_polynomial_empirical(sq, 1, 4);
  CHECK(hp.eval_integer(0) == 3);  // constant, the length C(2-1+2,2)
  CHECK(hp.degree() == 0);
}

TEST_CASE("unstabilized fits are rejected") {
  PolyRing R = p1p1_ring();
  Ideal I = three_points(R);
  CHECK_THROWS_AS(hilbert_polynomial_empirical(I, 2, 0), StabilizationError);
}

TEST_CASE("regularity index examples") {
  PolyRing R = p1p1_ring();
  Ideal I = three_points(R);
  int horizon = verification_horizon(R.shape(), {1, 1, 1});
  HilbertPolynomial hp = hilbert_polynomial_reduced(3, 2);
  CHECK(regularity_index(I, hp, horizon) == 2);  // H(1)=4 != 6 = HP(1)

  Ideal pr(R, {R.variable(1), R.variable(3)});
  CHECK(regularity_index(pr, hilbert_polynomial_reduced(1, 2), 6) == 0);
}

TEST_CASE("regularity index of powers of a point") {
  // k = 2
  PolyRing R2 = p1p1_ring();
  Ideal pr2(R2, {R2.variable(1), R2.variable(3)});
  for (int a = 1; a <= 4; ++a) {
    Ideal pw = power(pr2, a);
    int horizon = verification_horizon(R2.shape(), {a});
    HilbertPolynomial hp = hilbert_polynomial_empirical(R2.shape().k() ? pw : pw, 2, horizon - 2);
    int expected = std::max(a - 2, 0);
    CHECK(regularity_index(pw, hp, horizon) == expected);
  }
  // k = 1
  PolyRing R1(SpaceShape({2}), PrimeField(32003));
  Ideal pr1(R1, {R1.variable(1), R1.variable(2)});
  for (int a = 1; a <= 4; ++a) {
    Ideal pw = power(pr1, a);
    int horizon = verification_horizon(R1.shape(), {a});
    HilbertPolynomial hp = hilbert_polynomial_empirical(pw, 1, horizon - 1);
    CHECK(regularity_index(pw, hp, horizon) == a - 1);
  }
}

TEST_CASE("filtration of an artinian quotient by powers") {
  // J one coordinate point, p another; check
  // H_{R/(J+p^a)}(t) = sum_i dim[(J+p^i)/(J+p^{i+1})]_t
  PolyRing R = p1p1_ring();
  Ideal J = explicit_point(R, 1, 0, 1, 0);
  Ideal pr = explicit_point(R, 0, 1, 0, 1);
  int a = 3;
  auto H_of = [&](const Ideal& I, int t) {
    return static_cast<long long>(graded_hilbert(I, t));
  };
  Ideal target = sum(J, power(pr, a));
  for (int t = 0; t <= 8; ++t) {
    long long lhs = H_of(target, t);
    long long rhs = 0;
    for (int i = 0; i < a; ++i) {
      // dim(J+p^i)_t - dim(J+p^{i+1})_t, with p^0 the unit ideal
      long long hi = (i == 0) ? 0 : H_of(sum(J, power(pr, i)), t);
      long long hi1 = H_of(sum(J, power(pr, i + 1)), t);
      long long summand = hi1 - hi;  // = dim(J+p^i)_t - dim(J+p^{i+1})_t
      CHECK(summand >= 0);
      rhs += summand;
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("sum with a power of a different point is artinian") {
  PolyRing R = p1p1_ring();
  Ideal J = explicit_point(R, 1, 0, 1, 0);
  Ideal pr = explicit_point(R, 0, 1, 1, 1);
  for (int a : {1, 2, 3}) {
    Ideal q = sum(J, power(pr, a));
    // vanishing beyond max{m_1 + a - 1, t*} with t* = [(1 + a - 1 + n_k - 1)/n_k]
    long long threshold =
        std::max<long long>(1 + a - 1, (1 + a - 1 + 1 - 1) / 1);
    bool all_zero = true;
    for (int t = static_cast<int>(threshold) + 1;
         t <= static_cast<int>(threshold) + 3; ++t) {
      if (graded_hilbert(q, t) != 0) all_zero = false;
    }
    CHECK(all_zero);
  }
}

TEST_CASE("hilbert table composition identity") {
  PolyRing R = p1p1_ring();
  Ideal I = three_points(R);
  HilbertTable table = hilbert_table(I, MultiDegree({4, 4}));
  REQUIRE(table.total.size() == 5);
  for (const auto& [t, total] : table.total) {
    std::uint64_t sum = 0;
    for (const auto& c : compositions(t, 2)) sum += table.values.at(c.parts);
    CHECK(total == sum);
    CHECK(total == graded_hilbert(I, t));
  }
  // componentwise monotone for point schemes
  for (int t1 = 0; t1 < 4; ++t1) {
    for (int t2 = 0; t2 < 4; ++t2) {
      CHECK(table.values.at({t1, t2}) <= table.values.at({t1 + 1, t2}));
      CHECK(table.values.at({t1, t2}) <= table.values.at({t1, t2 + 1}));
    }
  }
}

TEST_CASE("verification horizon") {
  SpaceShape p1p1({1, 1});
  // s=1: m1 + k + 1
  CHECK(verification_horizon(p1p1, {3}) == 6);
  // s>=2: fat_bound + k + 1
  CHECK(verification_horizon(p1p1, {2, 2}) == 5 + 2 + 1);
}

TEST_SUITE_END();
