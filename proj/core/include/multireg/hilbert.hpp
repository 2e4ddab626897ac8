#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "multireg/groebner.hpp"

namespace multireg {

using Rational = boost::rational<long long>;

/// A univariate polynomial with exact rational coefficients; the eventual
/// value of a Hilbert function. Degree is at most k-1 for quotients by
/// fat-point ideals in a product of k projective spaces.
struct HilbertPolynomial {
  std::vector<Rational> coeffs;  // coeffs[i] multiplies t^i

  Rational eval(long long t) const;
  /// Evaluation that must land on an integer; throws std::logic_error
  /// otherwise (Hilbert polynomials are integer-valued on N).
  long long eval_integer(long long t) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  bool operator==(const HilbertPolynomial& o) const;
};

/// dim_k (R/I)_t for a multidegree t: the number of degree-t standard
/// monomials of the initial ideal.
std::uint64_t multigraded_hilbert(const Ideal& I, const MultiDegree& t);

/// dim_k (R/I)_t for a total degree t. Evaluated twice: by summing
/// multigraded values over all compositions of t, and by exact rank of the
/// spanning sets of each piece of I. Throws std::logic_error if the two
/// routes ever disagree.
std::uint64_t graded_hilbert(const Ideal& I, int t);

/// HP_{R/I_X}(t) = s * C(t+k-1, k-1) for s reduced points in generic
/// position.
HilbertPolynomial hilbert_polynomial_reduced(int s, int k);

/// Degree-(k-1) interpolant of the Hilbert function through t = T..T+k-1,
/// verified to match again at T+k; throws StabilizationError when the
/// function has not yet settled. The caller supplies T beyond the
/// regularity-index bound.
HilbertPolynomial hilbert_polynomial_empirical(const Ideal& I, int k, int T);

/// Least t with H(j) = HP(j) for all j in [t, horizon]; scans downward.
int regularity_index(const Ideal& I, const HilbertPolynomial& HP, int horizon);

/// Multigraded and total-degree Hilbert values over a componentwise box.
/// Totals are recorded for t up to the smallest box coordinate, where every
/// composition of t lies inside the box.
struct HilbertTable {
  MultiDegree box;
  std::map<std::vector<int>, std::uint64_t> values;
  std::map<int, std::uint64_t> total;
};

HilbertTable hilbert_table(const Ideal& I, const MultiDegree& box);

/// Degree beyond which every decision in the verification pipeline has
/// happened: fat_bound + k + 1 for s >= 2, and m_1 + k + 1 for s = 1.
int verification_horizon(const SpaceShape& shape,
                         const std::vector<int>& mults);

}  // namespace multireg
