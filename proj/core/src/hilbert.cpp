#include "multireg/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "multireg/errors.hpp"
#include "multireg/formulas.hpp"

namespace multireg {

Rational HilbertPolynomial::eval(long long t) const {
  Rational acc(0);
  Rational power(1);
  for (const auto& c : coeffs) {
    acc += c * power;
    power *= Rational(t);
  }
  return acc;
}

long long HilbertPolynomial::eval_integer(long long t) const {
  Rational v = eval(t);
  if (v.denominator() != 1)
    throw std::logic_error("Hilbert polynomial value is not an integer");
  return v.numerator();
}

bool HilbertPolynomial::operator==(const HilbertPolynomial& o) const {
  // compare after stripping trailing zeros
  auto trimmed = [](const std::vector<Rational>& c) {
    std::size_t n = c.size();
    while (n > 0 && c[n - 1] == Rational(0)) --n;
    return n;
  };
  std::size_t na = trimmed(coeffs), nb = trimmed(o.coeffs);
  if (na != nb) return false;
  for (std::size_t i = 0; i < na; ++i) {
    if (coeffs[i] != o.coeffs[i]) return false;
  }
  return true;
}

std::uint64_t multigraded_hilbert(const Ideal& I, const MultiDegree& t) {
  const PolyRing& R = I.ring();
  if (!I.multigraded())
    throw std::invalid_argument(
        "multigraded Hilbert function needs N^k-homogeneous generators");
  std::uint64_t standard = 0;
  for (const auto& m : enumerate_monomials(R.shape(), t, R.order())) {
    if (!I.lt_divides(m)) ++standard;
  }
  return standard;
}

std::uint64_t graded_hilbert(const Ideal& I, int t) {
  if (t < 0) throw std::invalid_argument("degree must be >= 0");
  const PolyRing& R = I.ring();
  std::uint64_t by_composition = 0;
  std::uint64_t ideal_rank = 0;
  for (const auto& c : compositions(t, R.shape().k())) {
    by_composition += multigraded_hilbert(I, c);
    ideal_rank += ideal_piece_rank(I, c);
  }
  std::uint64_t by_rank = dim_total_degree(R.shape(), t) - ideal_rank;
  if (by_composition != by_rank) {
    throw std::logic_error(
        "Hilbert routes disagree at degree " + std::to_string(t) +
        ": composition sum " + std::to_string(by_composition) +
        " vs rank " + std::to_string(by_rank));
  }
  return by_composition;
}

HilbertPolynomial hilbert_polynomial_reduced(int s, int k) {
  if (s < 1 || k < 1)
    throw std::invalid_argument("hilbert_polynomial_reduced: need s,k >= 1");
  // s * (t+1)(t+2)...(t+k-1) / (k-1)!
  std::vector<Rational> c{Rational(1)};
  for (int j = 1; j <= k - 1; ++j) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] += c[i] * Rational(j);
    }
    c = std::move(next);
  }
  long long fact = 1;
  for (int j = 2; j <= k - 1; ++j) fact *= j;
  for (auto& x : c) x = x * Rational(s, fact);
  return HilbertPolynomial{std::move(c)};
}

HilbertPolynomial hilbert_polynomial_empirical(const Ideal& I, int k, int T) {
  if (k < 1) throw std::invalid_argument("k >= 1 required");
  if (T < 0) throw std::invalid_argument("T >= 0 required");
  std::vector<long long> nodes, vals;
  for (int i = 0; i < k; ++i) {
    nodes.push_back(T + i);
    vals.push_back(static_cast<long long>(graded_hilbert(I, T + i)));
  }
  // Lagrange interpolation, expanded to coefficients
  std::vector<Rational> coeffs(k, Rational(0));
  for (int i = 0; i < k; ++i) {
    // numerator polynomial prod_{j != i} (t - nodes[j])
    std::vector<Rational> num{Rational(1)};
    Rational denom(1);
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(num.size() + 1, Rational(0));
      for (std::size_t d = 0; d < num.size(); ++d) {
        next[d + 1] += num[d];
        next[d] -= num[d] * Rational(nodes[j]);
      }
      num = std::move(next);
      denom *= Rational(nodes[i] - nodes[j]);
    }
    Rational w = Rational(vals[i]) / denom;
    for (std::size_t d = 0; d < num.size(); ++d) coeffs[d] += num[d] * w;
  }
  HilbertPolynomial hp{std::move(coeffs)};
  long long check = static_cast<long long>(graded_hilbert(I, T + k));
  Rational predicted = hp.eval(T + k);
  if (predicted != Rational(check)) {
    throw StabilizationError(
        "Hilbert function still moving at degree " + std::to_string(T + k) +
        ": interpolant predicts " + std::to_string(predicted.numerator()) +
        "/" + std::to_string(predicted.denominator()) + ", function gives " +
        std::to_string(check));
  }
  return hp;
}

int regularity_index(const Ideal& I, const HilbertPolynomial& HP,
                     int horizon) {
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  for (int t = horizon; t >= 0; --t) {
    long long h = static_cast<long long>(graded_hilbert(I, t));
    if (HP.eval(t) != Rational(h)) return t + 1;
  }
  return 0;
}

HilbertTable hilbert_table(const Ideal& I, const MultiDegree& box) {
  const SpaceShape& shape = I.ring().shape();
  if (box.k() != shape.k())
    throw std::invalid_argument("box length does not match shape");
  HilbertTable table;
  table.box = box;
  std::vector<int> cur(box.k(), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == box.k()) {
      table.values[cur] = multigraded_hilbert(I, MultiDegree(cur));
      return;
    }
    for (int v = 0; v <= box.parts[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);
  int tmax = *std::min_element(box.parts.begin(), box.parts.end());
  for (int t = 0; t <= tmax; ++t) {
    std::uint64_t total = 0;
    for (const auto& c : compositions(t, box.k())) total += table.values.at(c.parts);
    table.total[t] = total;
  }
  return table;
}

int verification_horizon(const SpaceShape& shape,
                         const std::vector<int>& mults) {
  if (mults.empty()) throw std::invalid_argument("empty multiplicity list");
  if (mults.size() == 1) return mults[0] + shape.k() + 1;
  return static_cast<int>(fat_bound(shape, mults)) + shape.k() + 1;
}

}  // namespace multireg
