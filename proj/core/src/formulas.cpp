#include "multireg/formulas.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace multireg {

int d_value(int n, int s) {
  if (n < 1 || s < 1) throw std::invalid_argument("d_value: need n,s >= 1");
  for (int d = 0;; ++d) {
    if (binomial(static_cast<std::uint64_t>(d) + n, d) >=
        static_cast<std::uint64_t>(s))
      return d;
  }
}

int reduced_regularity_formula(const SpaceShape& shape, int s) {
  int best = 0;
  for (int n : shape.dims()) best = std::max(best, d_value(n, s) + 1);
  return best;
}

long long ri_bound_factor_term(int n_j, long long mult_sum) {
  return (mult_sum + n_j - 2) / n_j;  // arguments keep the numerator >= 0
}

long long ri_bound(const SpaceShape& shape, std::vector<int> mults) {
  if (mults.size() < 2)
    throw std::invalid_argument("ri_bound: needs at least two points");
  std::sort(mults.begin(), mults.end(), std::greater<>());
  if (mults.back() < 1)
    throw std::invalid_argument("ri_bound: multiplicities must be >= 1");
  long long msum = std::accumulate(mults.begin(), mults.end(), 0LL);
  long long best = mults[0] + mults[1] - 1;
  for (int n : shape.dims())
    best = std::max(best, ri_bound_factor_term(n, msum));
  return best;
}

long long fat_bound(const SpaceShape& shape, std::vector<int> mults) {
  return ri_bound(shape, std::move(mults)) + shape.k();
}

int single_point_ri(int a, int k) {
  if (a < 1 || k < 1)
    throw std::invalid_argument("single_point_ri: need a,k >= 1");
  return a - k;
}

bool binomial_inequality_check(int n, int a, int b) {
  if (n < 1 || a < 1 || b < 1)
    throw std::invalid_argument("binomial_inequality_check: need n,a,b >= 1");
  // compare in unsigned 128-bit; operands stay small for the tested sweeps
  std::uint64_t lhs = binomial(static_cast<std::uint64_t>(a) + b + n,
                               static_cast<std::uint64_t>(a) + b);
  unsigned __int128 rhs =
      static_cast<unsigned __int128>(binomial(static_cast<std::uint64_t>(a) + n, a)) *
      binomial(static_cast<std::uint64_t>(b) + n, b);
  return static_cast<unsigned __int128>(lhs) <= rhs;
}

BoundReport bound_report(const SpaceShape& shape, std::vector<int> mults) {
  BoundReport r;
  int s = static_cast<int>(mults.size());
  for (int n : shape.dims()) r.d.push_back(d_value(n, s));
  r.D = *std::max_element(r.d.begin(), r.d.end()) + 1;
  r.reduced_reg = reduced_regularity_formula(shape, s);
  std::vector<int> sorted = mults;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (s >= 2) {
    long long msum = std::accumulate(sorted.begin(), sorted.end(), 0LL);
    r.pair_piece = sorted[0] + sorted[1] - 1;
    for (int n : shape.dims())
      r.floor_pieces.push_back(ri_bound_factor_term(n, msum));
    r.ri_bound = ri_bound(shape, mults);
    r.reg_bound = r.ri_bound + shape.k();
  } else {
    throw std::invalid_argument("bound_report: needs at least two points");
  }
  return r;
}

}  // namespace multireg
