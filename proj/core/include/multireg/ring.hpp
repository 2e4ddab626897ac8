#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace multireg {

/// Shape of a product of projective spaces P^{n_1} x ... x P^{n_k}.
/// Factor i contributes the block of variables x_{i,0},...,x_{i,n_i},
/// all of multidegree e_i.
class SpaceShape {
 public:
  /// Throws std::invalid_argument unless all n_i >= 1 and k >= 1.
  explicit SpaceShape(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  int k() const { return static_cast<int>(dims_.size()); }
  int nvars() const { return nvars_; }
  /// Flat index of x_{i,0}.
  int var_offset(int i) const { return offsets_[i]; }
  /// Block size of factor i, i.e. n_i + 1.
  int block_size(int i) const { return dims_[i] + 1; }
  /// Factor owning flat variable index v.
  int block_of(int v) const;
  int min_dim() const;

  bool operator==(const SpaceShape& o) const { return dims_ == o.dims_; }
  bool operator!=(const SpaceShape& o) const { return dims_ != o.dims_; }

  std::string to_string() const;  // e.g. "2x1"

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int nvars_ = 0;
};

/// An N^k multidegree (t_1,...,t_k), all parts >= 0.
struct MultiDegree {
  std::vector<int> parts;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> p);

  int k() const { return static_cast<int>(parts.size()); }
  int total() const;
  /// Standard basis vector e_i (1-based factor index).
  static MultiDegree unit(int k, int factor);
  static MultiDegree zero(int k);

  bool operator==(const MultiDegree& o) const { return parts == o.parts; }
  bool operator!=(const MultiDegree& o) const { return parts != o.parts; }
  bool operator<(const MultiDegree& o) const { return parts < o.parts; }

  std::string to_string() const;  // e.g. "(2,1)"
};

/// A monomial as a dense flat exponent vector. The owning ring fixes the
/// variable count; an auxiliary elimination variable, when present, sits
/// after all block variables.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int nvars() const { return static_cast<int>(exps.size()); }
  int total_degree() const;
  /// Multidegree over the block structure; variables beyond the shape's
  /// flat range must have exponent zero.
  MultiDegree multidegree(const SpaceShape& shape) const;

  bool divides(const Monomial& m) const;
  Monomial mul(const Monomial& m) const;
  /// Componentwise difference; caller guarantees divisibility.
  Monomial div(const Monomial& m) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& b) const;

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return exps != o.exps; }
};

enum class OrderKind { GrevlexTotal, Lex, Elimination };

/// Monomial order tag. GrevlexTotal is graded reverse lexicographic with
/// x_{1,0} < x_{1,1} < ... < x_{k,n_k} (flat index order). Elimination
/// compares total degree in the trailing auxiliary block first, so the
/// auxiliary variables dominate and intersections can be read off a basis.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevlexTotal;
  int split = -1;  // Elimination only: flat index where the aux block starts

  static MonomialOrder grevlex() { return {OrderKind::GrevlexTotal, -1}; }
  static MonomialOrder lex() { return {OrderKind::Lex, -1}; }
  static MonomialOrder elimination(int split) {
    return {OrderKind::Elimination, split};
  }

  /// Three-way comparison: negative when a < b, positive when a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) > 0;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && split == o.split;
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }
};

/// Exact binomial coefficient C(n, r). Computed in arbitrary precision and
/// verified to fit uint64_t; throws std::overflow_error otherwise.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// dim_k R_t = prod_i C(t_i + n_i, n_i) for the multidegree t.
std::uint64_t dim_graded_piece(const SpaceShape& shape, const MultiDegree& t);

/// dim_k R_t for the total degree t, summed over all compositions.
std::uint64_t dim_total_degree(const SpaceShape& shape, int t);

/// All multidegrees with the given total, lexicographically by parts.
std::vector<MultiDegree> compositions(int total, int k);

/// Monomial basis of R_t for a multidegree t, sorted descending in `order`.
std::vector<Monomial> enumerate_monomials(
    const SpaceShape& shape, const MultiDegree& t,
    const MonomialOrder& order = MonomialOrder::grevlex());

/// Monomial basis of the total-degree-t piece, sorted descending in `order`.
std::vector<Monomial> enumerate_total_degree(
    const SpaceShape& shape, int t,
    const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace multireg
