#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multireg/fp.hpp"
#include "multireg/ring.hpp"

namespace multireg {

struct Term {
  Monomial mono;
  std::uint32_t coeff = 0;  // nonzero in stored polynomials
};

/// A polynomial over F_p, stored as terms sorted strictly descending under
/// the order tag it carries. The zero polynomial has no terms. Values are
/// immutable once built; all arithmetic goes through the owning PolyRing.
class Polynomial {
 public:
  Polynomial() = default;

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coeff() const { return terms_.front().coeff; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t term_count() const { return terms_.size(); }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].coeff != o.terms_[i].coeff ||
          terms_[i].mono != o.terms_[i].mono)
        return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  friend class PolyRing;
  int nvars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Arithmetic context: the block shape, the coefficient field, the active
/// monomial order, and optionally trailing auxiliary variables used by
/// elimination computations. All polynomial operations live here so every
/// result carries a consistent order tag.
class PolyRing {
 public:
  PolyRing(SpaceShape shape, PrimeField field,
           MonomialOrder order = MonomialOrder::grevlex(), int aux_vars = 0);

  const SpaceShape& shape() const { return shape_; }
  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  int aux_vars() const { return aux_; }
  int nvars() const { return shape_.nvars() + aux_; }

  bool operator==(const PolyRing& o) const {
    return shape_ == o.shape_ && field_ == o.field_ && order_ == o.order_ &&
           aux_ == o.aux_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }
  bool compatible(const Polynomial& f) const {
    return f.is_zero() ? f.nvars() == nvars()
                       : f.nvars() == nvars() && f.order() == order_;
  }

  Polynomial zero() const;
  Polynomial constant(std::uint32_t c) const;
  Polynomial variable(int v) const;
  Polynomial monomial(Monomial m, std::uint32_t c = 1) const;
  /// Canonical form from arbitrary terms: sorts, merges, drops zeros.
  Polynomial from_terms(std::vector<Term> terms) const;

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(const Polynomial& f, std::uint32_t c) const;
  /// f * c*m for a single monomial m.
  Polynomial mul_term(const Polynomial& f, const Monomial& m,
                      std::uint32_t c) const;
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial pow(const Polynomial& f, int e) const;
  Polynomial monic(const Polynomial& f) const;

  /// Substitutes images[v] for variable v and expands.
  Polynomial substitute(const Polynomial& f,
                        const std::vector<Polynomial>& images) const;

  /// Evaluates at flat coordinates (length nvars()).
  std::uint32_t evaluate(const Polynomial& f,
                         const std::vector<std::uint32_t>& coords) const;

  /// Linear form sum_j coeffs[j] * x_{block,j}.
  Polynomial linear_form(int block,
                         const std::vector<std::uint32_t>& coeffs) const;

  /// The multidegree when f is N^k-homogeneous (and free of aux variables);
  /// nullopt otherwise. Zero is homogeneous of every degree -> nullopt too.
  std::optional<MultiDegree> multidegree(const Polynomial& f) const;
  /// Total degree when f is homogeneous in the N^1 sense; nullopt otherwise.
  std::optional<int> homogeneous_degree(const Polynomial& f) const;

  std::string to_string(const Polynomial& f) const;
  std::string to_string(const Monomial& m) const;

 private:
  void check(const Polynomial& f) const;
  SpaceShape shape_;
  PrimeField field_;
  MonomialOrder order_;
  int aux_;
};

}  // namespace multireg
