#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "multireg/polynomial.hpp"

namespace multireg {

/// A homogeneous ideal given by generators, with a lazily computed reduced
/// Groebner basis for the ring's order. The reduced basis is monic, no lead
/// term divides another, and all tails are fully reduced; it is unique, so
/// ideal equality is basis equality.
///
/// Concurrency: the first reduced_gb()/lead_terms() call mutates the cache;
/// callers serialize that first computation per Ideal. Afterwards concurrent
/// reads are safe. Distinct Ideals are independent.
class Ideal {
 public:
  /// Drops zero generators. In rings without auxiliary variables every
  /// generator must be homogeneous in total degree.
  Ideal(PolyRing ring, std::vector<Polynomial> gens);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const std::vector<Polynomial>& reduced_gb() const;
  /// Lead monomials of the reduced basis = minimal generators of the
  /// initial ideal.
  const std::vector<Monomial>& lead_terms() const;
  /// True when some lead term divides m.
  bool lt_divides(const Monomial& m) const;
  bool contains(const Polynomial& f) const;
  /// Equality as ideals (same reduced basis).
  bool same_ideal(const Ideal& other) const;
  int max_gb_degree() const;
  /// All generators N^k-homogeneous?
  bool multigraded() const;

 private:
  PolyRing ring_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> gb_;
  mutable std::vector<Monomial> lt_;
};

/// Remainder of f under division by the reduced basis of I; zero iff f ∈ I.
/// Throws std::invalid_argument when f does not live in I's ring/order.
Polynomial normal_form(const Polynomial& f, const Ideal& I);

/// Full reduction of f by an arbitrary basis (no term of the result is
/// divisible by any lead term of the basis).
Polynomial reduce_by(const PolyRing& ring, Polynomial f,
                     const std::vector<Polynomial>& basis);

/// Buchberger's algorithm: reduced Groebner basis of the given generators.
std::vector<Polynomial> buchberger(const PolyRing& ring,
                                   std::vector<Polynomial> gens);

/// I ∩ J through a single auxiliary variable w and an elimination order:
/// I ∩ J = (w·I + (1−w)·J) ∩ R.
Ideal intersect(const Ideal& I, const Ideal& J);

/// Ideal quotient (I : f) = {g : g·f ∈ I}, via intersect(I,(f)) followed by
/// exact division of every generator by f. Throws on f = 0.
Ideal colon(const Ideal& I, const Polynomial& f);

/// I^m, generated by all m-fold products of generators. Requires m >= 1.
Ideal power(const Ideal& I, int m);

/// Ideal sum (generator concatenation).
Ideal sum(const Ideal& I, const Ideal& J);
Ideal sum(const Ideal& I, const Polynomial& h);

/// Exact quotient g / f for g ∈ (f); throws std::logic_error otherwise.
Polynomial divide_exact(const PolyRing& ring, Polynomial g,
                        const Polynomial& f);

/// Monomial basis of one graded piece of R (a multidegree or a total
/// degree), with positional lookup for building coefficient vectors.
class PieceBasis {
 public:
  PieceBasis(const PolyRing& ring, const MultiDegree& t);
  PieceBasis(const PolyRing& ring, int total_degree);

  const std::vector<Monomial>& monomials() const { return monos_; }
  std::size_t size() const { return monos_.size(); }
  /// Coefficient vector of f, which must lie in the span of this piece.
  std::vector<std::uint32_t> coeff_vector(const Polynomial& f) const;

 private:
  void build_index();
  std::vector<Monomial> monos_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// For each piece monomial m lying in the initial ideal, one element of I
/// with lead term exactly m (namely (m / LT(g))·g, monic). The result is a
/// triangular vector-space basis of the piece I ∩ span(piece).
std::vector<Polynomial> triangular_basis(const Ideal& I,
                                         const PieceBasis& piece);

/// dim I_t for a multidegree t by actual rank of the spanning set
/// {u·g : g in the reduced basis, mdeg(u·g) = t}. Independent of lead-term
/// counting.
std::size_t ideal_piece_rank(const Ideal& I, const MultiDegree& t);

/// dim I_t for a total degree t by rank of the spanning set; works for any
/// homogeneous ideal.
std::size_t ideal_piece_rank_total(const Ideal& I, int t);

/// Number of minimal generators per total degree t <= t_max, computed as
/// dim I_t − dim(R_1·I_{t−1}) by exact rank. Degrees with no generators are
/// omitted from the map.
std::map<int, int> min_gen_degrees(const Ideal& I, int t_max);

/// Largest degree of a minimal generator (0 for the zero ideal).
int max_min_gen_degree(const Ideal& I);

}  // namespace multireg
