#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "multireg/groebner.hpp"

namespace multireg {

/// A point of P^{n_1} x ... x P^{n_k} over F_p, one coordinate block per
/// factor. Blocks are kept normalized (first nonzero coordinate scaled to
/// 1), so equality of representatives is projective equality.
struct Point {
  std::vector<std::vector<std::uint32_t>> blocks;

  bool operator==(const Point& o) const { return blocks == o.blocks; }
  bool operator!=(const Point& o) const { return blocks != o.blocks; }

  /// Concatenated block coordinates, the flat variable layout.
  std::vector<std::uint32_t> flat() const;
};

/// Validates block sizes and nonzero-ness, reduces mod p, normalizes.
Point make_point(const SpaceShape& shape, const PrimeField& field,
                 std::vector<std::vector<std::uint32_t>> blocks);

/// A fat point scheme Z = m_1 P_1 + ... + m_s P_s. Points are pairwise
/// distinct; multiplicities are sorted non-increasing on construction (the
/// points are permuted along). seed records how the support was generated.
class PointScheme {
 public:
  PointScheme(SpaceShape shape, PrimeField field, std::vector<Point> points,
              std::vector<int> mults, std::uint64_t seed = 0);

  const SpaceShape& shape() const { return shape_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<int>& mults() const { return mults_; }
  std::uint64_t seed() const { return seed_; }
  int s() const { return static_cast<int>(points_.size()); }
  bool reduced() const;

 private:
  SpaceShape shape_;
  PrimeField field_;
  std::vector<Point> points_;
  std::vector<int> mults_;
  std::uint64_t seed_;
};

/// The prime of a point: for each factor i, the n_i independent linear
/// forms in block i vanishing at the projection of P.
Ideal point_ideal(const PolyRing& ring, const Point& P);

/// I_Z = p_1^{m_1} ∩ ... ∩ p_s^{m_s}.
Ideal fat_point_ideal(const PolyRing& ring, const PointScheme& Z);

/// dim (R/I_X)_t for reduced X by the rank of the point-evaluation matrix.
/// Independent of any Groebner data.
std::uint64_t evaluation_hilbert(const SpaceShape& shape,
                                 const PrimeField& field,
                                 const std::vector<Point>& points,
                                 const MultiDegree& t);

struct GenericityResult {
  bool generic = false;
  MultiDegree witness;  // a violating multidegree when !generic
};

/// Checks H_X(t) = min{dim R_t, s} on the box [0,d_1+1] x ... x [0,d_k+1];
/// the Hilbert function of reduced points is componentwise non-decreasing
/// and capped at s, so the box decides every multidegree. Requires a
/// reduced scheme.
GenericityResult is_generic_position(const PointScheme& X);

/// s distinct uniformly random points, redrawn until the genericity
/// certificate passes; throws GenericityError after retry_cap failures.
/// seed_label is recorded on the scheme and in error reports.
PointScheme random_points(const SpaceShape& shape, const PrimeField& field,
                          int s, std::mt19937_64& rng, int retry_cap = 20,
                          std::uint64_t seed_label = 0);

/// A linear form in block `factor` that is a non-zero divisor on R/I,
/// certified by colon(I, L) = I. Randomized with retries.
Polynomial find_nzd_linear_form(const Ideal& I, int factor,
                                std::mt19937_64& rng, int retry_cap = 20,
                                std::uint64_t seed_label = 0);

/// A product of a_j linear forms per block j lying in every p_i^{m_i} and
/// not vanishing at `avoid`. Requires n_min * total(a) >= sum(m) and
/// total(a) >= max(m), and all points together with `avoid` in generic
/// position. Follows the constructive recursion: direct forms through all
/// points while r <= n_j on the active blocks, otherwise a hyperplane
/// through the n_p heaviest points peels one unit of multiplicity.
Polynomial separating_product(const PolyRing& ring,
                              const std::vector<Point>& support,
                              std::vector<int> mults, const MultiDegree& a,
                              const Point& avoid, std::mt19937_64& rng);

/// JSON document {"p":, "dims":, "points":, "mults":, "seed":}.
std::string scheme_to_json(const PointScheme& Z);
PointScheme scheme_from_json(const std::string& text);

}  // namespace multireg
