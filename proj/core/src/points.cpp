#include "multireg/points.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

#include "multireg/errors.hpp"
#include "multireg/formulas.hpp"
#include "multireg/linalg.hpp"

namespace multireg {

std::vector<std::uint32_t> Point::flat() const {
  std::vector<std::uint32_t> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

Point make_point(const SpaceShape& shape, const PrimeField& field,
                 std::vector<std::vector<std::uint32_t>> blocks) {
  if (static_cast<int>(blocks.size()) != shape.k())
    throw std::invalid_argument("point needs one block per factor");
  Point P;
  P.blocks.resize(blocks.size());
  for (int i = 0; i < shape.k(); ++i) {
    if (static_cast<int>(blocks[i].size()) != shape.block_size(i))
      throw std::invalid_argument("block size does not match the factor");
    auto& b = P.blocks[i];
    b.resize(blocks[i].size());
    std::size_t first = blocks[i].size();
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      b[j] = blocks[i][j] % field.p();
      if (b[j] != 0 && first == blocks[i].size()) first = j;
    }
    if (first == blocks[i].size())
      throw std::invalid_argument("projective block must be nonzero");
    std::uint32_t inv = field.inv(b[first]);
    for (auto& c : b) c = field.mul(c, inv);
  }
  return P;
}

PointScheme::PointScheme(SpaceShape shape, PrimeField field,
                         std::vector<Point> points, std::vector<int> mults,
                         std::uint64_t seed)
    : shape_(std::move(shape)), field_(field), seed_(seed) {
  if (points.empty() || points.size() != mults.size())
    throw std::invalid_argument("need matching nonempty points and mults");
  for (int m : mults) {
    if (m < 1) throw std::invalid_argument("multiplicities must be >= 1");
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return mults[a] > mults[b];
  });
  for (std::size_t idx : order) {
    points_.push_back(points[idx]);
    mults_.push_back(mults[idx]);
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (points_[i] == points_[j])
        throw std::invalid_argument("points must be pairwise distinct");
    }
  }
}

bool PointScheme::reduced() const {
  return std::all_of(mults_.begin(), mults_.end(),
                     [](int m) { return m == 1; });
}

Ideal point_ideal(const PolyRing& ring, const Point& P) {
  const SpaceShape& shape = ring.shape();
  if (static_cast<int>(P.blocks.size()) != shape.k())
    throw std::invalid_argument("point does not match the ring's shape");
  std::vector<Polynomial> gens;
  for (int i = 0; i < shape.k(); ++i) {
    // forms vanishing at the block = kernel of the 1 x (n_i+1) matrix
    std::vector<std::vector<std::uint32_t>> row{P.blocks[i]};
    auto basis = kernel_basis(row, P.blocks[i].size(), ring.field());
    for (const auto& coeffs : basis)
      gens.push_back(ring.linear_form(i, coeffs));
  }
  return Ideal(ring, std::move(gens));
}

Ideal fat_point_ideal(const PolyRing& ring, const PointScheme& Z) {
  Ideal acc = power(point_ideal(ring, Z.points()[0]), Z.mults()[0]);
  for (int i = 1; i < Z.s(); ++i) {
    acc = intersect(acc, power(point_ideal(ring, Z.points()[i]), Z.mults()[i]));
  }
  return acc;
}

std::uint64_t evaluation_hilbert(const SpaceShape& shape,
                                 const PrimeField& field,
                                 const std::vector<Point>& points,
                                 const MultiDegree& t) {
  auto monos = enumerate_monomials(shape, t);
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(points.size());
  for (const auto& P : points) {
    auto coords = P.flat();
    std::vector<std::uint32_t> row;
    row.reserve(monos.size());
    for (const auto& m : monos) {
      std::uint64_t v = 1;
      for (std::size_t idx = 0; idx < coords.size(); ++idx) {
        if (m.exps[idx] > 0)
          v = (v * field.pow(coords[idx], m.exps[idx])) % field.p();
      }
      row.push_back(static_cast<std::uint32_t>(v));
    }
    rows.push_back(std::move(row));
  }
  return rank_of(rows, monos.size(), field);
}

GenericityResult is_generic_position(const PointScheme& X) {
  if (!X.reduced())
    throw std::invalid_argument("genericity is defined for reduced schemes");
  const SpaceShape& shape = X.shape();
  int s = X.s();
  std::vector<int> box;
  for (int n : shape.dims()) box.push_back(d_value(n, s) + 1);
  std::vector<int> cur(shape.k(), 0);
  GenericityResult res;
  res.generic = true;
  auto rec = [&](auto&& self, int pos) -> bool {
    if (pos == shape.k()) {
      MultiDegree t(cur);
      std::uint64_t expected =
          std::min<std::uint64_t>(dim_graded_piece(shape, t),
                                  static_cast<std::uint64_t>(s));
      if (evaluation_hilbert(shape, X.field(), X.points(), t) != expected) {
        res.generic = false;
        res.witness = t;
        return false;
      }
      return true;
    }
    for (int v = 0; v <= box[pos]; ++v) {
      cur[pos] = v;
      if (!self(self, pos + 1)) return false;
    }
    cur[pos] = 0;
    return true;
  };
  rec(rec, 0);
  return res;
}

namespace {

Point random_point(const SpaceShape& shape, const PrimeField& field,
                   std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field.p() - 1);
  while (true) {
    std::vector<std::vector<std::uint32_t>> blocks;
    bool ok = true;
    for (int i = 0; i < shape.k(); ++i) {
      std::vector<std::uint32_t> b(shape.block_size(i));
      bool nonzero = false;
      for (auto& c : b) {
        c = dist(rng);
        nonzero = nonzero || c != 0;
      }
      if (!nonzero) {
        ok = false;
        break;
      }
      blocks.push_back(std::move(b));
    }
    if (ok) return make_point(shape, field, std::move(blocks));
  }
}

}  // namespace

PointScheme random_points(const SpaceShape& shape, const PrimeField& field,
                          int s, std::mt19937_64& rng, int retry_cap,
                          std::uint64_t seed_label) {
  if (s < 1) throw std::invalid_argument("need s >= 1 points");
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    std::vector<Point> pts;
    int duplicate_guard = 0;
    while (static_cast<int>(pts.size()) < s) {
      Point P = random_point(shape, field, rng);
      if (std::find(pts.begin(), pts.end(), P) != pts.end()) {
        if (++duplicate_guard > 1000)
          throw GenericityError("cannot draw distinct points", field.p(),
                                seed_label);
        continue;
      }
      pts.push_back(std::move(P));
    }
    PointScheme scheme(shape, field, std::move(pts),
                       std::vector<int>(s, 1), seed_label);
    if (is_generic_position(scheme).generic) return scheme;
  }
  throw GenericityError("no generic support after " +
                            std::to_string(retry_cap) + " attempts",
                        field.p(), seed_label);
}

Polynomial find_nzd_linear_form(const Ideal& I, int factor,
                                std::mt19937_64& rng, int retry_cap,
                                std::uint64_t seed_label) {
  const PolyRing& R = I.ring();
  if (factor < 0 || factor >= R.shape().k())
    throw std::invalid_argument("factor index out of range");
  std::uniform_int_distribution<std::uint32_t> dist(0, R.field().p() - 1);
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    std::vector<std::uint32_t> coeffs(R.shape().block_size(factor));
    bool nonzero = false;
    for (auto& c : coeffs) {
      c = dist(rng);
      nonzero = nonzero || c != 0;
    }
    if (!nonzero) continue;
    Polynomial L = R.linear_form(factor, coeffs);
    if (colon(I, L).same_ideal(I)) return L;
  }
  throw GenericityError("no non-zero divisor of degree e_" +
                            std::to_string(factor + 1) + " found",
                        R.field().p(), seed_label);
}

namespace {

// a linear form in block `j` through the given projections; among the
// solution space, one not vanishing at `avoid` (nullptr to skip avoidance)
Polynomial through_points_avoiding(const PolyRing& ring, int j,
                                   const std::vector<const Point*>& through,
                                   const Point* avoid, std::mt19937_64& rng) {
  const PrimeField& F = ring.field();
  int width = ring.shape().block_size(j);
  std::vector<std::vector<std::uint32_t>> rows;
  for (const Point* P : through) rows.push_back(P->blocks[j]);
  auto basis = kernel_basis(rows, width, F);
  if (basis.empty())
    throw GenericityError("no hyperplane through the requested projections",
                          F.p(), 0);
  std::uniform_int_distribution<std::uint32_t> dist(0, F.p() - 1);
  for (int attempt = 0; attempt < 128; ++attempt) {
    std::vector<std::uint32_t> coeffs(width, 0);
    if (attempt < static_cast<int>(basis.size())) {
      coeffs = basis[attempt];  // try the basis vectors before random mixes
    } else {
      for (const auto& v : basis) {
        std::uint32_t c = dist(rng);
        for (int q = 0; q < width; ++q)
          coeffs[q] = F.add(coeffs[q], F.mul(c, v[q]));
      }
    }
    bool nonzero =
        std::any_of(coeffs.begin(), coeffs.end(), [](auto c) { return c != 0; });
    if (!nonzero) continue;
    if (avoid) {
      std::uint64_t val = 0;
      for (int q = 0; q < width; ++q)
        val = (val + static_cast<std::uint64_t>(coeffs[q]) *
                         avoid->blocks[j][q]) %
              F.p();
      if (val == 0) continue;
    }
    return ring.linear_form(j, coeffs);
  }
  throw GenericityError("every hyperplane through the projections hits the "
                        "point to avoid",
                        F.p(), 0);
}

std::uint32_t evaluate_at_point(const PolyRing& ring, const Polynomial& f,
                                const Point& P) {
  return ring.evaluate(f, P.flat());
}

}  // namespace

Polynomial separating_product(const PolyRing& ring,
                              const std::vector<Point>& support,
                              std::vector<int> mults, const MultiDegree& a,
                              const Point& avoid, std::mt19937_64& rng) {
  const SpaceShape& shape = ring.shape();
  if (support.size() != mults.size())
    throw std::invalid_argument("support/multiplicity length mismatch");
  if (a.k() != shape.k())
    throw std::invalid_argument("degree vector length mismatch");
  int total_a = a.total();
  long long msum = std::accumulate(mults.begin(), mults.end(), 0LL);
  int mmax = mults.empty() ? 0 : *std::max_element(mults.begin(), mults.end());
  if (static_cast<long long>(shape.min_dim()) * total_a < msum ||
      total_a < mmax)
    throw std::invalid_argument(
        "separating product hypotheses violated: need n_min*|a| >= sum(m) "
        "and |a| >= max(m)");

  // active (point, multiplicity) pairs, heaviest first
  std::vector<std::pair<const Point*, int>> active;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (mults[i] > 0) active.push_back({&support[i], mults[i]});
  }
  auto by_mult = [](const auto& x, const auto& y) { return x.second > y.second; };
  std::sort(active.begin(), active.end(), by_mult);

  std::vector<int> budget = a.parts;
  Polynomial result = ring.constant(1);

  while (true) {
    int r = static_cast<int>(active.size());
    if (r == 0) {
      // leftover budget: any forms avoiding the point
      for (int j = 0; j < shape.k(); ++j) {
        if (budget[j] == 0) continue;
        Polynomial L = through_points_avoiding(ring, j, {}, &avoid, rng);
        result = ring.mul(result, ring.pow(L, budget[j]));
        budget[j] = 0;
      }
      break;
    }
    bool direct = true;
    for (int j = 0; j < shape.k(); ++j) {
      if (budget[j] > 0 && shape.dims()[j] < r) {
        direct = false;
        break;
      }
    }
    if (direct) {
      // one form per active block through every remaining point
      std::vector<const Point*> through;
      for (const auto& [P, m] : active) through.push_back(P);
      for (int j = 0; j < shape.k(); ++j) {
        if (budget[j] == 0) continue;
        Polynomial L = through_points_avoiding(ring, j, through, &avoid, rng);
        result = ring.mul(result, ring.pow(L, budget[j]));
        budget[j] = 0;
      }
      break;
    }
    // peel: a hyperplane through the n_p heaviest points in the most
    // constrained block with budget left
    int p = -1;
    for (int j = 0; j < shape.k(); ++j) {
      if (budget[j] > 0 && shape.dims()[j] < r &&
          (p == -1 || shape.dims()[j] < shape.dims()[p]))
        p = j;
    }
    if (p == -1)
      throw GenericityError("budget exhausted before multiplicities",
                            ring.field().p(), 0);
    int np = shape.dims()[p];
    std::vector<const Point*> through;
    for (int i = 0; i < np; ++i) through.push_back(active[i].first);
    Polynomial L1 = through_points_avoiding(ring, p, through, &avoid, rng);
    result = ring.mul(result, L1);
    budget[p] -= 1;
    for (int i = 0; i < np; ++i) active[i].second -= 1;
    active.erase(std::remove_if(active.begin(), active.end(),
                                [](const auto& x) { return x.second == 0; }),
                 active.end());
    std::stable_sort(active.begin(), active.end(), by_mult);
  }

  // verify: vanishing order at every support point, avoidance, and degree
  for (std::size_t i = 0; i < support.size(); ++i) {
    Ideal pm = power(point_ideal(ring, support[i]), mults[i]);
    if (!normal_form(result, pm).is_zero())
      throw GenericityError("separating product misses p_i^{m_i}",
                            ring.field().p(), 0);
  }
  if (evaluate_at_point(ring, result, avoid) == 0)
    throw GenericityError("separating product vanishes at the avoided point",
                          ring.field().p(), 0);
  auto deg = ring.multidegree(result);
  if (!deg || *deg != a)
    throw std::logic_error("separating product has the wrong multidegree");
  return result;
}

PointScheme scheme_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad scheme JSON: ") + e.what());
  }
  try {
    SpaceShape shape(j.at("dims").get<std::vector<int>>());
    PrimeField field(j.at("p").get<std::uint32_t>());
    std::uint64_t seed = j.value("seed", std::uint64_t{0});
    std::vector<Point> pts;
    for (const auto& jp : j.at("points")) {
      pts.push_back(make_point(
          shape, field, jp.get<std::vector<std::vector<std::uint32_t>>>()));
    }
    std::vector<int> mults = j.at("mults").get<std::vector<int>>();
    return PointScheme(shape, field, std::move(pts), std::move(mults), seed);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad scheme JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("bad scheme JSON: ") + e.what());
  }
}

std::string scheme_to_json(const PointScheme& Z) {
  nlohmann::json j;
  j["p"] = Z.field().p();
  j["dims"] = Z.shape().dims();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& P : Z.points()) pts.push_back(P.blocks);
  j["points"] = std::move(pts);
  j["mults"] = Z.mults();
  j["seed"] = Z.seed();
  return j.dump(2);
}

}  // namespace multireg
