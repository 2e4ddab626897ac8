#include "multireg/ring.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace multireg {

SpaceShape::SpaceShape(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("shape needs k >= 1 factors");
  offsets_.reserve(dims_.size());
  for (int n : dims_) {
    if (n < 1) throw std::invalid_argument("every factor dimension must be >= 1");
    offsets_.push_back(nvars_);
    nvars_ += n + 1;
  }
}

int SpaceShape::block_of(int v) const {
  for (int i = k() - 1; i >= 0; --i) {
    if (v >= offsets_[i]) return i;
  }
  throw std::invalid_argument("variable index out of range");
}

int SpaceShape::min_dim() const {
  return *std::min_element(dims_.begin(), dims_.end());
}

std::string SpaceShape::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(dims_[i]);
  }
  return s;
}

MultiDegree::MultiDegree(std::vector<int> p) : parts(std::move(p)) {
  for (int t : parts) {
    if (t < 0) throw std::invalid_argument("multidegree parts must be >= 0");
  }
}

int MultiDegree::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

MultiDegree MultiDegree::unit(int k, int factor) {
  std::vector<int> p(k, 0);
  p.at(factor) = 1;
  return MultiDegree(std::move(p));
}

MultiDegree MultiDegree::zero(int k) {
  return MultiDegree(std::vector<int>(k, 0));
}

std::string MultiDegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

int Monomial::total_degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

MultiDegree Monomial::multidegree(const SpaceShape& shape) const {
  std::vector<int> t(shape.k(), 0);
  for (int i = 0; i < shape.k(); ++i) {
    for (int j = 0; j < shape.block_size(i); ++j) {
      t[i] += exps[shape.var_offset(i) + j];
    }
  }
  int covered = shape.nvars();
  for (std::size_t v = covered; v < exps.size(); ++v) {
    if (exps[v] != 0)
      throw std::invalid_argument("auxiliary exponent in multidegree query");
  }
  return MultiDegree(std::move(t));
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > m.exps[i]) return false;
  }
  return true;
}

Monomial Monomial::mul(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += m.exps[i];
  return r;
}

Monomial Monomial::div(const Monomial& m) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= m.exps[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps.size(); ++i)
    r.exps[i] = std::max(a.exps[i], b.exps[i]);
  return r;
}

bool Monomial::coprime(const Monomial& b) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0 && b.exps[i] > 0) return false;
  }
  return true;
}

namespace {

// grevlex with the flat index order x_0 < x_1 < ...: higher total degree
// wins; on ties the first differing exponent from the small end decides,
// the smaller exponent belonging to the larger monomial.
int cmp_grevlex(const std::vector<int>& a, const std::vector<int>& b,
                std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  const auto& e = a.exps;
  const auto& f = b.exps;
  if (e.size() != f.size())
    throw std::invalid_argument("monomials from different rings");
  switch (kind) {
    case OrderKind::GrevlexTotal:
      return cmp_grevlex(e, f, 0, e.size());
    case OrderKind::Lex: {
      // largest variable (highest flat index) decides first
      for (std::size_t i = e.size(); i-- > 0;) {
        if (e[i] != f[i]) return e[i] < f[i] ? -1 : 1;
      }
      return 0;
    }
    case OrderKind::Elimination: {
      int da = 0, db = 0;
      for (std::size_t i = split; i < e.size(); ++i) {
        da += e[i];
        db += f[i];
      }
      if (da != db) return da < db ? -1 : 1;
      return cmp_grevlex(e, f, 0, e.size());
    }
  }
  return 0;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  namespace mp = boost::multiprecision;
  mp::cpp_int acc = 1;
  std::uint64_t rr = std::min(r, n - r);
  for (std::uint64_t i = 1; i <= rr; ++i) {
    acc *= n - rr + i;
    acc /= i;
  }
  if (acc > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("binomial(" + std::to_string(n) + "," +
                              std::to_string(r) + ") exceeds the count type");
  }
  return acc.convert_to<std::uint64_t>();
}

std::uint64_t dim_graded_piece(const SpaceShape& shape, const MultiDegree& t) {
  if (t.k() != shape.k())
    throw std::invalid_argument("multidegree length does not match shape");
  namespace mp = boost::multiprecision;
  mp::cpp_int acc = 1;
  for (int i = 0; i < shape.k(); ++i) {
    if (t.parts[i] < 0) throw std::invalid_argument("negative degree");
    acc *= binomial(static_cast<std::uint64_t>(t.parts[i]) + shape.dims()[i],
                    shape.dims()[i]);
  }
  if (acc > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("graded piece dimension exceeds the count type");
  return acc.convert_to<std::uint64_t>();
}

std::uint64_t dim_total_degree(const SpaceShape& shape, int t) {
  if (t < 0) throw std::invalid_argument("total degree must be >= 0");
  std::uint64_t acc = 0;
  for (const auto& c : compositions(t, shape.k())) {
    std::uint64_t piece = dim_graded_piece(shape, c);
    if (acc > std::numeric_limits<std::uint64_t>::max() - piece)
      throw std::overflow_error("total degree dimension exceeds the count type");
    acc += piece;
  }
  return acc;
}

std::vector<MultiDegree> compositions(int total, int k) {
  std::vector<MultiDegree> out;
  std::vector<int> cur(k, 0);
  // lexicographic enumeration of k-part compositions of `total`
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == k - 1) {
      cur[pos] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  if (k >= 1 && total >= 0) rec(rec, 0, total);
  return out;
}

namespace {

void fill_block(const SpaceShape& shape, int block, int deg,
                std::vector<int>& exps, std::vector<Monomial>& out,
                const std::vector<MultiDegree>& target, std::size_t pos);

// enumerate exponent tuples of a fixed block summing to deg
void block_rec(const SpaceShape& shape, int block, int var, int rem,
               std::vector<int>& exps, std::vector<Monomial>& out,
               const std::vector<MultiDegree>& target, std::size_t pos) {
  int width = shape.block_size(block);
  if (var == width - 1) {
    exps[shape.var_offset(block) + var] = rem;
    fill_block(shape, block + 1, 0, exps, out, target, pos);
    exps[shape.var_offset(block) + var] = 0;
    return;
  }
  for (int v = 0; v <= rem; ++v) {
    exps[shape.var_offset(block) + var] = v;
    block_rec(shape, block, var + 1, rem - v, exps, out, target, pos);
  }
  exps[shape.var_offset(block) + var] = 0;
}

void fill_block(const SpaceShape& shape, int block, int /*deg*/,
                std::vector<int>& exps, std::vector<Monomial>& out,
                const std::vector<MultiDegree>& target, std::size_t pos) {
  if (block == shape.k()) {
    out.emplace_back(exps);
    return;
  }
  block_rec(shape, block, 0, target[pos].parts[block], exps, out, target, pos);
}

}  // namespace

std::vector<Monomial> enumerate_monomials(const SpaceShape& shape,
                                          const MultiDegree& t,
                                          const MonomialOrder& order) {
  if (t.k() != shape.k())
    throw std::invalid_argument("multidegree length does not match shape");
  std::vector<Monomial> out;
  std::vector<int> exps(shape.nvars(), 0);
  std::vector<MultiDegree> target{t};
  fill_block(shape, 0, 0, exps, out, target, 0);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) {
              return order.greater(a, b);
            });
  return out;
}

std::vector<Monomial> enumerate_total_degree(const SpaceShape& shape, int t,
                                             const MonomialOrder& order) {
  std::vector<Monomial> out;
  for (const auto& c : compositions(t, shape.k())) {
    auto piece = enumerate_monomials(shape, c, order);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) {
              return order.greater(a, b);
            });
  return out;
}

}  // namespace multireg
