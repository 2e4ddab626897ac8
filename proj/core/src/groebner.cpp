#include "multireg/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "multireg/linalg.hpp"

namespace multireg {

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (!ring_.compatible(g))
      throw std::invalid_argument("generator does not belong to the ring");
    if (g.is_zero()) continue;
    if (ring_.aux_vars() == 0 && !ring_.homogeneous_degree(g))
      throw std::invalid_argument("generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::reduced_gb() const {
  if (!gb_) {
    gb_ = buchberger(ring_, gens_);
    lt_.clear();
    for (const auto& g : *gb_) lt_.push_back(g.leading_monomial());
  }
  return *gb_;
}

const std::vector<Monomial>& Ideal::lead_terms() const {
  reduced_gb();
  return lt_;
}

bool Ideal::lt_divides(const Monomial& m) const {
  for (const auto& l : lead_terms()) {
    if (l.divides(m)) return true;
  }
  return false;
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f, *this).is_zero();
}

bool Ideal::same_ideal(const Ideal& other) const {
  if (ring_ != other.ring_) return false;
  const auto& a = reduced_gb();
  const auto& b = other.reduced_gb();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

int Ideal::max_gb_degree() const {
  int d = 0;
  for (const auto& g : reduced_gb())
    d = std::max(d, g.leading_monomial().total_degree());
  return d;
}

bool Ideal::multigraded() const {
  for (const auto& g : gens_) {
    if (!ring_.multidegree(g)) return false;
  }
  return true;
}

Polynomial reduce_by(const PolyRing& ring, Polynomial f,
                     const std::vector<Polynomial>& basis) {
  const auto& F = ring.field();
  std::vector<Term> remainder;
  while (!f.is_zero()) {
    const Monomial& lm = f.leading_monomial();
    const Polynomial* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading_monomial().divides(lm)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      Monomial q = lm.div(reducer->leading_monomial());
      std::uint32_t c =
          F.mul(f.leading_coeff(), F.inv(reducer->leading_coeff()));
      f = ring.sub(f, ring.mul_term(*reducer, q, c));
    } else {
      // irreducible head moves to the remainder; heads shrink strictly,
      // so the collected terms are already in descending order
      remainder.push_back(f.leading());
      f = ring.sub(f, ring.monomial(lm, f.leading_coeff()));
    }
  }
  return ring.from_terms(std::move(remainder));
}

namespace {

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f,
                        const Polynomial& g) {
  const auto& F = ring.field();
  Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a =
      ring.mul_term(f, l.div(f.leading_monomial()), F.inv(f.leading_coeff()));
  Polynomial b =
      ring.mul_term(g, l.div(g.leading_monomial()), F.inv(g.leading_coeff()));
  return ring.sub(a, b);
}

struct PairEntry {
  int deg;
  int i, j;
  bool operator>(const PairEntry& o) const {
    if (deg != o.deg) return deg > o.deg;
    if (j != o.j) return j > o.j;
    return i > o.i;
  }
};

}  // namespace

std::vector<Polynomial> buchberger(const PolyRing& ring,
                                   std::vector<Polynomial> gens) {
  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    if (!g.is_zero()) basis.push_back(ring.monic(g));
  }
  if (basis.empty()) return {};

  std::priority_queue<PairEntry, std::vector<PairEntry>, std::greater<>> queue;
  std::set<std::pair<int, int>> pending;
  auto push_pair = [&](int i, int j) {
    Monomial l =
        Monomial::lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
    queue.push(PairEntry{l.total_degree(), i, j});
    pending.insert({i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) push_pair(static_cast<int>(i), static_cast<int>(j));
  }

  while (!queue.empty()) {
    auto [deg, i, j] = queue.top();
    queue.pop();
    if (!pending.erase({i, j})) continue;  // stale
    const Monomial& li = basis[i].leading_monomial();
    const Monomial& lj = basis[j].leading_monomial();
    // product criterion
    if (li.coprime(lj)) continue;
    // chain criterion: some l with LT_l | lcm(i,j) whose pairs with i and j
    // are both already treated
    Monomial l = Monomial::lcm(li, lj);
    bool skip = false;
    for (std::size_t t = 0; t < basis.size(); ++t) {
      int ti = static_cast<int>(t);
      if (ti == i || ti == j) continue;
      if (!basis[t].leading_monomial().divides(l)) continue;
      auto pi = std::minmax(ti, i);
      auto pj = std::minmax(ti, j);
      if (!pending.count({pi.first, pi.second}) &&
          !pending.count({pj.first, pj.second})) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    Polynomial r = reduce_by(ring, s_polynomial(ring, basis[i], basis[j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(ring.monic(r));
    int n = static_cast<int>(basis.size()) - 1;
    for (int t = 0; t < n; ++t) push_pair(t, n);
  }

  // minimalize: drop elements whose lead term another lead term divides
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& a = basis[j].leading_monomial();
      const Monomial& b = basis[i].leading_monomial();
      if (a.divides(b) && (a != b || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // inter-reduce tails
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    Polynomial r = reduce_by(ring, minimal[i], others);
    reduced.push_back(ring.monic(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ring.order().greater(a.leading_monomial(),
                                          b.leading_monomial());
            });
  return reduced;
}

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  if (!I.ring().compatible(f))
    throw std::invalid_argument(
        "normal form: polynomial/order does not match the ideal's ring");
  return reduce_by(I.ring(), f, I.reduced_gb());
}

namespace {

Polynomial lift_to_aux(const PolyRing& aux_ring, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.exps.resize(aux_ring.nvars(), 0);
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return aux_ring.from_terms(std::move(terms));
}

Polynomial project_from_aux(const PolyRing& base, const Polynomial& f) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.exps.resize(base.nvars());
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return base.from_terms(std::move(terms));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring())
    throw std::invalid_argument("intersect: ideals from different rings");
  const PolyRing& R = I.ring();
  if (R.aux_vars() != 0)
    throw std::invalid_argument("intersect: base ring expected");
  if (I.is_zero()) return I;
  if (J.is_zero()) return J;

  PolyRing A(R.shape(), R.field(), MonomialOrder::elimination(R.nvars()), 1);
  Polynomial w = A.variable(R.nvars());
  Polynomial one_minus_w = A.sub(A.constant(1), w);
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(A.mul(w, lift_to_aux(A, f)));
  for (const auto& g : J.gens())
    gens.push_back(A.mul(one_minus_w, lift_to_aux(A, g)));
  std::vector<Polynomial> gb = buchberger(A, std::move(gens));

  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool has_aux = false;
    for (const auto& t : g.terms()) {
      if (t.mono.exps[R.nvars()] != 0) {
        has_aux = true;
        break;
      }
    }
    if (!has_aux) kept.push_back(project_from_aux(R, g));
  }
  return Ideal(R, std::move(kept));
}

Polynomial divide_exact(const PolyRing& ring, Polynomial g,
                        const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("division by zero polynomial");
  const auto& F = ring.field();
  std::vector<Term> quotient;
  while (!g.is_zero()) {
    if (!f.leading_monomial().divides(g.leading_monomial()))
      throw std::logic_error("divide_exact: remainder is nonzero");
    Monomial q = g.leading_monomial().div(f.leading_monomial());
    std::uint32_t c = F.mul(g.leading_coeff(), F.inv(f.leading_coeff()));
    quotient.push_back(Term{q, c});
    g = ring.sub(g, ring.mul_term(f, q, c));
  }
  return ring.from_terms(std::move(quotient));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  if (f.is_zero())
    throw std::invalid_argument("colon: divisor must be nonzero");
  const PolyRing& R = I.ring();
  if (!R.compatible(f))
    throw std::invalid_argument("colon: polynomial from another ring");
  if (f.leading_monomial().total_degree() == 0) return Ideal(R, I.gens());
  Ideal principal(R, {f});
  Ideal meet = intersect(I, principal);
  std::vector<Polynomial> quotients;
  for (const auto& g : meet.gens())
    quotients.push_back(divide_exact(R, g, f));
  return Ideal(R, std::move(quotients));
}

Ideal power(const Ideal& I, int m) {
  if (m < 1) throw std::invalid_argument("power: exponent must be >= 1");
  const PolyRing& R = I.ring();
  if (I.is_zero()) return I;
  std::vector<Polynomial> products;
  std::vector<int> pick(m, 0);
  // multisets of generator indices, non-decreasing
  while (true) {
    Polynomial prod = R.constant(1);
    for (int idx : pick) prod = R.mul(prod, I.gens()[idx]);
    products.push_back(std::move(prod));
    int pos = m - 1;
    int n = static_cast<int>(I.gens().size());
    while (pos >= 0 && pick[pos] == n - 1) --pos;
    if (pos < 0) break;
    int v = pick[pos] + 1;
    for (int q = pos; q < m; ++q) pick[q] = v;
  }
  return Ideal(R, std::move(products));
}

Ideal sum(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring())
    throw std::invalid_argument("sum: ideals from different rings");
  std::vector<Polynomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal sum(const Ideal& I, const Polynomial& h) {
  std::vector<Polynomial> gens = I.gens();
  gens.push_back(h);
  return Ideal(I.ring(), std::move(gens));
}

PieceBasis::PieceBasis(const PolyRing& ring, const MultiDegree& t) {
  if (ring.aux_vars() != 0)
    throw std::invalid_argument("graded pieces need an aux-free ring");
  monos_ = enumerate_monomials(ring.shape(), t, ring.order());
  build_index();
}

PieceBasis::PieceBasis(const PolyRing& ring, int total_degree) {
  if (ring.aux_vars() != 0)
    throw std::invalid_argument("graded pieces need an aux-free ring");
  monos_ = enumerate_total_degree(ring.shape(), total_degree, ring.order());
  build_index();
}

void PieceBasis::build_index() {
  for (std::size_t i = 0; i < monos_.size(); ++i) index_[monos_[i].exps] = i;
}

std::vector<std::uint32_t> PieceBasis::coeff_vector(
    const Polynomial& f) const {
  std::vector<std::uint32_t> v(monos_.size(), 0);
  for (const auto& t : f.terms()) {
    auto it = index_.find(t.mono.exps);
    if (it == index_.end())
      throw std::invalid_argument("polynomial leaves the graded piece");
    v[it->second] = t.coeff;
  }
  return v;
}

std::vector<Polynomial> triangular_basis(const Ideal& I,
                                         const PieceBasis& piece) {
  const PolyRing& R = I.ring();
  std::vector<Polynomial> out;
  const auto& gb = I.reduced_gb();
  for (const auto& m : piece.monomials()) {
    for (const auto& g : gb) {
      if (g.leading_monomial().divides(m)) {
        // g is monic, so this multiple has lead term exactly m
        out.push_back(R.mul_term(g, m.div(g.leading_monomial()), 1));
        break;
      }
    }
  }
  return out;
}

std::size_t ideal_piece_rank(const Ideal& I, const MultiDegree& t) {
  const PolyRing& R = I.ring();
  PieceBasis piece(R, t);
  RowEchelon ech(R.field(), piece.size());
  for (const auto& g : I.reduced_gb()) {
    auto gd = R.multidegree(g);
    if (!gd) throw std::invalid_argument("rank route needs N^k-homogeneous data");
    std::vector<int> rem(t.parts.size());
    bool fits = true;
    for (int i = 0; i < t.k(); ++i) {
      rem[i] = t.parts[i] - gd->parts[i];
      if (rem[i] < 0) {
        fits = false;
        break;
      }
    }
    if (!fits) continue;
    for (const auto& u :
         enumerate_monomials(R.shape(), MultiDegree(rem), R.order())) {
      ech.add_row(piece.coeff_vector(R.mul_term(g, u, 1)));
      if (ech.full()) return ech.rank();
    }
  }
  return ech.rank();
}

std::size_t ideal_piece_rank_total(const Ideal& I, int t) {
  const PolyRing& R = I.ring();
  PieceBasis piece(R, t);
  RowEchelon ech(R.field(), piece.size());
  for (const auto& g : I.reduced_gb()) {
    auto gd = R.homogeneous_degree(g);
    if (!gd) throw std::invalid_argument("rank route needs homogeneous data");
    if (*gd > t) continue;
    for (const auto& u :
         enumerate_total_degree(R.shape(), t - *gd, R.order())) {
      ech.add_row(piece.coeff_vector(R.mul_term(g, u, 1)));
      if (ech.full()) return ech.rank();
    }
  }
  return ech.rank();
}

std::map<int, int> min_gen_degrees(const Ideal& I, int t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  const PolyRing& R = I.ring();
  std::map<int, int> out;
  std::vector<Polynomial> prev_basis;  // triangular basis of I_{t-1}
  for (int t = 0; t <= t_max; ++t) {
    PieceBasis piece(R, t);
    std::vector<Polynomial> cur_basis = triangular_basis(I, piece);
    RowEchelon ech(R.field(), piece.size());
    for (const auto& f : prev_basis) {
      for (int v = 0; v < R.nvars(); ++v) {
        Monomial xv = Monomial::one(R.nvars());
        xv.exps[v] = 1;
        ech.add_row(piece.coeff_vector(R.mul_term(f, xv, 1)));
      }
    }
    int fresh = static_cast<int>(cur_basis.size()) - static_cast<int>(ech.rank());
    if (fresh > 0) out[t] = fresh;
    prev_basis = std::move(cur_basis);
  }
  return out;
}

int max_min_gen_degree(const Ideal& I) {
  if (I.is_zero()) return 0;
  auto degs = min_gen_degrees(I, I.max_gb_degree());
  return degs.empty() ? 0 : degs.rbegin()->first;
}

}  // namespace multireg
