#include "multireg/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace multireg {

PolyRing::PolyRing(SpaceShape shape, PrimeField field, MonomialOrder order,
                   int aux_vars)
    : shape_(std::move(shape)), field_(field), order_(order), aux_(aux_vars) {
  if (aux_ < 0) throw std::invalid_argument("negative aux variable count");
  if (order_.kind == OrderKind::Elimination &&
      (order_.split <= 0 || order_.split > nvars()))
    throw std::invalid_argument("elimination split out of range");
}

void PolyRing::check(const Polynomial& f) const {
  if (!compatible(f))
    throw std::invalid_argument("polynomial does not belong to this ring");
}

Polynomial PolyRing::zero() const {
  Polynomial f;
  f.nvars_ = nvars();
  f.order_ = order_;
  return f;
}

Polynomial PolyRing::constant(std::uint32_t c) const {
  return monomial(Monomial::one(nvars()), c);
}

Polynomial PolyRing::variable(int v) const {
  if (v < 0 || v >= nvars()) throw std::invalid_argument("variable index");
  Monomial m = Monomial::one(nvars());
  m.exps[v] = 1;
  return monomial(m, 1);
}

Polynomial PolyRing::monomial(Monomial m, std::uint32_t c) const {
  if (m.nvars() != nvars()) throw std::invalid_argument("monomial width");
  Polynomial f = zero();
  c %= field_.p();
  if (c != 0) f.terms_.push_back(Term{std::move(m), c});
  return f;
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  std::map<std::vector<int>, std::uint64_t> acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars())
      throw std::invalid_argument("monomial width");
    acc[t.mono.exps] += t.coeff % field_.p();
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc) {
    std::uint32_t cc = static_cast<std::uint32_t>(c % field_.p());
    if (cc != 0) out.push_back(Term{Monomial(e), cc});
  }
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order_.greater(a.mono, b.mono);
  });
  Polynomial f = zero();
  f.terms_ = std::move(out);
  return f;
}

Polynomial PolyRing::add(const Polynomial& f, const Polynomial& g) const {
  check(f);
  check(g);
  Polynomial out = zero();
  auto& r = out.terms_;
  r.reserve(f.terms().size() + g.terms().size());
  std::size_t i = 0, j = 0;
  while (i < f.terms().size() && j < g.terms().size()) {
    int c = order_.cmp(f.terms()[i].mono, g.terms()[j].mono);
    if (c > 0) {
      r.push_back(f.terms()[i++]);
    } else if (c < 0) {
      r.push_back(g.terms()[j++]);
    } else {
      std::uint32_t s = field_.add(f.terms()[i].coeff, g.terms()[j].coeff);
      if (s != 0) r.push_back(Term{f.terms()[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms().size(); ++i) r.push_back(f.terms()[i]);
  for (; j < g.terms().size(); ++j) r.push_back(g.terms()[j]);
  return out;
}

Polynomial PolyRing::neg(const Polynomial& f) const {
  check(f);
  Polynomial out = f;
  for (auto& t : out.terms_) t.coeff = field_.neg(t.coeff);
  return out;
}

Polynomial PolyRing::sub(const Polynomial& f, const Polynomial& g) const {
  return add(f, neg(g));
}

Polynomial PolyRing::scale(const Polynomial& f, std::uint32_t c) const {
  check(f);
  c %= field_.p();
  if (c == 0) return zero();
  Polynomial out = f;
  for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, c);
  return out;
}

Polynomial PolyRing::mul_term(const Polynomial& f, const Monomial& m,
                              std::uint32_t c) const {
  check(f);
  c %= field_.p();
  if (c == 0 || f.is_zero()) return zero();
  Polynomial out = zero();
  out.terms_.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    out.terms_.push_back(Term{t.mono.mul(m), field_.mul(t.coeff, c)});
  }
  return out;  // multiplying by a fixed monomial preserves the term order
}

Polynomial PolyRing::mul(const Polynomial& f, const Polynomial& g) const {
  check(f);
  check(g);
  if (f.is_zero() || g.is_zero()) return zero();
  std::map<std::vector<int>, std::uint64_t> acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      auto& slot = acc[a.mono.mul(b.mono).exps];
      slot = (slot + static_cast<std::uint64_t>(a.coeff) * b.coeff) % field_.p();
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) terms.push_back(Term{Monomial(e), static_cast<std::uint32_t>(c)});
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order_.greater(a.mono, b.mono);
  });
  Polynomial out = zero();
  out.terms_ = std::move(terms);
  return out;
}

Polynomial PolyRing::pow(const Polynomial& f, int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Polynomial acc = constant(1);
  Polynomial base = f;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return acc;
}

Polynomial PolyRing::monic(const Polynomial& f) const {
  check(f);
  if (f.is_zero()) return f;
  return scale(f, field_.inv(f.leading_coeff()));
}

Polynomial PolyRing::substitute(const Polynomial& f,
                                const std::vector<Polynomial>& images) const {
  check(f);
  if (static_cast<int>(images.size()) != nvars())
    throw std::invalid_argument("need one image per variable");
  // memoized variable powers; degrees stay small at desk scale
  std::vector<std::vector<Polynomial>> powers(nvars());
  auto power_of = [&](int v, int e) -> const Polynomial& {
    auto& tab = powers[v];
    if (tab.empty()) tab.push_back(constant(1));
    while (static_cast<int>(tab.size()) <= e)
      tab.push_back(mul(tab.back(), images[v]));
    return tab[e];
  };
  Polynomial out = zero();
  for (const auto& t : f.terms()) {
    Polynomial prod = constant(t.coeff);
    for (int v = 0; v < nvars(); ++v) {
      if (t.mono.exps[v] > 0) prod = mul(prod, power_of(v, t.mono.exps[v]));
    }
    out = add(out, prod);
  }
  return out;
}

std::uint32_t PolyRing::evaluate(
    const Polynomial& f, const std::vector<std::uint32_t>& coords) const {
  check(f);
  if (static_cast<int>(coords.size()) != nvars())
    throw std::invalid_argument("coordinate width mismatch");
  std::uint64_t acc = 0;
  for (const auto& t : f.terms()) {
    std::uint64_t v = t.coeff;
    for (int i = 0; i < nvars(); ++i) {
      int e = t.mono.exps[i];
      if (e > 0) v = (v * field_.pow(coords[i], e)) % field_.p();
    }
    acc = (acc + v) % field_.p();
  }
  return static_cast<std::uint32_t>(acc);
}

Polynomial PolyRing::linear_form(
    int block, const std::vector<std::uint32_t>& coeffs) const {
  if (block < 0 || block >= shape_.k())
    throw std::invalid_argument("block index out of range");
  if (static_cast<int>(coeffs.size()) != shape_.block_size(block))
    throw std::invalid_argument("coefficient count mismatch");
  std::vector<Term> terms;
  for (int j = 0; j < shape_.block_size(block); ++j) {
    std::uint32_t c = coeffs[j] % field_.p();
    if (c == 0) continue;
    Monomial m = Monomial::one(nvars());
    m.exps[shape_.var_offset(block) + j] = 1;
    terms.push_back(Term{std::move(m), c});
  }
  return from_terms(std::move(terms));
}

std::optional<MultiDegree> PolyRing::multidegree(const Polynomial& f) const {
  check(f);
  if (f.is_zero()) return std::nullopt;
  for (const auto& t : f.terms()) {
    for (int v = shape_.nvars(); v < nvars(); ++v) {
      if (t.mono.exps[v] != 0) return std::nullopt;
    }
  }
  MultiDegree d = f.leading_monomial().multidegree(shape_);
  for (const auto& t : f.terms()) {
    if (t.mono.multidegree(shape_) != d) return std::nullopt;
  }
  return d;
}

std::optional<int> PolyRing::homogeneous_degree(const Polynomial& f) const {
  check(f);
  if (f.is_zero()) return std::nullopt;
  int d = f.leading_monomial().total_degree();
  for (const auto& t : f.terms()) {
    if (t.mono.total_degree() != d) return std::nullopt;
  }
  return d;
}

std::string PolyRing::to_string(const Monomial& m) const {
  if (m.total_degree() == 0) return "1";
  std::string s;
  for (int v = 0; v < nvars(); ++v) {
    int e = m.exps[v];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    if (v < shape_.nvars()) {
      int b = shape_.block_of(v);
      s += "x[" + std::to_string(b + 1) + "," +
           std::to_string(v - shape_.var_offset(b)) + "]";
    } else {
      s += "w" + std::to_string(v - shape_.nvars());
    }
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string PolyRing::to_string(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& t : f.terms()) {
    if (!s.empty()) s += " + ";
    if (t.coeff != 1 || t.mono.total_degree() == 0) {
      s += std::to_string(t.coeff);
      if (t.mono.total_degree() > 0) s += "*";
    }
    if (t.mono.total_degree() > 0) s += to_string(t.mono);
  }
  return s;
}

}  // namespace multireg
