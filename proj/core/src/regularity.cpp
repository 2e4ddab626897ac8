#include "multireg/regularity.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "multireg/errors.hpp"
#include "multireg/linalg.hpp"

namespace multireg {

namespace {

void require_proper(const Ideal& I) {
  if (I.is_zero())
    throw std::invalid_argument("regularity needs a nonzero ideal");
  for (const auto& g : I.gens()) {
    if (g.leading_monomial().total_degree() == 0)
      throw std::invalid_argument("regularity needs a proper ideal");
  }
}

Polynomial random_linear_form(const PolyRing& R, std::mt19937_64& rng,
                              int block /* -1 = full S_1 */) {
  std::uniform_int_distribution<std::uint32_t> dist(0, R.field().p() - 1);
  while (true) {
    std::vector<Term> terms;
    int lo = block < 0 ? 0 : R.shape().var_offset(block);
    int hi = block < 0 ? R.shape().nvars()
                       : R.shape().var_offset(block) + R.shape().block_size(block);
    bool nonzero = false;
    for (int v = lo; v < hi; ++v) {
      std::uint32_t c = dist(rng);
      if (c == 0) continue;
      nonzero = true;
      Monomial m = Monomial::one(R.nvars());
      m.exps[v] = 1;
      terms.push_back(Term{std::move(m), c});
    }
    if (nonzero) return R.from_terms(std::move(terms));
  }
}

// Runs conditions (a) and (b) at degree m for the given forms, recording
// one entry per colon check and per fullness probe. Succeeds as soon as
// fullness holds after some prefix h_1..h_j.
bool run_criterion(const Ideal& I, int m,
                   const std::vector<Polynomial>& forms,
                   std::vector<ConditionRecord>& checks,
                   std::size_t* forms_used) {
  const PolyRing& R = I.ring();
  PieceBasis piece_m(R, m);
  PieceBasis piece_m1(R, m + 1);
  PieceBasis piece_mm1(R, m - 1);  // m >= 1 is guaranteed by gen degrees

  RowEchelon ech_m(R.field(), piece_m.size());
  for (const auto& f : triangular_basis(I, piece_m))
    ech_m.add_row(piece_m.coeff_vector(f));
  RowEchelon ech_m1(R.field(), piece_m1.size());
  for (const auto& f : triangular_basis(I, piece_m1))
    ech_m1.add_row(piece_m1.coeff_vector(f));

  auto fullness = [&](int step) {
    bool holds = ech_m.full();
    checks.push_back(ConditionRecord{step, "fullness", holds,
                                     static_cast<long long>(ech_m.rank()),
                                     static_cast<long long>(piece_m.size())});
    return holds;
  };

  if (fullness(0)) {
    *forms_used = 0;
    return true;
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Polynomial& h = forms[i];
    // (a): the colon by h_i adds nothing at degree m
    long long rhs = static_cast<long long>(ech_m.rank());
    RowEchelon mult = ech_m1;  // W_{m+1} so far
    std::size_t r0 = mult.rank();
    for (const auto& u : piece_m.monomials()) {
      mult.add_row(piece_m1.coeff_vector(R.mul_term(h, u, 1)));
      if (mult.full()) break;
    }
    long long lhs = static_cast<long long>(piece_m.size()) -
                    static_cast<long long>(mult.rank() - r0);
    bool holds = (lhs == rhs);
    checks.push_back(
        ConditionRecord{static_cast<int>(i) + 1, "colon", holds, lhs, rhs});
    if (!holds) return false;
    // adjoin h_i and probe fullness
    for (const auto& u : piece_mm1.monomials())
      ech_m.add_row(piece_m.coeff_vector(R.mul_term(h, u, 1)));
    for (const auto& u : piece_m.monomials())
      ech_m1.add_row(piece_m1.coeff_vector(R.mul_term(h, u, 1)));
    if (fullness(static_cast<int>(i) + 1)) {
      *forms_used = i + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_m_regular(const Ideal& I, int m, std::mt19937_64& rng, int trials,
                  RegularityCertificate* cert, bool blockwise) {
  require_proper(I);
  int maxgen = max_min_gen_degree(I);
  if (maxgen > m) {
    // a generator of degree > m already rules m-regularity out
    if (cert) {
      cert->m = m;
      cert->method = "criterion";
      cert->forms.clear();
      cert->checks = {ConditionRecord{0, "gen-degree", false, maxgen, m}};
    }
    return false;
  }
  const PolyRing& R = I.ring();
  int k = R.shape().k();
  int max_n = *std::max_element(R.shape().dims().begin(), R.shape().dims().end());
  int j_max = k + max_n;

  std::vector<ConditionRecord> last_checks;
  std::vector<Polynomial> last_forms;
  for (int trial = 0; trial < std::max(trials, 1); ++trial) {
    std::vector<Polynomial> forms;
    for (int i = 0; i < j_max; ++i) {
      int block = blockwise ? i % k : -1;
      forms.push_back(random_linear_form(R, rng, block));
    }
    std::vector<ConditionRecord> checks;
    std::size_t used = 0;
    if (run_criterion(I, m, forms, checks, &used)) {
      if (cert) {
        cert->m = m;
        cert->method = "criterion";
        cert->forms.assign(forms.begin(), forms.begin() + used);
        cert->checks = std::move(checks);
      }
      return true;
    }
    last_checks = std::move(checks);
    last_forms = std::move(forms);
  }
  if (cert) {
    cert->m = m;
    cert->method = "criterion";
    cert->forms = std::move(last_forms);
    cert->checks = std::move(last_checks);
  }
  return false;
}

bool replay_certificate(const Ideal& I, const RegularityCertificate& cert) {
  if (cert.method != "criterion") return false;
  if (!cert.checks.empty() && cert.checks.front().kind == "gen-degree") {
    ConditionRecord expect{0, "gen-degree", false, max_min_gen_degree(I),
                           cert.m};
    return cert.checks.size() == 1 && cert.checks.front() == expect;
  }
  std::vector<ConditionRecord> checks;
  std::size_t used = 0;
  run_criterion(I, cert.m, cert.forms, checks, &used);
  return checks == cert.checks;
}

std::pair<int, RegularityCertificate> regularity(const Ideal& I,
                                                 std::mt19937_64& rng,
                                                 int trials, int lower_hint) {
  require_proper(I);
  int start = std::max(max_min_gen_degree(I), std::max(lower_hint, 1));
  for (int m = start; m <= start + 64; ++m) {
    RegularityCertificate cert;
    if (is_m_regular(I, m, rng, trials, &cert)) return {m, std::move(cert)};
  }
  throw std::runtime_error("regularity scan exceeded its cap");
}

int regularity_via_gin(const Ideal& I, std::mt19937_64& rng) {
  require_proper(I);
  const PolyRing& R = I.ring();
  int n = R.nvars();
  std::uniform_int_distribution<std::uint32_t> dist(0, R.field().p() - 1);
  while (true) {
    std::vector<std::vector<std::uint32_t>> A(n,
                                              std::vector<std::uint32_t>(n));
    for (auto& row : A) {
      for (auto& c : row) c = dist(rng);
    }
    if (rank_of(A, n, R.field()) != static_cast<std::size_t>(n)) continue;
    std::vector<Polynomial> images;
    for (int v = 0; v < n; ++v) {
      std::vector<Term> terms;
      for (int w = 0; w < n; ++w) {
        if (A[v][w] == 0) continue;
        Monomial m = Monomial::one(n);
        m.exps[w] = 1;
        terms.push_back(Term{std::move(m), A[v][w]});
      }
      images.push_back(R.from_terms(std::move(terms)));
    }
    std::vector<Polynomial> moved;
    for (const auto& g : I.gens()) moved.push_back(R.substitute(g, images));
    Ideal J(R, std::move(moved));
    // lead terms of the reduced basis = minimal generators of gin(I)
    int best = 0;
    for (const auto& l : J.lead_terms())
      best = std::max(best, l.total_degree());
    return best;
  }
}

std::string certificate_to_json(const PolyRing& ring,
                                const RegularityCertificate& cert) {
  nlohmann::json j;
  j["m"] = cert.m;
  j["method"] = cert.method;
  nlohmann::json forms = nlohmann::json::array();
  for (const auto& f : cert.forms) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : f.terms())
      terms.push_back({{"c", t.coeff}, {"e", t.mono.exps}});
    forms.push_back(std::move(terms));
  }
  j["forms"] = std::move(forms);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : cert.checks) {
    checks.push_back({{"step", c.step},
                      {"kind", c.kind},
                      {"holds", c.holds},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs}});
  }
  j["checks"] = std::move(checks);
  (void)ring;
  return j.dump(2);
}

RegularityCertificate certificate_from_json(const PolyRing& ring,
                                            const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad certificate JSON: ") + e.what());
  }
  RegularityCertificate cert;
  cert.m = j.at("m").get<int>();
  cert.method = j.at("method").get<std::string>();
  for (const auto& jf : j.at("forms")) {
    std::vector<Term> terms;
    for (const auto& jt : jf) {
      terms.push_back(Term{Monomial(jt.at("e").get<std::vector<int>>()),
                           jt.at("c").get<std::uint32_t>()});
    }
    cert.forms.push_back(ring.from_terms(std::move(terms)));
  }
  for (const auto& jc : j.at("checks")) {
    cert.checks.push_back(ConditionRecord{
        jc.at("step").get<int>(), jc.at("kind").get<std::string>(),
        jc.at("holds").get<bool>(), jc.at("lhs").get<long long>(),
        jc.at("rhs").get<long long>()});
  }
  return cert;
}

}  // namespace multireg
