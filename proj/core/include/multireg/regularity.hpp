#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "multireg/groebner.hpp"

namespace multireg {

/// One recorded equality check inside a regularity decision.
/// kind "colon": ((I,h_1..h_{i-1}):h_i)_m  vs  (I,h_1..h_{i-1})_m
/// kind "fullness": (I,h_1..h_j)_m  vs  R_m
/// kind "gen-degree": largest minimal-generator degree vs m
struct ConditionRecord {
  int step = 0;
  std::string kind;
  bool holds = false;
  long long lhs = 0;
  long long rhs = 0;

  bool operator==(const ConditionRecord& o) const {
    return step == o.step && kind == o.kind && holds == o.holds &&
           lhs == o.lhs && rhs == o.rhs;
  }
};

/// A replayable record of an m-regularity decision: the linear forms used
/// and the per-step outcomes of the criterion's conditions.
struct RegularityCertificate {
  int m = -1;
  std::string method;  // "criterion" or "gin"
  std::vector<Polynomial> forms;
  std::vector<ConditionRecord> checks;
};

/// Decides m-regularity with the Bayer-Stillman criterion: random linear
/// forms h_1,...,h_j (j bounded by k + max n_i) must satisfy the degree-m
/// colon equalities and degree-m fullness, all checked as exact ranks of
/// graded pieces. Randomness is one-sided: true always carries a valid
/// witness; false is reported only after `trials` independent attempts.
/// When I has a minimal generator of degree > m the answer is false
/// outright (an m-regular ideal is generated in degrees <= m).
/// blockwise draws each h_i from a single factor's span instead of all of
/// S_1.
bool is_m_regular(const Ideal& I, int m, std::mt19937_64& rng, int trials = 5,
                  RegularityCertificate* cert = nullptr,
                  bool blockwise = false);

/// Deterministic re-run of a certificate's checks with its recorded forms;
/// true when every recorded outcome reproduces.
bool replay_certificate(const Ideal& I, const RegularityCertificate& cert);

/// reg(I): the least m with is_m_regular(I, m). Scans upward from
/// max(largest minimal-generator degree, lower_hint); both are sound lower
/// bounds and m-regularity is monotone in m.
std::pair<int, RegularityCertificate> regularity(const Ideal& I,
                                                 std::mt19937_64& rng,
                                                 int trials = 5,
                                                 int lower_hint = -1);

/// Independent oracle: random linear change of all coordinates, grevlex
/// initial ideal, largest minimal-generator degree of the result. Agrees
/// with the criterion value for generic changes in characteristic zero;
/// disagreement over F_p is reported by callers, never patched.
int regularity_via_gin(const Ideal& I, std::mt19937_64& rng);

std::string certificate_to_json(const PolyRing& ring,
                                const RegularityCertificate& cert);
RegularityCertificate certificate_from_json(const PolyRing& ring,
                                            const std::string& text);

}  // namespace multireg
