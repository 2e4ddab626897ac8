#include "multireg/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <thread>

#include "multireg/errors.hpp"
#include "multireg/formulas.hpp"

namespace multireg {

RunMode run_mode_from_string(const std::string& s) {
  if (s == "verify-theorem") return RunMode::VerifyTheorem;
  if (s == "verify-bound") return RunMode::VerifyBound;
  if (s == "ri") return RunMode::Ri;
  if (s == "hilbert") return RunMode::Hilbert;
  if (s == "regularity") return RunMode::Regularity;
  throw ConfigError("unknown mode: " + s);
}

std::string to_string(RunMode m) {
  switch (m) {
    case RunMode::VerifyTheorem: return "verify-theorem";
    case RunMode::VerifyBound: return "verify-bound";
    case RunMode::Ri: return "ri";
    case RunMode::Hilbert: return "hilbert";
    case RunMode::Regularity: return "regularity";
  }
  return "?";
}

std::uint64_t derive_cell_seed(std::uint64_t seed, std::size_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int thread_cap() {
  if (const char* env = std::getenv("MULTIREG_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct Cell {
  std::vector<int> shape;
  std::vector<int> mults;
};

std::vector<Cell> enumerate_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (const auto& dims : cfg.shapes) {
    switch (cfg.mode) {
      case RunMode::VerifyTheorem:
        for (int s = cfg.s_lo; s <= cfg.s_hi; ++s)
          cells.push_back({dims, std::vector<int>(s, 1)});
        break;
      case RunMode::VerifyBound:
        for (const auto& profile : cfg.mult_profiles)
          cells.push_back({dims, profile});
        break;
      case RunMode::Ri:
        for (int a = cfg.s_lo; a <= cfg.s_hi; ++a)
          cells.push_back({dims, std::vector<int>{a}});
        break;
      default:
        throw ConfigError("grid runner handles verify-theorem, verify-bound "
                          "and ri modes only");
    }
  }
  return cells;
}

}  // namespace

void ExperimentConfig::validate() const {
  try {
    PrimeField probe_field(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (shapes.empty()) throw ConfigError("no shapes configured");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (mode == RunMode::VerifyTheorem || mode == RunMode::Ri) {
    if (s_lo < 1 || s_lo > s_hi) throw ConfigError("empty s range");
  }
  if (mode == RunMode::VerifyBound && mult_profiles.empty())
    throw ConfigError("verify-bound needs at least one multiplicity profile");
  for (const auto& dims : shapes) {
    SpaceShape shape(dims);  // validates dims >= 1
    if (shape.nvars() > max_vars)
      throw ConfigError("shape " + shape.to_string() + " exceeds the cap of " +
                        std::to_string(max_vars) + " variables");
  }
  ExperimentConfig probe = *this;
  for (const auto& cell : enumerate_cells(probe)) {
    SpaceShape shape(cell.shape);
    long long msum =
        std::accumulate(cell.mults.begin(), cell.mults.end(), 0LL);
    if (msum > max_mult_sum)
      throw ConfigError("multiplicity sum " + std::to_string(msum) +
                        " exceeds the cap of " + std::to_string(max_mult_sum));
    int horizon = verification_horizon(shape, cell.mults);
    if (horizon > max_horizon)
      throw ConfigError("verification horizon " + std::to_string(horizon) +
                        " exceeds the cap of " + std::to_string(max_horizon));
  }
}

InstanceReport analyze_cell(const SpaceShape& shape, const PrimeField& field,
                            const std::vector<int>& mults,
                            std::uint64_t cell_seed, int trials,
                            RunMode mode) {
  auto t0 = std::chrono::steady_clock::now();
  InstanceReport rep;
  rep.shape = shape.dims();
  rep.s = static_cast<int>(mults.size());
  rep.mults = mults;
  std::sort(rep.mults.begin(), rep.mults.end(), std::greater<>());
  rep.seed = cell_seed;

  std::mt19937_64 rng(cell_seed);
  int k = shape.k();
  int s = rep.s;
  bool reduced = std::all_of(mults.begin(), mults.end(),
                             [](int m) { return m == 1; });
  try {
    PointScheme support = random_points(shape, field, s, rng, 20, cell_seed);
    PointScheme Z(shape, field, support.points(), rep.mults, cell_seed);
    PolyRing R(shape, field);
    Ideal I = fat_point_ideal(R, Z);

    int horizon = verification_horizon(shape, rep.mults);
    HilbertPolynomial HP = hilbert_polynomial_empirical(I, k, horizon - k);
    rep.ri = regularity_index(I, HP, horizon);

    auto [reg, cert] = regularity(I, rng, trials, rep.ri);
    rep.reg = reg;
    rep.gin_reg = regularity_via_gin(I, rng);
    rep.gin_ok = (rep.gin_reg == rep.reg);
    rep.sandwich_ok = (rep.ri <= rep.reg) && (rep.reg <= rep.ri + k);

    if (reduced) {
      rep.reg_formula = reduced_regularity_formula(shape, s);
      rep.formula_ok = (rep.reg == rep.reg_formula);
    }
    if (s >= 2) {
      rep.ri_bound = ri_bound(shape, rep.mults);
      rep.reg_bound = fat_bound(shape, rep.mults);
      rep.bounds_ok = (rep.ri <= rep.ri_bound) && (rep.reg <= rep.reg_bound);
    } else {
      // single fat point: both invariants have exact expected values
      rep.ri_bound = std::max(single_point_ri(rep.mults[0], k), 0);
      rep.reg_bound = rep.mults[0];
      rep.bounds_ok = (rep.ri == rep.ri_bound) && (rep.reg == rep.reg_bound);
    }

    // Hilbert identities on this cell: the function equals the polynomial
    // from reg on, and for reduced generic cells the polynomial is the
    // closed form and the multigraded values hit s at total degree D-1.
    for (int t = rep.reg; t <= horizon && rep.identities_ok; ++t) {
      long long h = static_cast<long long>(graded_hilbert(I, t));
      if (HP.eval(t) != Rational(h)) {
        rep.identities_ok = false;
        rep.note = "H(t) != HP(t) at t=" + std::to_string(t);
      }
    }
    if (reduced) {
      if (!(HP == hilbert_polynomial_reduced(s, k))) {
        rep.identities_ok = false;
        rep.note = "empirical Hilbert polynomial differs from s*C(t+k-1,k-1)";
      }
      int D = reduced_regularity_formula(shape, s);
      for (const auto& c : compositions(D - 1, k)) {
        if (multigraded_hilbert(I, c) != static_cast<std::uint64_t>(s)) {
          rep.identities_ok = false;
          rep.note = "multigraded value below s at " + c.to_string();
          break;
        }
      }
    }

    if (mode == RunMode::VerifyTheorem) {
      // non-zero-divisor invariance of regularity, with the certified form
      int factor = 0;
      for (int i = 1; i < k; ++i) {
        if (shape.dims()[i] < shape.dims()[factor]) factor = i;
      }
      Polynomial L = find_nzd_linear_form(I, factor, rng, 20, cell_seed);
      auto [reg_with_form, cert2] = regularity(sum(I, L), rng, trials);
      rep.nzd_ok = (reg_with_form == rep.reg);
      if (!rep.nzd_ok)
        rep.note = "reg changed after adjoining a non-zero divisor: " +
                   std::to_string(reg_with_form);
    }

    rep.pass = rep.formula_ok && rep.bounds_ok && rep.sandwich_ok &&
               rep.gin_ok && rep.identities_ok && rep.nzd_ok;
  } catch (const GenericityError& e) {
    rep.skipped = true;
    rep.skip_reason = e.what();
  } catch (const StabilizationError& e) {
    rep.pass = false;
    rep.identities_ok = false;
    rep.note = e.what();
  } catch (const std::logic_error& e) {
    rep.pass = false;
    rep.identities_ok = false;
    rep.note = e.what();
  }
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::pair<std::vector<InstanceReport>, ExperimentSummary> run_experiment(
    const ExperimentConfig& cfg) {
  cfg.validate();
  PrimeField field(cfg.p);
  std::vector<Cell> cells = enumerate_cells(cfg);
  std::vector<InstanceReport> reports(cells.size());

  int workers = std::min<int>(thread_cap(), static_cast<int>(cells.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= cells.size()) break;
      SpaceShape shape(cells[idx].shape);
      reports[idx] =
          analyze_cell(shape, field, cells[idx].mults,
                       derive_cell_seed(cfg.seed, idx), cfg.trials, cfg.mode);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  ExperimentSummary summary;
  summary.cells = static_cast<int>(reports.size());
  for (const auto& r : reports) {
    if (r.skipped)
      ++summary.skipped;
    else if (r.pass)
      ++summary.passed;
    else
      ++summary.failed;
  }
  return {std::move(reports), summary};
}

namespace {

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string reports_to_csv(const std::vector<InstanceReport>& reports) {
  std::ostringstream out;
  out << "shape,s,mults,seed,reg,reg_formula,ri,ri_bound,reg_bound,gin_reg,"
         "pass\n";
  for (const auto& r : reports) {
    out << join_ints(r.shape, 'x') << ',' << r.s << ','
        << join_ints(r.mults, '+') << ',' << r.seed << ',';
    if (r.skipped) {
      out << ",,,,,,\n";
      continue;
    }
    out << r.reg << ',';
    if (r.reg_formula >= 0) out << r.reg_formula;
    out << ',' << r.ri << ',' << r.ri_bound << ',' << r.reg_bound << ','
        << r.gin_reg << ',' << (r.pass ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string reports_to_json(const std::vector<InstanceReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    arr.push_back({{"shape", r.shape},
                   {"s", r.s},
                   {"mults", r.mults},
                   {"seed", r.seed},
                   {"reg", r.reg},
                   {"reg_formula", r.reg_formula},
                   {"ri", r.ri},
                   {"ri_bound", r.ri_bound},
                   {"reg_bound", r.reg_bound},
                   {"gin_reg", r.gin_reg},
                   {"formula_ok", r.formula_ok},
                   {"bounds_ok", r.bounds_ok},
                   {"sandwich_ok", r.sandwich_ok},
                   {"gin_ok", r.gin_ok},
                   {"identities_ok", r.identities_ok},
                   {"nzd_ok", r.nzd_ok},
                   {"pass", r.pass},
                   {"skipped", r.skipped},
                   {"skip_reason", r.skip_reason},
                   {"note", r.note},
                   {"wall_ms", r.wall_ms}});
  }
  return arr.dump(2);
}

std::vector<InstanceReport> reports_from_json(const std::string& text) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad report JSON: ") + e.what());
  }
  std::vector<InstanceReport> out;
  for (const auto& j : arr) {
    InstanceReport r;
    r.shape = j.at("shape").get<std::vector<int>>();
    r.s = j.at("s").get<int>();
    r.mults = j.at("mults").get<std::vector<int>>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.reg = j.at("reg").get<int>();
    r.reg_formula = j.at("reg_formula").get<int>();
    r.ri = j.at("ri").get<int>();
    r.ri_bound = j.at("ri_bound").get<long long>();
    r.reg_bound = j.at("reg_bound").get<long long>();
    r.gin_reg = j.at("gin_reg").get<int>();
    r.formula_ok = j.at("formula_ok").get<bool>();
    r.bounds_ok = j.at("bounds_ok").get<bool>();
    r.sandwich_ok = j.at("sandwich_ok").get<bool>();
    r.gin_ok = j.at("gin_ok").get<bool>();
    r.identities_ok = j.at("identities_ok").get<bool>();
    r.nzd_ok = j.at("nzd_ok").get<bool>();
    r.pass = j.at("pass").get<bool>();
    r.skipped = j.at("skipped").get<bool>();
    r.skip_reason = j.at("skip_reason").get<std::string>();
    r.note = j.at("note").get<std::string>();
    r.wall_ms = j.at("wall_ms").get<std::int64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

void emit_report(const std::vector<InstanceReport>& reports,
                 const std::string& format, const std::string& path) {
  if (reports.empty())
    throw std::invalid_argument("emit_report: no reports to write");
  std::string payload;
  if (format == "csv") {
    payload = reports_to_csv(reports);
  } else if (format == "json") {
    payload = reports_to_json(reports);
  } else {
    throw ConfigError("unknown report format: " + format);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << payload;
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace multireg
