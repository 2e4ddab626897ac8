#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "multireg/hilbert.hpp"
#include "multireg/points.hpp"
#include "multireg/regularity.hpp"

namespace multireg {

enum class RunMode { VerifyTheorem, VerifyBound, Ri, Hilbert, Regularity };

RunMode run_mode_from_string(const std::string& s);
std::string to_string(RunMode m);

/// Grid description for a batch run. s_lo..s_hi is the point count range
/// in verify-theorem mode and the power range a in ri mode; verify-bound
/// mode iterates mult_profiles instead. The desk-scale caps bound variable
/// count, total multiplicity and the verification horizon; exceeding them
/// is a configuration error, not a silent truncation.
struct ExperimentConfig {
  std::uint32_t p = 32003;
  std::uint64_t seed = 42;
  std::vector<std::vector<int>> shapes;
  int s_lo = 2;
  int s_hi = 6;
  std::vector<std::vector<int>> mult_profiles;
  int trials = 5;
  RunMode mode = RunMode::VerifyTheorem;
  int max_vars = 10;
  int max_mult_sum = 8;
  int max_horizon = 25;

  void validate() const;  // throws ConfigError
};

/// One experiment row. Pass flags decompose the verdict; `pass` is their
/// conjunction over the checks that apply to the cell's mode. In ri mode
/// the bound fields hold the exact expected values (the bound degenerates
/// to an equality for a single fat point).
struct InstanceReport {
  std::vector<int> shape;
  int s = 0;
  std::vector<int> mults;
  std::uint64_t seed = 0;
  int reg = -1;
  int reg_formula = -1;  // -1 when the reduced closed form does not apply
  int ri = -1;
  long long ri_bound = -1;
  long long reg_bound = -1;
  int gin_reg = -1;
  bool formula_ok = true;
  bool bounds_ok = true;
  bool sandwich_ok = true;
  bool gin_ok = true;
  bool identities_ok = true;
  bool nzd_ok = true;
  bool pass = false;
  bool skipped = false;
  std::string skip_reason;
  std::string note;
  std::int64_t wall_ms = 0;

  bool operator==(const InstanceReport& o) const = default;
};

struct ExperimentSummary {
  int cells = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
};

/// Full pipeline for one cell: generate a certified-generic support with
/// the cell seed, build the fat ideal, fit the Hilbert polynomial, compute
/// ri, criterion regularity and the gin oracle, then evaluate every check
/// that applies. Genericity exhaustion marks the cell skipped rather than
/// failed.
InstanceReport analyze_cell(const SpaceShape& shape, const PrimeField& field,
                            const std::vector<int>& mults,
                            std::uint64_t cell_seed, int trials, RunMode mode);

/// Deterministic grid run: cell seeds derive from (seed, cell index), cells
/// may execute concurrently (MULTIREG_THREADS caps the worker count), and
/// reports come back in cell-index order regardless of completion order.
std::pair<std::vector<InstanceReport>, ExperimentSummary> run_experiment(
    const ExperimentConfig& cfg);

/// Fixed-header CSV; timing is excluded so identical configs give
/// byte-identical files.
std::string reports_to_csv(const std::vector<InstanceReport>& reports);
std::string reports_to_json(const std::vector<InstanceReport>& reports);
std::vector<InstanceReport> reports_from_json(const std::string& text);

/// Writes reports in "csv" or "json" format; throws on empty input and
/// surfaces I/O failures with the path in the message.
void emit_report(const std::vector<InstanceReport>& reports,
                 const std::string& format, const std::string& path);

/// Worker cap from MULTIREG_THREADS, defaulting to the hardware count.
int thread_cap();

/// Per-cell RNG stream: a splitmix64 mix of the run seed and cell index.
std::uint64_t derive_cell_seed(std::uint64_t seed, std::size_t index);

}  // namespace multireg
