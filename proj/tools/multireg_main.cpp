// multireg: batch verification of regularity formulas and bounds for point
// schemes in products of projective spaces, plus one-off regularity and
// Hilbert-function queries on schemes loaded from JSON.
//
// Exit codes: 0 all checks passed, 1 at least one assertion violated,
// 2 configuration error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "multireg/errors.hpp"
#include "multireg/experiment.hpp"
#include "multireg/formulas.hpp"

namespace {

using namespace multireg;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw ConfigError("empty entry in list: " + text);
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw ConfigError("empty list: " + text);
  return out;
}

// "2..6" or "4"
std::pair<int, int> parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  int lo = std::stoi(text.substr(0, pos));
  int hi = std::stoi(text.substr(pos + 2));
  return {lo, hi};
}

std::string format_from_path(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return "json";
  return "csv";
}

void print_summary(const std::vector<InstanceReport>& reports,
                   const ExperimentSummary& summary) {
  for (const auto& r : reports) {
    SpaceShape shape(r.shape);
    std::cout << shape.to_string() << " s=" << r.s << " mults=(";
    for (std::size_t i = 0; i < r.mults.size(); ++i)
      std::cout << (i ? "," : "") << r.mults[i];
    std::cout << ")";
    if (r.skipped) {
      std::cout << "  SKIP: " << r.skip_reason << "\n";
      continue;
    }
    std::cout << "  reg=" << r.reg;
    if (r.reg_formula >= 0) std::cout << " formula=" << r.reg_formula;
    std::cout << " ri=" << r.ri << " ri_bound=" << r.ri_bound
              << " reg_bound=" << r.reg_bound << " gin=" << r.gin_reg
              << (r.pass ? "  ok" : "  VIOLATION");
    if (!r.pass && !r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
  }
  std::cout << summary.cells << " cells: " << summary.passed << " passed, "
            << summary.failed << " failed, " << summary.skipped
            << " skipped\n";
}

int run_grid(ExperimentConfig cfg, const std::string& out_path) {
  auto [reports, summary] = run_experiment(cfg);
  if (!out_path.empty())
    emit_report(reports, format_from_path(out_path), out_path);
  print_summary(reports, summary);
  return summary.ok() ? 0 : 1;
}

PointScheme load_scheme(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open points file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return scheme_from_json(buf.str());
}

int cmd_regularity(const std::string& points_path, int trials) {
  PointScheme Z = load_scheme(points_path);
  PolyRing R(Z.shape(), Z.field());
  Ideal I = fat_point_ideal(R, Z);
  int horizon = verification_horizon(Z.shape(), Z.mults());
  HilbertPolynomial HP =
      hilbert_polynomial_empirical(I, Z.shape().k(), horizon - Z.shape().k());
  int ri = regularity_index(I, HP, horizon);
  std::mt19937_64 rng(Z.seed());
  auto [reg, cert] = regularity(I, rng, trials, ri);
  int gin = regularity_via_gin(I, rng);
  std::cout << "{\n  \"reg\": " << reg << ",\n  \"gin_reg\": " << gin
            << ",\n  \"ri\": " << ri << ",\n  \"certificate\": "
            << certificate_to_json(R, cert) << "\n}\n";
  return gin == reg ? 0 : 1;
}

int cmd_hilbert(const std::string& points_path, int box) {
  PointScheme Z = load_scheme(points_path);
  PolyRing R(Z.shape(), Z.field());
  Ideal I = fat_point_ideal(R, Z);
  MultiDegree b(std::vector<int>(Z.shape().k(), box));
  HilbertTable table = hilbert_table(I, b);
  std::cout << "{\n  \"multigraded\": [\n";
  bool first = true;
  for (const auto& [t, v] : table.values) {
    if (!first) std::cout << ",\n";
    first = false;
    std::cout << "    {\"t\": " << MultiDegree(t).to_string()
              << ", \"value\": " << v << "}";
  }
  std::cout << "\n  ],\n  \"total\": [\n";
  first = true;
  for (const auto& [t, v] : table.total) {
    if (!first) std::cout << ",\n";
    first = false;
    std::cout << "    {\"t\": " << t << ", \"value\": " << v << "}";
  }
  std::cout << "\n  ]\n}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "multireg: regularity of (fat) point schemes in products of "
      "projective spaces over F_p"};
  app.require_subcommand(1);

  std::vector<std::string> dims_args;
  std::string s_range = "2..6";
  std::vector<std::string> mult_args;
  std::string a_range = "1..4";
  std::uint32_t p = 32003;
  std::uint64_t seed = 42;
  int trials = 5;
  std::string out_path;
  std::string points_path;
  int box = 5;

  auto add_grid_options = [&](CLI::App* cmd, bool with_mults, bool with_s,
                              bool with_a) {
    cmd->add_option("--dims", dims_args,
                    "factor dimensions, e.g. 2,1 (repeatable)")
        ->required();
    if (with_s) cmd->add_option("--s", s_range, "point count or range a..b");
    if (with_mults)
      cmd->add_option("--mults", mult_args,
                      "multiplicity profile, e.g. 2,2,1 (repeatable)")
          ->required();
    if (with_a) cmd->add_option("--a", a_range, "power or range a..b");
    cmd->add_option("--p", p, "prime field modulus");
    cmd->add_option("--seed", seed, "run seed");
    cmd->add_option("--trials", trials, "criterion retry count");
    cmd->add_option("--out", out_path, "report file (.csv or .json)");
  };

  CLI::App* theorem = app.add_subcommand(
      "verify-theorem",
      "check reg(I_X) = max{d_i+1} on random generic reduced supports");
  add_grid_options(theorem, false, true, false);

  CLI::App* bound = app.add_subcommand(
      "verify-bound",
      "check ri and reg against their upper bounds on fat supports");
  add_grid_options(bound, true, false, false);

  CLI::App* ri_cmd = app.add_subcommand(
      "ri", "check ri(R/p^a) = max(a-k, 0) for a single fat point");
  add_grid_options(ri_cmd, false, false, true);

  CLI::App* reg_cmd = app.add_subcommand(
      "regularity", "regularity of the scheme in a JSON points file");
  reg_cmd->add_option("--points", points_path, "scheme JSON file")->required();
  reg_cmd->add_option("--trials", trials, "criterion retry count");

  CLI::App* hilb_cmd = app.add_subcommand(
      "hilbert", "Hilbert table of the scheme in a JSON points file");
  hilb_cmd->add_option("--points", points_path, "scheme JSON file")
      ->required();
  hilb_cmd->add_option("--box", box, "componentwise box bound");

  CLI11_PARSE(app, argc, argv);

  try {
    ExperimentConfig cfg;
    cfg.p = p;
    cfg.seed = seed;
    cfg.trials = trials;
    for (const auto& d : dims_args) cfg.shapes.push_back(parse_int_list(d));

    if (theorem->parsed()) {
      cfg.mode = RunMode::VerifyTheorem;
      std::tie(cfg.s_lo, cfg.s_hi) = parse_range(s_range);
      return run_grid(cfg, out_path);
    }
    if (bound->parsed()) {
      cfg.mode = RunMode::VerifyBound;
      for (const auto& m : mult_args)
        cfg.mult_profiles.push_back(parse_int_list(m));
      return run_grid(cfg, out_path);
    }
    if (ri_cmd->parsed()) {
      cfg.mode = RunMode::Ri;
      std::tie(cfg.s_lo, cfg.s_hi) = parse_range(a_range);
      return run_grid(cfg, out_path);
    }
    if (reg_cmd->parsed()) return cmd_regularity(points_path, trials);
    if (hilb_cmd->parsed()) return cmd_hilbert(points_path, box);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
