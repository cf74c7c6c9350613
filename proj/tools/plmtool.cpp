// plmtool: command-line front end for the PLM library.
//
// Exit codes: 0 success, 1 an asserting sweep failed, 2 parse or flag
// error, 3 dimension mismatch, 4 input is not left stochastic.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "plm/errors.hpp"
#include "plm/io.hpp"
#include "plm/plm.hpp"
#include "plm/spectral.hpp"
#include "plm/stochastic.hpp"
#include "plm/verify.hpp"

namespace {

enum Exit : int { kOk = 0, kSweepFailed = 1, kUsage = 2, kDimension = 3, kNotStochastic = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string a_path;
  std::string b_path;
  std::size_t d = 0;
  std::string sweep;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t cases = 100;
  std::size_t workers = 0;
  bool json = false;
  bool text = false;
  bool check = false;
  bool force = false;
  bool stable = false;
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

plm::Plm load_plm(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return plm::parse_plm(text);
  } catch (const plm::Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

plm::StochasticMatrix load_stochastic(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return plm::parse_stochastic(text);
  } catch (const plm::Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string class_text(const plm::PlmClass& c) {
  const auto j = plm::to_json(c);
  std::string line = j["class"].get<std::string>();
  for (const auto& [key, value] : j.items())
    if (key != "class") line += " " + key + "=" + value.dump();
  return line + "\n";
}

std::string cmd_mul(const Config& cfg) {
  const plm::Plm a = load_plm(cfg.a_path);
  const plm::Plm b = load_plm(cfg.b_path);
  if (a.dim() != b.dim()) throw plm::DimensionMismatch(a.dim(), b.dim());
  const plm::Plm c = plm::structural_multiply(a, b);
  nlohmann::json j = plm::to_json(c);
  j["class"] = plm::to_json(plm::classify(c));
  if (cfg.json) {
    j["matrix"] = plm::to_dense(c).to_rows();
    return dump(j);
  }
  return plm::format_plm(c) + j.dump() + "\n";
}

std::string cmd_classify(const Config& cfg) {
  const auto c = plm::classify(load_plm(cfg.a_path));
  return cfg.text ? class_text(c) : dump(plm::to_json(c));
}

std::string cmd_period(const Config& cfg) {
  const auto v = plm::periodicity(load_plm(cfg.a_path));
  const auto j = plm::to_json(v);
  if (!cfg.text) return dump(j);
  std::string line = j["periodicity"].get<std::string>();
  for (const auto& [key, value] : j.items())
    if (key != "periodicity") line += " " + key + "=" + value.dump();
  return line + "\n";
}

std::string cmd_eigen(const Config& cfg) {
  const plm::Plm a = load_plm(cfg.a_path);
  const auto report = plm::eigen_check(a, cfg.tol);
  nlohmann::json j = plm::to_json(report);
  j["char_poly"] = plm::to_json(plm::char_poly(a));
  if (!cfg.text) return dump(j);
  std::ostringstream out;
  out << "char_poly " << j["char_poly"]["coefficients"].dump() << "\n"
      << "has_zero " << j["has_zero"].dump() << "\n"
      << "period " << report.period << "\n"
      << "spectral_radius " << j["spectral_radius_numeric"].dump() << "\n";
  for (const auto& lambda : j["numeric_eigenvalues"]) out << "eigenvalue " << lambda[0] << " " << lambda[1] << "\n";
  return out.str();
}

std::string cmd_decompose(const Config& cfg) {
  const auto m = load_stochastic(cfg.a_path);
  const auto dec = plm::decompose(m);
  if (cfg.check && plm::recompose(dec) != m) throw plm::Error("recomposition differs from the input");
  if (!cfg.text) return dump(plm::to_json(dec));
  std::string out;
  for (const auto& term : dec.terms) out += plm::to_string(term.lambda) + " " + plm::format_colmap(term.plm) + "\n";
  return out;
}

std::string cmd_enumerate(const Config& cfg) {
  if (cfg.d < 1) throw UsageError("enumerate: d must be at least 1");
  if (cfg.d > 8 && !cfg.force) throw UsageError("enumerate: d > 8 produces d^d lines; pass --force");
  std::string out;
  plm::for_each_plm(cfg.d, [&out](const plm::Plm& a) { out += plm::format_colmap(a) + "\n"; });
  return out;
}

std::pair<std::string, int> cmd_verify(const Config& cfg) {
  static const std::vector<std::string> kSweeps{"mul", "period", "eigen", "prerow", "decompose"};
  const bool all = cfg.sweep == "all";
  if (!all && std::find(kSweeps.begin(), kSweeps.end(), cfg.sweep) == kSweeps.end())
    throw UsageError("verify: unknown sweep '" + cfg.sweep + "' (mul, period, eigen, prerow, decompose, all)");
  if (cfg.d < 1) throw UsageError("verify: d must be at least 1");
  if (!(cfg.tol > 0.0)) throw UsageError("verify: --tol must be positive");
  const plm::SweepOptions opts{cfg.workers};
  const bool exhaustive_ok = cfg.d <= 4 || cfg.force;

  std::vector<plm::SweepReport> reports;
  for (const auto& name : kSweeps) {
    if (!all && name != cfg.sweep) continue;
    if (name != "decompose" && cfg.d < 2) throw UsageError("verify " + name + ": d must be at least 2");
    if (name == "mul") {
      reports.push_back(exhaustive_ok ? plm::sweep_multiplication(cfg.d, opts)
                                      : plm::sweep_multiplication_sampled(cfg.d, cfg.cases, cfg.seed, opts));
    } else if (name == "decompose") {
      reports.push_back(plm::sweep_decompose(cfg.d, cfg.cases, cfg.seed, opts));
    } else {
      if (!exhaustive_ok) throw UsageError("verify " + name + ": exhaustive sweeps above d=4 need --force");
      if (name == "period") reports.push_back(plm::sweep_period(cfg.d, opts));
      if (name == "eigen") reports.push_back(plm::sweep_eigen(cfg.d, cfg.tol, opts));
      if (name == "prerow") reports.push_back(plm::sweep_prerow(cfg.d, opts));
    }
  }

  const auto timing = cfg.stable ? plm::Timing::Omit : plm::Timing::Include;
  bool pass = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    out.push_back(plm::to_json(r, timing));
  }
  return {dump(all ? out : out.front()), pass ? kOk : kSweepFailed};
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw UsageError(cfg.out_path + ": cannot write");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation-like matrices: products, classification, spectra and stochastic decompositions"};
  app.require_subcommand(1);
  Config cfg;

  const auto add_format = [&cfg](CLI::App* sub) {
    auto* json = sub->add_flag("--json", cfg.json, "JSON output");
    auto* text = sub->add_flag("--text", cfg.text, "Plain-text output");
    json->excludes(text);
    sub->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  };

  auto* mul = app.add_subcommand("mul", "Multiply two PLMs (A·B)");
  mul->add_option("a", cfg.a_path, "Left factor")->required();
  mul->add_option("b", cfg.b_path, "Right factor")->required();
  add_format(mul);

  auto* classify = app.add_subcommand("classify", "Row PLM / CPLM / PCPLM / IPLM verdict");
  classify->add_option("a", cfg.a_path, "PLM file")->required();
  add_format(classify);

  auto* period = app.add_subcommand("period", "Periodicity verdict");
  period->add_option("a", cfg.a_path, "PLM file")->required();
  add_format(period);

  auto* eigen = app.add_subcommand("eigen", "Characteristic polynomial and eigenvalue report");
  eigen->add_option("a", cfg.a_path, "PLM file")->required();
  eigen->add_option("--tol", cfg.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  add_format(eigen);

  auto* decompose = app.add_subcommand("decompose", "Write a left stochastic matrix as a convex combination of PLMs");
  decompose->add_option("m", cfg.a_path, "Stochastic matrix file")->required();
  decompose->add_flag("--check", cfg.check, "Recompose and compare before printing");
  add_format(decompose);

  auto* enumerate = app.add_subcommand("enumerate", "List PL_d in lexicographic colmap order");
  enumerate->add_option("d", cfg.d, "Dimension")->required();
  enumerate->add_flag("--force", cfg.force, "Allow d > 8");
  enumerate->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run a verification sweep and print its JSON report");
  verify->add_option("sweep", cfg.sweep, "mul, period, eigen, prerow, decompose or all")->required();
  verify->add_option("d", cfg.d, "Dimension")->required();
  verify->add_option("--tol", cfg.tol, "Numeric tolerance for the eigen sweep")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "Seed for randomized sweeps");
  verify->add_option("--cases", cfg.cases, "Case count for randomized sweeps")->check(CLI::PositiveNumber);
  verify->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)");
  verify->add_flag("--force", cfg.force, "Allow exhaustive sweeps above d=4");
  verify->add_flag("--stable", cfg.stable, "Write elapsed_ms as 0 for byte-stable output");
  verify->add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    int code = kOk;
    std::string output;
    if (mul->parsed()) output = cmd_mul(cfg);
    if (classify->parsed()) output = cmd_classify(cfg);
    if (period->parsed()) output = cmd_period(cfg);
    if (eigen->parsed()) output = cmd_eigen(cfg);
    if (decompose->parsed()) output = cmd_decompose(cfg);
    if (enumerate->parsed()) output = cmd_enumerate(cfg);
    if (verify->parsed()) std::tie(output, code) = cmd_verify(cfg);
    emit(cfg, output);
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const plm::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDimension;
  } catch (const plm::NotLeftStochastic& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotStochastic;
  } catch (const plm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
