// Copyright 2026 The Collapse Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "collapse/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "collapse/csv.hpp"
#include "collapse/errors.hpp"
#include "collapse/oracle.hpp"

namespace collapse {

namespace {

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
    case Theorem::T5: return "T5";
    case Theorem::UncertaintyBaseline: return "baseline";
  }
  return "?";
}

std::string output_path(const std::string& out_dir, const std::string& name) {
  std::filesystem::create_directories(out_dir);
  return (std::filesystem::path(out_dir) / name).string();
}

void append_bound_row(std::string& csv, const std::string& label,
                      const CertBound& b) {
  csv += label;
  csv += ',';
  csv += format_number(b.disturbance_used);
  csv += ',';
  if (b.tau) csv += format_number(*b.tau);
  csv += ',';
  csv += b.adjusted ? "1" : "0";
  csv += ',';
  csv += format_number(b.bits);
  csv += '\n';
}

std::string chain_line(const oracle::ChainReport& c) {
  std::ostringstream os;
  os << c.name << ": instances=" << c.instances
     << " violations=" << c.violations
     << " max_violation=" << format_number(c.max_violation)
     << " min_slack=" << format_number(c.min_slack);
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunConfig load_config(const std::string& path,
                      const std::optional<std::uint64_t>& seed_override) {
  RunConfig config = parse_config(read_file(path));
  if (seed_override) {
    Scenario reseeded(config.scenario.rho, config.scenario.instrument_a,
                      config.scenario.test_b, config.scenario.n,
                      config.scenario.n_u, *seed_override);
    config.scenario = std::move(reseeded);
  }
  return config;
}

}  // namespace

void do_simulate(const RunConfig& config, const std::string& out_dir) {
  const EmpiricalStats stats = run_protocol(config.scenario);

  std::string csv = "path,outcome,count,freq\n";
  for (size_t j = 0; j < stats.counts_q.size(); ++j) {
    csv += "upper," + std::to_string(j) + ',' +
           format_count(stats.counts_q[j]) + ',' +
           format_number(stats.q_hat[static_cast<int>(j)]) + '\n';
  }
  for (size_t j = 0; j < stats.counts_q_prime.size(); ++j) {
    csv += "lower," + std::to_string(j) + ',' +
           format_count(stats.counts_q_prime[j]) + ',' +
           format_number(stats.q_prime_hat[static_cast<int>(j)]) + '\n';
  }
  csv += "d_hat," + format_number(stats.d_hat) + '\n';
  write_text_file(output_path(out_dir, "stats.csv"), csv);
}

void do_certify(const RunConfig& config, const std::string& out_dir,
                bool empirical) {
  // The declared noise allowances feed the bounds directly, so an
  // allowance below an attained deviation would make the certificate
  // unsound. The sampled maxima are only lower bounds on the true
  // epsilons, which is exactly the direction this check needs.
  const auto [eps_a_hat, eps_b_hat] =
      empirical_epsilons(config.scenario.instrument_a, config.scenario.test_b,
                         config.budget, config.scenario.seed);
  if (eps_a_hat > config.noise.epsilon_a + 1e-9 ||
      eps_b_hat > config.noise.epsilon_b + 1e-9) {
    throw InconsistentDataError(
        "declared noise allowances are below the attained deviations "
        "(eps_a >= " + format_number(eps_a_hat) +
        ", eps_b >= " + format_number(eps_b_hat) + ")");
  }

  DisturbanceData data = [&] {
    const int a_outcomes = config.scenario.instrument_a.measurement().outcomes();
    if (empirical) {
      EmpiricalStats stats = run_protocol(config.scenario);
      return DisturbanceData{std::move(stats.q_hat), std::move(stats.q_prime_hat),
                             stats.d_hat, a_outcomes};
    }
    AnalyticStats stats = analytic_statistics(config.scenario);
    return DisturbanceData{std::move(stats.q), std::move(stats.q_prime), stats.d,
                           a_outcomes};
  }();

  const std::vector<CertBound> bounds = certify(data, config.trust, config.noise);

  std::string csv = "theorem,disturbance,tau,adjusted,bits\n";
  for (const CertBound& b : bounds) append_bound_row(csv, theorem_name(b.theorem), b);
  append_bound_row(csv, "best", best_bound(bounds));
  write_text_file(output_path(out_dir, "cert.csv"), csv);
}

int do_verify(int instances, const std::vector<int>& dims, std::uint64_t seed,
              std::string& report) {
  if (instances < 1) throw ConfigError("verify requires at least one instance");
  for (const int d : dims) {
    if (d < 2 || d > 8) throw ConfigError("verify dims must lie in [2, 8]");
  }

  const oracle::LemmaReport chains =
      oracle::verify_lemma_chains(instances, dims, seed);
  const oracle::LemmaReport orderings =
      oracle::verify_bound_orderings(instances, seed + 1);

  int violations = 0;
  std::ostringstream os;
  for (const auto& c : chains.chains) {
    violations += c.violations;
    os << chain_line(c) << '\n';
  }
  for (const auto& c : orderings.chains) {
    violations += c.violations;
    os << chain_line(c) << '\n';
  }
  os << (violations == 0 ? "all chains clean\n"
                         : "violations detected: " + std::to_string(violations) +
                               "\n");
  report += os.str();
  return violations;
}

void do_figure2(double c00, int steps, const std::string& out_dir) {
  if (steps < 1) throw ConfigError("figure2 requires steps >= 1");
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) grid.push_back(0.5 * i / steps);

  std::string csv = "d,thm1_bits,thm2_bits,thm3_bits\n";
  for (const Fig2Row& row : sweep_figure2(c00, grid)) {
    csv += format_number(row.d);
    csv += ',';
    if (row.t1_bits) csv += format_number(*row.t1_bits);
    csv += ',';
    if (row.t2_bits) csv += format_number(*row.t2_bits);
    csv += ',';
    if (row.t3_bits) csv += format_number(*row.t3_bits);
    csv += '\n';
  }
  write_text_file(output_path(out_dir, "fig2.csv"), csv);
}

void do_figure3(double c, int steps, int budget, const std::string& out_dir) {
  if (steps < 1) throw ConfigError("figure3 requires steps >= 1");
  if (budget < 1) throw ConfigError("figure3 requires budget >= 1");
  std::vector<Distribution> grid;
  grid.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double q0 = static_cast<double>(i) / steps;
    grid.push_back(Distribution({q0, 1.0 - q0}));
  }

  std::string csv = "q0,baseline_bits,kl_min_bits,kl_max_bits\n";
  for (const Fig3Row& row : sweep_figure3(c, grid, budget)) {
    csv += format_number(row.q0);
    csv += ',';
    csv += format_number(row.baseline_bits);
    csv += ',';
    csv += format_number(row.kl_min_bits);
    csv += ',';
    csv += format_number(row.kl_max_bits);
    csv += '\n';
  }
  write_text_file(output_path(out_dir, "fig3.csv"), csv);
}

int run_cli(std::vector<std::string> args) {
  CLI::App app{"prepare-and-measure randomness simulator and certifier",
               "collapse"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  bool empirical = false;
  int instances = 10000;
  std::vector<int> dims{2, 3, 4};
  std::uint64_t verify_seed = 1;
  double c00 = 0.75, c = 0.62;
  int steps = 100, budget = 1000;

  CLI::App* simulate = app.add_subcommand("simulate", "run the protocol");
  simulate->add_option("--config", config_path, "config file")->required();
  simulate->add_option("--seed", seed_override, "override the config seed");
  simulate->add_option("--out", out_dir, "output directory");

  CLI::App* certify_cmd = app.add_subcommand("certify", "certify randomness");
  certify_cmd->add_option("--config", config_path, "config file")->required();
  certify_cmd->add_option("--seed", seed_override, "override the config seed");
  certify_cmd->add_option("--out", out_dir, "output directory");
  certify_cmd->add_flag("--empirical", empirical,
                        "certify a protocol run instead of analytic statistics");

  CLI::App* verify = app.add_subcommand("verify", "verify inequality chains");
  verify->add_option("--instances", instances, "instances per chain");
  verify->add_option("--dims", dims, "dimensions to sample");
  verify->add_option("--seed", verify_seed, "verification seed");

  CLI::App* figure2 = app.add_subcommand("figure2", "theorem comparison sweep");
  figure2->add_option("--c00", c00, "basis overlap in (1/2, 1)");
  figure2->add_option("--steps", steps, "grid intervals");
  figure2->add_option("--out", out_dir, "output directory");

  CLI::App* figure3 = app.add_subcommand("figure3", "baseline comparison sweep");
  figure3->add_option("--c", c, "basis overlap in (1/2, 1)");
  figure3->add_option("--steps", steps, "grid intervals");
  figure3->add_option("--budget", budget, "search restarts per grid point");
  figure3->add_option("--out", out_dir, "output directory");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (simulate->parsed()) {
      do_simulate(load_config(config_path, seed_override), out_dir);
      return kExitOk;
    }
    if (certify_cmd->parsed()) {
      do_certify(load_config(config_path, seed_override), out_dir, empirical);
      return kExitOk;
    }
    if (verify->parsed()) {
      std::string report;
      const int violations = do_verify(instances, dims, verify_seed, report);
      std::cout << report;
      return violations == 0 ? kExitOk : kExitVerifyFailed;
    }
    if (figure2->parsed()) {
      do_figure2(c00, steps, out_dir);
      return kExitOk;
    }
    if (figure3->parsed()) {
      do_figure3(c, steps, budget, out_dir);
      return kExitOk;
    }
    return kExitUsage;
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const InconsistentDataError& e) {
    std::cerr << "inconsistent data: " << e.what() << '\n';
    return kExitInconsistent;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace collapse
