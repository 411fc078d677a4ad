// Command-line front end: declarative optimisation runs, the JL dimension
// table, the perturbation step-size study, wing modal reports and ad-hoc
// eigensolves. Exit codes: 0 success, 2 validation error, 3 numerical
// failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "modeswarm/experiment.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

int run_command(const std::string& spec_path, std::optional<std::uint64_t> seed,
                const std::string& out_dir, int threads) {
  modeswarm::ExperimentSpec spec = spec_path.empty()
                                       ? modeswarm::ExperimentSpec{}
                                       : modeswarm::parse_experiment_file(spec_path);
  if (seed) spec.seeds = {*seed};
  if (!out_dir.empty()) spec.output_dir = out_dir;
  if (threads > 0) spec.pso.threads = threads;
  auto outcome = modeswarm::run_experiment(spec);
  std::cout << "wrote " << outcome.trace_files.size() << " trace file(s) and "
            << outcome.aggregate_file << '\n';
  for (std::size_t i = 0; i < outcome.final_values.size(); ++i)
    std::cout << "  seed " << modeswarm::resolve(spec).seeds[i]
              << " final objective " << outcome.final_values[i] << '\n';
  return 0;
}

int jl_table_command(std::int64_t n, std::vector<double> epsilons, const std::string& out) {
  if (epsilons.empty()) epsilons = {0.1, 0.3, 0.5, 0.7, 1.0};
  auto rows = modeswarm::jl_table(n, epsilons, std::cout);
  if (!out.empty()) {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot write " + out);
    file << "# modeswarm jl-table, n = " << n << '\n';
    modeswarm::write_jl_csv(file, rows);
    std::cout << "wrote " << out << '\n';
  }
  return 0;
}

int perturb_command(std::vector<double> p_values, std::vector<int> dims, int trials,
                    std::uint64_t seed, const std::string& out) {
  modeswarm::StudyOptions options;
  if (!p_values.empty()) options.p_values = p_values;
  options.dims = dims;
  options.trials = trials;
  options.seed = seed;
  std::ofstream file;
  std::ostream* csv = &std::cout;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw std::runtime_error("cannot write " + out);
    csv = &file;
  }
  modeswarm::perturb_study(options, *csv);
  if (!out.empty()) std::cout << "wrote " << out << '\n';
  return 0;
}

int modal_command(int elements, double mass_ratio, int modes, const std::string& out_dir) {
  modeswarm::WingConfig config = modeswarm::b737_wing_config(elements);
  config.mass_ratio = mass_ratio;
  auto files = modeswarm::modal_report(config, out_dir.empty() ? "out" : out_dir, modes);
  std::cout << "wrote " << files.frequency_table << ", " << files.symmetric_shapes << ", "
            << files.antisymmetric_shapes << '\n';
  return 0;
}

int eig_command(const std::string& pair_file, int k) {
  std::ifstream in(pair_file);
  if (!in) throw modeswarm::SpecError("cannot open matrix-pair file '" + pair_file + "'");
  modeswarm::SymMatrix mass = modeswarm::load_matrix(in);
  modeswarm::SymMatrix stiffness = modeswarm::load_matrix(in);
  const Eigen::Index count = k > 0 ? k : mass.order();
  Eigen::VectorXd lambda = modeswarm::generalized_eigenvalues(mass, stiffness, count);
  std::cout.precision(12);
  for (Eigen::Index i = 0; i < lambda.size(); ++i) std::cout << lambda(i) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inverse eigenvalue problems via particle swarms in random subspaces"};
  app.require_subcommand(1);

  std::string spec_path, out, pair_file;
  std::optional<std::uint64_t> seed;
  int threads = 0, trials = 200, elements = 30, modes = 4, k = 0;
  double mass_ratio = 1.35;
  std::int64_t n = 110;
  std::vector<double> epsilons, p_values;
  std::vector<int> dims;

  auto* run = app.add_subcommand("run", "run an optimisation experiment");
  run->add_option("--spec", spec_path, "experiment file (defaults to the toy preset)");
  run->add_option("--seed", seed, "run a single seed instead of the spec's list");
  run->add_option("--out", out, "output directory override");
  run->add_option("--threads", threads, "parallel objective evaluations");

  auto* jl = app.add_subcommand("jl-table", "print the JL epsilon -> dimension table");
  jl->add_option("--n", n, "point count")->required();
  jl->add_option("--eps", epsilons, "distortion values in (0, 1]");
  jl->add_option("--out", out, "also write a CSV here");

  auto* perturb = app.add_subcommand("perturb-study", "first-order step-size study");
  perturb->add_option("--p", p_values, "step scales (default 0.01 0.1 1 10)");
  perturb->add_option("--dims", dims, "matrix dimensions (default 1..20)");
  perturb->add_option("--trials", trials, "trials per cell");
  std::uint64_t study_seed = 0;
  perturb->add_option("--seed", study_seed, "master seed");
  perturb->add_option("--out", out, "CSV path (default stdout)");

  auto* modal = app.add_subcommand("modal-report", "wing frequency table and mode shapes");
  modal->add_option("--elements", elements, "elements per half-span");
  modal->add_option("--mass-ratio", mass_ratio, "fuselage-to-wing mass ratio R");
  modal->add_option("--modes", modes, "mode shapes to emit");
  modal->add_option("--out", out, "output directory");

  auto* eig = app.add_subcommand("eig", "solve a matrix-pair file (M block then K block)");
  eig->add_option("file", pair_file, "plain-text pair file")->required();
  eig->add_option("-k", k, "how many eigenvalues (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (run->parsed()) return run_command(spec_path, seed, out, threads);
    if (jl->parsed()) return jl_table_command(n, epsilons, out);
    if (perturb->parsed()) return perturb_command(p_values, dims, trials, study_seed, out);
    if (modal->parsed()) return modal_command(elements, mass_ratio, modes, out);
    if (eig->parsed()) return eig_command(pair_file, k);
  } catch (const modeswarm::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const modeswarm::NotPositiveDefinite& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
