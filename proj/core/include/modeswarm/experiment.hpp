#ifndef MODESWARM_EXPERIMENT_HPP
#define MODESWARM_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "modeswarm/aiep.hpp"
#include "modeswarm/embedding.hpp"
#include "modeswarm/femodel.hpp"
#include "modeswarm/perturbation.hpp"
#include "modeswarm/pso.hpp"

namespace modeswarm {

/// Experiment-file or command-line validation problem; carries the line
/// and field the message refers to. Maps to CLI exit code 2.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

enum class ProblemKind { toy, fe, custom };

/// One declarative optimisation run: which problem, the target spectrum,
/// the (optional) random embedding, the swarm settings and the seeds.
/// Everything an output artifact needs to be reproduced.
struct ExperimentSpec {
  ProblemKind problem = ProblemKind::toy;
  int fe_elements = 100;
  double fe_mass_ratio = 1.35;
  std::string mass_file;       // custom problems
  std::string stiffness_file;  // custom problems
  std::vector<double> targets;              // empty -> preset default
  std::optional<TargetKind> compare;        // empty -> preset default
  double penalty = 1e12;
  std::optional<Eigen::Index> embedding_d;  // absent -> full-dimensional run
  double box_halfwidth = 10.0;
  GaussianScale gaussian_scale = GaussianScale::stddev_inv_sqrt_d;
  PsoConfig pso = unset_pso();              // 0-valued fields mean "preset decides"
  std::optional<bool> per_dimension_r;      // empty -> true for declarative runs
  std::vector<std::uint64_t> seeds;         // empty -> 1..10
  std::string output_dir = "out";

  static PsoConfig unset_pso() {
    PsoConfig c;
    c.particles = 0;
    c.max_iters = 0;
    c.init_span = 0.0;
    return c;
  }
};

/// Parses the flat key-value experiment file ([section] headers, key = value
/// lines, '#' comments). Unknown keys and malformed values raise SpecError
/// with the offending line number.
ExperimentSpec parse_experiment_file(std::istream& in);
ExperimentSpec parse_experiment_file(const std::string& path);

/// Fills preset defaults (targets, compare mode, swarm sizes, seeds) for
/// whatever the spec leaves unset and validates the result.
ExperimentSpec resolve(ExperimentSpec spec);

/// Canonical "key = value" dump of a resolved spec; embedded as a header
/// comment in every artifact so any output is reproducible from itself.
std::vector<std::string> dump_resolved(const ExperimentSpec& spec);

/// Builds the AIEP instance the spec describes.
AiepProblem build_problem(const ExperimentSpec& spec);

struct RunOutcome {
  std::vector<std::string> trace_files;  // one per seed
  std::string aggregate_file;
  std::vector<double> final_values;      // per seed, same order as spec.seeds
};

/// Runs the experiment: per seed, build the (optional) embedding and
/// minimise; write one trace CSV per seed plus an aggregate CSV with the
/// per-iteration mean/median/min of the global best across seeds.
RunOutcome run_experiment(const ExperimentSpec& spec);

/// epsilon -> k table for the JL bound; returns the bounds and writes an
/// aligned text table to `text_out`.
std::vector<JlBound> jl_table(std::int64_t n, const std::vector<double>& epsilons,
                              std::ostream& text_out);
void write_jl_csv(std::ostream& out, const std::vector<JlBound>& rows);

/// Wraps perturbation::step_size_study and writes its CSV artifact.
std::vector<PerturbationReport> perturb_study(const StudyOptions& options, std::ostream& csv);

/// Writes the symmetric-mode non-dimensional frequency table (R = 0 and
/// R = config.R) and the first `modes` mode shapes per symmetry.
struct ModalReportFiles {
  std::string frequency_table;
  std::string symmetric_shapes;
  std::string antisymmetric_shapes;
};
ModalReportFiles modal_report(const WingConfig& config, const std::string& output_dir,
                              Eigen::Index modes = 4);

}  // namespace modeswarm

#endif  // MODESWARM_EXPERIMENT_HPP
