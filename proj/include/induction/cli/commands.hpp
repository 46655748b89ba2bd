#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "induction/evidence.hpp"
#include "induction/maxent.hpp"
#include "induction/plausibility.hpp"

// Table generators and file formats behind the `induction` command-line tool.
// Every writer is a pure function of its arguments; numbers are rendered as
// shortest round-trip decimals and extended reals as inf / -inf.

namespace induction::cli {

inline const std::vector<std::int64_t> kDefaultGrid{1, 2, 5, 10, 100, 1000, 10000};

void write_sunrise_table(std::span<const std::int64_t> ns, std::ostream& out);
void write_jeffreys_table(std::span<const std::int64_t> ns, double w, std::ostream& out);
void write_bf_table(std::span<const std::int64_t> ns, std::ostream& out);
void write_failure_table(std::span<const std::int64_t> ns, std::ostream& out);
void write_ci_table(std::span<const std::int64_t> ns, double level, std::ostream& out);
void write_summary(std::span<const std::int64_t> ns, std::ostream& out);
void write_coverage(const CoverageResult& result, std::ostream& out);

struct StreamRecord {
  std::int64_t step = 0;
  int observation = 0;
  std::int64_t n = 0;
  std::int64_t t = 0;
  double predictive = 0.0;
  double log10_bf = 0.0;
  int confidence_law = 0;
  double mixture_mass = 0.0;
  double info_gain_step = 0.0;
  // Literal H(after) - H(before) of the {law, not law} split; reported next to
  // info_gain_step because the two generally differ.
  double entropy_diff_step = 0.0;
};

/// Reads one `0` or `1` per line. Throws ErrorKind::Parse (with the line number)
/// on any other content or an empty stream.
std::vector<int> parse_observations(std::istream& in);

/// Runs the observations through a uniform-prior Beta posterior and a boundary
/// mixture with mass w at theta = 1, one record per observation.
std::vector<StreamRecord> run_stream(std::span<const int> observations, double w);
void write_stream(std::span<const StreamRecord> records, std::ostream& out);

/// JSON document {"outcomes": [...], "constraints": [{"f_values": [...], "target": F}]}.
/// A constraint without f_values constrains the mean of the outcome values.
MaxEntProblem parse_maxent_problem(std::istream& in);

/// JSON document with lambdas, log_z, probabilities, entropy, iterations and residual.
void write_maxent_solution(const MaxEntSolution& solution, bool bits, std::ostream& out);

/// JSON document {"table": [[...]], "row_labels": [...], "col_labels": [...]} (labels optional).
FiniteJoint parse_joint(std::istream& in);
void write_rule_residuals(const RuleResiduals& residuals, std::ostream& out);

/// Entry point shared by the executable and the tests. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace induction::cli
