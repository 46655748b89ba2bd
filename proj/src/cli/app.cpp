#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "induction/cli/commands.hpp"
#include "induction/error.hpp"

namespace induction::cli {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open input file '" + path + "'");
  return in;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::Io, "failed writing to standard output");
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) fail(ErrorKind::Io, "cannot open output file '" + out_path + "'");
  file << text;
  file.close();
  if (!file) fail(ErrorKind::Io, "failed writing output file '" + out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plausible-reasoning calculator: conjugate updating, Bayes factors, confidence acceptance, maxent"};
  app.require_subcommand(1);

  std::string out_path;
  std::vector<std::int64_t> ns = kDefaultGrid;
  double w = 0.5;
  double level = 0.95;
  double tol = 1e-10;
  bool bits = false;
  std::string input;
  double theta0 = 0.7;
  std::int64_t coverage_n = 50;
  std::int64_t reps = 100000;
  std::uint64_t seed = 42;
  std::int64_t summary_n = 10000;

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", out_path, "Output path (default: standard output)"); };
  auto add_grid = [&](CLI::App* cmd) {
    cmd->add_option("--n", ns, "Comma-separated trial counts")->delimiter(',');
  };

  auto* sunrise = app.add_subcommand("sunrise-table", "Predictive probability after n straight successes");
  add_grid(sunrise);
  add_out(sunrise);

  auto* jeffreys = app.add_subcommand("jeffreys-table", "Posterior mass at theta = 1 under a boundary-mass prior");
  add_grid(jeffreys);
  jeffreys->add_option("--w", w, "Prior mass at theta = 1, strictly inside (0, 1)");
  add_out(jeffreys);

  auto* bf = app.add_subcommand("bf-table", "Bayes factor of the universal law after n straight successes");
  add_grid(bf);
  add_out(bf);

  auto* failure = app.add_subcommand("failure-table", "Posterior and predictive after n - 1 successes and one failure");
  add_grid(failure);
  add_out(failure);

  auto* ci = app.add_subcommand("ci-table", "Equal-tailed credible interval and normal approximation, all-success case");
  add_grid(ci);
  ci->add_option("--level", level, "Credible level in (0, 1)");
  add_out(ci);

  auto* stream = app.add_subcommand("stream", "Sequential updating over a file of 0/1 observations");
  stream->add_option("input", input, "Observation file, one 0 or 1 per line")->required();
  stream->add_option("--w", w, "Prior mass at theta = 1, strictly inside (0, 1)");
  add_out(stream);

  auto* maxent = app.add_subcommand("maxent", "Maximum-entropy distribution from a JSON problem file");
  maxent->add_option("input", input, "Problem file")->required();
  maxent->add_option("--tol", tol, "Constraint residual tolerance");
  maxent->add_flag("--bits", bits, "Report entropy in bits instead of nats");
  add_out(maxent);

  auto* coverage = app.add_subcommand("coverage", "Monte Carlo coverage of equal-tailed Beta credible intervals");
  coverage->add_option("--theta0", theta0, "True success probability in (0, 1)");
  coverage->add_option("--n", coverage_n, "Trials per replicate");
  coverage->add_option("--level", level, "Credible level in (0, 1)");
  coverage->add_option("--reps", reps, "Number of replicates");
  coverage->add_option("--seed", seed, "Generator seed");
  add_out(coverage);

  auto* summary = app.add_subcommand("summary", "Closed-form summary row for n observations");
  summary->add_option("--n", summary_n, "Trial count (>= 1)");
  add_out(summary);

  auto* rules = app.add_subcommand("rules-check", "Product, sum and Bayes rule residuals of a JSON joint table");
  rules->add_option("input", input, "Joint table file")->required();
  add_out(rules);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  if (!argv.empty()) argv.pop_back();  // program name
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    std::ostringstream buf;
    if (sunrise->parsed()) {
      write_sunrise_table(ns, buf);
    } else if (jeffreys->parsed()) {
      write_jeffreys_table(ns, w, buf);
    } else if (bf->parsed()) {
      write_bf_table(ns, buf);
    } else if (failure->parsed()) {
      write_failure_table(ns, buf);
    } else if (ci->parsed()) {
      write_ci_table(ns, level, buf);
    } else if (stream->parsed()) {
      BoundaryMixture check(w);  // reject a bad w before touching the file
      (void)check;
      auto in = open_input(input);
      const auto observations = parse_observations(in);
      write_stream(run_stream(observations, w), buf);
    } else if (maxent->parsed()) {
      auto in = open_input(input);
      write_maxent_solution(solve_maxent(parse_maxent_problem(in), tol), bits, buf);
    } else if (coverage->parsed()) {
      write_coverage(coverage_simulation(theta0, coverage_n, level, reps, seed), buf);
    } else if (summary->parsed()) {
      const std::vector<std::int64_t> one{summary_n};
      write_summary(one, buf);
    } else if (rules->parsed()) {
      auto in = open_input(input);
      write_rule_residuals(rule_residuals(parse_joint(in)), buf);
    }
    emit(buf.str(), out_path, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}

}  // namespace induction::cli
