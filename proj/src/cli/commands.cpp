#include "induction/cli/commands.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "induction/error.hpp"
#include "induction/format.hpp"
#include "induction/inference.hpp"

namespace induction::cli {
namespace {

using nlohmann::json;

std::string fmt(double x) { return format_double(x); }

void require_rows(std::span<const std::int64_t> ns) {
  if (ns.empty()) fail(ErrorKind::Domain, "at least one n value is required");
  for (std::int64_t n : ns) {
    if (n < 0) fail(ErrorKind::Domain, "n values must be >= 0");
  }
}

FiniteDistribution law_split(double mass) { return FiniteDistribution({mass, 1.0 - mass}, {"law", "not_law"}); }

std::vector<double> read_reals(const json& node, const char* field) {
  if (!node.is_array()) fail(ErrorKind::Parse, std::string("'") + field + "' must be an array of numbers");
  std::vector<double> xs;
  xs.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) fail(ErrorKind::Parse, std::string("'") + field + "' must contain only numbers");
    xs.push_back(v.get<double>());
  }
  return xs;
}

std::vector<std::string> read_labels(const json& doc, const char* field) {
  std::vector<std::string> labels;
  if (!doc.contains(field)) return labels;
  const auto& node = doc.at(field);
  if (!node.is_array()) fail(ErrorKind::Parse, std::string("'") + field + "' must be an array of strings");
  for (const auto& v : node) {
    if (!v.is_string()) fail(ErrorKind::Parse, std::string("'") + field + "' must contain only strings");
    labels.push_back(v.get<std::string>());
  }
  return labels;
}

json parse_document(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

void write_sunrise_table(std::span<const std::int64_t> ns, std::ostream& out) {
  require_rows(ns);
  out << "n,predictive\n";
  for (std::int64_t n : ns) {
    const BetaParams post = posterior(kUniformBeta, EvidenceSummary::all_successes(n));
    out << n << ',' << fmt(predictive(post)) << '\n';
  }
}

void write_jeffreys_table(std::span<const std::int64_t> ns, double w, std::ostream& out) {
  require_rows(ns);
  const BoundaryMixture prior(w);
  out << "n,w,posterior_mass\n";
  for (std::int64_t n : ns) {
    const auto state = mixture_posterior(prior, EvidenceSummary::all_successes(n));
    out << n << ',' << fmt(w) << ',' << fmt(universal_law_probability(state)) << '\n';
  }
}

void write_bf_table(std::span<const std::int64_t> ns, std::ostream& out) {
  require_rows(ns);
  out << "n,bf,log10_bf\n";
  for (std::int64_t n : ns) {
    const ExtendedNonneg bf = bayes_factor_law(EvidenceSummary::all_successes(n));
    out << n << ',' << to_string(bf) << ',' << fmt(bf.log10()) << '\n';
  }
}

void write_failure_table(std::span<const std::int64_t> ns, std::ostream& out) {
  require_rows(ns);
  for (std::int64_t n : ns) {
    if (n < 1) fail(ErrorKind::Domain, "failure-table: n must be >= 1 (one failure needs one trial)");
  }
  out << "n,predictive,alpha,beta\n";
  for (std::int64_t n : ns) {
    const BetaParams post = posterior(kUniformBeta, EvidenceSummary::make(n, n - 1));
    out << n << ',' << fmt(predictive(post)) << ',' << fmt(post.alpha) << ',' << fmt(post.beta) << '\n';
  }
}

void write_ci_table(std::span<const std::int64_t> ns, double level, std::ostream& out) {
  require_rows(ns);
  if (!(level > 0.0 && level < 1.0)) fail(ErrorKind::Domain, "ci-table: level must lie in (0, 1)");
  out << "n,level,mean,lower,upper,approx_mu,approx_sigma2\n";
  for (std::int64_t n : ns) {
    const EvidenceSummary data = EvidenceSummary::all_successes(n);
    const BetaParams post = posterior(kUniformBeta, data);
    const RealInterval ci = credible_interval(post, level);
    const NormalApprox approx = normal_approx(data);
    out << n << ',' << fmt(level) << ',' << fmt(predictive(post)) << ',' << fmt(ci.lo) << ',' << fmt(ci.hi) << ','
        << fmt(approx.mu) << ',' << fmt(approx.sigma2) << '\n';
  }
}

void write_summary(std::span<const std::int64_t> ns, std::ostream& out) {
  require_rows(ns);
  for (std::int64_t n : ns) {
    if (n < 1) fail(ErrorKind::Domain, "summary: n must be >= 1");
  }
  const BoundaryMixture jeffreys(0.5);
  out << "laplace_predictive,laplace_law_prob,jeffreys_mass,bf_all_success,failure_predictive\n";
  for (std::int64_t n : ns) {
    const EvidenceSummary all = EvidenceSummary::all_successes(n);
    const BetaParams laplace = posterior(kUniformBeta, all);
    const double law_prob = universal_law_probability(PureBeta{laplace});
    const double mass = universal_law_probability(mixture_posterior(jeffreys, all));
    const ExtendedNonneg bf = bayes_factor_law(all);
    const BetaParams after_failure = posterior(kUniformBeta, EvidenceSummary::make(n, n - 1));
    out << fmt(predictive(laplace)) << ',' << fmt(law_prob) << ',' << fmt(mass) << ',' << to_string(bf) << ','
        << fmt(predictive(after_failure)) << '\n';
  }
}

void write_coverage(const CoverageResult& result, std::ostream& out) {
  out << "nominal,empirical,mc_stderr\n"
      << fmt(result.nominal) << ',' << fmt(result.empirical) << ',' << fmt(result.mc_stderr) << '\n';
}

std::vector<int> parse_observations(std::istream& in) {
  std::vector<int> obs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line == "0" || line == "1") {
      obs.push_back(line[0] - '0');
    } else {
      fail(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected '0' or '1', got '" + line + "'");
    }
  }
  if (obs.empty()) fail(ErrorKind::Parse, "observation stream is empty");
  return obs;
}

std::vector<StreamRecord> run_stream(std::span<const int> observations, double w) {
  const BoundaryMixture prior(w);
  std::vector<StreamRecord> records;
  records.reserve(observations.size());

  PosteriorState laplace = PureBeta{kUniformBeta};
  double mass_before = w;
  std::int64_t n = 0;
  std::int64_t t = 0;
  for (int obs : observations) {
    if (obs != 0 && obs != 1) fail(ErrorKind::Domain, "stream: observations must be 0 or 1");
    const bool success = obs == 1;
    ++n;
    t += success ? 1 : 0;
    laplace = observe(laplace, success);
    const EvidenceSummary data{n, t};
    const double mass_after = universal_law_probability(mixture_posterior(prior, data));

    const FiniteDistribution before = law_split(mass_before);
    const FiniteDistribution after = law_split(mass_after);

    StreamRecord r;
    r.step = n;
    r.observation = obs;
    r.n = n;
    r.t = t;
    r.predictive = predictive(std::get<PureBeta>(laplace).params);
    r.log10_bf = bayes_factor_law(data).log10();
    r.confidence_law = confidence_in_law(data);
    r.mixture_mass = mass_after;
    r.info_gain_step = info_gain(before, after);
    r.entropy_diff_step = entropy(after) - entropy(before);
    records.push_back(r);
    mass_before = mass_after;
  }
  return records;
}

void write_stream(std::span<const StreamRecord> records, std::ostream& out) {
  out << "step,observation,n,t,predictive,log10_bf,confidence_law,mixture_mass,info_gain_step,entropy_diff_step\n";
  for (const auto& r : records) {
    out << r.step << ',' << r.observation << ',' << r.n << ',' << r.t << ',' << fmt(r.predictive) << ','
        << fmt(r.log10_bf) << ',' << r.confidence_law << ',' << fmt(r.mixture_mass) << ',' << fmt(r.info_gain_step)
        << ',' << fmt(r.entropy_diff_step) << '\n';
  }
}

MaxEntProblem parse_maxent_problem(std::istream& in) {
  const json doc = parse_document(in);
  if (!doc.is_object() || !doc.contains("outcomes")) fail(ErrorKind::Parse, "maxent problem needs an 'outcomes' array");
  MaxEntProblem problem;
  problem.outcomes = read_reals(doc.at("outcomes"), "outcomes");
  if (doc.contains("constraints")) {
    const auto& cs = doc.at("constraints");
    if (!cs.is_array()) fail(ErrorKind::Parse, "'constraints' must be an array");
    for (const auto& c : cs) {
      if (!c.is_object() || !c.contains("target") || !c.at("target").is_number()) {
        fail(ErrorKind::Parse, "each constraint needs a numeric 'target'");
      }
      MomentConstraint mc;
      mc.target = c.at("target").get<double>();
      mc.f_values = c.contains("f_values") ? read_reals(c.at("f_values"), "f_values") : problem.outcomes;
      problem.constraints.push_back(std::move(mc));
    }
  }
  try {
    problem.validate();
  } catch (const Error& e) {
    fail(ErrorKind::Parse, e.what());
  }
  return problem;
}

void write_maxent_solution(const MaxEntSolution& solution, bool bits, std::ostream& out) {
  json doc;
  doc["lambdas"] = solution.lambdas;
  doc["log_z"] = solution.log_z;
  doc["probabilities"] = std::vector<double>(solution.probs.probs().begin(), solution.probs.probs().end());
  doc["entropy"] = bits ? solution.entropy / std::log(2.0) : solution.entropy;
  doc["entropy_unit"] = bits ? "bits" : "nats";
  doc["iterations"] = solution.iterations;
  doc["residual"] = solution.residual;
  out << doc.dump(2) << '\n';
}

FiniteJoint parse_joint(std::istream& in) {
  const json doc = parse_document(in);
  if (!doc.is_object() || !doc.contains("table") || !doc.at("table").is_array()) {
    fail(ErrorKind::Parse, "joint file needs a 'table' array of rows");
  }
  std::vector<std::vector<double>> table;
  for (const auto& row : doc.at("table")) table.push_back(read_reals(row, "table"));
  try {
    return FiniteJoint(std::move(table), read_labels(doc, "row_labels"), read_labels(doc, "col_labels"));
  } catch (const Error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

void write_rule_residuals(const RuleResiduals& residuals, std::ostream& out) {
  out << "product_residual,sum_residual,bayes_residual\n"
      << fmt(residuals.product_residual) << ',' << fmt(residuals.sum_residual) << ',' << fmt(residuals.bayes_residual)
      << '\n';
}

}  // namespace induction::cli
