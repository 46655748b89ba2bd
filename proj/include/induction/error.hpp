#pragma once

#include <stdexcept>
#include <string>

namespace induction {

enum class ErrorKind {
  Domain,                    // argument outside its mathematical domain
  CromwellViolation,         // prior mass of exactly 0 or 1 on an empirical hypothesis
  ZeroProbabilityCondition,  // conditioning on an event of probability 0
  TotalEvidenceZero,         // evidence impossible under every hypothesis
  IndeterminateProduct,      // 0 * infinity
  VacuousEvidence,           // confidence construction with n = 0
  ConvergenceFailure,        // numeric kernel missed its tolerance
  Infeasible,                // maxent target outside the achievable hull
  NonConvergence,            // maxent solver hit its iteration cap
  Parse,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Process exit status used by the command-line tool for each error kind.
int exit_code(ErrorKind kind) noexcept;

}  // namespace induction
