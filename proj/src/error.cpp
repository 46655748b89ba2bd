#include "induction/error.hpp"

namespace induction {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::CromwellViolation: return "cromwell violation";
    case ErrorKind::ZeroProbabilityCondition: return "zero-probability condition";
    case ErrorKind::TotalEvidenceZero: return "total evidence zero";
    case ErrorKind::IndeterminateProduct: return "indeterminate product";
    case ErrorKind::VacuousEvidence: return "vacuous evidence";
    case ErrorKind::ConvergenceFailure: return "convergence failure";
    case ErrorKind::Infeasible: return "infeasible constraint";
    case ErrorKind::NonConvergence: return "nonconvergence";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "I/O error";
  }
  return "unknown error";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Io: return 2;
    case ErrorKind::Domain:
    case ErrorKind::CromwellViolation:
    case ErrorKind::ZeroProbabilityCondition:
    case ErrorKind::TotalEvidenceZero:
    case ErrorKind::IndeterminateProduct:
    case ErrorKind::VacuousEvidence: return 3;
    case ErrorKind::ConvergenceFailure: return 4;
    case ErrorKind::Parse: return 5;
    case ErrorKind::Infeasible: return 6;
    case ErrorKind::NonConvergence: return 7;
  }
  return 1;
}

}  // namespace induction
