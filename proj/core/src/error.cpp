#include "resurgentia/error.hpp"

namespace resurgentia {

const char* to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::not_a_unit: return "not a unit";
    case ErrorKind::wrong_constant_term: return "wrong constant term";
    case ErrorKind::defect: return "route disagreement";
    case ErrorKind::g_squared: return "g-generator squared";
    case ErrorKind::admissibility: return "admissibility violation";
    case ErrorKind::cap_inconsistency: return "cap inconsistency";
    case ErrorKind::branch_cut: return "branch cut";
    case ErrorKind::quadrature_failure: return "quadrature failure";
    case ErrorKind::outside_half_plane: return "outside half-plane";
    case ErrorKind::domain_violation: return "domain violation";
    case ErrorKind::domain_empty: return "domain empty";
    case ErrorKind::insufficient_data: return "insufficient coefficients";
    case ErrorKind::parse: return "parse error";
  }
  return "unknown";
}

}  // namespace resurgentia
