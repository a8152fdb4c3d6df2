#pragma once

#include <stdexcept>
#include <string>

namespace resurgentia {

// Stable machine-readable tags; the CLI echoes them in its JSON error records.
enum class ErrorKind {
  not_a_unit,
  wrong_constant_term,
  defect,               // two independent routes disagree
  g_squared,            // g-generator formed quadratically
  admissibility,        // D_{<=0} exponential not nilpotent on the input
  cap_inconsistency,
  branch_cut,
  quadrature_failure,
  outside_half_plane,
  domain_violation,
  domain_empty,
  insufficient_data,
  parse,
};

const char* to_string(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace resurgentia
