#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumfree {

enum class ErrorCode {
  interval_out_of_bounds,
  invalid_interval,
  invalid_modulus,
  domain,
  invalid_fold,
  oracle_too_large,
  zero_in_set,
  parity,
  out_of_range,
  key_lemma_range,
  invalid_composition,
  symmetry_required,
  invalid_cycle_length,
  certificate_required,
  usage,
  io,
  internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-checkable code so
/// callers (and golden tests) can distinguish error kinds without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sumfree
