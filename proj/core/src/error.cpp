#include "sumfree/error.hpp"

namespace sumfree {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::interval_out_of_bounds: return "interval-out-of-bounds";
    case ErrorCode::invalid_interval: return "invalid-interval";
    case ErrorCode::invalid_modulus: return "invalid-modulus";
    case ErrorCode::domain: return "domain";
    case ErrorCode::invalid_fold: return "invalid-fold";
    case ErrorCode::oracle_too_large: return "oracle-too-large";
    case ErrorCode::zero_in_set: return "zero-in-set";
    case ErrorCode::parity: return "parity";
    case ErrorCode::out_of_range: return "out-of-range";
    case ErrorCode::key_lemma_range: return "key-lemma-range";
    case ErrorCode::invalid_composition: return "invalid-composition";
    case ErrorCode::symmetry_required: return "symmetry-required";
    case ErrorCode::invalid_cycle_length: return "invalid-cycle-length";
    case ErrorCode::certificate_required: return "certificate-required";
    case ErrorCode::usage: return "usage";
    case ErrorCode::io: return "io";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

}  // namespace sumfree
