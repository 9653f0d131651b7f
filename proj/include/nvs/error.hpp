#pragma once

#include <stdexcept>
#include <string>

namespace nvs {

enum class Errc {
  not_prime,
  reducible_modulus,
  even_characteristic_dickson,
  axiom_failure,
  bad_exponent,
  zero_inverse,
  not_quasi_kernel,
  zero_base,
  not_generated,
  zero_vector,
  in_span,
  not_independent,
  not_generating,
  not_in_quasi_kernel,
  span_violation,
  not_near_vector_space,
  not_subspace,
  not_in_span,
  degenerate_input,
  group_mismatch,
  inconsistent_map,
  syntax_error,
  semantic_error,
};

const char* errc_name(Errc c);

/// Typed failure carrying one of the error codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace nvs
