#include "nvs/error.hpp"

namespace nvs {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_prime: return "NotPrime";
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::even_characteristic_dickson: return "EvenCharacteristicDickson";
    case Errc::axiom_failure: return "AxiomFailure";
    case Errc::bad_exponent: return "BadExponent";
    case Errc::zero_inverse: return "ZeroInverse";
    case Errc::not_quasi_kernel: return "NotQuasiKernel";
    case Errc::zero_base: return "ZeroBase";
    case Errc::not_generated: return "NotGenerated";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::in_span: return "InSpan";
    case Errc::not_independent: return "NotIndependent";
    case Errc::not_generating: return "NotGenerating";
    case Errc::not_in_quasi_kernel: return "NotInQuasiKernel";
    case Errc::span_violation: return "SpanViolation";
    case Errc::not_near_vector_space: return "NotNearVectorSpace";
    case Errc::not_subspace: return "NotSubspace";
    case Errc::not_in_span: return "NotInSpan";
    case Errc::degenerate_input: return "DegenerateInput";
    case Errc::group_mismatch: return "GroupMismatch";
    case Errc::inconsistent_map: return "InconsistentMap";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::semantic_error: return "SemanticError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace nvs
