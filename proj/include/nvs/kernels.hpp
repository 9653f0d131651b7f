#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nvs/scalar_group.hpp"

namespace nvs {

struct ActionTable;
class Space;

// Exhaustive scan kernels. Each comes in a serial reference version and an
// OpenMP version; both produce identical results (the parallel versions
// reduce to the lexicographically first witness). The serial versions are
// the ones the tests trust; the parallel versions are what the verifiers
// call. bench/ compares the two.
namespace kernels {

struct ScanResult {
  bool ok = true;
  std::uint64_t count = 0;
  std::array<std::uint32_t, 3> witness{};  // meaning depends on the scan
};

// Associativity of the scalar multiplication over all triples.
ScanResult group_associativity_serial(const ScalarGroup& g);
ScanResult group_associativity_parallel(const ScalarGroup& g);

// alpha.(v+w) = alpha.v + alpha.w over all (alpha, v, w). Witness (alpha,v,w).
ScanResult action_endomorphism_serial(const ActionTable& a);
ScanResult action_endomorphism_parallel(const ActionTable& a);

// alpha.v = beta.v implies v = 0 or alpha = beta. Witness (alpha,beta,v).
ScanResult action_freeness_serial(const ActionTable& a);
ScanResult action_freeness_parallel(const ActionTable& a);

// alpha.(beta.v) = (alpha.beta).v over all triples. Witness (alpha,beta,v).
ScanResult action_composition_serial(const ActionTable& a);
ScanResult action_composition_parallel(const ActionTable& a);

// Quasi-kernel membership of every member of the space, by the definitional
// quantifier scan (for-all alpha,beta exists gamma). Mask is indexed by the
// member list.
std::vector<std::uint8_t> quasi_kernel_mask_serial(const Space& sp);
std::vector<std::uint8_t> quasi_kernel_mask_parallel(const Space& sp);

}  // namespace kernels
}  // namespace nvs
