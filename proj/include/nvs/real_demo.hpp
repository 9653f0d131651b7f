#pragma once

#include "nvs/report.hpp"

namespace nvs {

struct RVec3 {
  double x = 0, y = 0, z = 0;
};

/// The twisted scalar multiplication on R^3: alpha * (x,y,z) with the third
/// coordinate cubed in the scalar.
RVec3 star(double alpha, const RVec3& v);

/// Evaluates the fixed witness identities that exhibit non-classical span
/// behavior over the reals, componentwise within tol.
VerificationReport check_remark_identities(double tol);

/// (a) the only coefficient pair annihilating {(1,0,1),(0,0,1)} is (0,0),
/// yet (b) (0,0,1) lies in the span of (1,0,1): coefficientwise independence
/// without linear independence.
VerificationReport check_pairwise_nonclassical(double tol);

}  // namespace nvs
