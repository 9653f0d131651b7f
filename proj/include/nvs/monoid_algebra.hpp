#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nvs/report.hpp"
#include "nvs/space.hpp"

namespace nvs {

/// Element of the scalar monoid ring in canonical normal form: x_0 is
/// dropped, x_{-a} is folded to -x_a, and every key is the smaller label of
/// the pair {a, -a}. The empty map is the ring zero, {1 -> 1} the ring one.
struct AlgebraElement {
  ScalarGroupPtr group;
  std::map<Label, long long> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const AlgebraElement& o) const { return coeffs == o.coeffs; }
};

AlgebraElement normalize(ScalarGroupPtr g,
                         const std::vector<std::pair<Label, long long>>& terms);
AlgebraElement algebra_zero(ScalarGroupPtr g);
AlgebraElement algebra_one(ScalarGroupPtr g);

AlgebraElement ring_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ring_neg(const AlgebraElement& a);
AlgebraElement ring_mul(const AlgebraElement& a, const AlgebraElement& b);

std::string to_string(const AlgebraElement& a);  // e.g. "1*x[2] - 2*x[1]"

/// Module action: sum over terms of act(alpha, n-fold multiple of v).
/// Negative multiples fold to the negated scalar before acting.
Code module_act(const AlgebraElement& a, const Space& sp, Code v);

/// Orbit of v under the ring action; equals Span(v), which is asserted.
VectorSet orbit(const Space& sp, Code v);

/// All normalized elements within the support/coefficient bound that fix v.
/// Each is checked against the iterated-sum characterization (the flattened
/// scalars +_v-sum to 1), and conversely within the bound.
std::vector<AlgebraElement> stabilizer_qk(const Space& sp, Code v, int bound);

/// True when the line F.v is fixed by the ring action: F.w = F.v for every
/// w in Span(v). Equivalent to quasi-kernel membership.
bool projective_fixed_point(const Space& sp, Code v, Code* witness = nullptr);

// Bounded exhaustive axiom suites shared by the suite runner and tests.
VerificationReport verify_ring_axioms(ScalarGroupPtr g, int support_bound = 2,
                                      long long coeff_bound = 3);
VerificationReport verify_module_axioms(const Space& sp, int support_bound = 2,
                                        long long coeff_bound = 3);
VerificationReport verify_orbit_span(const Space& sp);
VerificationReport verify_projective_quasi_kernel(const Space& sp);

}  // namespace nvs
