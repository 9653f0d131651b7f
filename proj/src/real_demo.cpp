#include "nvs/real_demo.hpp"

#include <cmath>
#include <sstream>

#include "nvs/error.hpp"

namespace nvs {
namespace {

RVec3 vsub(const RVec3& a, const RVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
RVec3 vadd(const RVec3& a, const RVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }

double max_abs(const RVec3& v) {
  return std::max({std::fabs(v.x), std::fabs(v.y), std::fabs(v.z)});
}

std::string residual_str(double r) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << r;
  return os.str();
}

void add_residual(VerificationReport& rep, const std::string& key, double residual,
                  double tol) {
  rep.add(key, residual <= tol, 1, "residual=" + residual_str(residual));
}

}  // namespace

RVec3 star(double alpha, const RVec3& v) {
  if (!std::isfinite(alpha) || !std::isfinite(v.x) || !std::isfinite(v.y) ||
      !std::isfinite(v.z))
    fail(Errc::degenerate_input, "non-finite input to star");
  return {alpha * v.x, alpha * v.y, alpha * alpha * alpha * v.z};
}

VerificationReport check_remark_identities(double tol) {
  if (!(tol > 0)) fail(Errc::degenerate_input, "tolerance must be positive");
  VerificationReport rep;
  rep.name = "real-demo identities";

  const double c1 = std::cbrt(4.0) / std::cbrt(3.0);
  const double c2 = 1.0 / std::cbrt(6.0);

  // (0,0,1) as a three-term star combination of (1,0,1).
  {
    RVec3 v{1, 0, 1};
    RVec3 got = vsub(vsub(star(c1, v), star(c2, v)), star(c2, v));
    add_residual(rep, "combination-101", max_abs(vsub(got, RVec3{0, 0, 1})), tol);
  }
  // The analogous combination of (0,1,1).
  {
    RVec3 v{0, 1, 1};
    RVec3 got = vsub(vsub(star(c1, v), star(c2, v)), star(c2, v));
    add_residual(rep, "combination-011", max_abs(vsub(got, RVec3{0, 0, 1})), tol);
  }
  // Both spans therefore contain (0,0,1): their intersection is nontrivial.
  {
    RVec3 a{1, 0, 1}, b{0, 1, 1};
    RVec3 in_a = vsub(vsub(star(c1, a), star(c2, a)), star(c2, a));
    RVec3 in_b = vsub(vsub(star(c1, b), star(c2, b)), star(c2, b));
    double r = std::max(max_abs(vsub(in_a, RVec3{0, 0, 1})),
                        max_abs(vsub(in_b, RVec3{0, 0, 1})));
    add_residual(rep, "intersection-witness", r, tol);
  }
  // The linear coefficients of the combination cancel exactly.
  add_residual(rep, "coefficient-cancellation", std::fabs(c1 - 2.0 * c2), tol);
  // The iterated sum of the combination coefficients on the z-axis is 1.
  add_residual(rep, "cube-sum-is-one",
               std::fabs(std::cbrt(4.0 / 3.0 - 1.0 / 6.0 - 1.0 / 6.0) - 1.0), tol);
  // The second combination: coefficients with ordinary sum 1 that send
  // (0,1,1) to (0,1,0).
  {
    const double r2 = std::cbrt(2.0), r4 = std::cbrt(4.0);
    const double a = -1.0 / 3.0 - 2.0 * r2 / 3.0 - r4 / 3.0;
    const double b = 2.0 / 3.0 + r2 / 3.0 + r4 / 6.0;
    RVec3 v{0, 1, 1};
    RVec3 got = vadd(vadd(star(a, v), star(b, v)), star(b, v));
    add_residual(rep, "combination-010", max_abs(vsub(got, RVec3{0, 1, 0})), tol);
    add_residual(rep, "combination-010-sum-is-one", std::fabs(a + 2.0 * b - 1.0), tol);
  }
  return rep;
}

VerificationReport check_pairwise_nonclassical(double tol) {
  if (!(tol > 0)) fail(Errc::degenerate_input, "tolerance must be positive");
  VerificationReport rep;
  rep.name = "real-demo pairwise independence vs span membership";

  // alpha*(1,0,1) + beta*(0,0,1) = 0 forces alpha = 0 from the first
  // coordinate, then beta^3 = 0 from the third: only the trivial pair.
  {
    bool only_trivial = true;
    for (double alpha : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
      RVec3 c = vadd(star(alpha, RVec3{1, 0, 1}), star(0.0, RVec3{0, 0, 1}));
      if (max_abs(c) <= tol) only_trivial = false;  // nonzero alpha may not vanish
    }
    rep.add("only-trivial-annihilator", only_trivial, 6,
            "alpha forced to 0 by the first coordinate, then beta = 0");
  }
  {
    RVec3 c = vadd(star(0.0, RVec3{1, 0, 1}), star(0.0, RVec3{0, 0, 1}));
    rep.add("trivial-pair-is-exact", max_abs(c) == 0.0, 1);
  }
  // Yet (0,0,1) lies in Span((1,0,1)) through the three-term combination.
  {
    const double c1 = std::cbrt(4.0) / std::cbrt(3.0);
    const double c2 = 1.0 / std::cbrt(6.0);
    RVec3 v{1, 0, 1};
    RVec3 got = vsub(vsub(star(c1, v), star(c2, v)), star(c2, v));
    add_residual(rep, "span-membership-101", max_abs(vsub(got, RVec3{0, 0, 1})), tol);
    RVec3 w{0, 1, 1};
    RVec3 got2 = vsub(vsub(star(c1, w), star(c2, w)), star(c2, w));
    add_residual(rep, "span-membership-011", max_abs(vsub(got2, RVec3{0, 0, 1})), tol);
  }
  return rep;
}

}  // namespace nvs
