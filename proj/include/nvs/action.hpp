#pragma once

#include <vector>

#include "nvs/carrier.hpp"
#include "nvs/report.hpp"
#include "nvs/scalar_group.hpp"

namespace nvs {

/// Per-coordinate multiplicative twist: either the identity or the power map
/// x -> x^m of the underlying field.
struct Twist {
  enum class Kind { identity, exponent };
  Kind kind = Kind::identity;
  unsigned exponent = 1;

  static Twist identity() { return Twist{}; }
  static Twist power(unsigned m) { return Twist{Kind::exponent, m}; }
};

struct ActionSpec {
  std::vector<Twist> twists;

  static ActionSpec exponents(const std::vector<unsigned>& ms);
};

/// Evaluated action on F^n: alpha . v = (mul(tw(i,alpha), v_i))_i.
struct ActionTable {
  ScalarGroupPtr group;
  int dim = 0;
  std::vector<Label> twist_val;  // dim*order
  std::vector<Label> twist_inv;  // dim*order, inverse permutation per coordinate

  Label tw(int i, Label a) const { return twist_val[std::size_t(i) * group->order + a]; }
  Label tw_inv(int i, Label a) const { return twist_inv[std::size_t(i) * group->order + a]; }

  Code act(Label alpha, Code v) const {
    const Code n = Code(group->order);
    Code r = 0, scale = 1;
    for (int i = dim - 1; i >= 0; --i) {
      r += scale * group->mul(tw(i, alpha), Label(v % n));
      v /= n;
      scale *= n;
    }
    return r;
  }

  Vector act(Label alpha, const Vector& v) const;
};

/// Validates the spec (gcd and parity constraints for field groups), builds
/// the twist tables, and verifies the scalar-action axioms exhaustively.
ActionTable build_action(ScalarGroupPtr g, int n, const ActionSpec& spec);

/// Exhaustive check of the action laws: monoid action, freeness, additivity,
/// -1 as -id, 0 trivial. Failures carry witnesses.
VerificationReport verify_action(const ActionTable& a);

}  // namespace nvs
