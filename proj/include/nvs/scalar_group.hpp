#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nvs/report.hpp"

namespace nvs {

/// Element label. Labels are residues for GF(p); for GF(p^k) the base-p
/// digits of a label (low digit first) are the coefficients of the
/// representative polynomial. Dickson groups reuse the GF(q^2) labeling.
using Label = std::uint16_t;

inline constexpr int kMaxOrder = 256;

struct ScalarGroupSpec {
  enum class Kind { prime, extension, dickson };
  Kind kind = Kind::prime;
  int p = 0;                 // prime for prime/extension; q for dickson
  int k = 1;                 // extension degree
  std::vector<int> modulus;  // monic modulus, low degree first, k+1 coefficients

  static ScalarGroupSpec prime(int p);
  static ScalarGroupSpec extension(int p, int k, std::vector<int> modulus = {});
  static ScalarGroupSpec dickson(int q);
  int order() const;
};

/// A finite scalar group (F,*,1,0,-1): table-backed multiplication with group
/// structure on F\{0}, absorbing 0, and {1,neg_one} the solution set of
/// x^2 = 1. Also carries the additive group of the underlying field, which is
/// the per-coordinate addition of every vector carrier built on top of it.
struct ScalarGroup {
  ScalarGroupSpec spec;
  int order = 0;
  int char_p = 0;   // characteristic of the underlying field
  int digits = 1;   // base-char_p digits per label
  Label neg_one = 0;
  std::vector<Label> mul_table;    // order*order scalar multiplication
  std::vector<Label> field_table;  // order*order underlying field multiplication
  std::vector<Label> inv_table;    // order, group inverse (entry 0 unused)
  std::vector<Label> add_table;    // order*order carrier addition
  std::vector<Label> neg_table;    // order, carrier negation
  std::string convention;          // dickson twist convention echo; empty otherwise

  Label mul(Label a, Label b) const { return mul_table[std::size_t(a) * order + b]; }
  Label fmul(Label a, Label b) const { return field_table[std::size_t(a) * order + b]; }
  Label add(Label a, Label b) const { return add_table[std::size_t(a) * order + b]; }
  Label neg(Label a) const { return neg_table[a]; }
  Label inverse(Label a) const;              // throws ZeroInverse on a = 0
  Label power(Label a, unsigned e) const;    // underlying field power
  bool abelian() const;
  std::string describe() const;              // deterministic spec echo
};

using ScalarGroupPtr = std::shared_ptr<const ScalarGroup>;

/// Builds the tables eagerly and validates every axiom before returning.
ScalarGroupPtr build_scalar_group(const ScalarGroupSpec& spec);

/// Exhaustive axiom scan. Failures are data (with witnesses), not errors.
VerificationReport verify_scalar_group(const ScalarGroup& g);

}  // namespace nvs
