#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "nvs/report.hpp"
#include "nvs/space.hpp"

namespace nvs {

struct Subspace {
  SpacePtr parent;
  VectorSet members;
};

/// Closed under addition and the action (and therefore contains 0).
bool is_subspace(const Space& sp, const VectorSet& S);

struct SubspaceAsSpace {
  SpacePtr space;
  VerificationReport report;  // quasi-kernel of the restriction generates it
};

/// Wraps a subspace with the restricted action and certifies it as a
/// near-vector space in its own right. A failed certificate is report data.
SubspaceAsSpace subspace_as_space(SpacePtr parent, const VectorSet& members);

/// Total map between spaces over the same scalar group, stored by domain
/// member index.
struct LinearMap {
  SpacePtr domain;
  SpacePtr codomain;
  std::vector<Code> table;

  Code apply(Code v) const { return table[domain->local_index(v)]; }
};

LinearMap make_map(SpacePtr domain, SpacePtr codomain,
                   const std::function<Code(Code)>& f);

/// Completes a map given on generating vectors by closing under addition and
/// the action; inconsistent or incomplete images are rejected.
LinearMap map_from_images(SpacePtr domain, SpacePtr codomain,
                          const std::vector<std::pair<Code, Code>>& images);

VerificationReport verify_linear(const LinearMap& f);

Subspace kernel(const LinearMap& f);
Subspace image(const LinearMap& f);

/// Every quasi-kernel vector must land in the codomain quasi-kernel.
VerificationReport qk_preimage_check(const LinearMap& f);

struct QuotientSpace {
  SpacePtr parent;
  VectorSet subspace;
  SpacePtr space;          // carrier = canonical representatives
  LinearMap projection;    // parent -> quotient
  VerificationReport report;
};

/// Builds V/W on lexicographically minimal coset representatives and checks
/// well-definedness, freeness of the induced action, and that the projected
/// quasi-kernel generates.
QuotientSpace quotient(SpacePtr sp, const VectorSet& W);

struct FirstIsomorphism {
  LinearMap iso;  // domain/Ker(f) -> Im(f)
  VerificationReport report;
};

FirstIsomorphism first_isomorphism(const LinearMap& f);

VerificationReport subspace_kernel_correspondence(SpacePtr sp, const VectorSet& S);

}  // namespace nvs
