#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "nvs/action.hpp"
#include "nvs/carrier.hpp"
#include "nvs/report.hpp"
#include "nvs/scalar_group.hpp"

namespace nvs {

/// Canonical finite set of vectors: member codes sorted ascending (numeric
/// order on codes is lexicographic order on coordinate tuples).
struct VectorSet {
  std::vector<Code> codes;

  VectorSet() = default;
  explicit VectorSet(std::vector<Code> c);  // sorts and deduplicates
  static VectorSet of(std::initializer_list<Code> c);

  bool contains(Code v) const;
  std::size_t size() const { return codes.size(); }
  bool empty() const { return codes.empty(); }
  bool operator==(const VectorSet&) const = default;

  VectorSet with(Code v) const;
  VectorSet without(Code v) const;
};

VectorSet set_intersection(const VectorSet& a, const VectorSet& b);
bool is_subset(const VectorSet& a, const VectorSet& b);

/// Addition table alpha +_v beta induced by a quasi-kernel base vector:
/// (alpha +_v beta).v = alpha.v + beta.v. Verified to be an abelian group
/// that distributes on the right over the scalar multiplication.
struct InducedAddition {
  Code base = 0;
  int order = 0;
  std::vector<Label> table;  // order*order

  Label at(Label a, Label b) const { return table[std::size_t(a) * order + b]; }
  /// Left-to-right iterated sum of a scalar list (the base-indexed sigma).
  Label iterated(const std::vector<Label>& xs) const;
  bool operator==(const InducedAddition& o) const { return table == o.table; }
};

struct ThetaStep {
  Code anchor = 0, offender = 0;
  Label alpha = 0, beta = 0;  // first scalar pair distinguishing the two sums
  Label delta = 0;            // alpha +_offender beta
  Label scale = 0;            // (alpha +_anchor beta) -_anchor delta
  std::vector<std::pair<Label, Code>> summands;  // coefficients applied per kept summand
  Code theta = 0;             // value of the rebuilt sum
};

struct ThetaDecomposition {
  Code vector = 0;
  VectorSet parts;
  std::vector<ThetaStep> trace;
};

/// The six equivalent characterizations of linear independence, each
/// evaluated on its own route. They must agree on every input.
struct QlPredicates {
  bool definitional = false;      // vanishing combinations have zero blocks (bounded sums)
  bool span_blocks = false;       // per-element span values summing to zero are zero
  bool direct_sum = false;        // Span(S) is the direct sum of the singleton spans
  bool subset_split = false;      // every T: Span(T) meets Span(S\T) trivially
  bool single_split = false;      // every s: Span(s) meets Span(S\{s}) trivially
  bool additive_independent = false;  // the singleton-span family is additively independent

  bool agree() const;
  std::array<bool, 6> as_array() const;
};

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// A finite near-vector space carrier with its scalar action. Product spaces
/// own the full F^n carrier; restrictions (subspaces) reuse the parent
/// operations on a closed member subset; quotients project parent results
/// onto canonical coset representatives. Immutable after construction;
/// caches are write-once.
class Space : public std::enable_shared_from_this<Space> {
 public:
  static SpacePtr product(ActionTable action);
  static SpacePtr restriction(SpacePtr parent, VectorSet members);
  static SpacePtr quotient_space(SpacePtr parent, VectorSet reps, std::vector<Code> rep_map);

  const ScalarGroup& group() const { return *group_; }
  ScalarGroupPtr group_ptr() const { return group_; }
  int width() const { return width_; }
  const std::vector<Code>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_product() const { return kind_ == Kind::product; }
  SpacePtr parent() const { return parent_; }
  const ActionTable& action_table() const { return action_; }

  bool is_member(Code v) const;
  std::uint32_t local_index(Code v) const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code act(Label alpha, Code v) const;
  Code multiple(long long n, Code v) const;  // n-fold additive multiple

  Vector decode(Code v) const;
  Code encode(const Vector& v) const;
  std::string format(Code v) const;
  std::string format(const VectorSet& s) const;  // one vector per line, sorted

  // --- quasi-kernel and induced additions ---
  const VectorSet& quasi_kernel() const;
  bool in_quasi_kernel(Code v) const;
  InducedAddition induced_add(Code v) const;
  Label induced_sum(Code v, Label alpha, Label beta) const;  // single entry of +_v
  bool plus_relations_equal(Code q1, Code q2) const;
  bool sum_in_qk(const VectorSet& A) const;

  // --- span, independence, dimension ---
  VectorSet span(const VectorSet& S) const;
  const VectorSet& span_of(Code v) const;  // cached
  VectorSet additive_closure(const VectorSet& gens) const;
  Code sum(const VectorSet& S) const;
  VectorSet line(Code v) const;  // F.v
  bool is_scalar(Code v) const;
  bool is_linearly_independent(const VectorSet& S) const;
  QlPredicates ql_predicates(const VectorSet& S, int definitional_cap = 3) const;
  int dim_of(Code v) const;
  VectorSet dim_witness(Code v) const;  // minimal quasi-kernel sum from the level search
  ThetaDecomposition theta_decompose(Code v) const;

  // --- bases ---
  Code extend_independent(const VectorSet& S, Code v) const;
  VectorSet extract_basis(const VectorSet& S, const VectorSet& target,
                          bool reversed = false) const;
  VectorSet exchange(const VectorSet& S, const VectorSet& T) const;
  VectorSet scalar_basis(bool reversed = false) const;

  // --- theorem checks ---
  VerificationReport span_difference_check(Code v, Label alpha, Label beta) const;
  VerificationReport dim_span_equiv(Code v, Code w) const;

 private:
  enum class Kind { product, restriction, quotient };

  Space() = default;
  void build_index();
  void ensure_dims() const;
  Code add_raw(Code a, Code b) const;
  Code act_raw(Label alpha, Code v) const;

  Kind kind_ = Kind::product;
  ScalarGroupPtr group_;
  int width_ = 0;
  std::vector<Code> members_;        // sorted
  std::vector<std::uint32_t> index_; // code -> local index over the root code range
  ActionTable action_;               // product/restriction ops
  SpacePtr parent_;                  // restriction/quotient
  std::vector<Code> rep_map_;        // quotient: parent code -> representative code
  std::vector<Code> add_tab_;        // materialized ops for small code ranges
  std::vector<Code> act_tab_;

  std::vector<Label> raw_table(Code v) const;  // +_v entries without verification

  mutable std::once_flag qk_once_;
  mutable VectorSet qk_cache_;
  mutable std::once_flag dim_once_;
  mutable std::vector<Code> dim_elems_;                        // quasi-kernel minus zero
  mutable std::vector<std::vector<std::uint8_t>> dim_reach_;   // level -> reachable mask
  mutable std::vector<std::vector<std::uint32_t>> dim_from_;   // level -> element ordinal + 1
  mutable std::mutex span1_mu_;
  mutable std::vector<std::unique_ptr<const VectorSet>> span1_;  // singleton span cache
  mutable std::mutex span_memo_mu_;
  mutable std::map<std::vector<Code>, VectorSet> span_memo_;     // bounded seed-set memo

  friend struct ThetaWork;
};

}  // namespace nvs
