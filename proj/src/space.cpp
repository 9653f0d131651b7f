#include "nvs/space.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "nvs/error.hpp"
#include "nvs/kernels.hpp"

namespace nvs {

namespace carrier {

std::uint64_t size(int order, int width) {
  std::uint64_t s = 1;
  for (int i = 0; i < width; ++i) s *= std::uint64_t(order);
  return s;
}

std::string format(Code c, int order, int width) {
  Vector v = decode(c, order, width);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace carrier

// ---------------------------------------------------------------- VectorSet

VectorSet::VectorSet(std::vector<Code> c) : codes(std::move(c)) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
}

VectorSet VectorSet::of(std::initializer_list<Code> c) {
  return VectorSet(std::vector<Code>(c));
}

bool VectorSet::contains(Code v) const {
  return std::binary_search(codes.begin(), codes.end(), v);
}

VectorSet VectorSet::with(Code v) const {
  std::vector<Code> c = codes;
  c.push_back(v);
  return VectorSet(std::move(c));
}

VectorSet VectorSet::without(Code v) const {
  std::vector<Code> c;
  c.reserve(codes.size());
  for (Code x : codes)
    if (x != v) c.push_back(x);
  VectorSet r;
  r.codes = std::move(c);  // already sorted
  return r;
}

VectorSet set_intersection(const VectorSet& a, const VectorSet& b) {
  VectorSet r;
  std::set_intersection(a.codes.begin(), a.codes.end(), b.codes.begin(), b.codes.end(),
                        std::back_inserter(r.codes));
  return r;
}

bool is_subset(const VectorSet& a, const VectorSet& b) {
  return std::includes(b.codes.begin(), b.codes.end(), a.codes.begin(), a.codes.end());
}

// ----------------------------------------------------------- InducedAddition

Label InducedAddition::iterated(const std::vector<Label>& xs) const {
  if (xs.empty()) return 0;
  Label acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = at(acc, xs[i]);
  return acc;
}

bool QlPredicates::agree() const {
  auto a = as_array();
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != a[0]) return false;
  return true;
}

std::array<bool, 6> QlPredicates::as_array() const {
  return {definitional, span_blocks,  direct_sum,
          subset_split, single_split, additive_independent};
}

// -------------------------------------------------------------------- Space

SpacePtr Space::product(ActionTable action) {
  auto sp = std::shared_ptr<Space>(new Space());
  sp->kind_ = Kind::product;
  sp->group_ = action.group;
  sp->width_ = action.dim;
  sp->action_ = std::move(action);
  const Code total = Code(carrier::size(sp->group_->order, sp->width_));
  sp->members_.resize(total);
  for (Code c = 0; c < total; ++c) sp->members_[c] = c;
  sp->build_index();
  return sp;
}

SpacePtr Space::restriction(SpacePtr parent, VectorSet members) {
  auto sp = std::shared_ptr<Space>(new Space());
  sp->kind_ = Kind::restriction;
  sp->group_ = parent->group_;
  sp->width_ = parent->width_;
  sp->action_ = parent->action_;
  sp->parent_ = std::move(parent);
  sp->members_ = std::move(members.codes);
  if (sp->members_.empty() || sp->members_[0] != 0)
    fail(Errc::not_subspace, "restriction carrier must contain the zero vector");
  sp->build_index();
  return sp;
}

SpacePtr Space::quotient_space(SpacePtr parent, VectorSet reps, std::vector<Code> rep_map) {
  auto sp = std::shared_ptr<Space>(new Space());
  sp->kind_ = Kind::quotient;
  sp->group_ = parent->group_;
  sp->width_ = parent->width_;
  sp->action_ = parent->action_;
  sp->parent_ = std::move(parent);
  sp->members_ = std::move(reps.codes);
  sp->rep_map_ = std::move(rep_map);
  sp->build_index();
  return sp;
}

void Space::build_index() {
  const std::uint64_t range = carrier::size(group_->order, width_);
  index_.assign(range, UINT32_MAX);
  for (std::size_t i = 0; i < members_.size(); ++i) index_[members_[i]] = std::uint32_t(i);
  span1_.clear();
  span1_.resize(members_.size());
  // Small code ranges get flat operation tables; the exhaustive scans spend
  // nearly all their time in add/act.
  if (range <= 1024) {
    add_tab_.assign(range * range, 0);
    for (Code a = 0; a < range; ++a)
      for (Code b = 0; b < range; ++b) add_tab_[a * range + b] = add_raw(a, b);
    act_tab_.assign(std::size_t(group_->order) * range, 0);
    for (int al = 0; al < group_->order; ++al)
      for (Code v = 0; v < range; ++v)
        act_tab_[std::size_t(al) * range + v] = act_raw(Label(al), v);
  }
}

bool Space::is_member(Code v) const {
  return v < index_.size() && index_[v] != UINT32_MAX;
}

std::uint32_t Space::local_index(Code v) const {
  if (!is_member(v)) fail(Errc::semantic_error, "vector " + format(v) + " is not in the space");
  return index_[v];
}

Code Space::add_raw(Code a, Code b) const {
  switch (kind_) {
    case Kind::product: return carrier::add(*group_, width_, a, b);
    case Kind::restriction: return parent_->add(a, b);
    case Kind::quotient: return rep_map_[parent_->add(a, b)];
  }
  return 0;
}

Code Space::act_raw(Label alpha, Code v) const {
  switch (kind_) {
    case Kind::product: return action_.act(alpha, v);
    case Kind::restriction: return parent_->act(alpha, v);
    case Kind::quotient: return rep_map_[parent_->act(alpha, v)];
  }
  return 0;
}

Code Space::add(Code a, Code b) const {
  if (!add_tab_.empty()) return add_tab_[std::size_t(a) * index_.size() + b];
  return add_raw(a, b);
}

Code Space::act(Label alpha, Code v) const {
  if (!act_tab_.empty()) return act_tab_[std::size_t(alpha) * index_.size() + v];
  return act_raw(alpha, v);
}

Code Space::neg(Code a) const { return act(group_->neg_one, a); }

Code Space::sub(Code a, Code b) const { return add(a, neg(b)); }

Code Space::multiple(long long n, Code v) const {
  const int p = group_->char_p;
  long long r = ((n % p) + p) % p;
  Code acc = 0;
  for (long long i = 0; i < r; ++i) acc = add(acc, v);
  return acc;
}

Vector Space::decode(Code v) const { return carrier::decode(v, group_->order, width_); }

Code Space::encode(const Vector& v) const {
  if (int(v.size()) != width_)
    fail(Errc::semantic_error, "vector has " + std::to_string(v.size()) +
                                   " coordinates, expected " + std::to_string(width_));
  for (Label x : v)
    if (x >= group_->order) fail(Errc::semantic_error, "label out of range");
  return carrier::encode(v, group_->order);
}

std::string Space::format(Code v) const {
  return carrier::format(v, group_->order, width_);
}

std::string Space::format(const VectorSet& s) const {
  std::ostringstream os;
  for (Code c : s.codes) os << format(c) << "\n";
  return os.str();
}

// ------------------------------------------------- quasi-kernel and pluses

const VectorSet& Space::quasi_kernel() const {
  std::call_once(qk_once_, [&] {
    std::vector<std::uint8_t> mask = kernels::quasi_kernel_mask_parallel(*this);
    std::vector<Code> qk;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (mask[i]) qk.push_back(members_[i]);
    qk_cache_.codes = std::move(qk);  // members_ is sorted already
  });
  return qk_cache_;
}

bool Space::in_quasi_kernel(Code v) const { return quasi_kernel().contains(v); }

std::vector<Label> Space::raw_table(Code v) const {
  const int n = group_->order;
  std::vector<std::pair<Code, Label>> lv(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) lv[std::size_t(c)] = {act(Label(c), v), Label(c)};
  std::sort(lv.begin(), lv.end());
  auto find = [&](Code target) -> int {
    auto it = std::lower_bound(lv.begin(), lv.end(), std::make_pair(target, Label(0)));
    if (it == lv.end() || it->first != target) return -1;
    return it->second;
  };
  std::vector<Label> table(std::size_t(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    Code av = act(Label(a), v);
    for (int b = 0; b < n; ++b) {
      int g = find(add(av, act(Label(b), v)));
      if (g < 0)
        fail(Errc::not_quasi_kernel,
             format(v) + " admits no induced sum at (" + std::to_string(a) + "," +
                 std::to_string(b) + ")");
      table[std::size_t(a) * n + b] = Label(g);
    }
  }
  return table;
}

Label Space::induced_sum(Code v, Label alpha, Label beta) const {
  if (v == 0) fail(Errc::zero_base, "induced addition needs a nonzero base");
  Code target = add(act(alpha, v), act(beta, v));
  for (int c = 0; c < group_->order; ++c)
    if (act(Label(c), v) == target) return Label(c);
  fail(Errc::not_quasi_kernel, format(v) + " admits no induced sum at (" +
                                   std::to_string(alpha) + "," + std::to_string(beta) + ")");
}

InducedAddition Space::induced_add(Code v) const {
  if (v == 0) fail(Errc::zero_base, "induced addition needs a nonzero base");
  if (!in_quasi_kernel(v))
    fail(Errc::not_quasi_kernel, format(v) + " is not in the quasi-kernel");

  InducedAddition ia;
  ia.base = v;
  ia.order = group_->order;
  ia.table = raw_table(v);

  // (F, +_v, *) must come out a near-field: an abelian group with one-sided
  // distributivity. Left multiplication always distributes (scalars act by
  // endomorphisms); the right-sided form is equivalent only when the scalar
  // group is abelian, so it is checked only there. A violation falsifies
  // the construction and is an error rather than report data.
  const int n = ia.order;
  const bool abelian = group_->abelian();
  auto at = [&](int a, int b) { return ia.at(Label(a), Label(b)); };
  for (int a = 0; a < n; ++a) {
    if (at(a, 0) != a || at(0, a) != a)
      fail(Errc::axiom_failure, "0 is not neutral for +_" + format(v));
    if (at(a, group_->mul(group_->neg_one, Label(a))) != 0)
      fail(Errc::axiom_failure, "no additive inverse in +_" + format(v));
    for (int b = 0; b < n; ++b) {
      if (at(a, b) != at(b, a))
        fail(Errc::axiom_failure, "+_" + format(v) + " is not commutative");
      for (int c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c)))
          fail(Errc::axiom_failure, "+_" + format(v) + " is not associative");
        if (group_->mul(Label(c), Label(at(a, b))) !=
            at(group_->mul(Label(c), Label(a)), group_->mul(Label(c), Label(b))))
          fail(Errc::axiom_failure,
               "+_" + format(v) + " does not distribute on the left");
        if (abelian &&
            group_->mul(Label(at(a, b)), Label(c)) !=
                at(group_->mul(Label(a), Label(c)), group_->mul(Label(b), Label(c))))
          fail(Errc::axiom_failure,
               "+_" + format(v) + " does not distribute on the right");
      }
    }
  }
  return ia;
}

bool Space::plus_relations_equal(Code q1, Code q2) const {
  for (Code q : {q1, q2}) {
    if (q == 0) fail(Errc::zero_base, "induced addition needs a nonzero base");
    if (!in_quasi_kernel(q))
      fail(Errc::not_quasi_kernel, format(q) + " is not in the quasi-kernel");
  }
  if (q1 == q2) return true;
  return raw_table(q1) == raw_table(q2);
}

Code Space::sum(const VectorSet& S) const {
  Code acc = 0;
  for (Code v : S.codes) acc = add(acc, v);
  return acc;
}

bool Space::sum_in_qk(const VectorSet& A) const {
  if (A.empty()) fail(Errc::degenerate_input, "sum over the empty set");
  for (Code a : A.codes)
    if (!in_quasi_kernel(a))
      fail(Errc::not_quasi_kernel, format(a) + " is not in the quasi-kernel");
  return in_quasi_kernel(sum(A));
}

// ------------------------------------------------------------ span closure

VectorSet Space::span(const VectorSet& S) const {
  for (Code s : S.codes)
    if (!is_member(s))
      fail(Errc::semantic_error, "span seed " + format(s) + " is not in the space");
  {
    std::lock_guard<std::mutex> lock(span_memo_mu_);
    auto it = span_memo_.find(S.codes);
    if (it != span_memo_.end()) return it->second;
  }
  // Worklist fixpoint: seed S with 0, close under addition and the action.
  std::vector<std::uint8_t> in(index_.size(), 0);
  std::vector<Code> found;
  auto push = [&](Code c) {
    if (!in[c]) {
      in[c] = 1;
      found.push_back(c);
    }
  };
  push(0);
  for (Code s : S.codes) push(s);
  for (std::size_t i = 0; i < found.size(); ++i) {
    Code x = found[i];
    for (std::size_t j = 0; j <= i; ++j) push(add(x, found[j]));
    for (int a = 1; a < group_->order; ++a) push(act(Label(a), x));
  }
  VectorSet result(std::move(found));
  std::lock_guard<std::mutex> lock(span_memo_mu_);
  if (span_memo_.size() < 20000) span_memo_.emplace(S.codes, result);
  return result;
}

const VectorSet& Space::span_of(Code v) const {
  std::uint32_t idx = local_index(v);
  {
    std::lock_guard<std::mutex> lock(span1_mu_);
    if (span1_[idx]) return *span1_[idx];
  }
  VectorSet s = span(VectorSet::of({v}));
  std::lock_guard<std::mutex> lock(span1_mu_);
  if (!span1_[idx]) span1_[idx] = std::make_unique<const VectorSet>(std::move(s));
  return *span1_[idx];
}

VectorSet Space::additive_closure(const VectorSet& gens) const {
  std::vector<std::uint8_t> in(index_.size(), 0);
  std::vector<Code> found;
  auto push = [&](Code c) {
    if (!in[c]) {
      in[c] = 1;
      found.push_back(c);
    }
  };
  push(0);
  for (Code s : gens.codes) push(s);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) push(add(found[i], found[j]));
  return VectorSet(std::move(found));
}

VectorSet Space::line(Code v) const {
  std::vector<Code> xs(std::size_t(group_->order));
  for (int a = 0; a < group_->order; ++a) xs[std::size_t(a)] = act(Label(a), v);
  return VectorSet(std::move(xs));
}

bool Space::is_scalar(Code v) const { return is_subset(span_of(v), line(v)); }

// ----------------------------------------------------- linear independence

namespace {

// True when no combination x_a from the given value sets (one per element,
// each set containing 0) sums to zero with some x_a nonzero.
bool blocks_vanish(const Space& sp, const std::vector<VectorSet>& sets) {
  bool violated = false;
  auto dfs = [&](auto&& self, std::size_t i, Code acc, bool nonzero) -> void {
    if (violated) return;
    if (i == sets.size()) {
      if (nonzero && acc == 0) violated = true;
      return;
    }
    for (Code x : sets[i].codes) {
      self(self, i + 1, sp.add(acc, x), nonzero || x != 0);
      if (violated) return;
    }
  };
  dfs(dfs, 0, 0, false);
  return !violated;
}

// True when the family of value sets is direct: every sum of nonzero picks
// (over every index subset) is reached by exactly one pick.
bool family_direct(const Space& sp, const std::vector<VectorSet>& sets) {
  std::unordered_map<Code, std::vector<std::pair<std::size_t, Code>>> seen;
  std::vector<std::pair<std::size_t, Code>> picks;
  bool collision = false;
  auto dfs = [&](auto&& self, std::size_t i, Code acc) -> void {
    if (collision) return;
    if (i == sets.size()) {
      auto [it, inserted] = seen.try_emplace(acc, picks);
      if (!inserted && it->second != picks) collision = true;
      return;
    }
    self(self, i + 1, acc);  // index absent
    if (collision) return;
    for (Code x : sets[i].codes) {
      if (x == 0) continue;
      picks.emplace_back(i, x);
      self(self, i + 1, sp.add(acc, x));
      picks.pop_back();
      if (collision) return;
    }
  };
  dfs(dfs, 0, 0);
  return !collision;
}

}  // namespace

bool Space::is_linearly_independent(const VectorSet& S) const {
  if (S.empty() || S.contains(0)) return false;
  for (Code s : S.codes) {
    VectorSet rest = span(S.without(s));
    if (set_intersection(span_of(s), rest).size() != 1) return false;
  }
  return true;
}

QlPredicates Space::ql_predicates(const VectorSet& S, int definitional_cap) const {
  QlPredicates p;
  const bool guard = !S.empty() && !S.contains(0);

  std::vector<VectorSet> spans;
  spans.reserve(S.size());
  for (Code s : S.codes) spans.push_back(span_of(s));

  // (1) definitional, with inner sums bounded by the cap: the value set of a
  // bounded block is the cap-fold sumset of the line of the element.
  {
    std::vector<VectorSet> bounded;
    for (Code s : S.codes) {
      VectorSet ln = line(s);
      VectorSet reach = ln;
      VectorSet total = ln;
      for (int j = 2; j <= definitional_cap; ++j) {
        std::vector<Code> next;
        for (Code x : reach.codes)
          for (Code y : ln.codes) next.push_back(add(x, y));
        reach = VectorSet(std::move(next));
        std::vector<Code> merged = total.codes;
        merged.insert(merged.end(), reach.codes.begin(), reach.codes.end());
        total = VectorSet(std::move(merged));
      }
      bounded.push_back(total.with(0));
    }
    p.definitional = guard && blocks_vanish(*this, bounded);
  }

  // (2) blocks range over the full singleton spans.
  p.span_blocks = guard && blocks_vanish(*this, spans);

  // (3) Span(S) equals the direct sum of the singleton spans.
  {
    std::vector<Code> uni;
    for (const VectorSet& s : spans)
      uni.insert(uni.end(), s.codes.begin(), s.codes.end());
    VectorSet sum_set = additive_closure(VectorSet(std::move(uni)));
    p.direct_sum = guard && sum_set == span(S) && family_direct(*this, spans);
  }

  // (4) every subset splits off trivially.
  {
    bool ok = guard;
    const std::size_t m = S.size();
    for (std::uint64_t mask = 0; ok && m <= 20 && mask < (std::uint64_t(1) << m); ++mask) {
      std::vector<Code> t, rest;
      for (std::size_t i = 0; i < m; ++i)
        ((mask >> i) & 1 ? t : rest).push_back(S.codes[i]);
      VectorSet ts, rs;
      ts.codes = std::move(t);
      rs.codes = std::move(rest);
      if (set_intersection(span(ts), span(rs)).size() != 1) ok = false;
    }
    p.subset_split = ok;
  }

  // (5) every single element splits off trivially.
  p.single_split = is_linearly_independent(S);

  // (6) the singleton-span family is additively independent: all members
  // non-trivial and the sum direct. A zero element yields the trivial span,
  // so the non-triviality clause covers 0 in S; the empty family is treated
  // as dependent so that the six routes agree on the degenerate input.
  {
    bool nontrivial = !S.empty();
    for (const VectorSet& s : spans)
      if (s.size() <= 1) nontrivial = false;
    p.additive_independent = nontrivial && family_direct(*this, spans);
  }

  return p;
}

// ------------------------------------------------------------- dimensions

void Space::ensure_dims() const {
  std::call_once(dim_once_, [&] {
    const VectorSet& qk = quasi_kernel();
    dim_elems_.clear();
    for (Code c : qk.codes)
      if (c != 0) dim_elems_.push_back(c);
    const int levels = std::max(1, width_);
    const std::size_t range = index_.size();
    dim_reach_.assign(std::size_t(levels) + 1, std::vector<std::uint8_t>(range, 0));
    dim_from_.assign(std::size_t(levels) + 1, std::vector<std::uint32_t>(range, 0));
    dim_reach_[0][0] = 1;
    // 0/1 knapsack over the quasi-kernel: level k holds sums of exactly k
    // distinct elements. Descending k keeps each element used at most once.
    for (std::size_t j = 0; j < dim_elems_.size(); ++j) {
      Code q = dim_elems_[j];
      for (int k = levels; k >= 1; --k) {
        const auto& prev = dim_reach_[std::size_t(k) - 1];
        auto& cur = dim_reach_[std::size_t(k)];
        auto& from = dim_from_[std::size_t(k)];
        for (Code x = 0; x < range; ++x) {
          if (!prev[x]) continue;
          Code y = add(x, q);
          if (!cur[y]) {
            cur[y] = 1;
            from[y] = std::uint32_t(j) + 1;
          }
        }
      }
    }
  });
}

int Space::dim_of(Code v) const {
  local_index(v);
  if (v == 0) return 0;
  ensure_dims();
  for (std::size_t k = 1; k < dim_reach_.size(); ++k)
    if (dim_reach_[k][v]) return int(k);
  fail(Errc::not_generated, format(v) + " is not a sum of distinct quasi-kernel elements");
}

VectorSet Space::dim_witness(Code v) const {
  if (v == 0) return VectorSet{};
  int k = dim_of(v);
  ensure_dims();
  std::vector<Code> parts;
  Code x = v;
  for (int level = k; level >= 1; --level) {
    std::uint32_t j = dim_from_[std::size_t(level)][x];
    if (j == 0) fail(Errc::not_generated, "witness reconstruction failed");
    Code q = dim_elems_[j - 1];
    parts.push_back(q);
    x = sub(x, q);
  }
  if (x != 0) fail(Errc::not_generated, "witness reconstruction failed");
  return VectorSet(std::move(parts));
}

// --------------------------------------------------------------- theta

ThetaDecomposition Space::theta_decompose(Code v) const {
  if (v == 0) fail(Errc::zero_vector, "cannot decompose the zero vector");
  local_index(v);

  ThetaDecomposition out;
  out.vector = v;

  std::map<Code, std::vector<Label>> tables;
  auto table_of = [&](Code q) -> const std::vector<Label>& {
    auto it = tables.find(q);
    if (it == tables.end()) it = tables.emplace(q, raw_table(q)).first;
    return it->second;
  };
  auto tab = [&](const std::vector<Label>& t, Label a, Label b) {
    return t[std::size_t(a) * group_->order + b];
  };

  std::vector<Code> parts;
  Code cur = v;
  int guard = dim_of(v) + 1;
  while (cur != 0) {
    if (--guard < 0) fail(Errc::axiom_failure, "decomposition did not reduce dimension");
    VectorSet w = dim_witness(cur);
    std::vector<Code> summands = w.codes;  // sorted
    // Rework the sum until every pair of summands shares its induced
    // addition; each step drops one summand.
    while (true) {
      std::size_t ai = 0, oi = 0;
      bool found = false;
      for (std::size_t i = 0; i < summands.size() && !found; ++i)
        for (std::size_t j = i + 1; j < summands.size() && !found; ++j)
          if (table_of(summands[i]) != table_of(summands[j])) {
            ai = i;
            oi = j;
            found = true;
          }
      if (!found) break;

      const Code anchor = summands[ai], offender = summands[oi];
      const auto& ta = table_of(anchor);
      const auto& to = table_of(offender);
      Label alpha = 0, beta = 0;
      bool got = false;
      for (int a = 0; a < group_->order && !got; ++a)
        for (int b = 0; b < group_->order && !got; ++b)
          if (tab(ta, Label(a), Label(b)) != tab(to, Label(a), Label(b))) {
            alpha = Label(a);
            beta = Label(b);
            got = true;
          }
      if (!got) fail(Errc::axiom_failure, "distinct tables with no distinguishing pair");

      ThetaStep step;
      step.anchor = anchor;
      step.offender = offender;
      step.alpha = alpha;
      step.beta = beta;
      step.delta = tab(to, alpha, beta);
      Label neg_delta = group_->mul(group_->neg_one, step.delta);
      step.scale = tab(ta, tab(ta, alpha, beta), neg_delta);
      if (step.scale == 0)
        fail(Errc::axiom_failure, "distinguishing pair produced a zero scale");
      Label scale_inv = group_->inverse(step.scale);

      Code old_val = 0;
      for (Code u : summands) old_val = add(old_val, u);

      std::vector<Code> next;
      for (Code u : summands) {
        if (u == offender) continue;
        const auto& tu = table_of(u);
        Label g = tab(tu, tab(tu, alpha, beta), neg_delta);
        if (g == 0) continue;
        Label coef = group_->mul(scale_inv, g);
        Code nu = act(coef, u);
        step.summands.emplace_back(coef, nu);
        next.push_back(nu);
      }
      Code val = 0;
      for (Code u : next) val = add(val, u);
      // The rebuilt sum must match the scaled combination of the old sum.
      Code direct = act(scale_inv,
                        sub(add(act(alpha, old_val), act(beta, old_val)),
                            act(step.delta, old_val)));
      if (val != direct)
        fail(Errc::axiom_failure, "step sum disagrees with the scaled combination");
      step.theta = val;
      out.trace.push_back(std::move(step));

      std::sort(next.begin(), next.end());
      summands = std::move(next);
      if (summands.empty())
        fail(Errc::axiom_failure, "decomposition step emptied the summand list");
    }

    Code theta = 0;
    for (Code u : summands) theta = add(theta, u);
    if (theta == 0 || !in_quasi_kernel(theta))
      fail(Errc::axiom_failure, "extracted part is not a quasi-kernel element");
    parts.push_back(theta);
    cur = sub(cur, theta);
  }

  out.parts = VectorSet(std::move(parts));
  if (int(out.parts.size()) != dim_of(v))
    fail(Errc::axiom_failure, "part count differs from the dimension of the vector");
  if (sum(out.parts) != v)
    fail(Errc::axiom_failure, "parts do not sum to the vector");
  return out;
}

// --------------------------------------------------------------- bases

Code Space::extend_independent(const VectorSet& S, Code v) const {
  if (!is_linearly_independent(S))
    fail(Errc::not_independent, "the given set is not linearly independent");
  VectorSet span_s = span(S);
  if (span_s.contains(v)) fail(Errc::in_span, format(v) + " already lies in the span");
  ThetaDecomposition th = theta_decompose(v);
  for (Code q : th.parts.codes) {
    if (span_s.contains(q)) continue;
    if (is_linearly_independent(S.with(q))) return q;
  }
  fail(Errc::axiom_failure, "no part extends the independent set");
}

VectorSet Space::extract_basis(const VectorSet& S, const VectorSet& target,
                               bool reversed) const {
  if (!is_subset(target, span(S)))
    fail(Errc::not_generating, "the set does not generate the target");
  if (target.empty() || (target.size() == 1 && target.codes[0] == 0))
    return VectorSet{};  // the trivial space has the empty basis

  std::vector<Code> order = S.codes;
  if (reversed) std::reverse(order.begin(), order.end());

  VectorSet basis;
  for (Code s : order) {
    if (s == 0) continue;
    VectorSet cand = basis.with(s);
    if (is_linearly_independent(cand)) basis = std::move(cand);
  }
  if (is_subset(target, span(basis))) return basis;

  // The greedy pass can strand a maximal independent subset that does not
  // generate (independence is not hereditary-exchange outside the
  // quasi-kernel), so fall back to the smallest independent generating
  // subset in canonical order.
  if (S.size() > 20)
    fail(Errc::axiom_failure, "greedy basis extraction failed on a large set");
  const std::size_t m = S.size();
  for (std::size_t want = 1; want <= m; ++want) {
    std::vector<std::size_t> idx(want);
    auto combo = [&](auto&& self, std::size_t pos, std::size_t start) -> VectorSet {
      if (pos == want) {
        std::vector<Code> chosen;
        for (std::size_t i : idx) chosen.push_back(S.codes[i]);
        VectorSet b;
        b.codes = std::move(chosen);
        if (is_linearly_independent(b) && is_subset(target, span(b))) return b;
        return VectorSet{};
      }
      for (std::size_t i = start; i < m; ++i) {
        idx[pos] = i;
        VectorSet r = self(self, pos + 1, i + 1);
        if (!r.empty()) return r;
      }
      return VectorSet{};
    };
    VectorSet found = combo(combo, 0, 0);
    if (!found.empty()) return found;
  }
  fail(Errc::axiom_failure, "no independent generating subset exists");
}

VectorSet Space::exchange(const VectorSet& S, const VectorSet& T) const {
  for (Code s : S.codes)
    if (!in_quasi_kernel(s))
      fail(Errc::not_in_quasi_kernel, format(s) + " is not in the quasi-kernel");
  for (Code t : T.codes)
    if (!in_quasi_kernel(t))
      fail(Errc::not_in_quasi_kernel, format(t) + " is not in the quasi-kernel");
  if (!is_linearly_independent(S))
    fail(Errc::not_independent, "the replacement source is not independent");
  VectorSet span_t = span(T);
  if (!is_subset(span(S), span_t))
    fail(Errc::span_violation, "Span(S) is not contained in Span(T)");

  std::vector<Code> placed;
  std::vector<Code> rest = T.codes;
  for (Code s : S.codes) {
    auto it = std::find(rest.begin(), rest.end(), s);
    if (it != rest.end()) {
      rest.erase(it);
      placed.push_back(s);
      continue;
    }
    // Represent s over the current spanning set and swap out the first
    // not-yet-placed element carrying a nonzero coefficient.
    std::vector<Code> elems = placed;
    elems.insert(elems.end(), rest.begin(), rest.end());
    std::sort(elems.begin(), elems.end());
    const std::size_t range = index_.size();
    const int n = group_->order;
    std::vector<std::vector<Label>> choice(elems.size() + 1,
                                           std::vector<Label>(range, Label(0xFFFF)));
    choice[0][0] = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (Code x = 0; x < range; ++x) {
        if (choice[i][x] == Label(0xFFFF)) continue;
        for (int a = 0; a < n; ++a) {
          Code y = add(x, act(Label(a), elems[i]));
          if (choice[i + 1][y] == Label(0xFFFF)) choice[i + 1][y] = Label(a);
        }
      }
    }
    if (choice[elems.size()][s] == Label(0xFFFF))
      fail(Errc::axiom_failure, "element has no representation over the spanning set");
    std::vector<Label> coeff(elems.size(), 0);
    Code x = s;
    for (std::size_t i = elems.size(); i-- > 0;) {
      Label a = choice[i + 1][x];
      coeff[i] = a;
      x = sub(x, act(a, elems[i]));
    }
    bool swapped = false;
    for (std::size_t i = 0; i < elems.size() && !swapped; ++i) {
      if (coeff[i] == 0) continue;
      auto rit = std::find(rest.begin(), rest.end(), elems[i]);
      if (rit == rest.end()) continue;  // coefficient sits on a placed element
      rest.erase(rit);
      placed.push_back(s);
      swapped = true;
    }
    if (!swapped)
      fail(Errc::axiom_failure, "no replaceable element found; independence violated");
  }

  VectorSet t0(std::move(rest));
  std::vector<Code> joint = S.codes;
  joint.insert(joint.end(), t0.codes.begin(), t0.codes.end());
  if (!(span(VectorSet(std::move(joint))) == span_t))
    fail(Errc::axiom_failure, "exchange result does not preserve the span");
  return t0;
}

VectorSet Space::scalar_basis(bool reversed) const {
  const VectorSet& qk = quasi_kernel();
  VectorSet gens = qk.without(0);
  VectorSet target;
  target.codes = members_;
  if (!(span(gens) == span(target)))
    fail(Errc::not_near_vector_space, "the quasi-kernel does not generate the carrier");
  return extract_basis(gens, target, reversed);
}

// ------------------------------------------------------- theorem checks

VerificationReport Space::span_difference_check(Code v, Label alpha, Label beta) const {
  if (v == 0 || alpha == beta)
    fail(Errc::degenerate_input, "need v != 0 and alpha != beta");
  VerificationReport r;
  r.name = "span-difference v=" + format(v) + " alpha=" + std::to_string(alpha) +
           " beta=" + std::to_string(beta);
  Code w = sub(act(alpha, v), act(beta, v));
  VectorSet sv = span_of(v);
  VectorSet sw = span_of(w);
  r.add("span-equality", sv == sw, sv.size(),
        sv == sw ? "" : "difference vector " + format(w));
  int dv = dim_of(v), dw = dim_of(w);
  r.add("dim-equality", dv == dw, 2,
        dv == dw ? "" : std::to_string(dv) + " vs " + std::to_string(dw));
  return r;
}

VerificationReport Space::dim_span_equiv(Code v, Code w) const {
  if (v == 0) fail(Errc::degenerate_input, "need v != 0");
  VectorSet sv = span_of(v);
  if (!sv.contains(w)) fail(Errc::not_in_span, format(w) + " is not in Span(v)");
  VerificationReport r;
  r.name = "dim-span v=" + format(v) + " w=" + format(w);
  bool spans_equal = sv == span_of(w);
  bool dims_equal = dim_of(v) == dim_of(w);
  r.add("equivalence", spans_equal == dims_equal, 2,
        "span-equal=" + std::string(spans_equal ? "yes" : "no") +
            ",dim-equal=" + std::string(dims_equal ? "yes" : "no"));
  return r;
}

}  // namespace nvs
