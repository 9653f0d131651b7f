#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "nvs/error.hpp"
#include "nvs/space.hpp"

using namespace nvs;

namespace {

// Literal reading of the independence definition, kept independent of the
// library predicates: enumerate every coefficient assignment with inner sums
// of length <= cap and demand that vanishing combinations have vanishing
// blocks. Exponential; only for small sets.
bool linindep_oracle(const Space& sp, const std::vector<Code>& s, int cap) {
  if (s.empty()) return false;
  for (Code c : s)
    if (c == 0) return false;
  const int order = sp.group().order;
  for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
    std::vector<Code> a;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (mask & (1u << i)) a.push_back(s[i]);
    std::vector<int> lens(a.size(), 1);
    while (true) {
      // enumerate all coefficient tuples for the current block lengths
      std::vector<Code> blocks(a.size(), 0);
      bool bad = false;
      auto coeffs = [&](auto&& self, std::size_t block, int slot, Code acc) -> void {
        if (bad) return;
        if (slot == lens[block]) {
          blocks[block] = acc;
          if (block + 1 == a.size()) {
            Code total = 0;
            bool nonzero = false;
            for (Code b : blocks) {
              total = sp.add(total, b);
              if (b != 0) nonzero = true;
            }
            if (total == 0 && nonzero) bad = true;
          } else {
            self(self, block + 1, 0, 0);
          }
          return;
        }
        for (int al = 0; al < order; ++al)
          self(self, block, slot + 1, sp.add(acc, sp.act(Label(al), a[block])));
      };
      coeffs(coeffs, 0, 0, 0);
      if (bad) return false;
      // next length tuple
      std::size_t i = 0;
      for (; i < lens.size(); ++i) {
        if (lens[i] < cap) {
          lens[i] += 1;
          std::fill(lens.begin(), lens.begin() + i, 1);
          break;
        }
      }
      if (i == lens.size()) break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("quasi-kernel of v5 is the axis union") {
  const auto& sp = v5();
  VectorSet expected;
  for (Label a = 0; a < 5; ++a) {
    expected.codes.push_back(enc(sp, {0, a}));
    expected.codes.push_back(enc(sp, {a, 0}));
  }
  expected = VectorSet(std::move(expected.codes));
  CHECK(sp->quasi_kernel() == expected);
  CHECK(sp->quasi_kernel().size() == 9);
}

TEST_CASE("quasi-kernel of the classical space is everything") {
  CHECK(v5id()->quasi_kernel().size() == 25);
  // classical degeneration: every vector has dimension at most 1
  for (Code v : v5id()->members()) CHECK(v5id()->dim_of(v) <= 1);
}

TEST_CASE("quasi-kernel contains zero and is scalar-stable") {
  for (const auto& sp : {v5(), v5id(), gf7_15(), dickson3_1()}) {
    const VectorSet& qk = sp->quasi_kernel();
    CHECK(qk.contains(0));
    for (Code q : qk.codes)
      for (int a = 0; a < sp->group().order; ++a)
        CHECK(qk.contains(sp->act(Label(a), q)));
  }
}

TEST_CASE("induced additions on v5") {
  const auto& sp = v5();
  Code e1 = enc(sp, {1, 0}), e2 = enc(sp, {0, 1});
  CHECK(sp->induced_sum(e1, 1, 1) == 2);  // plain mod-5 addition
  CHECK(sp->induced_sum(e2, 1, 1) == 3);  // cube root of 2
  InducedAddition t1 = sp->induced_add(e1);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) CHECK(t1.at(Label(a), Label(b)) == (a + b) % 5);
  // alpha +_v (-alpha) = 0 on every base
  for (Code q : sp->quasi_kernel().codes) {
    if (q == 0) continue;
    for (int a = 0; a < 5; ++a)
      CHECK(sp->induced_sum(q, Label(a), sp->group().mul(sp->group().neg_one, Label(a))) == 0);
  }
  CHECK_THROWS_AS(sp->induced_add(0), Error);
  CHECK_THROWS_AS(sp->induced_add(enc(sp, {1, 1})), Error);  // not in the quasi-kernel
}

TEST_CASE("plus relations distinguish the axes") {
  const auto& sp = v5();
  CHECK(sp->plus_relations_equal(enc(sp, {1, 0}), enc(sp, {2, 0})));
  CHECK_FALSE(sp->plus_relations_equal(enc(sp, {1, 0}), enc(sp, {0, 1})));
  CHECK(sp->plus_relations_equal(enc(sp, {0, 2}), enc(sp, {0, 2})));
}

TEST_CASE("sums of quasi-kernel elements") {
  const auto& sp = v5();
  CHECK(sp->sum_in_qk(VectorSet::of({enc(sp, {1, 0}), enc(sp, {2, 0})})));
  CHECK_FALSE(sp->sum_in_qk(VectorSet::of({enc(sp, {1, 0}), enc(sp, {0, 1})})));
  CHECK(sp->sum_in_qk(VectorSet::of({enc(sp, {3, 0})})));
  CHECK_THROWS_AS(sp->sum_in_qk(VectorSet::of({enc(sp, {1, 1})})), Error);
}

TEST_CASE("span closure") {
  const auto& sp = v5();
  CHECK(sp->span(VectorSet{}) == VectorSet::of({0}));
  CHECK(sp->span_of(enc(sp, {1, 1})).size() == 25);
  VectorSet axis = sp->span_of(enc(sp, {1, 0}));
  CHECK(axis.size() == 5);
  CHECK(axis == sp->line(enc(sp, {1, 0})));
}

TEST_CASE("span is a closure operator") {
  const auto& sp = v5();
  VectorSet sets[] = {
      VectorSet{},
      VectorSet::of({enc(sp, {1, 0})}),
      VectorSet::of({enc(sp, {1, 1})}),
      VectorSet::of({enc(sp, {1, 0}), enc(sp, {0, 2})}),
      VectorSet::of({enc(sp, {2, 3}), enc(sp, {4, 0})}),
  };
  for (const VectorSet& s : sets) {
    VectorSet sp1 = sp->span(s);
    CHECK(is_subset(s, sp1));
    CHECK(sp->span(sp1) == sp1);  // idempotent
    for (const VectorSet& t : sets) {
      if (is_subset(s, t)) CHECK(is_subset(sp1, sp->span(t)));
    }
  }
}

TEST_CASE("scalar vectors are exactly the quasi-kernel") {
  for (const auto& sp : {v5(), gf7_15()}) {
    for (Code v : sp->members()) {
      bool scalar = sp->is_scalar(v);
      CHECK(scalar == sp->in_quasi_kernel(v));
      CHECK(scalar == (sp->span_of(v) == sp->line(v)));
    }
  }
  CHECK(v5()->is_scalar(0));
  CHECK(v5()->is_scalar(enc(v5(), {1, 0})));
  CHECK_FALSE(v5()->is_scalar(enc(v5(), {1, 1})));
}

TEST_CASE("linear independence basics") {
  const auto& sp = v5();
  for (Code v : sp->members())
    if (v != 0) CHECK(sp->is_linearly_independent(VectorSet::of({v})));
  CHECK(sp->is_linearly_independent(VectorSet::of({enc(sp, {1, 0}), enc(sp, {0, 1})})));
  CHECK_FALSE(sp->is_linearly_independent(VectorSet::of({enc(sp, {1, 1}), enc(sp, {0, 1})})));
  CHECK_FALSE(sp->is_linearly_independent(VectorSet::of({0, enc(sp, {1, 0})})));
  CHECK_FALSE(sp->is_linearly_independent(VectorSet{}));
}

TEST_CASE("six predicates agree and match the literal definition") {
  const auto& sp = v5();
  // every pair, literal oracle with inner sums of length <= 3
  const auto& mem = sp->members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j) {
      VectorSet s = VectorSet::of({mem[i], mem[j]});
      QlPredicates p = sp->ql_predicates(s);
      CHECK(p.agree());
      CHECK(p.single_split == linindep_oracle(*sp, s.codes, 3));
    }
  // a deterministic sample of triples against the literal oracle
  std::vector<VectorSet> triples = {
      VectorSet::of({enc(sp, {1, 0}), enc(sp, {0, 1}), enc(sp, {1, 1})}),
      VectorSet::of({enc(sp, {1, 0}), enc(sp, {2, 0}), enc(sp, {0, 1})}),
      VectorSet::of({enc(sp, {1, 1}), enc(sp, {2, 3}), enc(sp, {0, 2})}),
      VectorSet::of({0, enc(sp, {1, 0}), enc(sp, {0, 1})}),
  };
  for (const VectorSet& s : triples) {
    QlPredicates p = sp->ql_predicates(s);
    CHECK(p.agree());
    CHECK(p.single_split == linindep_oracle(*sp, s.codes, 2));
  }
}

TEST_CASE("ql predicates on quasi-kernel subsets match the line-sum lemma") {
  const auto& sp = v5();
  const VectorSet& qk = sp->quasi_kernel();
  for (std::size_t i = 0; i < qk.codes.size(); ++i)
    for (std::size_t j = i + 1; j < qk.codes.size(); ++j) {
      VectorSet s = VectorSet::of({qk.codes[i], qk.codes[j]});
      std::vector<Code> gen;
      for (Code c : s.codes) {
        VectorSet ln = sp->line(c);
        gen.insert(gen.end(), ln.codes.begin(), ln.codes.end());
      }
      CHECK(sp->span(s) == sp->additive_closure(VectorSet(std::move(gen))));
    }
}

TEST_CASE("dimension of a vector") {
  const auto& sp = v5();
  CHECK(sp->dim_of(0) == 0);
  CHECK(sp->dim_of(enc(sp, {1, 0})) == 1);
  CHECK(sp->dim_of(enc(sp, {1, 1})) == 2);
  for (Code v : sp->members()) {
    int d = sp->dim_of(v);
    VectorSet w = sp->dim_witness(v);
    CHECK(int(w.size()) == d);
    CHECK(sp->sum(w) == v);
    for (Code q : w.codes) CHECK(sp->in_quasi_kernel(q));
  }
}

TEST_CASE("theta decomposition on v5") {
  const auto& sp = v5();
  ThetaDecomposition th = sp->theta_decompose(enc(sp, {1, 1}));
  CHECK(th.parts == VectorSet::of({enc(sp, {1, 0}), enc(sp, {0, 1})}));
  CHECK(sp->sum(th.parts) == enc(sp, {1, 1}));
  ThetaDecomposition single = sp->theta_decompose(enc(sp, {3, 0}));
  CHECK(single.parts == VectorSet::of({enc(sp, {3, 0})}));
  CHECK_THROWS_AS(sp->theta_decompose(0), Error);
}

TEST_CASE("theta invariants hold for every nonzero vector") {
  for (const auto& sp : {v5(), gf7_15()}) {
    for (Code v : sp->members()) {
      if (v == 0) continue;
      ThetaDecomposition th = sp->theta_decompose(v);
      CHECK(sp->sum(th.parts) == v);
      CHECK(int(th.parts.size()) == sp->dim_of(v));
      CHECK(sp->is_linearly_independent(th.parts));
      CHECK(sp->span(th.parts) == sp->span_of(v));
      // pairwise distinct induced additions
      for (std::size_t i = 0; i < th.parts.codes.size(); ++i)
        for (std::size_t j = i + 1; j < th.parts.codes.size(); ++j)
          CHECK_FALSE(sp->plus_relations_equal(th.parts.codes[i], th.parts.codes[j]));
    }
  }
}

TEST_CASE("extend an independent set through a decomposition") {
  const auto& sp = v5();
  CHECK(sp->extend_independent(VectorSet::of({enc(sp, {1, 0})}), enc(sp, {1, 1})) ==
        enc(sp, {0, 1}));
  CHECK(sp->extend_independent(VectorSet::of({enc(sp, {0, 1})}), enc(sp, {1, 1})) ==
        enc(sp, {1, 0}));
  CHECK_THROWS_AS(sp->extend_independent(VectorSet::of({enc(sp, {1, 0})}), enc(sp, {2, 0})),
                  Error);
  // a dependent starting set is rejected
  CHECK_THROWS_AS(sp->extend_independent(
                      VectorSet::of({enc(sp, {1, 1}), enc(sp, {0, 1})}), enc(sp, {2, 1})),
                  Error);
}

TEST_CASE("basis extraction") {
  const auto& sp = v5();
  VectorSet carrier;
  carrier.codes = sp->members();
  VectorSet qk_gens = sp->quasi_kernel().without(0);
  VectorSet b = sp->extract_basis(qk_gens, carrier);
  CHECK(b == VectorSet::of({enc(sp, {1, 0}), enc(sp, {0, 1})}));
  // a one-element F-basis that is not scalar
  VectorSet fb = sp->extract_basis(VectorSet::of({enc(sp, {1, 1})}), carrier);
  CHECK(fb == VectorSet::of({enc(sp, {1, 1})}));
  // the trivial space has the empty basis
  CHECK(sp->extract_basis(VectorSet::of({0, enc(sp, {1, 0})}), VectorSet::of({0})).empty());
  CHECK_THROWS_AS(sp->extract_basis(VectorSet::of({enc(sp, {1, 0})}), carrier), Error);
}

TEST_CASE("greedy dead ends fall back to a covering subset") {
  const auto& sp = v5();
  VectorSet carrier;
  carrier.codes = sp->members();
  // ascending order tries (0,1) first, which blocks (1,1); the fallback
  // still finds the singleton F-basis
  VectorSet s = VectorSet::of({enc(sp, {0, 1}), enc(sp, {1, 1})});
  VectorSet b = sp->extract_basis(s, carrier);
  CHECK(sp->is_linearly_independent(b));
  CHECK(is_subset(carrier, sp->span(b)));
}

TEST_CASE("exchange replaces generators one for one") {
  const auto& sp = v5();
  Code e1 = enc(sp, {1, 0}), e2 = enc(sp, {0, 1});
  VectorSet t = VectorSet::of({e1, e2});
  CHECK(sp->exchange(VectorSet::of({e1}), t) == VectorSet::of({e2}));
  CHECK(sp->exchange(t, t).empty());
  VectorSet t0 = sp->exchange(VectorSet::of({enc(sp, {2, 0})}), t);
  CHECK(t0 == VectorSet::of({e2}));
  CHECK(sp->span(VectorSet::of({enc(sp, {2, 0}), e2})).size() == 25);
  CHECK_THROWS_AS(sp->exchange(VectorSet::of({enc(sp, {1, 1})}), t), Error);
  // Span(S) must sit inside Span(T)
  CHECK_THROWS_AS(sp->exchange(VectorSet::of({e2}), VectorSet::of({e1})), Error);
}

TEST_CASE("scalar bases have stable cardinality") {
  CHECK(v5()->scalar_basis().size() == 2);
  CHECK(v5()->scalar_basis(true).size() == 2);
  CHECK(v5id()->scalar_basis().size() == 2);
  CHECK(gf7_15()->scalar_basis().size() == 2);
  CHECK(dickson3_1()->scalar_basis().size() == 1);
}

TEST_CASE("span difference theorem") {
  const auto& sp = v5();
  CHECK(sp->span_difference_check(enc(sp, {1, 1}), 2, 1).all_passed());
  CHECK(sp->span_difference_check(enc(sp, {1, 0}), 1, 0).all_passed());
  CHECK(sp->span_difference_check(enc(sp, {0, 1}), 4, 1).all_passed());
  CHECK_THROWS_AS(sp->span_difference_check(0, 2, 1), Error);
  CHECK_THROWS_AS(sp->span_difference_check(enc(sp, {1, 1}), 2, 2), Error);
}

TEST_CASE("dim-span equivalence") {
  const auto& sp = v5();
  Code v = enc(sp, {1, 1});
  CHECK(sp->dim_span_equiv(v, sp->act(2, v)).all_passed());
  CHECK(sp->dim_span_equiv(v, enc(sp, {1, 0})).all_passed());  // both sides false
  CHECK(sp->act(2, v) == enc(sp, {2, 3}));
  CHECK_THROWS_AS(sp->dim_span_equiv(enc(sp, {1, 0}), v), Error);  // not in span
}

TEST_CASE("classical space: every nonzero singleton is a basis of its span") {
  const auto& sp = v5id();
  for (Code v : sp->members()) {
    if (v == 0) continue;
    VectorSet b = sp->extract_basis(VectorSet::of({v}), sp->span_of(v));
    CHECK(b == VectorSet::of({v}));
  }
}
