#include <doctest.h>

#include "fixtures.hpp"
#include "nvs/error.hpp"
#include "nvs/morphism.hpp"

using namespace nvs;

namespace {

LinearMap project_first(const SpacePtr& sp) {
  return make_map(sp, sp, [&](Code v) {
    Vector c = sp->decode(v);
    c[1] = 0;
    return sp->encode(c);
  });
}

}  // namespace

TEST_CASE("subspace recognition") {
  const auto& sp = v5();
  CHECK(is_subspace(*sp, sp->span_of(enc(sp, {1, 0}))));
  CHECK(is_subspace(*sp, VectorSet::of({0})));
  CHECK_FALSE(is_subspace(*sp, VectorSet::of({0, enc(sp, {1, 1})})));
  CHECK_FALSE(is_subspace(*sp, VectorSet{}));
  VectorSet carrier;
  carrier.codes = sp->members();
  CHECK(is_subspace(*sp, carrier));
}

TEST_CASE("a subspace is a near-vector space in its own right") {
  const auto& sp = v5();
  SubspaceAsSpace w = subspace_as_space(sp, sp->span_of(enc(sp, {1, 0})));
  CHECK(w.report.all_passed());
  CHECK(w.space->size() == 5);
  CHECK(w.space->quasi_kernel().size() == 5);  // Q(W) = W on the axis

  VectorSet carrier;
  carrier.codes = sp->members();
  CHECK(subspace_as_space(sp, carrier).report.all_passed());
  SubspaceAsSpace trivial = subspace_as_space(sp, VectorSet::of({0}));
  CHECK(trivial.report.all_passed());
  CHECK(trivial.space->size() == 1);
  CHECK(trivial.space->scalar_basis().empty());
}

TEST_CASE("kernel and image of the first-coordinate projection") {
  const auto& sp = v5();
  LinearMap f = project_first(sp);
  CHECK(verify_linear(f).all_passed());
  CHECK(kernel(f).members == sp->span_of(enc(sp, {0, 1})));
  CHECK(image(f).members == sp->span_of(enc(sp, {1, 0})));

  LinearMap id = make_map(sp, sp, [](Code v) { return v; });
  CHECK(kernel(id).members == VectorSet::of({0}));
  CHECK(image(id).members.size() == 25);
  LinearMap zero = make_map(sp, sp, [](Code) { return Code(0); });
  CHECK(kernel(zero).members.size() == 25);
  CHECK(image(zero).members == VectorSet::of({0}));
}

TEST_CASE("quasi-kernel maps into the quasi-kernel") {
  const auto& sp = v5();
  CHECK(qk_preimage_check(project_first(sp)).all_passed());
  CHECK(qk_preimage_check(make_map(sp, sp, [](Code v) { return v; })).all_passed());
  CHECK(qk_preimage_check(make_map(sp, sp, [](Code) { return Code(0); })).all_passed());
}

TEST_CASE("quotient by an axis") {
  const auto& sp = v5();
  QuotientSpace q = quotient(sp, sp->span_of(enc(sp, {1, 0})));
  CHECK(q.report.all_passed());
  CHECK(q.space->size() == 5);
  // representatives are the (0,b) column and the induced action keeps the
  // cube twist
  CHECK(q.space->is_member(enc(sp, {0, 1})));
  CHECK(q.space->act(2, enc(sp, {0, 1})) == enc(sp, {0, 3}));
  CHECK(kernel(q.projection).members == sp->span_of(enc(sp, {1, 0})));
}

TEST_CASE("trivial quotients") {
  const auto& sp = v5();
  QuotientSpace by_zero = quotient(sp, VectorSet::of({0}));
  CHECK(by_zero.report.all_passed());
  CHECK(by_zero.space->size() == 25);
  VectorSet carrier;
  carrier.codes = sp->members();
  QuotientSpace by_all = quotient(sp, carrier);
  CHECK(by_all.report.all_passed());
  CHECK(by_all.space->size() == 1);
  CHECK_THROWS_AS(quotient(sp, VectorSet::of({0, enc(sp, {1, 1})})), Error);
}

TEST_CASE("first isomorphism theorem for the projection") {
  const auto& sp = v5();
  FirstIsomorphism fit = first_isomorphism(project_first(sp));
  CHECK(fit.report.all_passed());
  CHECK(fit.iso.domain->size() == 5);
  CHECK(fit.iso.codomain->size() == 5);

  FirstIsomorphism id_fit = first_isomorphism(make_map(sp, sp, [](Code v) { return v; }));
  CHECK(id_fit.report.all_passed());
  CHECK(id_fit.iso.domain->size() == 25);
  FirstIsomorphism zero_fit =
      first_isomorphism(make_map(sp, sp, [](Code) { return Code(0); }));
  CHECK(zero_fit.report.all_passed());
  CHECK(zero_fit.iso.domain->size() == 1);
}

TEST_CASE("subspace kernel correspondence") {
  const auto& sp = v5();
  CHECK(subspace_kernel_correspondence(sp, sp->span_of(enc(sp, {0, 1}))).all_passed());
  CHECK(subspace_kernel_correspondence(sp, VectorSet::of({0})).all_passed());
  VerificationReport r =
      subspace_kernel_correspondence(sp, VectorSet::of({0, enc(sp, {1, 1})}));
  CHECK(r.all_passed());  // reported as not a subspace, no witness claimed
  CHECK(r.checks.size() == 1);
  CHECK(r.checks[0].key == "non-subspace-reported");
}

TEST_CASE("maps from basis images complete by closure") {
  const auto& sp = v5();
  Code e1 = enc(sp, {1, 0}), e2 = enc(sp, {0, 1});
  // send both basis vectors into the first axis compatibly
  LinearMap f = map_from_images(sp, sp, {{e1, enc(sp, {2, 0})}, {e2, 0}});
  CHECK(verify_linear(f).all_passed());
  CHECK(f.apply(enc(sp, {1, 1})) == enc(sp, {2, 0}));
  // conflicting images are rejected
  CHECK_THROWS_AS(map_from_images(sp, sp, {{e1, e1}, {sp->act(2, e1), e2}}), Error);
}

TEST_CASE("restrictions of quotients still work") {
  const auto& sp = v5();
  QuotientSpace q = quotient(sp, sp->span_of(enc(sp, {1, 0})));
  VectorSet sub = q.space->span_of(enc(sp, {0, 1}));
  SubspaceAsSpace nested = subspace_as_space(q.space, sub);
  CHECK(nested.report.all_passed());
  CHECK(nested.space->size() == 5);
}
