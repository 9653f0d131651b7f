#include "nvs/morphism.hpp"

#include <algorithm>
#include <deque>

#include "nvs/error.hpp"

namespace nvs {

bool is_subspace(const Space& sp, const VectorSet& S) {
  if (S.empty()) return false;
  for (Code a : S.codes) {
    if (!sp.is_member(a)) return false;
    for (Code b : S.codes)
      if (!S.contains(sp.add(a, b))) return false;
    for (int al = 0; al < sp.group().order; ++al)
      if (!S.contains(sp.act(Label(al), a))) return false;
  }
  return true;
}

SubspaceAsSpace subspace_as_space(SpacePtr parent, const VectorSet& members) {
  if (!is_subspace(*parent, members))
    fail(Errc::not_subspace, "set is not closed under addition and the action");
  SubspaceAsSpace out;
  out.space = Space::restriction(parent, members);
  out.report.name = "subspace-as-space (" + std::to_string(members.size()) + " vectors)";

  const VectorSet& qw = out.space->quasi_kernel();
  VectorSet generated = out.space->additive_closure(qw);
  VectorSet all;
  all.codes = out.space->members();
  out.report.add("quasi-kernel-generates", generated == all, members.size());

  VectorSet expected = set_intersection(parent->quasi_kernel(), members);
  out.report.add("quasi-kernel-is-intersection", qw == expected, qw.size());
  return out;
}

LinearMap make_map(SpacePtr domain, SpacePtr codomain,
                   const std::function<Code(Code)>& f) {
  if (domain->group_ptr().get() != codomain->group_ptr().get())
    fail(Errc::group_mismatch, "domain and codomain use different scalar groups");
  LinearMap m;
  m.domain = domain;
  m.codomain = codomain;
  m.table.reserve(domain->size());
  for (Code v : domain->members()) {
    Code w = f(v);
    codomain->local_index(w);  // validates membership
    m.table.push_back(w);
  }
  return m;
}

LinearMap map_from_images(SpacePtr domain, SpacePtr codomain,
                          const std::vector<std::pair<Code, Code>>& images) {
  if (domain->group_ptr().get() != codomain->group_ptr().get())
    fail(Errc::group_mismatch, "domain and codomain use different scalar groups");
  const Code unset = UINT32_MAX;
  std::vector<Code> table(domain->size(), unset);
  std::deque<Code> queue;
  auto assign = [&](Code v, Code w) {
    std::uint32_t i = domain->local_index(v);
    codomain->local_index(w);
    if (table[i] == unset) {
      table[i] = w;
      queue.push_back(v);
    } else if (table[i] != w) {
      fail(Errc::inconsistent_map, "conflicting images for " + domain->format(v));
    }
  };
  assign(0, 0);
  for (auto& [v, w] : images) assign(v, w);
  while (!queue.empty()) {
    Code x = queue.front();
    queue.pop_front();
    Code fx = table[domain->local_index(x)];
    for (auto& [b, w] : images)
      for (int al = 0; al < domain->group().order; ++al)
        assign(domain->add(x, domain->act(Label(al), b)),
               codomain->add(fx, codomain->act(Label(al), w)));
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == unset)
      fail(Errc::inconsistent_map,
           "images do not determine the map at " + domain->format(domain->members()[i]));
  LinearMap m;
  m.domain = domain;
  m.codomain = codomain;
  m.table = std::move(table);
  return m;
}

VerificationReport verify_linear(const LinearMap& f) {
  VerificationReport r;
  r.name = "linear-map";
  const Space& d = *f.domain;
  const Space& c = *f.codomain;
  {
    bool ok = true;
    std::string w;
    for (Code x : d.members()) {
      Code fx = f.apply(x);
      for (Code y : d.members())
        if (f.apply(d.add(x, y)) != c.add(fx, f.apply(y))) {
          ok = false;
          w = d.format(x) + " + " + d.format(y);
          break;
        }
      if (!ok) break;
    }
    r.add("additive", ok, std::uint64_t(d.size()) * d.size(), w);
  }
  {
    bool ok = true;
    std::string w;
    for (int al = 0; al < d.group().order && ok; ++al)
      for (Code x : d.members())
        if (f.apply(d.act(Label(al), x)) != c.act(Label(al), f.apply(x))) {
          ok = false;
          w = "alpha=" + std::to_string(al) + ", x=" + d.format(x);
          break;
        }
    r.add("action-compatible", ok, std::uint64_t(d.group().order) * d.size(), w);
  }
  return r;
}

Subspace kernel(const LinearMap& f) {
  std::vector<Code> ker;
  for (Code v : f.domain->members())
    if (f.apply(v) == 0) ker.push_back(v);
  return Subspace{f.domain, VectorSet(std::move(ker))};
}

Subspace image(const LinearMap& f) {
  std::vector<Code> im(f.table);
  return Subspace{f.codomain, VectorSet(std::move(im))};
}

VerificationReport qk_preimage_check(const LinearMap& f) {
  VerificationReport r;
  r.name = "quasi-kernel-preimage";
  const VectorSet& qd = f.domain->quasi_kernel();
  const VectorSet& qc = f.codomain->quasi_kernel();
  bool ok = true;
  std::string w;
  for (Code v : qd.codes)
    if (!qc.contains(f.apply(v))) {
      ok = false;
      w = f.domain->format(v);
      break;
    }
  r.add("image-in-quasi-kernel", ok, qd.size(), w);
  return r;
}

QuotientSpace quotient(SpacePtr sp, const VectorSet& W) {
  if (!is_subspace(*sp, W))
    fail(Errc::not_subspace, "quotient needs a subspace");

  // Canonical representative of each coset: its lexicographic minimum.
  // Members are visited ascending, so the first unassigned vector is the
  // minimum of its coset.
  std::vector<Code> rep_map(carrier::size(sp->group().order, sp->width()), UINT32_MAX);
  std::vector<Code> reps;
  for (Code v : sp->members()) {
    if (rep_map[v] != UINT32_MAX) continue;
    for (Code w : W.codes) rep_map[sp->add(v, w)] = v;
    reps.push_back(v);
  }

  QuotientSpace q;
  q.parent = sp;
  q.subspace = W;
  auto rep = [&rep_map](Code v) { return rep_map[v]; };
  q.space = Space::quotient_space(sp, VectorSet(reps), std::vector<Code>(rep_map));
  q.projection = make_map(sp, q.space, [&](Code v) { return rep(v); });
  q.report.name = "quotient by " + std::to_string(W.size()) + "-vector subspace";

  {
    // Operations on cosets cannot depend on the chosen representative.
    bool ok = true;
    std::string wit;
    std::uint64_t count = 0;
    for (Code v : sp->members()) {
      for (Code dw : W.codes) {
        Code v2 = sp->add(v, dw);
        for (Code u : sp->members()) {
          ++count;
          if (rep(sp->add(v, u)) != rep(sp->add(v2, u))) {
            ok = false;
            wit = "v=" + sp->format(v) + ",d=" + sp->format(dw) + ",u=" + sp->format(u);
            break;
          }
        }
        for (int al = 0; al < sp->group().order; ++al) {
          ++count;
          if (rep(sp->act(Label(al), v)) != rep(sp->act(Label(al), v2))) {
            ok = false;
            wit = "v=" + sp->format(v) + ",d=" + sp->format(dw) +
                  ",alpha=" + std::to_string(al);
            break;
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    q.report.add("well-defined", ok, count, wit);
  }
  {
    // Freeness of the induced action over all cosets and scalar pairs.
    bool ok = true;
    std::string wit;
    std::uint64_t count = 0;
    for (Code c : q.space->members()) {
      if (c == 0) continue;  // the coset W itself
      for (int a = 0; a < sp->group().order && ok; ++a)
        for (int b = a + 1; b < sp->group().order; ++b) {
          ++count;
          if (q.space->act(Label(a), c) == q.space->act(Label(b), c)) {
            ok = false;
            wit = "coset=" + sp->format(c) + ",alpha=" + std::to_string(a) +
                  ",beta=" + std::to_string(b);
            break;
          }
        }
      if (!ok) break;
    }
    q.report.add("induced-action-free", ok, count, wit);
  }
  q.report.merge(verify_linear(q.projection), "projection");
  {
    VectorSet ker = kernel(q.projection).members;
    q.report.add("projection-kernel-is-subspace", ker == W, ker.size());
  }
  {
    bool ok = true;
    std::string wit;
    const VectorSet& qv = sp->quasi_kernel();
    const VectorSet& qq = q.space->quasi_kernel();
    for (Code v : qv.codes)
      if (!qq.contains(rep(v))) {
        ok = false;
        wit = sp->format(v);
        break;
      }
    q.report.add("projected-quasi-kernel", ok, qv.size(), wit);
    VectorSet all;
    all.codes = q.space->members();
    q.report.add("quotient-quasi-kernel-generates",
                 q.space->additive_closure(qq) == all, qq.size());
  }
  return q;
}

FirstIsomorphism first_isomorphism(const LinearMap& f) {
  Subspace ker = kernel(f);
  QuotientSpace q = quotient(f.domain, ker.members);
  Subspace im = image(f);
  if (!is_subspace(*f.codomain, im.members))
    fail(Errc::not_subspace, "image is not a subspace; the map is not linear");
  SpacePtr target = Space::restriction(f.codomain, im.members);

  FirstIsomorphism out;
  out.iso = make_map(q.space, target, [&](Code r) { return f.apply(r); });
  out.report.name = "first-isomorphism";

  {
    // Well-defined: f must be constant on every coset of its kernel.
    bool ok = true;
    std::string wit;
    for (Code v : f.domain->members())
      if (f.apply(v) != out.iso.apply(q.projection.apply(v))) {
        ok = false;
        wit = f.domain->format(v);
        break;
      }
    out.report.add("well-defined", ok, f.domain->size(), wit);
  }
  out.report.merge(verify_linear(out.iso), "iso");
  {
    std::vector<Code> values(out.iso.table);
    std::sort(values.begin(), values.end());
    bool injective = std::adjacent_find(values.begin(), values.end()) == values.end();
    out.report.add("injective", injective, values.size());
    out.report.add("surjective", VectorSet(values) == im.members, im.members.size());
    out.report.add("cardinality", q.space->size() == im.members.size(), 1,
                   std::to_string(q.space->size()) + " cosets vs " +
                       std::to_string(im.members.size()) + " image vectors");
  }
  return out;
}

VerificationReport subspace_kernel_correspondence(SpacePtr sp, const VectorSet& S) {
  VerificationReport r;
  r.name = "subspace-kernel-correspondence";
  if (!is_subspace(*sp, S)) {
    r.add("non-subspace-reported", true, S.size(), "no kernel witness claimed");
    return r;
  }
  QuotientSpace q = quotient(sp, S);
  VectorSet ker = kernel(q.projection).members;
  r.add("kernel-witness", ker == S, ker.size(), "quotient projection");
  return r;
}

}  // namespace nvs
