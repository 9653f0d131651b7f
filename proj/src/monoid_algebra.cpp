#include "nvs/monoid_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "nvs/error.hpp"

namespace nvs {
namespace {

void require_same_group(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group.get() != b.group.get())
    fail(Errc::group_mismatch, "algebra elements over different scalar groups");
}

// Distinct sign representatives of F\{0}: the smaller label of {a, -a}.
std::vector<Label> sign_reps(const ScalarGroup& g) {
  std::vector<Label> reps;
  for (int a = 1; a < g.order; ++a) {
    Label m = g.mul(g.neg_one, Label(a));
    if (a <= m) reps.push_back(Label(a));
  }
  return reps;
}

// All normalized elements with support and |coefficient| within the bounds,
// in a deterministic order starting with zero.
std::vector<AlgebraElement> bounded_elements(ScalarGroupPtr g, int support_bound,
                                             long long coeff_bound) {
  std::vector<Label> reps = sign_reps(*g);
  std::vector<AlgebraElement> out;
  out.push_back(algebra_zero(g));
  std::vector<std::size_t> idx;
  std::vector<std::pair<Label, long long>> terms;
  auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == 0) return;
    for (std::size_t i = start; i < reps.size(); ++i) {
      for (long long c = -coeff_bound; c <= coeff_bound; ++c) {
        if (c == 0) continue;
        terms.emplace_back(reps[i], c);
        AlgebraElement e;
        e.group = g;
        for (auto& [l, n] : terms) e.coeffs[l] = n;
        out.push_back(std::move(e));
        self(self, i + 1, depth - 1);
        terms.pop_back();
      }
    }
  };
  rec(rec, 0, support_bound);
  return out;
}

VectorSet orbit_closure(const Space& sp, Code v) {
  std::vector<Code> gens;
  for (int a = 0; a < sp.group().order; ++a)
    for (int n = 0; n < sp.group().char_p; ++n)
      gens.push_back(sp.act(Label(a), sp.multiple(n, v)));
  return sp.additive_closure(VectorSet(std::move(gens)));
}

}  // namespace

AlgebraElement normalize(ScalarGroupPtr g,
                         const std::vector<std::pair<Label, long long>>& terms) {
  AlgebraElement e;
  e.group = g;
  for (auto& [label, n] : terms) {
    if (label == 0 || n == 0) continue;  // x_0 is the ring zero
    Label m = g->mul(g->neg_one, label);
    Label rep = std::min(label, m);
    long long signed_n = label == rep ? n : -n;
    auto it = e.coeffs.find(rep);
    if (it == e.coeffs.end()) {
      e.coeffs.emplace(rep, signed_n);
    } else {
      it->second += signed_n;
      if (it->second == 0) e.coeffs.erase(it);
    }
  }
  return e;
}

AlgebraElement algebra_zero(ScalarGroupPtr g) {
  AlgebraElement e;
  e.group = std::move(g);
  return e;
}

AlgebraElement algebra_one(ScalarGroupPtr g) {
  return normalize(std::move(g), {{Label(1), 1}});
}

AlgebraElement ring_add(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_group(a, b);
  std::vector<std::pair<Label, long long>> terms(a.coeffs.begin(), a.coeffs.end());
  terms.insert(terms.end(), b.coeffs.begin(), b.coeffs.end());
  return normalize(a.group, terms);
}

AlgebraElement ring_neg(const AlgebraElement& a) {
  std::vector<std::pair<Label, long long>> terms;
  for (auto& [l, n] : a.coeffs) terms.emplace_back(l, -n);
  return normalize(a.group, terms);
}

AlgebraElement ring_mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_group(a, b);
  std::vector<std::pair<Label, long long>> terms;
  for (auto& [la, na] : a.coeffs)
    for (auto& [lb, nb] : b.coeffs)
      terms.emplace_back(a.group->mul(la, lb), na * nb);
  return normalize(a.group, terms);
}

std::string to_string(const AlgebraElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [l, n] : a.coeffs) {
    if (first) {
      if (n < 0) os << "-";
      first = false;
    } else {
      os << (n < 0 ? " - " : " + ");
    }
    os << (n < 0 ? -n : n) << "*x[" << l << "]";
  }
  return os.str();
}

Code module_act(const AlgebraElement& a, const Space& sp, Code v) {
  if (a.group.get() != sp.group_ptr().get())
    fail(Errc::group_mismatch, "algebra element over a different scalar group");
  Code acc = 0;
  for (auto& [label, n] : a.coeffs) {
    Label l = label;
    long long m = n;
    if (m < 0) {  // x_a * n = x_{-a} * (-n)
      l = sp.group().mul(sp.group().neg_one, l);
      m = -m;
    }
    acc = sp.add(acc, sp.act(l, sp.multiple(m, v)));
  }
  return acc;
}

VectorSet orbit(const Space& sp, Code v) {
  VectorSet o = orbit_closure(sp, v);
  if (!(o == sp.span_of(v)))
    fail(Errc::axiom_failure, "orbit of " + sp.format(v) + " differs from its span");
  return o;
}

std::vector<AlgebraElement> stabilizer_qk(const Space& sp, Code v, int bound) {
  if (v == 0) fail(Errc::zero_base, "stabilizer characterization needs v != 0");
  if (!sp.in_quasi_kernel(v))
    fail(Errc::not_quasi_kernel, sp.format(v) + " is not in the quasi-kernel");
  InducedAddition plus = sp.induced_add(v);

  std::vector<AlgebraElement> fixers;
  for (const AlgebraElement& e : bounded_elements(sp.group_ptr(), bound, bound)) {
    bool fixes = module_act(e, sp, v) == v;
    // The characterization: the flattened positive-multiple scalars must
    // +_v-sum to exactly 1.
    std::vector<Label> flat;
    for (auto& [label, n] : e.coeffs) {
      Label l = label;
      long long m = n;
      if (m < 0) {
        l = sp.group().mul(sp.group().neg_one, l);
        m = -m;
      }
      for (long long i = 0; i < m; ++i) flat.push_back(l);
    }
    bool characterized = !flat.empty() && plus.iterated(flat) == 1;
    if (fixes != characterized)
      fail(Errc::axiom_failure,
           "stabilizer characterization mismatch at " + to_string(e));
    if (fixes) fixers.push_back(e);
  }
  return fixers;
}

bool projective_fixed_point(const Space& sp, Code v, Code* witness) {
  // The zero vector is excluded from the quantifier: the zero ring element
  // sends every line to the zero line, so including it would leave no fixed
  // nonzero line at all.
  VectorSet lv = sp.line(v);
  for (Code w : sp.span_of(v).codes) {
    if (w == 0) continue;
    if (!(sp.line(w) == lv)) {
      if (witness) *witness = w;
      return false;
    }
  }
  return true;
}

VerificationReport verify_ring_axioms(ScalarGroupPtr g, int support_bound,
                                      long long coeff_bound) {
  VerificationReport r;
  r.name = "ring-axioms over " + g->describe();
  std::vector<AlgebraElement> u = bounded_elements(g, support_bound, coeff_bound);
  // Scans are exhaustive whenever the bounded universe fits under the caps
  // (it does for every desk fixture); larger universes scan a prefix.
  const std::size_t pair_cap = 1024, triple_cap = 128;
  const std::size_t np = std::min(u.size(), pair_cap);
  const std::size_t nt = std::min(u.size(), triple_cap);
  const AlgebraElement one = algebra_one(g);
  const AlgebraElement zero = algebra_zero(g);

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < np && ok; ++i) {
      if (!(ring_mul(u[i], one) == u[i]) || !(ring_mul(one, u[i]) == u[i]) ||
          !(ring_mul(u[i], zero) == zero) ||
          !ring_add(u[i], ring_neg(u[i])).is_zero()) {
        ok = false;
        w = to_string(u[i]);
      }
    }
    r.add("unit-zero-negation", ok, np, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < np && ok; ++i)
      for (std::size_t j = 0; j < np; ++j)
        if (!(ring_add(u[i], u[j]) == ring_add(u[j], u[i]))) {
          ok = false;
          w = to_string(u[i]) + " | " + to_string(u[j]);
          break;
        }
    r.add("add-commutative", ok, np * np, w);
  }
  if (g->abelian()) {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < np && ok; ++i)
      for (std::size_t j = 0; j < np; ++j)
        if (!(ring_mul(u[i], u[j]) == ring_mul(u[j], u[i]))) {
          ok = false;
          w = to_string(u[i]) + " | " + to_string(u[j]);
          break;
        }
    r.add("mul-commutative", ok, np * np, w);
  } else {
    // The commutative presentation collapses distinct products over a
    // non-abelian scalar group; the normal form keeps the monoid ring, so
    // commutativity is not claimed here.
    r.add("mul-commutative", true, 0, "not applicable: non-abelian scalar group");
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < nt && ok; ++i)
      for (std::size_t j = 0; j < nt && ok; ++j)
        for (std::size_t k = 0; k < nt; ++k) {
          bool good =
              ring_add(ring_add(u[i], u[j]), u[k]) == ring_add(u[i], ring_add(u[j], u[k])) &&
              ring_mul(ring_mul(u[i], u[j]), u[k]) == ring_mul(u[i], ring_mul(u[j], u[k])) &&
              ring_mul(u[i], ring_add(u[j], u[k])) ==
                  ring_add(ring_mul(u[i], u[j]), ring_mul(u[i], u[k])) &&
              ring_mul(ring_add(u[i], u[j]), u[k]) ==
                  ring_add(ring_mul(u[i], u[k]), ring_mul(u[j], u[k]));
          if (!good) {
            ok = false;
            w = to_string(u[i]) + " | " + to_string(u[j]) + " | " + to_string(u[k]);
            break;
          }
        }
    r.add("associative-distributive", ok, nt * nt * nt, w);
  }
  return r;
}

VerificationReport verify_module_axioms(const Space& sp, int support_bound,
                                        long long coeff_bound) {
  VerificationReport r;
  r.name = "module-axioms";
  ScalarGroupPtr g = sp.group_ptr();
  std::vector<AlgebraElement> u = bounded_elements(g, support_bound, coeff_bound);
  const std::size_t pair_cap = 64;
  const std::size_t np = std::min(u.size(), pair_cap);
  const auto& members = sp.members();

  {
    bool ok = true;
    std::string w;
    const AlgebraElement one = algebra_one(g);
    for (Code v : members)
      if (module_act(one, sp, v) != v) {
        ok = false;
        w = sp.format(v);
        break;
      }
    r.add("unit-acts-trivially", ok, members.size(), w);
  }
  {
    bool ok = true;
    std::string w;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < np && ok; ++i)
      for (std::size_t j = 0; j < np && ok; ++j)
        for (Code v : members) {
          ++count;
          if (module_act(ring_add(u[i], u[j]), sp, v) !=
                  sp.add(module_act(u[i], sp, v), module_act(u[j], sp, v)) ||
              module_act(ring_mul(u[i], u[j]), sp, v) !=
                  module_act(u[i], sp, module_act(u[j], sp, v))) {
            ok = false;
            w = to_string(u[i]) + " | " + to_string(u[j]) + " | " + sp.format(v);
            break;
          }
        }
    r.add("linearity-in-the-ring", ok, count, w);
  }
  {
    bool ok = true;
    std::string w;
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < np && ok; ++i)
      for (Code v : members) {
        Code av = module_act(u[i], sp, v);
        for (Code x : members) {
          ++count;
          if (module_act(u[i], sp, sp.add(v, x)) != sp.add(av, module_act(u[i], sp, x))) {
            ok = false;
            w = to_string(u[i]) + " | " + sp.format(v) + " | " + sp.format(x);
            break;
          }
        }
        if (!ok) break;
      }
    r.add("additive-in-the-vector", ok, count, w);
  }
  {
    // Acting on raw term lists agrees with acting on the normal form.
    bool ok = true;
    std::string w;
    std::uint64_t count = 0;
    const int n = g->order;
    for (int l1 = 0; l1 < n && ok; ++l1)
      for (long long c1 = -2; c1 <= 2 && ok; ++c1)
        for (int l2 = 0; l2 < n && ok; ++l2)
          for (long long c2 = -2; c2 <= 2 && ok; ++c2) {
            std::vector<std::pair<Label, long long>> raw = {{Label(l1), c1},
                                                            {Label(l2), c2}};
            AlgebraElement e = normalize(g, raw);
            for (Code v : members) {
              ++count;
              Code direct = 0;
              for (auto& [l, c] : raw)
                direct = sp.add(direct, sp.act(l, sp.multiple(c, v)));
              if (direct != module_act(e, sp, v)) {
                ok = false;
                w = "x[" + std::to_string(l1) + "]*" + std::to_string(c1) + " + x[" +
                    std::to_string(l2) + "]*" + std::to_string(c2) + " at " + sp.format(v);
                break;
              }
            }
          }
    r.add("well-defined-on-normal-forms", ok, count, w);
  }
  return r;
}

VerificationReport verify_orbit_span(const Space& sp) {
  VerificationReport r;
  r.name = "orbit-equals-span";
  bool ok = true;
  std::string w;
  for (Code v : sp.members())
    if (!(orbit_closure(sp, v) == sp.span_of(v))) {
      ok = false;
      w = sp.format(v);
      break;
    }
  r.add("orbit-equals-span", ok, sp.size(), w);
  return r;
}

VerificationReport verify_projective_quasi_kernel(const Space& sp) {
  VerificationReport r;
  r.name = "projective-fixed-points";
  bool ok = true;
  std::string w;
  for (Code v : sp.members()) {
    bool fixed = projective_fixed_point(sp, v);
    if (fixed != sp.in_quasi_kernel(v)) {
      ok = false;
      w = sp.format(v);
      break;
    }
  }
  r.add("fixed-points-are-quasi-kernel", ok, sp.size(), w);
  return r;
}

}  // namespace nvs
