#include "nvs/scalar_group.hpp"

#include <algorithm>
#include <sstream>

#include "nvs/error.hpp"
#include "nvs/kernels.hpp"

namespace nvs {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns the prime p with q = p^e, or 0 if q is not a prime power.
int prime_power_base(int q, int* exponent = nullptr) {
  if (q < 2) return 0;
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (p == 0) p = q;
  int e = 0, m = q;
  while (m % p == 0) { m /= p; ++e; }
  if (m != 1) return 0;
  if (exponent) *exponent = e;
  return p;
}

// Polynomials over GF(p), low degree first.
using Poly = std::vector<int>;

int poly_deg(const Poly& a) {
  for (int i = int(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  int dm = poly_deg(m);
  for (int i = poly_deg(a); i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      int idx = i - dm + j;
      a[idx] = ((a[idx] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(std::max(dm, 1));
  return a;
}

bool poly_is_zero(const Poly& a) { return poly_deg(a) < 0; }

// Monic m irreducible over GF(p)? Brute-force trial division; fields here
// have at most 256 elements so every degree involved is tiny.
bool poly_irreducible(const Poly& m, int p) {
  int k = poly_deg(m);
  if (k < 1) return false;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long c = 0; c < count; ++c) {
      Poly div(d + 1, 0);
      long long t = c;
      for (int i = 0; i < d; ++i) { div[i] = int(t % p); t /= p; }
      div[d] = 1;
      if (poly_is_zero(poly_mod(m, div, p))) return false;
    }
  }
  return true;
}

// First monic irreducible of degree k in lexicographic order on the
// coefficient tuple (c0,...,c_{k-1}). Reproduces x^2+1 for GF(9),
// x^2+2 for GF(25) and x^2+x+1 for GF(4).
Poly default_modulus(int p, int k) {
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long c = 0; c < count; ++c) {
    Poly m(k + 1, 0);
    long long t = c;
    for (int i = 0; i < k; ++i) { m[i] = int(t % p); t /= p; }
    m[k] = 1;
    if (poly_irreducible(m, p)) return m;
  }
  fail(Errc::reducible_modulus, "no irreducible modulus found (degree " +
                                    std::to_string(k) + " over GF(" + std::to_string(p) + "))");
}

Poly label_to_poly(Label a, int p, int digits) {
  Poly r(digits, 0);
  int v = a;
  for (int i = 0; i < digits; ++i) { r[i] = v % p; v /= p; }
  return r;
}

Label poly_to_label(const Poly& a, int p, int digits) {
  long long v = 0;
  for (int i = digits - 1; i >= 0; --i) v = v * p + (i < int(a.size()) ? a[i] : 0);
  return Label(v);
}

// Fills the field multiplication, carrier addition and negation tables for
// GF(p^digits) with the given modulus (ignored when digits == 1).
void build_field_tables(ScalarGroup& g, const Poly& modulus) {
  int n = g.order, p = g.char_p, digits = g.digits;
  g.field_table.assign(std::size_t(n) * n, 0);
  g.add_table.assign(std::size_t(n) * n, 0);
  g.neg_table.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    Poly pa = label_to_poly(Label(a), p, digits);
    Poly na(digits, 0);
    for (int i = 0; i < digits; ++i) na[i] = (p - pa[i]) % p;
    g.neg_table[a] = poly_to_label(na, p, digits);
    for (int b = 0; b < n; ++b) {
      Poly pb = label_to_poly(Label(b), p, digits);
      Poly sum(digits, 0);
      for (int i = 0; i < digits; ++i) sum[i] = (pa[i] + pb[i]) % p;
      g.add_table[std::size_t(a) * n + b] = poly_to_label(sum, p, digits);
      Poly prod = digits == 1 ? Poly{(pa[0] * pb[0]) % p}
                              : poly_mod(poly_mul(pa, pb, p), modulus, p);
      g.field_table[std::size_t(a) * n + b] = poly_to_label(prod, p, digits);
    }
  }
}

void build_inverses(ScalarGroup& g) {
  g.inv_table.assign(g.order, 0);
  for (int a = 1; a < g.order; ++a) {
    bool found = false;
    for (int b = 1; b < g.order; ++b) {
      if (g.mul(Label(a), Label(b)) == 1 && g.mul(Label(b), Label(a)) == 1) {
        g.inv_table[a] = Label(b);
        found = true;
        break;
      }
    }
    if (!found)
      fail(Errc::axiom_failure, "element " + std::to_string(a) + " has no inverse");
  }
}

// Candidate Dickson product: underlying field product with Frobenius applied
// to the right factor when the left factor is a nonsquare (convention A), or
// mirrored (convention B). Exactly one convention makes left multiplication
// an additive endomorphism, which the vector action needs.
struct DicksonCandidate {
  std::vector<Label> table;
  bool group_ok = false;
  bool left_additive = false;
};

DicksonCandidate dickson_candidate(const ScalarGroup& field, int q, bool selector_left) {
  int n = field.order;
  std::vector<char> is_square(n, 0);
  for (int a = 1; a < n; ++a)
    is_square[a] = field.power(Label(a), unsigned((n - 1) / 2)) == 1;
  std::vector<Label> frob(n, 0);
  for (int a = 0; a < n; ++a) frob[a] = field.power(Label(a), unsigned(q));

  DicksonCandidate cand;
  cand.table.assign(std::size_t(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == 0 || b == 0) continue;
      Label v;
      if (selector_left)
        v = is_square[a] ? field.fmul(Label(a), Label(b)) : field.fmul(Label(a), frob[b]);
      else
        v = is_square[b] ? field.fmul(Label(a), Label(b)) : field.fmul(frob[a], Label(b));
      cand.table[std::size_t(a) * n + b] = v;
    }

  auto mul = [&](int a, int b) { return cand.table[std::size_t(a) * n + b]; };
  cand.group_ok = true;
  for (int a = 1; a < n && cand.group_ok; ++a) {
    if (mul(1, a) != a || mul(a, 1) != a) cand.group_ok = false;
    bool has_inv = false;
    for (int b = 1; b < n; ++b)
      if (mul(a, b) == 1 && mul(b, a) == 1) { has_inv = true; break; }
    if (!has_inv) cand.group_ok = false;
  }
  for (int a = 1; a < n && cand.group_ok; ++a)
    for (int b = 1; b < n && cand.group_ok; ++b) {
      if (mul(a, b) == 0) { cand.group_ok = false; break; }
      for (int c = 1; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) { cand.group_ok = false; break; }
    }
  cand.left_additive = true;
  for (int a = 1; a < n && cand.left_additive; ++a)
    for (int x = 0; x < n && cand.left_additive; ++x)
      for (int y = 0; y < n; ++y)
        if (mul(a, field.add(Label(x), Label(y))) !=
            field.add(mul(a, x), mul(a, y))) {
          cand.left_additive = false;
          break;
        }
  return cand;
}

std::string poly_str(const Poly& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << m[i];
  }
  return os.str();
}

}  // namespace

ScalarGroupSpec ScalarGroupSpec::prime(int p) {
  ScalarGroupSpec s;
  s.kind = Kind::prime;
  s.p = p;
  s.k = 1;
  return s;
}

ScalarGroupSpec ScalarGroupSpec::extension(int p, int k, std::vector<int> modulus) {
  ScalarGroupSpec s;
  s.kind = Kind::extension;
  s.p = p;
  s.k = k;
  s.modulus = std::move(modulus);
  return s;
}

ScalarGroupSpec ScalarGroupSpec::dickson(int q) {
  ScalarGroupSpec s;
  s.kind = Kind::dickson;
  s.p = q;
  s.k = 2;
  return s;
}

int ScalarGroupSpec::order() const {
  long long o = 1;
  int reps = kind == Kind::dickson ? 2 : k;
  for (int i = 0; i < reps; ++i) o *= p;
  return int(o);
}

Label ScalarGroup::inverse(Label a) const {
  if (a == 0) fail(Errc::zero_inverse, "0 has no multiplicative inverse");
  return inv_table[a];
}

Label ScalarGroup::power(Label a, unsigned e) const {
  Label r = 1;
  for (unsigned i = 0; i < e; ++i) r = fmul(r, a);
  return r;
}

bool ScalarGroup::abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b)
      if (mul(Label(a), Label(b)) != mul(Label(b), Label(a))) return false;
  return true;
}

std::string ScalarGroup::describe() const {
  std::ostringstream os;
  switch (spec.kind) {
    case ScalarGroupSpec::Kind::prime:
      os << "gf(" << spec.p << ")";
      break;
    case ScalarGroupSpec::Kind::extension:
      os << "gf(" << order << "; modulus=" << poly_str(spec.modulus) << ")";
      break;
    case ScalarGroupSpec::Kind::dickson:
      os << "dickson(" << spec.p << "; modulus=" << poly_str(spec.modulus)
         << "; convention=" << convention << ")";
      break;
  }
  return os.str();
}

ScalarGroupPtr build_scalar_group(const ScalarGroupSpec& spec) {
  auto g = std::make_shared<ScalarGroup>();
  g->spec = spec;

  switch (spec.kind) {
    case ScalarGroupSpec::Kind::prime: {
      if (!is_prime(spec.p))
        fail(Errc::not_prime, std::to_string(spec.p) + " is not prime");
      g->order = spec.p;
      g->char_p = spec.p;
      g->digits = 1;
      if (g->order > kMaxOrder)
        fail(Errc::semantic_error, "order exceeds cap of 256");
      build_field_tables(*g, {});
      g->mul_table = g->field_table;
      break;
    }
    case ScalarGroupSpec::Kind::extension: {
      if (!is_prime(spec.p))
        fail(Errc::not_prime, std::to_string(spec.p) + " is not prime");
      if (spec.k < 2)
        fail(Errc::semantic_error, "extension degree must be at least 2");
      g->order = spec.order();
      if (g->order > kMaxOrder)
        fail(Errc::semantic_error, "order exceeds cap of 256");
      g->char_p = spec.p;
      g->digits = spec.k;
      Poly modulus;
      if (spec.modulus.empty()) {
        modulus = default_modulus(spec.p, spec.k);
      } else {
        modulus = spec.modulus;
        for (int& c : modulus) c = ((c % spec.p) + spec.p) % spec.p;
        if (poly_deg(modulus) != spec.k || modulus[spec.k] != 1)
          fail(Errc::reducible_modulus, "modulus must be monic of degree " +
                                            std::to_string(spec.k));
        if (!poly_irreducible(modulus, spec.p))
          fail(Errc::reducible_modulus, "modulus is reducible over GF(" +
                                            std::to_string(spec.p) + ")");
      }
      g->spec.modulus = modulus;
      build_field_tables(*g, modulus);
      g->mul_table = g->field_table;
      break;
    }
    case ScalarGroupSpec::Kind::dickson: {
      int q = spec.p, e = 0;
      int p = prime_power_base(q, &e);
      if (p == 0)
        fail(Errc::not_prime, std::to_string(q) + " is not a prime power");
      if (p == 2)
        fail(Errc::even_characteristic_dickson, "q must be odd");
      g->order = q * q;
      if (g->order > kMaxOrder)
        fail(Errc::semantic_error, "order exceeds cap of 256");
      g->char_p = p;
      g->digits = 2 * e;
      Poly modulus = spec.modulus.empty() ? default_modulus(p, 2 * e) : [&] {
        Poly m = spec.modulus;
        for (int& c : m) c = ((c % p) + p) % p;
        if (poly_deg(m) != 2 * e || m[2 * e] != 1 || !poly_irreducible(m, p))
          fail(Errc::reducible_modulus, "bad modulus for GF(" +
                                            std::to_string(g->order) + ")");
        return m;
      }();
      g->spec.modulus = modulus;
      build_field_tables(*g, modulus);
      // Pick the twist side convention empirically: the product must be a
      // group on F\{0} and left multiplication must be additive.
      DicksonCandidate a = dickson_candidate(*g, q, /*selector_left=*/true);
      DicksonCandidate b = dickson_candidate(*g, q, /*selector_left=*/false);
      if (a.group_ok && a.left_additive) {
        g->mul_table = std::move(a.table);
        g->convention = "square-selector=left,frobenius=right";
      } else if (b.group_ok && b.left_additive) {
        g->mul_table = std::move(b.table);
        g->convention = "square-selector=right,frobenius=left";
      } else {
        fail(Errc::axiom_failure, "no Dickson convention satisfies the axioms");
      }
      break;
    }
  }

  g->neg_one = Label(g->char_p - 1);
  build_inverses(*g);

  VerificationReport r = verify_scalar_group(*g);
  if (!r.all_passed()) {
    for (const Check& c : r.checks)
      if (!c.passed)
        fail(Errc::axiom_failure, "construction violates " + c.key +
                                      (c.witness.empty() ? "" : " at " + c.witness));
  }
  return g;
}

VerificationReport verify_scalar_group(const ScalarGroup& g) {
  VerificationReport r;
  r.name = "scalar-group " + g.describe();
  const int n = g.order;

  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (g.mul(Label(a), 0) != 0 || g.mul(0, Label(a)) != 0) {
        ok = false;
        w = "a=" + std::to_string(a);
      }
    r.add("absorbing-zero", ok, std::uint64_t(n), w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n && ok; ++a)
      if (g.mul(1, Label(a)) != a || g.mul(Label(a), 1) != a) {
        ok = false;
        w = "a=" + std::to_string(a);
      }
    r.add("identity", ok, std::uint64_t(n), w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 1; a < n && ok; ++a)
      for (int b = 1; b < n; ++b)
        if (g.mul(Label(a), Label(b)) == 0) {
          ok = false;
          w = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
          break;
        }
    r.add("closure-nonzero", ok, std::uint64_t(n - 1) * (n - 1), w);
  }
  {
    kernels::ScanResult s = kernels::group_associativity_parallel(g);
    std::string w;
    if (!s.ok)
      w = "a=" + std::to_string(s.witness[0]) + ",b=" + std::to_string(s.witness[1]) +
          ",c=" + std::to_string(s.witness[2]);
    r.add("associativity", s.ok, s.count, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 1; a < n && ok; ++a) {
      Label i = g.inv_table[a];
      if (i == 0 || g.mul(Label(a), i) != 1 || g.mul(i, Label(a)) != 1) {
        ok = false;
        w = "a=" + std::to_string(a);
      }
    }
    r.add("inverses", ok, std::uint64_t(n - 1), w);
  }
  {
    // {1, neg_one} must be exactly the solution set of x^2 = 1.
    bool ok = true;
    std::string w;
    for (int x = 0; x < n; ++x) {
      bool sq1 = g.mul(Label(x), Label(x)) == 1;
      bool expect = x == 1 || x == g.neg_one;
      if (sq1 != expect) {
        ok = false;
        w = "x=" + std::to_string(x);
        break;
      }
    }
    r.add("square-roots-of-one", ok, std::uint64_t(n), w);
  }
  {
    bool ok = true;
    std::string w;
    for (int a = 0; a < n; ++a)
      if (g.mul(g.neg_one, g.mul(g.neg_one, Label(a))) != a) {
        ok = false;
        w = "a=" + std::to_string(a);
        break;
      }
    r.add("neg-one-involution", ok, std::uint64_t(n), w);
  }
  return r;
}

}  // namespace nvs
