#include "nvs/kernels.hpp"

#include <algorithm>

#include "nvs/action.hpp"
#include "nvs/carrier.hpp"
#include "nvs/space.hpp"

namespace nvs::kernels {
namespace {

// Deterministic parallel reduction: every thread keeps the smallest failing
// outer index it saw; the merged witness is the one a serial scan would have
// reported first.
template <typename Body>
ScanResult outer_scan_serial(std::uint32_t outer, std::uint64_t per_case, Body body) {
  ScanResult r;
  r.count = std::uint64_t(outer) * per_case;
  for (std::uint32_t i = 0; i < outer; ++i) {
    if (!body(i, r.witness)) {
      r.ok = false;
      return r;
    }
  }
  return r;
}

template <typename Body>
ScanResult outer_scan_parallel(std::uint32_t outer, std::uint64_t per_case, Body body) {
  ScanResult r;
  r.count = std::uint64_t(outer) * per_case;
  std::int64_t first_bad = -1;
  std::array<std::uint32_t, 3> bad{};
#pragma omp parallel
  {
    std::int64_t local_bad = -1;
    std::array<std::uint32_t, 3> local_w{};
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < std::int64_t(outer); ++i) {
      if (local_bad >= 0) continue;
      std::array<std::uint32_t, 3> w{};
      if (!body(std::uint32_t(i), w)) {
        local_bad = i;
        local_w = w;
      }
    }
#pragma omp critical
    {
      if (local_bad >= 0 && (first_bad < 0 || local_bad < first_bad)) {
        first_bad = local_bad;
        bad = local_w;
      }
    }
  }
  if (first_bad >= 0) {
    r.ok = false;
    r.witness = bad;
  }
  return r;
}

bool assoc_row(const ScalarGroup& g, std::uint32_t a, std::array<std::uint32_t, 3>& w) {
  const int n = g.order;
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (g.mul(g.mul(Label(a), Label(b)), Label(c)) !=
          g.mul(Label(a), g.mul(Label(b), Label(c)))) {
        w = {a, std::uint32_t(b), std::uint32_t(c)};
        return false;
      }
  return true;
}

bool composition_row(const ActionTable& t, Code total, std::uint32_t a,
                     std::array<std::uint32_t, 3>& w) {
  const ScalarGroup& g = *t.group;
  for (int b = 0; b < g.order; ++b) {
    Label ab = g.mul(Label(a), Label(b));
    for (Code v = 0; v < total; ++v)
      if (t.act(Label(a), t.act(Label(b), v)) != t.act(ab, v)) {
        w = {a, std::uint32_t(b), v};
        return false;
      }
  }
  return true;
}

bool freeness_row(const ActionTable& t, Code total, std::uint32_t a,
                  std::array<std::uint32_t, 3>& w) {
  const ScalarGroup& g = *t.group;
  for (int b = int(a) + 1; b < g.order; ++b)
    for (Code v = 1; v < total; ++v)
      if (t.act(Label(a), v) == t.act(Label(b), v)) {
        w = {a, std::uint32_t(b), v};
        return false;
      }
  return true;
}

bool endomorphism_row(const ActionTable& t, Code total, std::uint32_t a,
                      std::array<std::uint32_t, 3>& w) {
  const ScalarGroup& g = *t.group;
  for (Code v = 0; v < total; ++v) {
    Code av = t.act(Label(a), v);
    for (Code u = 0; u < total; ++u)
      if (t.act(Label(a), carrier::add(g, t.dim, v, u)) !=
          carrier::add(g, t.dim, av, t.act(Label(a), u))) {
        w = {a, v, u};
        return false;
      }
  }
  return true;
}

// Definitional quantifier scan for one vector: for all (alpha, beta) there
// is gamma with alpha.v + beta.v = gamma.v.
bool qk_member(const Space& sp, Code v) {
  const int n = sp.group().order;
  for (int a = 0; a < n; ++a) {
    Code av = sp.act(Label(a), v);
    for (int b = a; b < n; ++b) {
      Code target = sp.add(av, sp.act(Label(b), v));
      bool found = false;
      for (int c = 0; c < n; ++c)
        if (sp.act(Label(c), v) == target) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

ScanResult group_associativity_serial(const ScalarGroup& g) {
  const int n = g.order;
  return outer_scan_serial(std::uint32_t(n), std::uint64_t(n) * n,
                           [&](std::uint32_t a, auto& w) { return assoc_row(g, a, w); });
}

ScanResult group_associativity_parallel(const ScalarGroup& g) {
  const int n = g.order;
  return outer_scan_parallel(std::uint32_t(n), std::uint64_t(n) * n,
                             [&](std::uint32_t a, auto& w) { return assoc_row(g, a, w); });
}

ScanResult action_composition_serial(const ActionTable& a) {
  const Code total = Code(carrier::size(a.group->order, a.dim));
  return outer_scan_serial(
      std::uint32_t(a.group->order), std::uint64_t(a.group->order) * total,
      [&](std::uint32_t al, auto& w) { return composition_row(a, total, al, w); });
}

ScanResult action_composition_parallel(const ActionTable& a) {
  const Code total = Code(carrier::size(a.group->order, a.dim));
  return outer_scan_parallel(
      std::uint32_t(a.group->order), std::uint64_t(a.group->order) * total,
      [&](std::uint32_t al, auto& w) { return composition_row(a, total, al, w); });
}

ScanResult action_freeness_serial(const ActionTable& a) {
  const Code total = Code(carrier::size(a.group->order, a.dim));
  return outer_scan_serial(
      std::uint32_t(a.group->order), std::uint64_t(a.group->order) * total,
      [&](std::uint32_t al, auto& w) { return freeness_row(a, total, al, w); });
}

ScanResult action_freeness_parallel(const ActionTable& a) {
  const Code total = Code(carrier::size(a.group->order, a.dim));
  return outer_scan_parallel(
      std::uint32_t(a.group->order), std::uint64_t(a.group->order) * total,
      [&](std::uint32_t al, auto& w) { return freeness_row(a, total, al, w); });
}

ScanResult action_endomorphism_serial(const ActionTable& a) {
  const Code total = Code(carrier::size(a.group->order, a.dim));
  return outer_scan_serial(
      std::uint32_t(a.group->order), std::uint64_t(total) * total,
      [&](std::uint32_t al, auto& w) { return endomorphism_row(a, total, al, w); });
}

ScanResult action_endomorphism_parallel(const ActionTable& a) {
  const Code total = Code(carrier::size(a.group->order, a.dim));
  return outer_scan_parallel(
      std::uint32_t(a.group->order), std::uint64_t(total) * total,
      [&](std::uint32_t al, auto& w) { return endomorphism_row(a, total, al, w); });
}

std::vector<std::uint8_t> quasi_kernel_mask_serial(const Space& sp) {
  const auto& members = sp.members();
  std::vector<std::uint8_t> mask(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    mask[i] = qk_member(sp, members[i]) ? 1 : 0;
  return mask;
}

std::vector<std::uint8_t> quasi_kernel_mask_parallel(const Space& sp) {
  const auto& members = sp.members();
  std::vector<std::uint8_t> mask(members.size(), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < std::int64_t(members.size()); ++i)
    mask[std::size_t(i)] = qk_member(sp, members[std::size_t(i)]) ? 1 : 0;
  return mask;
}

}  // namespace nvs::kernels
