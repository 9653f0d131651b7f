// Compares the serial reference kernels against their OpenMP versions on
// carriers large enough to matter, and checks that both agree.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "nvs/action.hpp"
#include "nvs/definition.hpp"
#include "nvs/kernels.hpp"
#include "nvs/parallel.hpp"
#include "nvs/space.hpp"

using namespace nvs;
using Clock = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  const int reps = quick ? 1 : 3;

  std::printf("threads: %d\n", max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    auto g = build_scalar_group(ScalarGroupSpec::prime(quick ? 61 : 251));
    kernels::ScanResult a, b;
    double ts = time_ms([&] { a = kernels::group_associativity_serial(*g); }, reps);
    double tp = time_ms([&] { b = kernels::group_associativity_parallel(*g); }, reps);
    row("group-associativity", ts, tp, a.ok == b.ok && a.count == b.count);
  }
  {
    auto g = build_scalar_group(ScalarGroupSpec::dickson(quick ? 5 : 13));
    kernels::ScanResult a, b;
    double ts = time_ms([&] { a = kernels::group_associativity_serial(*g); }, reps);
    double tp = time_ms([&] { b = kernels::group_associativity_parallel(*g); }, reps);
    row("dickson-associativity", ts, tp, a.ok == b.ok && a.count == b.count);
  }

  auto def = parse_definition(quick ? "field = gf(31)\ndim = 2\nexponents = 1,7\n"
                                    : "field = gf(61)\ndim = 2\nexponents = 1,7\n");
  ActionTable act = build_action(build_scalar_group(def.field), def.dim, def.exponents);
  {
    kernels::ScanResult a, b;
    double ts = time_ms([&] { a = kernels::action_composition_serial(act); }, reps);
    double tp = time_ms([&] { b = kernels::action_composition_parallel(act); }, reps);
    row("action-composition", ts, tp, a.ok == b.ok && a.count == b.count);
  }
  {
    kernels::ScanResult a, b;
    double ts = time_ms([&] { a = kernels::action_freeness_serial(act); }, reps);
    double tp = time_ms([&] { b = kernels::action_freeness_parallel(act); }, reps);
    row("action-freeness", ts, tp, a.ok == b.ok && a.count == b.count);
  }
  {
    auto edef = parse_definition("field = gf(31)\ndim = 2\nexponents = 1,7\n");
    ActionTable ea = build_action(build_scalar_group(edef.field), edef.dim, edef.exponents);
    kernels::ScanResult a, b;
    double ts = time_ms([&] { a = kernels::action_endomorphism_serial(ea); }, reps);
    double tp = time_ms([&] { b = kernels::action_endomorphism_parallel(ea); }, reps);
    row("action-endomorphism", ts, tp, a.ok == b.ok && a.count == b.count);
  }
  {
    SpacePtr sp = build_space(def);
    std::vector<std::uint8_t> a, b;
    double ts = time_ms([&] { a = kernels::quasi_kernel_mask_serial(*sp); }, reps);
    double tp = time_ms([&] { b = kernels::quasi_kernel_mask_parallel(*sp); }, reps);
    row("quasi-kernel-scan", ts, tp, a == b);
  }
  return 0;
}
