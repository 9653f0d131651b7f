#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nvs/scalar_group.hpp"

namespace nvs {

using Code = std::uint32_t;
using Vector = std::vector<Label>;

inline constexpr std::uint64_t kMaxCarrier = 100000;

// Codes enumerate F^width lexicographically: the first coordinate is the
// most significant digit, so numeric order on codes is lexicographic order
// on tuples.
namespace carrier {

std::uint64_t size(int order, int width);

inline Code encode(const Vector& v, int order) {
  Code c = 0;
  for (Label x : v) c = c * Code(order) + x;
  return c;
}

inline Vector decode(Code c, int order, int width) {
  Vector v(static_cast<std::size_t>(width));
  for (int i = width - 1; i >= 0; --i) {
    v[std::size_t(i)] = Label(c % Code(order));
    c /= Code(order);
  }
  return v;
}

inline Code add(const ScalarGroup& g, int width, Code a, Code b) {
  Code r = 0, scale = 1;
  const Code n = Code(g.order);
  for (int i = 0; i < width; ++i) {
    r += scale * g.add(Label(a % n), Label(b % n));
    a /= n;
    b /= n;
    scale *= n;
  }
  return r;
}

inline Code neg(const ScalarGroup& g, int width, Code a) {
  Code r = 0, scale = 1;
  const Code n = Code(g.order);
  for (int i = 0; i < width; ++i) {
    r += scale * g.neg(Label(a % n));
    a /= n;
    scale *= n;
  }
  return r;
}

std::string format(Code c, int order, int width);

}  // namespace carrier
}  // namespace nvs
