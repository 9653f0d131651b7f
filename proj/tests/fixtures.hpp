#pragma once

#include <string>

#include "nvs/definition.hpp"

// Shared fixture spaces. Built once per binary; Space caches are reused.
inline nvs::SpacePtr make_space(const std::string& text) {
  return nvs::build_space(nvs::parse_definition(text));
}

// GF(5)^2 with the cube twist on the second coordinate.
inline const nvs::SpacePtr& v5() {
  static nvs::SpacePtr sp = make_space("field = gf(5)\ndim = 2\nexponents = 1,3\n");
  return sp;
}

// The classical untwisted GF(5)^2.
inline const nvs::SpacePtr& v5id() {
  static nvs::SpacePtr sp = make_space("field = gf(5)\ndim = 2\nexponents = 1,1\n");
  return sp;
}

inline const nvs::SpacePtr& gf7_15() {
  static nvs::SpacePtr sp = make_space("field = gf(7)\ndim = 2\nexponents = 1,5\n");
  return sp;
}

inline const nvs::SpacePtr& dickson3_1() {
  static nvs::SpacePtr sp = make_space("field = dickson(3)\ndim = 1\nexponents = 1\n");
  return sp;
}

inline nvs::Code enc(const nvs::SpacePtr& sp, std::initializer_list<nvs::Label> v) {
  return sp->encode(nvs::Vector(v));
}
