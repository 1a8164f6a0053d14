#pragma once

#include <doctest.h>

#include "endo/lattice.hpp"

#include <sstream>

namespace doctest {

template <>
struct StringMaker<endo::IntVector> {
  static String convert(const endo::IntVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str().c_str();
  }
};

template <>
struct StringMaker<endo::IntMatrix> {
  static String convert(const endo::IntMatrix& m) { return m.to_string().c_str(); }
};

}  // namespace doctest
