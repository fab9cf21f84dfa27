#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace k3census {

// Exact arithmetic only: integers everywhere, rationals where elimination
// needs division (signatures, basis coordinates).
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace k3census
