#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

namespace forge {

// Exact arbitrary-precision rational. All projector and character arithmetic
// runs on this type; floating point never enters an exactness-sensitive path.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

}  // namespace forge
