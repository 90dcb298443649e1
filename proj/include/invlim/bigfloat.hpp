// Arbitrary-precision floating point backend used by the unit-circle
// orthogonal polynomial machinery. Precision is set per computation scope.
#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace invlim {

using bigfloat = boost::multiprecision::mpfr_float;
using bigint = boost::multiprecision::cpp_int;
using bigrational = boost::multiprecision::cpp_rational;

inline constexpr unsigned kMaxDigits = 20000;

// Scoped default-precision switch. mpfr_float carries per-variable precision;
// variables created inside the scope pick up the scoped default.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10)
      : saved_(bigfloat::default_precision()) {
    if (digits10 == 0 || digits10 > kMaxDigits)
      throw std::invalid_argument("PrecisionScope: digits out of range");
    bigfloat::default_precision(digits10);
  }
  ~PrecisionScope() { bigfloat::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

}  // namespace invlim
