#pragma once

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <type_traits>

#include "periods/rational.hpp"

namespace periods {

using Float128 = boost::multiprecision::float128;
/// Runtime-precision binary float; set digits with BigFloat::default_precision(d).
using BigFloat = boost::multiprecision::mpfr_float;

template <class Real>
Real to_real(const Integer& z) {
  if (z.fits_slong_p()) return Real(z.get_si());
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(std::stold(z.get_str()));
  } else {
    return Real(z.get_str());
  }
}

template <class Real>
Real to_real(const Rational& q) {
  return to_real<Real>(q.get_num()) / to_real<Real>(q.get_den());
}

template <class Real>
Real from_big(const BigFloat& v) {
  if constexpr (std::is_same_v<Real, BigFloat>) {
    return v;
  } else if constexpr (std::is_floating_point_v<Real>) {
    return v.convert_to<Real>();
  } else {
    return Real(v.str(40, std::ios::scientific));
  }
}

/// Sets the working precision of BigFloat in decimal digits.
inline void set_big_digits(unsigned digits) { BigFloat::default_precision(digits); }

}  // namespace periods
