#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>

namespace hhmf {

using Index = Eigen::Index;
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = MatrixX<Integer>;
using IntegerVector = VectorX<Integer>;
using RationalMatrix = MatrixX<Rational>;
using RationalVector = VectorX<Rational>;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

// Floor division with a positive or negative divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }
inline Integer ceil(const Rational& q) { return -floor_div(-numerator(q), denominator(q)); }

// Representative of q in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor(q)); }

inline std::int64_t to_i64(const Integer& z) { return z.convert_to<std::int64_t>(); }

inline std::string to_string(const Integer& z) { return z.str(); }
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace hhmf
