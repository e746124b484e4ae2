#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace ssg {

// Expression templates are disabled so the types compose with Eigen and
// behave like plain values in generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact value per vertex, indexed by VertexId.
using ValueVector = Vector<Rational>;

/// x / 2, without a general gcd.
Rational halve(const Rational& x);

/// x / 2^k.
Rational scale_down_pow2(const Rational& x, std::size_t k);

Integer numerator_of(const Rational& x);
Integer denominator_of(const Rational& x);

/// Always "num/den", including integers ("1/1") so output stays uniform.
std::string to_string(const Rational& x);

/// Accepts "num/den" or a bare integer; the result is reduced.
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// 6^ceil(n_a/2): the integer form of the per-game determinant bound.
Integer six_pow_half_ceil(std::size_t n_a);

Integer lcm(const Integer& a, const Integer& b);

Integer pow_integer(unsigned base, std::size_t exponent);

/// Smallest t with 2^t >= x, for x >= 1.
std::size_t ceil_log2(const Integer& x);

}  // namespace ssg
