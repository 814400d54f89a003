#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace tropideal {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using MatrixZ = MatrixX<Integer>;

/// Parses "p", "-p" or "p/q" into a reduced rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical reduced form: "p/q", or "p" when q = 1.
std::string format_rational(const Rational& q);

/// p-adic valuation of a nonzero rational. Requires q != 0.
long padic_valuation(const Rational& q, long prime);

bool is_prime(long p);

Integer lcm_of_denominators(const Rational* begin, const Rational* end);

}  // namespace tropideal
