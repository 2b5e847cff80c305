#pragma once

#include <complex>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace eplab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest dimension accepted by the floating-point routines.
inline constexpr int kMaxFloatDimension = 64;

} // namespace eplab
