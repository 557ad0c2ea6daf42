#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "rootbounds/errors.hpp"

namespace rootbounds::exact {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<long long>>;

/// Fraction-free (Bareiss) determinant over 64-bit integers. Returns nothing
/// when an intermediate product would overflow; retry with determinant().
std::optional<long long> determinant_i64(IntMatrix a);

/// Fraction-free determinant over arbitrary-precision integers.
BigInt determinant(std::vector<std::vector<BigInt>> a);

/// Determinant choosing the 64-bit path first and widening on overflow.
BigInt determinant_auto(const IntMatrix& a);

/// Characteristic polynomial tail [c_0, ..., c_{n-1}] (monic lead implicit),
/// computed exactly: the determinant of xI - A is evaluated at the integer
/// points 0, 1, -1, 2, -2, ... and recovered by Lagrange interpolation over
/// rationals.
std::vector<BigInt> charpoly_tail(const IntMatrix& a);

}  // namespace rootbounds::exact
