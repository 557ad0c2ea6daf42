#include "rootbounds/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <utility>

namespace rootbounds::exact {

namespace {

using Rational = boost::multiprecision::cpp_rational;

/// Evaluation abscissa i -> 0, 1, -1, 2, -2, ...
long long eval_point(std::size_t i) {
  const long long half = static_cast<long long>((i + 1) / 2);
  return (i % 2 == 1) ? half : -half;
}

}  // namespace

std::optional<long long> determinant_i64(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        long long t1 = 0, t2 = 0, num = 0;
        if (__builtin_mul_overflow(a[i][j], a[k][k], &t1)) return std::nullopt;
        if (__builtin_mul_overflow(a[i][k], a[k][j], &t2)) return std::nullopt;
        if (__builtin_sub_overflow(t1, t2, &num)) return std::nullopt;
        a[i][j] = num / prev;  // Bareiss division is exact
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigInt determinant_auto(const IntMatrix& a) {
  if (auto fast = determinant_i64(a)) return BigInt(*fast);
  std::vector<std::vector<BigInt>> wide(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    wide[i].assign(a[i].begin(), a[i].end());
  }
  return determinant(std::move(wide));
}

std::vector<BigInt> charpoly_tail(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw DegreeTooSmall("characteristic polynomial needs order >= 1");
  for (const auto& row : a) {
    if (row.size() != n) throw ShapeMismatch("characteristic polynomial needs a square matrix");
  }

  std::vector<long long> points(n + 1);
  std::vector<BigInt> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    points[i] = eval_point(i);
    IntMatrix shifted = a;
    for (std::size_t d = 0; d < n; ++d) {
      shifted[d][d] = points[i] - shifted[d][d];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != d) shifted[d][j] = -shifted[d][j];
      }
    }
    values[i] = determinant_auto(shifted);
  }

  // Lagrange interpolation; the result has integer coefficients so the
  // rational accumulators clear exactly.
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis.push_back(Rational(0));
      for (std::size_t d = basis.size() - 1; d > 0; --d) {
        basis[d] = basis[d - 1] - Rational(points[j]) * basis[d];
      }
      basis[0] = -Rational(points[j]) * basis[0];
      denom *= Rational(points[i]) - Rational(points[j]);
    }
    const Rational scale = Rational(values[i]) / denom;
    for (std::size_t d = 0; d <= n; ++d) coeffs[d] += scale * basis[d];
  }

  std::vector<BigInt> tail(n);
  for (std::size_t d = 0; d < n; ++d) {
    if (boost::multiprecision::denominator(coeffs[d]) != 1) {
      throw Error("interpolated characteristic polynomial is not integral");
    }
    tail[d] = boost::multiprecision::numerator(coeffs[d]);
  }
  if (coeffs[n] != 1) throw Error("characteristic polynomial is not monic");
  return tail;
}

}  // namespace rootbounds::exact
