#pragma once

#include <complex>
#include <vector>

#include "rootbounds/errors.hpp"

namespace rootbounds {

/// Monic real polynomial x^n + a_{n-1} x^{n-1} + ... + a_1 x + a_0.
/// Only the tail [a_0, ..., a_{n-1}] is stored; the leading 1 is implicit.
class Polynomial {
 public:
  /// Tail coefficients in ascending degree order. Requires at least one entry
  /// and every entry finite.
  explicit Polynomial(std::vector<double> tail);

  int degree() const { return static_cast<int>(tail_.size()); }
  const std::vector<double>& coeffs() const { return tail_; }
  double coeff(int i) const { return tail_[static_cast<std::size_t>(i)]; }
  double constant_term() const { return tail_.front(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<double> tail_;
};

/// Largest modulus among the tail coefficients a_1..a_{n-1}, the number of
/// indices attaining it, and the largest such index.
struct TailStats {
  double max_abs = 0.0;
  int count_at_max = 0;
  int last_at_max = 0;
};

/// Normalizes a full ascending coefficient list [c_0, ..., c_n] to monic form
/// by dividing through by the leading coefficient.
Polynomial make_monic(const std::vector<double>& full_coeffs);

/// Monic reversal: constant term becomes 1/a_0 and the degree-k coefficient
/// becomes a_{n-k}/a_0. Roots map to their reciprocals. Requires a_0 != 0.
Polynomial reversal(const Polynomial& p);

struct StrippedPolynomial {
  Polynomial reduced;
  int multiplicity;  // number of roots at zero that were factored out
};

/// Factors out x^s where s is the number of leading zero coefficients.
/// Throws AllRootsZero when every coefficient is zero (p = x^n).
StrippedPolynomial strip_zero_roots(const Polynomial& p);

/// Multiplies by x^q, appending q roots at zero.
Polynomial extend(const Polynomial& p, int q);

/// Horner evaluation at a complex point.
std::complex<double> evaluate(const Polynomial& p, std::complex<double> z);

/// Requires degree >= 2.
TailStats tail_stats(const Polynomial& p);

}  // namespace rootbounds
