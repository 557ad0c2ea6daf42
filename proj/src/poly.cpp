#include "rootbounds/poly.hpp"

#include <cmath>
#include <cstddef>

namespace rootbounds {

Polynomial::Polynomial(std::vector<double> tail) : tail_(std::move(tail)) {
  if (tail_.empty()) throw DegreeTooSmall("polynomial needs degree >= 1");
  for (double c : tail_) {
    if (!std::isfinite(c)) throw Error("polynomial coefficient is not finite");
  }
}

Polynomial make_monic(const std::vector<double>& full_coeffs) {
  if (full_coeffs.size() < 2) {
    throw DegreeTooSmall("need at least two coefficients including the leading one");
  }
  const double lead = full_coeffs.back();
  if (lead == 0.0) throw ZeroLeadingCoefficient("leading coefficient is zero");
  std::vector<double> tail(full_coeffs.begin(), full_coeffs.end() - 1);
  for (double& c : tail) c /= lead;
  return Polynomial(std::move(tail));
}

Polynomial reversal(const Polynomial& p) {
  const double a0 = p.constant_term();
  if (a0 == 0.0) {
    throw ZeroConstantTerm("reversal undefined for zero constant term; strip zero roots first");
  }
  const int n = p.degree();
  std::vector<double> tail(static_cast<std::size_t>(n));
  tail[0] = 1.0 / a0;
  for (int k = 1; k < n; ++k) tail[static_cast<std::size_t>(k)] = p.coeff(n - k) / a0;
  return Polynomial(std::move(tail));
}

StrippedPolynomial strip_zero_roots(const Polynomial& p) {
  const auto& c = p.coeffs();
  std::size_t s = 0;
  while (s < c.size() && c[s] == 0.0) ++s;
  if (s == c.size()) throw AllRootsZero("every root is zero");
  return {Polynomial(std::vector<double>(c.begin() + static_cast<std::ptrdiff_t>(s), c.end())),
          static_cast<int>(s)};
}

Polynomial extend(const Polynomial& p, int q) {
  if (q < 0) throw IndexOutOfRange("extension power must be nonnegative");
  if (q == 0) return p;
  std::vector<double> tail(static_cast<std::size_t>(q), 0.0);
  tail.insert(tail.end(), p.coeffs().begin(), p.coeffs().end());
  return Polynomial(std::move(tail));
}

std::complex<double> evaluate(const Polynomial& p, std::complex<double> z) {
  std::complex<double> value = 1.0;  // implicit monic lead
  for (int i = p.degree() - 1; i >= 0; --i) value = value * z + p.coeff(i);
  return value;
}

TailStats tail_stats(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) throw DegreeTooSmall("tail statistics need degree >= 2");
  TailStats st;
  for (int k = 1; k < n; ++k) {
    const double a = std::abs(p.coeff(k));
    if (a > st.max_abs) st.max_abs = a;
  }
  for (int k = 1; k < n; ++k) {
    if (std::abs(p.coeff(k)) == st.max_abs) {
      ++st.count_at_max;
      st.last_at_max = k;
    }
  }
  return st;
}

}  // namespace rootbounds
