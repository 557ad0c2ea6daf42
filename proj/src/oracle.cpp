#include "rootbounds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rootbounds/bounds.hpp"
#include "rootbounds/exact.hpp"

namespace rootbounds::oracle {

namespace {

using Complex = std::complex<double>;

struct HornerPair {
  Complex value;
  Complex derivative;
};

HornerPair eval_with_derivative(const Polynomial& p, Complex z) {
  Complex v = 1.0;
  Complex d = 0.0;
  for (int i = p.degree() - 1; i >= 0; --i) {
    d = d * z + v;
    v = v * z + p.coeff(i);
  }
  return {v, d};
}

/// Aberth-Ehrlich on a polynomial with nonzero constant term.
std::vector<Complex> aberth(const Polynomial& p, double tol, bool& converged) {
  const int n = p.degree();
  std::vector<Complex> z(static_cast<std::size_t>(n));
  const double radius = 0.9 * cauchy_bound(p);
  const double offset = 0.35 + std::numbers::pi / (2.0 * n);
  for (int i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi * i / n + offset;
    z[static_cast<std::size_t>(i)] = Complex(radius * std::cos(angle), radius * std::sin(angle));
  }

  converged = false;
  for (int round = 0; round < 500 && !converged; ++round) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      const HornerPair h = eval_with_derivative(p, zi);
      if (h.value == 0.0) continue;
      Complex ratio;
      if (h.derivative == 0.0) {
        // Stationary point of p; nudge off it.
        zi += Complex(tol * (1.0 + std::abs(zi)), tol);
        max_step = std::max(max_step, 1.0);
        continue;
      }
      ratio = h.value / h.derivative;
      Complex repulsion = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
      }
      const Complex denom = 1.0 - ratio * repulsion;
      const Complex step = (denom == 0.0) ? ratio : ratio / denom;
      zi -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    if (max_step < tol) converged = true;
  }

  // Newton polish.
  for (auto& zi : z) {
    for (int it = 0; it < 3; ++it) {
      const HornerPair h = eval_with_derivative(p, zi);
      if (h.derivative == 0.0) break;
      zi -= h.value / h.derivative;
    }
  }
  return z;
}

}  // namespace

std::vector<std::pair<Complex, int>> RootSet::clustered(double rel_tol) const {
  std::vector<std::pair<Complex, int>> groups;
  for (const Complex& r : roots) {
    bool merged = false;
    for (auto& [rep, count] : groups) {
      if (std::abs(r - rep) <= rel_tol * (1.0 + std::abs(rep))) {
        ++count;
        merged = true;
        break;
      }
    }
    if (!merged) groups.emplace_back(r, 1);
  }
  return groups;
}

RootSet find_roots(const Polynomial& p, double tol) {
  RootSet out;
  int zero_count = 0;
  Polynomial reduced = p;
  {
    const auto& c = p.coeffs();
    std::size_t s = 0;
    while (s < c.size() && c[s] == 0.0) ++s;
    zero_count = static_cast<int>(s);
    if (s == c.size()) {
      out.roots.assign(c.size(), Complex(0.0, 0.0));
      out.residuals.assign(c.size(), 0.0);
      out.converged = true;
      return out;
    }
    if (s > 0) reduced = strip_zero_roots(p).reduced;
  }

  if (reduced.degree() == 1) {
    out.roots.push_back(Complex(-reduced.constant_term(), 0.0));
    out.converged = true;
  } else {
    bool converged = false;
    out.roots = aberth(reduced, tol, converged);
    out.converged = converged;
    if (!converged) throw NoConvergence("root iteration did not converge in 500 rounds");
  }
  for (int i = 0; i < zero_count; ++i) out.roots.push_back(Complex(0.0, 0.0));

  out.residuals.reserve(out.roots.size());
  for (const Complex& r : out.roots) out.residuals.push_back(std::abs(evaluate(p, r)));
  return out;
}

double max_root_modulus(const Polynomial& p) {
  const RootSet rs = find_roots(p);
  double best = 0.0;
  for (const auto& r : rs.roots) best = std::max(best, std::abs(r));
  return best;
}

std::optional<double> min_nonzero_root_modulus(const Polynomial& p) {
  const auto& c = p.coeffs();
  std::size_t s = 0;
  while (s < c.size() && c[s] == 0.0) ++s;
  if (s == c.size()) return std::nullopt;  // p = x^n

  const RootSet rs = find_roots(Polynomial(
      std::vector<double>(c.begin() + static_cast<std::ptrdiff_t>(s), c.end())));
  double best = std::numeric_limits<double>::infinity();
  for (const auto& r : rs.roots) best = std::min(best, std::abs(r));
  return best;
}

bool charpoly_exact_check(const Eigen::MatrixXd& C, const std::vector<long long>& expected_tail) {
  const int n = static_cast<int>(C.rows());
  if (n != C.cols()) throw ShapeMismatch("exact check needs a square matrix");
  if (n > 12) throw OrderTooLarge("exact check capped at order 12");
  if (static_cast<int>(expected_tail.size()) != n) {
    throw ShapeMismatch("expected tail length must equal the order");
  }
  exact::IntMatrix a(static_cast<std::size_t>(n),
                     std::vector<long long>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = C(i, j);
      const double rounded = std::nearbyint(v);
      if (v != rounded || std::abs(v) > 1e6) {
        throw Error("exact check needs integer entries of magnitude <= 1e6");
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<long long>(rounded);
    }
  }
  const std::vector<exact::BigInt> tail = exact::charpoly_tail(a);
  for (int d = 0; d < n; ++d) {
    if (tail[static_cast<std::size_t>(d)] !=
        exact::BigInt(expected_tail[static_cast<std::size_t>(d)])) {
      return false;
    }
  }
  return true;
}

}  // namespace rootbounds::oracle
