#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "rootbounds/poly.hpp"

// Independent ground truth used by tests and the bench harness. Root finding
// is simultaneous (Aberth-Ehrlich) on purpose: it never touches the companion
// constructions it is used to validate.
namespace rootbounds::oracle {

struct RootSet {
  std::vector<std::complex<double>> roots;  // all n roots, multiplicity included
  std::vector<double> residuals;            // |p(root)| per root
  bool converged = false;

  /// Roots grouped by relative proximity; returns (representative, count).
  std::vector<std::pair<std::complex<double>, int>> clustered(double rel_tol = 1e-6) const;
};

/// All roots by simultaneous iteration from a circle of radius
/// 0.9 * cauchy_bound, Newton-polished. Throws NoConvergence after 500
/// rounds without the corrections dropping below tol.
RootSet find_roots(const Polynomial& p, double tol = 1e-10);

double max_root_modulus(const Polynomial& p);

/// Smallest modulus among nonzero roots; empty when all roots are zero.
std::optional<double> min_nonzero_root_modulus(const Polynomial& p);

/// Exact structural check: does det(xI - C) match the monic polynomial with
/// the given ascending tail? Entries must be integers of magnitude <= 10^6
/// and the order must not exceed 12.
bool charpoly_exact_check(const Eigen::MatrixXd& C, const std::vector<long long>& expected_tail);

}  // namespace rootbounds::oracle
