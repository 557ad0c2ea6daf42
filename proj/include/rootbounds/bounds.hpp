#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootbounds/companion.hpp"
#include "rootbounds/parallel.hpp"
#include "rootbounds/partition.hpp"
#include "rootbounds/poly.hpp"

namespace rootbounds {

/// Maximum absolute row sum.
double norm_inf(const Eigen::MatrixXd& A);
/// Maximum absolute column sum.
double norm_one(const Eigen::MatrixXd& A);
/// min of the two induced norms; bounds every eigenvalue modulus.
double n_min(const Eigen::MatrixXd& A);

double bound_from_matrix(const CompanionMatrix& C);

/// Both induced norms of a shape realized for p, computed in O(n) without
/// materializing the matrix.
struct ShapeNorms {
  double inf = 0.0;
  double one = 0.0;
  double min() const { return inf < one ? inf : one; }
};
ShapeNorms shape_norms(const Polynomial& p, const ShapeSpec& s);

/// max{|a_0|, 1+|a_1|, ..., 1+|a_{n-1}|}. Valid for degree >= 1.
double cauchy_bound(const Polynomial& p);

/// min{max{1, sum |a_i|}, cauchy_bound}; the classical companion bound.
/// Requires degree >= 2.
double frobenius_bound(const Polynomial& p);

/// Largest r such that |a_0| + ... + |a_{r-1}| < 1 (0 when |a_0| >= 1),
/// clamped to n-1. The split at r minimizes the L-shaped Fiedler bound.
int best_fiedler_index(const Polynomial& p);

struct FiedlerBound {
  double value = 0.0;
  int index = 0;
};
FiedlerBound best_fiedler_bound(const Polynomial& p);

/// max{1, sum over P_1, 1 + sum over each other part}; equals the infinity
/// norm of the extended companion matrix built from the partition. (The bare
/// 1 covers the identity rows; it matters only for the one-part partition.)
double partition_bound(const Polynomial& p, const PartitionSpec& spec);

enum class PartitionSearch { Exhaustive, Greedy };

struct PartitionResult {
  PartitionSpec partition;
  double bound = 0.0;
};

/// Searches for a partition minimizing the bound. Exhaustive mode enumerates
/// every set partition with branch-and-bound pruning (degree <= 10); greedy
/// mode packs indices first-fit in descending modulus order. Both consider
/// the one-part and all-singletons baselines first, so the result never
/// exceeds the classical row/column bounds.
PartitionResult search_partition(const Polynomial& p, PartitionSearch mode);

enum class ReversalStrategy { FrobeniusOnly, BestSparse };

/// Lower bound on every nonzero root modulus via the monic reversal:
/// 1 / N(C(reversal)). BestSparse sweeps all shapes (degree <= 10).
/// Requires a_0 != 0.
double lower_bound_reversal(const Polynomial& p, ReversalStrategy strategy);

/// Infinity norm of the W matrix. Requires a_0 != 0 and degree >= 3.
double w_bound(const Polynomial& p);

/// One norm of the X matrix for split b. Requires a_0 != 0, 1 <= b <= n-2.
double x_bound(const Polynomial& p, int b);

struct XBound {
  double value = 0.0;
  int index = 0;
};
/// Minimum of x_bound over b, smallest b on ties.
XBound best_x_bound(const Polynomial& p);

/// 1 / N(inverse of the shape realized for p). Requires a_0 != 0.
double inverse_lower_bound(const Polynomial& p, const ShapeSpec& s);

/// True when the W bound strictly beats the classical bound:
/// 1 < |a_0| < 1 + M - |a_{n-1}|. Requires a_0 != 0 and degree >= 3.
bool w_improves(const Polynomial& p);

/// True when the X_b bound strictly beats the classical bound:
/// 1 < |a_0| < 1 + M, b at or past the last maximal-modulus index, and
/// |a_{b+1}| + |a_b / a_0| < M.
bool x_improves(const Polynomial& p, int b);

struct SweepResult {
  double value = 0.0;
  std::size_t index = 0;  // position in the swept shape list
};

/// min over shapes of N(shape realized for p); ties resolve to the smallest
/// index. The serial variant is the reference implementation; the parallel
/// one must agree bit-for-bit.
SweepResult min_n_over_shapes_serial(const Polynomial& p, std::span<const ShapeSpec> shapes);
SweepResult min_n_over_shapes_parallel(const Polynomial& p, std::span<const ShapeSpec> shapes);
SweepResult min_n_over_shapes(const Polynomial& p, std::span<const ShapeSpec> shapes,
                              ExecPolicy policy);

/// min over shapes of N(inverse of the shape realized for p).
SweepResult min_inverse_n_over_shapes_serial(const Polynomial& p,
                                             std::span<const ShapeSpec> shapes);
SweepResult min_inverse_n_over_shapes_parallel(const Polynomial& p,
                                               std::span<const ShapeSpec> shapes);
SweepResult min_inverse_n_over_shapes(const Polynomial& p, std::span<const ShapeSpec> shapes,
                                      ExecPolicy policy);

struct BoundOptions {
  /// Shape sweeps (best sparse, reversal sweep, inverse sweep) run only when
  /// the effective degree does not exceed this.
  int enumeration_limit = 10;
  /// Exhaustive partition search up to this degree, greedy beyond.
  int exhaustive_partition_limit = 10;
  ExecPolicy exec = ExecPolicy::Parallel;
  /// Optional pre-enumerated shape list for the effective degree; callers
  /// sweeping many polynomials of one degree share it across calls.
  const std::vector<ShapeSpec>* shapes = nullptr;
};

/// Everything the library can say about the root moduli of one polynomial.
/// Upper bounds hold for every root; lower bounds hold for every nonzero
/// root, with the stripped zero-root count reported alongside.
struct BoundReport {
  int degree = 0;
  int zero_root_multiplicity = 0;
  int effective_degree = 0;
  bool all_roots_zero = false;

  double cauchy = 0.0;
  std::optional<double> frobenius;
  std::optional<std::pair<double, ShapeSpec>> best_sparse;
  std::optional<std::pair<double, int>> best_fiedler;
  std::optional<std::pair<double, PartitionSpec>> partition;
  std::optional<double> w;
  std::vector<std::pair<int, double>> x;  // (b, value), all valid b

  std::optional<double> lower_reversal;
  std::optional<double> lower_inverse;

  double best_upper = 0.0;
  std::string best_upper_source;
  std::optional<double> best_lower;
  std::string best_lower_source;

  /// All upper bounds present in the report, tagged by family.
  std::vector<std::pair<std::string, double>> upper_bounds() const;
  /// All lower bounds present in the report, tagged by family.
  std::vector<std::pair<std::string, double>> lower_bounds() const;
};

/// Requires degree >= 2.
BoundReport bound_report(const Polynomial& p, const BoundOptions& options = {});

}  // namespace rootbounds
