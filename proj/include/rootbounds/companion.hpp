#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rootbounds/partition.hpp"
#include "rootbounds/poly.hpp"

namespace rootbounds {

// A unit sparse companion matrix in unit lower Hessenberg form has ones on
// the whole superdiagonal and one coefficient cell per subdiagonal inside a
// rectangular block: cell (pos[k], pos[k]-k) holds -a_{n-1-k} and must satisfy
//
//   max(m+1, k+1) <= pos[k] <= min(n, k+m+1)       (rows are 1-based),
//
// which pins pos[0] = m+1 (the block's top-right corner) and pos[n-1] = n
// (the constant term at (n,1)). A shape is this (n, m, pos) triple.
struct ShapeSpec {
  int n = 0;
  int m = 0;
  std::vector<int> pos;

  int row(int k) const { return pos[static_cast<std::size_t>(k)]; }
  int col(int k) const { return pos[static_cast<std::size_t>(k)] - k; }

  friend bool operator==(const ShapeSpec&, const ShapeSpec&) = default;
};

bool shape_valid(const ShapeSpec& s);

/// Reflection across the antidiagonal (transpose composed with the reverse
/// permutation on both sides). Keeps subdiagonals, swaps the two norms.
ShapeSpec flip_shape(const ShapeSpec& s);

/// Lexicographic order on the (m, pos) encoding.
bool shape_precedes(const ShapeSpec& a, const ShapeSpec& b);

enum class MatrixKind { Frobenius, Fiedler, Sparse, W, X, InverseSparse, Extended };

struct CompanionMatrix {
  Eigen::MatrixXd entries;
  MatrixKind kind = MatrixKind::Sparse;
  std::optional<ShapeSpec> shape;
  int source_degree = 0;  // degree of the originating polynomial

  int order() const { return static_cast<int>(entries.rows()); }
};

/// Number of raw shapes for degree n (no deduplication).
long long count_shapes(int n);

/// Visits every raw shape for 2 <= n <= 12 in a fixed deterministic order.
void for_each_shape(int n, const std::function<void(const ShapeSpec&)>& fn);

/// All shapes for 2 <= n <= 12. With dedup, keeps one representative per
/// antidiagonal-flip class, the lexicographically smaller encoding.
std::vector<ShapeSpec> enumerate_shapes(int n, bool dedup = false);

/// All Fiedler shapes for 2 <= n <= 16: lattice paths from (n,1) where each
/// successive coefficient steps up or right. There are 2^(n-1) of them.
std::vector<ShapeSpec> enumerate_fiedler(int n);

/// Shapes whose only first-column coefficient cell is the constant term at
/// (n,1), with 1 <= m <= n-2. Their inverses keep the simple block form used
/// by the inverse-matrix bounds.
std::vector<ShapeSpec> enumerate_u_zero_shapes(int n);

/// Deterministic Bernoulli thinning of the raw shape list down to roughly
/// max_count entries. Returns everything when the raw count fits.
std::vector<ShapeSpec> sample_shapes(int n, std::size_t max_count, std::uint64_t seed);

bool is_fiedler(const ShapeSpec& s);

ShapeSpec frobenius_shape(int n);

/// Shape with a_0..a_b in the last row and a_{b+1}..a_{n-1} stacked in
/// column b+1. Requires 0 <= b <= n-1; b = n-1 is the Frobenius shape.
ShapeSpec l_shape(int n, int b);

/// Classical companion form: superdiagonal ones, coefficients in the last row.
CompanionMatrix frobenius(const Polynomial& p);

/// Dense matrix realizing a shape for p. Requires s.n == p.degree().
CompanionMatrix sparse_from_shape(const Polynomial& p, const ShapeSpec& s);

CompanionMatrix l_matrix(const Polynomial& p, int b);

/// Companion matrix of x^(t-1) p of order n+t-1 whose infinity norm equals
/// the partition bound: coefficients of the j-th relabeled part share row
/// n+t-j. Requires a valid partition.
CompanionMatrix build_extended_companion(const Polynomial& p, const PartitionSpec& spec);

/// Inverse of the unique companion matrix of the monic reversal whose
/// coefficient column is next to the constant term. Eigenvalues are the roots
/// of p. Requires a_0 != 0 and degree >= 3.
CompanionMatrix w_matrix(const Polynomial& p);

/// Inverse of a two-row Fiedler companion matrix of the monic reversal,
/// parameterized by 1 <= b <= n-2. Eigenvalues are the roots of p.
CompanionMatrix x_matrix(const Polynomial& p, int b);

/// Block decomposition of a Hessenberg sparse companion matrix: first column
/// u above the constant term, interior block H, last-row tail y.
struct ECPartition {
  int c = 0;            // equals the shape parameter m
  Eigen::VectorXd u;    // length n-c-1
  Eigen::MatrixXd H;    // (n-c-1) x c
  Eigen::VectorXd y;    // length c
  double a0 = 0.0;
};

/// Requires kind Frobenius/Fiedler/Sparse with a shape and nonzero constant
/// term.
ECPartition ec_partition(const CompanionMatrix& C);

/// Rebuilds the dense companion matrix from its block decomposition.
Eigen::MatrixXd assemble_ec(const ECPartition& e);

/// Blockwise inverse of a Hessenberg sparse companion matrix.
CompanionMatrix inverse_sparse(const CompanionMatrix& C);

/// Characteristic polynomial tail [c_0, ..., c_{n-1}] (monic lead implicit)
/// by the Faddeev-LeVerrier recurrence in floating point. Order <= 64.
std::vector<double> char_poly(const Eigen::MatrixXd& A);
std::vector<double> char_poly(const CompanionMatrix& C);

}  // namespace rootbounds
