#include "rootbounds/companion.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <tuple>

#include "rootbounds/rng.hpp"

namespace rootbounds {

namespace {

// Row range of the coefficient cell on subdiagonal k for block parameter m.
inline int cell_row_lo(int m, int k) { return std::max(m + 1, k + 1); }
inline int cell_row_hi(int n, int m, int k) { return std::min(n, k + m + 1); }

void check_enumeration_degree(int n, int hi) {
  if (n < 2 || n > hi) throw DegreeOutOfRange("degree outside supported enumeration range");
}

}  // namespace

bool shape_valid(const ShapeSpec& s) {
  if (s.n < 2 || s.m < 0 || s.m > s.n - 1) return false;
  if (static_cast<int>(s.pos.size()) != s.n) return false;
  for (int k = 0; k < s.n; ++k) {
    if (s.row(k) < cell_row_lo(s.m, k) || s.row(k) > cell_row_hi(s.n, s.m, k)) return false;
  }
  return true;
}

ShapeSpec flip_shape(const ShapeSpec& s) {
  ShapeSpec f;
  f.n = s.n;
  f.m = s.n - 1 - s.m;
  f.pos.resize(s.pos.size());
  for (int k = 0; k < s.n; ++k) {
    f.pos[static_cast<std::size_t>(k)] = s.n + 1 + k - s.row(k);
  }
  return f;
}

bool shape_precedes(const ShapeSpec& a, const ShapeSpec& b) {
  return std::tie(a.m, a.pos) < std::tie(b.m, b.pos);
}

long long count_shapes(int n) {
  check_enumeration_degree(n, 12);
  long long total = 0;
  for (int m = 0; m < n; ++m) {
    long long prod = 1;
    for (int k = 0; k < n; ++k) prod *= cell_row_hi(n, m, k) - cell_row_lo(m, k) + 1;
    total += prod;
  }
  return total;
}

void for_each_shape(int n, const std::function<void(const ShapeSpec&)>& fn) {
  check_enumeration_degree(n, 12);
  for (int m = 0; m < n; ++m) {
    ShapeSpec s;
    s.n = n;
    s.m = m;
    s.pos.assign(static_cast<std::size_t>(n), 0);
    // Odometer over the per-subdiagonal row choices.
    for (int k = 0; k < n; ++k) s.pos[static_cast<std::size_t>(k)] = cell_row_lo(m, k);
    while (true) {
      fn(s);
      int k = n - 1;
      while (k >= 0 && s.pos[static_cast<std::size_t>(k)] == cell_row_hi(n, m, k)) {
        s.pos[static_cast<std::size_t>(k)] = cell_row_lo(m, k);
        --k;
      }
      if (k < 0) break;
      ++s.pos[static_cast<std::size_t>(k)];
    }
  }
}

std::vector<ShapeSpec> enumerate_shapes(int n, bool dedup) {
  std::vector<ShapeSpec> out;
  for_each_shape(n, [&](const ShapeSpec& s) {
    if (dedup) {
      const ShapeSpec f = flip_shape(s);
      if (shape_precedes(f, s)) return;  // the flipped twin is the representative
    }
    out.push_back(s);
  });
  return out;
}

std::vector<ShapeSpec> enumerate_fiedler(int n) {
  check_enumeration_degree(n, 16);
  std::vector<ShapeSpec> out;
  out.reserve(1ull << (n - 1));
  // Bit j of the mask: step from coefficient a_j to a_{j+1}, 1 = up, 0 = right.
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    ShapeSpec s;
    s.n = n;
    s.pos.assign(static_cast<std::size_t>(n), 0);
    int row = n;
    s.pos[static_cast<std::size_t>(n - 1)] = row;  // a_0 at (n, 1)
    for (int c = 1; c < n; ++c) {
      if (mask & (1ull << (c - 1))) --row;
      s.pos[static_cast<std::size_t>(n - 1 - c)] = row;
    }
    s.m = s.pos[0] - 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ShapeSpec> enumerate_u_zero_shapes(int n) {
  check_enumeration_degree(n, 12);
  std::vector<ShapeSpec> out;
  for_each_shape(n, [&](const ShapeSpec& s) {
    if (s.m < 1 || s.m > s.n - 2) return;
    for (int k = 0; k < s.n - 1; ++k) {
      if (s.col(k) == 1) return;
    }
    out.push_back(s);
  });
  return out;
}

std::vector<ShapeSpec> sample_shapes(int n, std::size_t max_count, std::uint64_t seed) {
  const auto total = static_cast<std::uint64_t>(count_shapes(n));
  std::vector<ShapeSpec> out;
  if (total <= max_count) return enumerate_shapes(n);
  std::uint64_t index = 0;
  for_each_shape(n, [&](const ShapeSpec& s) {
    SplitMix64 g(derive_seed(seed, index++));
    if (g.next() % total < max_count) out.push_back(s);
  });
  return out;
}

bool is_fiedler(const ShapeSpec& s) {
  if (!shape_valid(s)) return false;
  for (int k = 1; k < s.n; ++k) {
    const int step = s.row(k) - s.row(k - 1);
    if (step != 0 && step != 1) return false;
  }
  return true;
}

ShapeSpec frobenius_shape(int n) {
  if (n < 2) throw DegreeTooSmall("companion matrices need degree >= 2");
  ShapeSpec s;
  s.n = n;
  s.m = n - 1;
  s.pos.assign(static_cast<std::size_t>(n), n);
  return s;
}

ShapeSpec l_shape(int n, int b) {
  if (n < 2) throw DegreeTooSmall("companion matrices need degree >= 2");
  if (b < 0 || b > n - 1) throw IndexOutOfRange("column split must lie in 0..n-1");
  ShapeSpec s;
  s.n = n;
  s.m = b;
  s.pos.assign(static_cast<std::size_t>(n), n);
  for (int k = 0; k <= n - b - 2; ++k) s.pos[static_cast<std::size_t>(k)] = b + 1 + k;
  return s;
}

CompanionMatrix sparse_from_shape(const Polynomial& p, const ShapeSpec& s) {
  if (s.n != p.degree() || !shape_valid(s)) {
    throw ShapeMismatch("shape does not fit the polynomial degree");
  }
  const int n = s.n;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
  for (int k = 0; k < n; ++k) A(s.row(k) - 1, s.col(k) - 1) = -p.coeff(n - 1 - k);
  CompanionMatrix C;
  C.entries = std::move(A);
  C.kind = (s.m == n - 1) ? MatrixKind::Frobenius
                          : (is_fiedler(s) ? MatrixKind::Fiedler : MatrixKind::Sparse);
  C.shape = s;
  C.source_degree = n;
  return C;
}

CompanionMatrix frobenius(const Polynomial& p) {
  return sparse_from_shape(p, frobenius_shape(p.degree()));
}

CompanionMatrix l_matrix(const Polynomial& p, int b) {
  return sparse_from_shape(p, l_shape(p.degree(), b));
}

CompanionMatrix build_extended_companion(const Polynomial& p, const PartitionSpec& spec) {
  const int n = p.degree();
  validate_partition(spec, n);
  const auto parts = relabel_parts(spec);
  const int t = static_cast<int>(parts.size());
  const int order = n + t - 1;

  ShapeSpec s;
  s.n = order;
  s.m = n - 1;
  s.pos.assign(static_cast<std::size_t>(order), 0);
  for (int j = 1; j <= t; ++j) {
    for (int i : parts[static_cast<std::size_t>(j - 1)]) {
      s.pos[static_cast<std::size_t>(n - 1 - i)] = n + t - j;
    }
  }
  // The zero coefficients introduced by the x^(t-1) factor sit in column 1.
  for (int k = n; k < order; ++k) s.pos[static_cast<std::size_t>(k)] = k + 1;

  CompanionMatrix C = sparse_from_shape(extend(p, t - 1), s);
  C.kind = MatrixKind::Extended;
  C.source_degree = n;
  return C;
}

CompanionMatrix w_matrix(const Polynomial& p) {
  const int n = p.degree();
  if (n < 3) throw DegreeTooSmall("inverse-reversal matrix needs degree >= 3");
  const double a0 = p.constant_term();
  if (a0 == 0.0) throw ZeroConstantTerm("inverse-reversal matrix needs a nonzero constant term");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  A(0, 0) = -p.coeff(n - 1);
  A(0, n - 1) = -a0;
  A(1, 0) = 1.0;
  for (int i = 2; i < n; ++i) {
    A(i, 0) = p.coeff(i - 1) / a0;
    A(i, i - 1) = 1.0;
  }
  CompanionMatrix C;
  C.entries = std::move(A);
  C.kind = MatrixKind::W;
  C.source_degree = n;
  return C;
}

CompanionMatrix x_matrix(const Polynomial& p, int b) {
  const int n = p.degree();
  if (n < 3) throw DegreeTooSmall("inverse-reversal matrix needs degree >= 3");
  const double a0 = p.constant_term();
  if (a0 == 0.0) throw ZeroConstantTerm("inverse-reversal matrix needs a nonzero constant term");
  if (b < 1 || b > n - 2) throw IndexOutOfRange("column split must lie in 1..n-2");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j <= n - 2 - b; ++j) A(0, j) = -p.coeff(n - 1 - j);
  A(0, n - 1) = -a0;
  for (int i = 1; i <= n - 2; ++i) A(i, i - 1) = 1.0;
  for (int k = 1; k <= b; ++k) A(n - 1, n - 2 - k) = p.coeff(k) / a0;
  A(n - 1, n - 2) = 1.0;
  CompanionMatrix C;
  C.entries = std::move(A);
  C.kind = MatrixKind::X;
  C.source_degree = n;
  return C;
}

ECPartition ec_partition(const CompanionMatrix& C) {
  const bool hessenberg_kind = C.kind == MatrixKind::Frobenius ||
                               C.kind == MatrixKind::Fiedler || C.kind == MatrixKind::Sparse;
  if (!hessenberg_kind || !C.shape) {
    throw NotHessenbergSparse("block decomposition needs a Hessenberg sparse companion matrix");
  }
  const int n = C.order();
  const int c = C.shape->m;
  const double a0 = -C.entries(n - 1, 0);
  if (a0 == 0.0) throw ZeroConstantTerm("block decomposition needs a nonzero constant term");
  ECPartition e;
  e.c = c;
  e.a0 = a0;
  e.u = C.entries.block(c, 0, n - c - 1, 1);
  e.H = C.entries.block(c, 1, n - c - 1, c);
  e.y = C.entries.block(n - 1, 1, 1, c).transpose();
  return e;
}

Eigen::MatrixXd assemble_ec(const ECPartition& e) {
  const int n = e.c + 1 + static_cast<int>(e.u.size());
  const int c = e.c;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  A.block(0, 1, c, c) = Eigen::MatrixXd::Identity(c, c);
  A.block(c, 0, n - c - 1, 1) = e.u;
  A.block(c, 1, n - c - 1, c) = e.H;
  A.block(c, c + 1, n - c - 1, n - c - 1) = Eigen::MatrixXd::Identity(n - c - 1, n - c - 1);
  A(n - 1, 0) = -e.a0;
  A.block(n - 1, 1, 1, c) = e.y.transpose();
  return A;
}

CompanionMatrix inverse_sparse(const CompanionMatrix& C) {
  const ECPartition e = ec_partition(C);
  const int n = C.order();
  const int c = e.c;
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(n, n);
  B.block(0, 0, 1, c) = e.y.transpose() / e.a0;
  B(0, n - 1) = -1.0 / e.a0;
  B.block(1, 0, c, c) = Eigen::MatrixXd::Identity(c, c);
  if (n - c - 1 > 0) {
    B.block(c + 1, 0, n - c - 1, c) = -(e.u * e.y.transpose()) / e.a0 - e.H;
    B.block(c + 1, c, n - c - 1, n - c - 1) =
        Eigen::MatrixXd::Identity(n - c - 1, n - c - 1);
    B.block(c + 1, n - 1, n - c - 1, 1) = e.u / e.a0;
  }
  CompanionMatrix inv;
  inv.entries = std::move(B);
  inv.kind = MatrixKind::InverseSparse;
  inv.source_degree = C.source_degree;
  return inv;
}

std::vector<double> char_poly(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  if (n != A.cols()) throw ShapeMismatch("characteristic polynomial needs a square matrix");
  if (n < 1) throw DegreeTooSmall("characteristic polynomial needs order >= 1");
  if (n > 64) throw OrderTooLarge("characteristic polynomial capped at order 64");
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[static_cast<std::size_t>(n)] = 1.0;
  Eigen::MatrixXd B = A;
  c[static_cast<std::size_t>(n - 1)] = -B.trace();
  for (int k = 2; k <= n; ++k) {
    B = A * (B + c[static_cast<std::size_t>(n - k + 1)] *
                     Eigen::MatrixXd::Identity(n, n));
    c[static_cast<std::size_t>(n - k)] = -B.trace() / k;
  }
  c.pop_back();  // drop the implicit monic lead
  return c;
}

std::vector<double> char_poly(const CompanionMatrix& C) { return char_poly(C.entries); }

}  // namespace rootbounds
