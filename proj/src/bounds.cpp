#include "rootbounds/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rootbounds {

double norm_inf(const Eigen::MatrixXd& A) {
  if (A.size() == 0) return 0.0;
  return A.cwiseAbs().rowwise().sum().maxCoeff();
}

double norm_one(const Eigen::MatrixXd& A) {
  if (A.size() == 0) return 0.0;
  return A.cwiseAbs().colwise().sum().maxCoeff();
}

double n_min(const Eigen::MatrixXd& A) { return std::min(norm_inf(A), norm_one(A)); }

double bound_from_matrix(const CompanionMatrix& C) { return n_min(C.entries); }

ShapeNorms shape_norms(const Polynomial& p, const ShapeSpec& s) {
  if (s.n != p.degree()) throw ShapeMismatch("shape degree does not match the polynomial");
  const int n = s.n;
  std::vector<double> row(static_cast<std::size_t>(n), 1.0);
  std::vector<double> col(static_cast<std::size_t>(n), 1.0);
  row[static_cast<std::size_t>(n - 1)] = 0.0;  // last row has no superdiagonal one
  col[0] = 0.0;                                // first column has none either
  for (int k = 0; k < n; ++k) {
    const double a = std::abs(p.coeff(n - 1 - k));
    row[static_cast<std::size_t>(s.row(k) - 1)] += a;
    col[static_cast<std::size_t>(s.col(k) - 1)] += a;
  }
  ShapeNorms out;
  out.inf = *std::max_element(row.begin(), row.end());
  out.one = *std::max_element(col.begin(), col.end());
  return out;
}

double cauchy_bound(const Polynomial& p) {
  double best = std::abs(p.constant_term());
  for (int k = 1; k < p.degree(); ++k) best = std::max(best, 1.0 + std::abs(p.coeff(k)));
  return best;
}

double frobenius_bound(const Polynomial& p) {
  if (p.degree() < 2) throw DegreeTooSmall("classical bound needs degree >= 2");
  double sum = 0.0;
  for (double c : p.coeffs()) sum += std::abs(c);
  return std::min(std::max(1.0, sum), cauchy_bound(p));
}

int best_fiedler_index(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) throw DegreeTooSmall("Fiedler selection needs degree >= 2");
  double prefix = 0.0;
  int r = 0;
  for (int k = 1; k <= n - 1; ++k) {
    prefix += std::abs(p.coeff(k - 1));
    if (prefix < 1.0) {
      r = k;  // partial sums are nondecreasing, so the last k to pass wins
    } else {
      break;
    }
  }
  return r;
}

FiedlerBound best_fiedler_bound(const Polynomial& p) {
  const int r = best_fiedler_index(p);
  return {shape_norms(p, l_shape(p.degree(), r)).inf, r};
}

double partition_bound(const Polynomial& p, const PartitionSpec& spec) {
  const int n = p.degree();
  validate_partition(spec, n);
  double bound = 1.0;  // identity rows of the realizing matrix
  for (int j = 0; j < spec.part_count(); ++j) {
    double sum = 0.0;
    for (int i : spec.parts[static_cast<std::size_t>(j)]) sum += std::abs(p.coeff(i));
    bound = std::max(bound, j == spec.p1_index ? sum : 1.0 + sum);
  }
  return bound;
}

namespace {

struct PartitionSearcher {
  const std::vector<double> mag;
  const int n;
  double best_bound = std::numeric_limits<double>::infinity();
  std::vector<int> best_assign;
  int best_p1 = 0;

  std::vector<int> assign;
  std::vector<double> sums;
  std::vector<int> maxes;

  explicit PartitionSearcher(const Polynomial& p)
      : mag([&] {
          std::vector<double> m(p.coeffs().size());
          for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::abs(p.coeffs()[i]);
          return m;
        }()),
        n(p.degree()) {
    assign.assign(static_cast<std::size_t>(n), 0);
  }

  // Sharpest bound any completion could reach: every part keeps at least its
  // current sum, every part except one designated carries the +1.
  double lower_estimate() const {
    const int t = static_cast<int>(sums.size());
    double top1 = 0.0, top2 = 0.0;
    int top1_at = -1;
    for (int j = 0; j < t; ++j) {
      const double v = 1.0 + sums[static_cast<std::size_t>(j)];
      if (v > top1) {
        top2 = top1;
        top1 = v;
        top1_at = j;
      } else if (v > top2) {
        top2 = v;
      }
    }
    double lb = std::numeric_limits<double>::infinity();
    for (int e = 0; e < t; ++e) {
      const double rest = (e == top1_at) ? top2 : top1;
      lb = std::min(lb, std::max(sums[static_cast<std::size_t>(e)], rest));
    }
    return std::max(lb, 1.0);
  }

  void consider_leaf() {
    const int t = static_cast<int>(sums.size());
    for (int e = 0; e < t; ++e) {
      if (maxes[static_cast<std::size_t>(e)] > n - t) continue;
      double bound = 1.0;
      for (int j = 0; j < t; ++j) {
        const double v = sums[static_cast<std::size_t>(j)];
        bound = std::max(bound, j == e ? v : 1.0 + v);
      }
      if (bound < best_bound) {
        best_bound = bound;
        best_assign = assign;
        best_p1 = e;
      }
    }
  }

  void recurse(int i) {
    if (!sums.empty() && lower_estimate() >= best_bound) return;
    if (i == n) {
      consider_leaf();
      return;
    }
    const int t = static_cast<int>(sums.size());
    for (int j = 0; j < t; ++j) {
      assign[static_cast<std::size_t>(i)] = j;
      const double saved_sum = sums[static_cast<std::size_t>(j)];
      const int saved_max = maxes[static_cast<std::size_t>(j)];
      sums[static_cast<std::size_t>(j)] += mag[static_cast<std::size_t>(i)];
      maxes[static_cast<std::size_t>(j)] = i;
      recurse(i + 1);
      sums[static_cast<std::size_t>(j)] = saved_sum;
      maxes[static_cast<std::size_t>(j)] = saved_max;
    }
    assign[static_cast<std::size_t>(i)] = t;
    sums.push_back(mag[static_cast<std::size_t>(i)]);
    maxes.push_back(i);
    recurse(i + 1);
    sums.pop_back();
    maxes.pop_back();
  }

  PartitionSpec result_partition() const {
    const int t = 1 + *std::max_element(best_assign.begin(), best_assign.end());
    PartitionSpec spec;
    spec.parts.assign(static_cast<std::size_t>(t), {});
    for (int i = 0; i < n; ++i) {
      spec.parts[static_cast<std::size_t>(best_assign[static_cast<std::size_t>(i)])].push_back(i);
    }
    spec.p1_index = best_p1;
    return spec;
  }
};

PartitionSpec one_part_partition(int n) {
  PartitionSpec spec;
  spec.parts.emplace_back();
  for (int i = 0; i < n; ++i) spec.parts[0].push_back(i);
  spec.p1_index = 0;
  return spec;
}

PartitionSpec singleton_partition(int n) {
  PartitionSpec spec;
  for (int i = 0; i < n; ++i) spec.parts.push_back({i});
  spec.p1_index = 0;  // only the part {0} satisfies the row budget when t = n
  return spec;
}

PartitionResult greedy_partition(const Polynomial& p, PartitionResult incumbent) {
  const int n = p.degree();
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(p.coeff(a)) > std::abs(p.coeff(b));
  });

  // First-fit in descending modulus; a part accepts an index only while its
  // +1 row stays below the incumbent bound.
  std::vector<std::vector<int>> parts;
  std::vector<double> sums;
  for (int i : order) {
    const double a = std::abs(p.coeff(i));
    bool placed = false;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (1.0 + sums[j] + a < incumbent.bound) {
        parts[j].push_back(i);
        sums[j] += a;
        placed = true;
        break;
      }
    }
    if (!placed) {
      parts.push_back({i});
      sums.push_back(a);
    }
  }

  // The index 0 always fits the row budget, so carving it out guarantees a
  // feasible designated part.
  {
    int t = static_cast<int>(parts.size());
    bool feasible = false;
    for (const auto& part : parts) {
      if (*std::max_element(part.begin(), part.end()) <= p.degree() - t) feasible = true;
    }
    if (!feasible) {
      for (auto& part : parts) {
        auto it = std::find(part.begin(), part.end(), 0);
        if (it != part.end() && part.size() > 1) {
          part.erase(it);
          parts.push_back({0});
          break;
        }
      }
    }
  }

  PartitionSpec spec;
  spec.parts = parts;
  const int t = spec.part_count();
  double best = std::numeric_limits<double>::infinity();
  int best_e = -1;
  for (int e = 0; e < t; ++e) {
    const auto& part = spec.parts[static_cast<std::size_t>(e)];
    if (*std::max_element(part.begin(), part.end()) > n - t) continue;
    spec.p1_index = e;
    const double bound = partition_bound(p, spec);
    if (bound < best) {
      best = bound;
      best_e = e;
    }
  }
  if (best_e >= 0 && best < incumbent.bound) {
    spec.p1_index = best_e;
    return {spec, best};
  }
  return incumbent;
}

}  // namespace

PartitionResult search_partition(const Polynomial& p, PartitionSearch mode) {
  const int n = p.degree();
  PartitionResult incumbent;
  {
    PartitionSpec whole = one_part_partition(n);
    incumbent = {whole, partition_bound(p, whole)};
    if (n >= 2) {
      PartitionSpec singles = singleton_partition(n);
      const double b = partition_bound(p, singles);
      if (b < incumbent.bound) incumbent = {singles, b};
    }
  }
  if (mode == PartitionSearch::Greedy) return greedy_partition(p, incumbent);

  if (n > 10) throw DegreeOutOfRange("exhaustive partition search capped at degree 10");
  PartitionSearcher searcher(p);
  searcher.best_bound = incumbent.bound;
  searcher.recurse(0);
  if (searcher.best_assign.empty()) return incumbent;
  return {searcher.result_partition(), searcher.best_bound};
}

double lower_bound_reversal(const Polynomial& p, ReversalStrategy strategy) {
  const Polynomial rev = reversal(p);
  if (strategy == ReversalStrategy::FrobeniusOnly) {
    return 1.0 / frobenius_bound(rev);
  }
  if (p.degree() > 10) throw DegreeOutOfRange("shape sweep capped at degree 10");
  const auto shapes = enumerate_shapes(p.degree());
  const auto sweep = min_n_over_shapes_serial(rev, shapes);
  return 1.0 / sweep.value;
}

double w_bound(const Polynomial& p) { return norm_inf(w_matrix(p).entries); }

double x_bound(const Polynomial& p, int b) { return norm_one(x_matrix(p, b).entries); }

XBound best_x_bound(const Polynomial& p) {
  const int n = p.degree();
  if (n < 3) throw DegreeTooSmall("inverse-reversal bounds need degree >= 3");
  XBound best{std::numeric_limits<double>::infinity(), 0};
  for (int b = 1; b <= n - 2; ++b) {
    const double v = x_bound(p, b);
    if (v < best.value) best = {v, b};
  }
  return best;
}

double inverse_lower_bound(const Polynomial& p, const ShapeSpec& s) {
  return 1.0 / n_min(inverse_sparse(sparse_from_shape(p, s)).entries);
}

namespace {
constexpr double kStrict = 1e-9;  // margin for strict inequalities
}

bool w_improves(const Polynomial& p) {
  const int n = p.degree();
  if (n < 3) throw DegreeTooSmall("improvement test needs degree >= 3");
  if (p.constant_term() == 0.0) throw ZeroConstantTerm("improvement test needs a_0 != 0");
  const double a0 = std::abs(p.constant_term());
  const TailStats st = tail_stats(p);
  const double cap = 1.0 + st.max_abs - std::abs(p.coeff(n - 1));
  return a0 > 1.0 + kStrict && a0 < cap - kStrict;
}

bool x_improves(const Polynomial& p, int b) {
  const int n = p.degree();
  if (n < 3) throw DegreeTooSmall("improvement test needs degree >= 3");
  if (p.constant_term() == 0.0) throw ZeroConstantTerm("improvement test needs a_0 != 0");
  if (b < 1 || b > n - 2) throw IndexOutOfRange("column split must lie in 1..n-2");
  const double a0 = std::abs(p.constant_term());
  const TailStats st = tail_stats(p);
  if (!(a0 > 1.0 + kStrict && a0 < 1.0 + st.max_abs - kStrict)) return false;
  if (b < st.last_at_max) return false;
  const double merged = std::abs(p.coeff(b + 1)) + std::abs(p.coeff(b)) / a0;
  return merged < st.max_abs - kStrict;
}

SweepResult min_n_over_shapes_serial(const Polynomial& p, std::span<const ShapeSpec> shapes) {
  SweepResult best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const double v = shape_norms(p, shapes[i]).min();
    if (v < best.value) best = {v, i};
  }
  return best;
}

SweepResult min_n_over_shapes_parallel(const Polynomial& p, std::span<const ShapeSpec> shapes) {
  std::vector<double> values(shapes.size());
  for_each_index(shapes.size(), ExecPolicy::Parallel,
                 [&](std::size_t i) { values[i] = shape_norms(p, shapes[i]).min(); });
  SweepResult best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < best.value) best = {values[i], i};
  }
  return best;
}

SweepResult min_n_over_shapes(const Polynomial& p, std::span<const ShapeSpec> shapes,
                              ExecPolicy policy) {
  return policy == ExecPolicy::Serial ? min_n_over_shapes_serial(p, shapes)
                                      : min_n_over_shapes_parallel(p, shapes);
}

namespace {
double inverse_n_of_shape(const Polynomial& p, const ShapeSpec& s) {
  return n_min(inverse_sparse(sparse_from_shape(p, s)).entries);
}
}  // namespace

SweepResult min_inverse_n_over_shapes_serial(const Polynomial& p,
                                             std::span<const ShapeSpec> shapes) {
  SweepResult best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    const double v = inverse_n_of_shape(p, shapes[i]);
    if (v < best.value) best = {v, i};
  }
  return best;
}

SweepResult min_inverse_n_over_shapes_parallel(const Polynomial& p,
                                               std::span<const ShapeSpec> shapes) {
  std::vector<double> values(shapes.size());
  for_each_index(shapes.size(), ExecPolicy::Parallel,
                 [&](std::size_t i) { values[i] = inverse_n_of_shape(p, shapes[i]); });
  SweepResult best{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < best.value) best = {values[i], i};
  }
  return best;
}

SweepResult min_inverse_n_over_shapes(const Polynomial& p, std::span<const ShapeSpec> shapes,
                                      ExecPolicy policy) {
  return policy == ExecPolicy::Serial ? min_inverse_n_over_shapes_serial(p, shapes)
                                      : min_inverse_n_over_shapes_parallel(p, shapes);
}

std::vector<std::pair<std::string, double>> BoundReport::upper_bounds() const {
  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("cauchy", cauchy);
  if (frobenius) out.emplace_back("frobenius", *frobenius);
  if (best_fiedler) out.emplace_back("fiedler", best_fiedler->first);
  if (partition) out.emplace_back("partition", partition->first);
  if (best_sparse) out.emplace_back("sparse", best_sparse->first);
  if (w) out.emplace_back("w", *w);
  for (const auto& [b, v] : x) out.emplace_back("x_" + std::to_string(b), v);
  return out;
}

std::vector<std::pair<std::string, double>> BoundReport::lower_bounds() const {
  std::vector<std::pair<std::string, double>> out;
  if (lower_reversal) out.emplace_back("reversal", *lower_reversal);
  if (lower_inverse) out.emplace_back("inverse", *lower_inverse);
  return out;
}

BoundReport bound_report(const Polynomial& p, const BoundOptions& options) {
  BoundReport r;
  r.degree = p.degree();
  if (r.degree < 2) throw DegreeTooSmall("bound report needs degree >= 2");

  Polynomial q = p;
  try {
    StrippedPolynomial st = strip_zero_roots(p);
    q = st.reduced;
    r.zero_root_multiplicity = st.multiplicity;
  } catch (const AllRootsZero&) {
    r.all_roots_zero = true;
    r.zero_root_multiplicity = r.degree;
    r.best_upper = 0.0;
    r.best_upper_source = "degenerate";
    r.best_lower = 0.0;
    r.best_lower_source = "degenerate";
    return r;
  }
  const int n = q.degree();
  r.effective_degree = n;
  r.cauchy = cauchy_bound(q);

  if (n == 1) {
    // One nonzero root, -a_0, known exactly.
    const double mod = std::abs(q.constant_term());
    r.best_upper = r.cauchy;
    r.best_upper_source = "cauchy";
    r.lower_reversal = mod;
    r.best_lower = mod;
    r.best_lower_source = "reversal";
    return r;
  }

  r.frobenius = frobenius_bound(q);
  const FiedlerBound fb = best_fiedler_bound(q);
  r.best_fiedler = std::make_pair(fb.value, fb.index);

  const PartitionSearch mode = n <= options.exhaustive_partition_limit
                                   ? PartitionSearch::Exhaustive
                                   : PartitionSearch::Greedy;
  const PartitionResult part = search_partition(q, mode);
  r.partition = std::make_pair(part.bound, part.partition);

  std::vector<ShapeSpec> local_shapes;
  const std::vector<ShapeSpec>* shapes = nullptr;
  if (n <= options.enumeration_limit) {
    if (options.shapes && !options.shapes->empty() && options.shapes->front().n == n) {
      shapes = options.shapes;
    } else {
      local_shapes = enumerate_shapes(n);
      shapes = &local_shapes;
    }
    const SweepResult sweep = min_n_over_shapes(q, *shapes, options.exec);
    r.best_sparse = std::make_pair(sweep.value, (*shapes)[sweep.index]);
  }

  if (n >= 3) {
    r.w = w_bound(q);
    for (int b = 1; b <= n - 2; ++b) r.x.emplace_back(b, x_bound(q, b));
  }

  if (shapes) {
    const SweepResult rev_sweep = min_n_over_shapes(reversal(q), *shapes, options.exec);
    r.lower_reversal = 1.0 / rev_sweep.value;
    const SweepResult inv_sweep = min_inverse_n_over_shapes(q, *shapes, options.exec);
    r.lower_inverse = 1.0 / inv_sweep.value;
  } else {
    r.lower_reversal = lower_bound_reversal(q, ReversalStrategy::FrobeniusOnly);
    r.lower_inverse = 1.0 / n_min(inverse_sparse(frobenius(q)).entries);
  }

  const auto uppers = r.upper_bounds();
  r.best_upper = uppers.front().second;
  r.best_upper_source = uppers.front().first;
  for (const auto& [tag, v] : uppers) {
    if (v < r.best_upper) {
      r.best_upper = v;
      r.best_upper_source = tag;
    }
  }
  for (const auto& [tag, v] : r.lower_bounds()) {
    if (!r.best_lower || v > *r.best_lower) {
      r.best_lower = v;
      r.best_lower_source = tag;
    }
  }
  return r;
}

}  // namespace rootbounds
