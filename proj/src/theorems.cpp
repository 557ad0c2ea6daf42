#include "rootbounds/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "rootbounds/bounds.hpp"
#include "rootbounds/companion.hpp"
#include "rootbounds/oracle.hpp"

namespace rootbounds::theorems {

namespace {

constexpr double kMargin = 1e-9;
constexpr std::size_t kShapeSampleCap = 2000;
constexpr int kMaxViolationsPerTrial = 4;

bool definitely_less(double a, double b) { return a < b - kMargin; }
bool near(double a, double b) { return std::abs(a - b) <= kMargin; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string shape_context(const ShapeSpec& s) {
  std::ostringstream os;
  os << "shape m=" << s.m << " pos=[";
  for (std::size_t i = 0; i < s.pos.size(); ++i) os << (i ? "," : "") << s.pos[i];
  os << "]";
  return os.str();
}

/// Shape lists shared by every trial of one degree.
struct DegreeCache {
  std::vector<ShapeSpec> shapes;   // exhaustive to degree 7, sampled to 12
  std::vector<ShapeSpec> u_zero;   // subset with an invertible block form
  std::vector<ShapeSpec> fiedler;  // all lattice paths, degree <= 12
};

DegreeCache build_cache(int n, std::uint64_t seed) {
  DegreeCache cache;
  if (n <= 7) {
    cache.shapes = enumerate_shapes(n);
  } else if (n <= 12) {
    cache.shapes = sample_shapes(n, kShapeSampleCap, seed);
  }
  for (const ShapeSpec& s : cache.shapes) {
    if (s.m < 1 || s.m > n - 2) continue;
    bool clear = true;
    for (int k = 0; k < n - 1 && clear; ++k) clear = s.col(k) != 1;
    if (clear) cache.u_zero.push_back(s);
  }
  if (n <= 12) cache.fiedler = enumerate_fiedler(n);
  return cache;
}

struct Reporter {
  const Polynomial* p = nullptr;
  std::vector<Violation> violations;
  long near_boundary = 0;

  void violate(std::string context, std::initializer_list<double> observed) {
    if (static_cast<int>(violations.size()) >= kMaxViolationsPerTrial) return;
    violations.push_back({p->coeffs(), std::move(context), observed});
  }
  void boundary() { ++near_boundary; }
};

using CheckFn =
    std::function<void(const Polynomial&, const DegreeCache&, SplitMix64&, Reporter&)>;

struct PropertyDef {
  PropertyInfo info;
  CheckFn check;       // empty for self-contained properties
  bool corpus = true;  // false: runs once, independent of the corpus
};

// ---------------------------------------------------------------------------
// Individual property checks. Hypotheses are tested with a 1e-9 margin so a
// rounding artifact lands in near_boundary instead of violations.

void check_3_1(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const double nf = frobenius_bound(p);
  const double a0 = std::abs(p.constant_term());
  for (const ShapeSpec& s : cache.shapes) {
    if (s.m == s.n - 1) continue;
    const double nc = shape_norms(p, s).min();
    if (definitely_less(nc, nf)) {
      if (a0 >= 1.0) rep.violate(shape_context(s), {nc, nf, a0});
    } else if (near(nc, nf)) {
      rep.boundary();
    }
  }
}

void check_3_2(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const int n = p.degree();
  const double nf = frobenius_bound(p);
  const TailStats st = tail_stats(p);
  for (const ShapeSpec& s : cache.shapes) {
    if (s.m == s.n - 1) continue;
    const ShapeNorms norms = shape_norms(p, s);
    if (!definitely_less(norms.min(), nf)) continue;
    bool all_last_row = true;
    bool all_first_col = true;
    for (int i = 1; i < n; ++i) {
      if (std::abs(p.coeff(i)) != st.max_abs) continue;
      const int k = n - 1 - i;
      if (s.row(k) != n) all_last_row = false;
      if (s.col(k) != 1) all_first_col = false;
    }
    const bool row_case =
        all_last_row && norms.inf < nf + kMargin && nf <= norms.one + kMargin;
    const bool col_case =
        all_first_col && norms.one < nf + kMargin && nf <= norms.inf + kMargin;
    if (!row_case && !col_case) {
      rep.violate(shape_context(s), {norms.inf, norms.one, nf, st.max_abs});
    }
  }
}

void check_3_3(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const double nf = frobenius_bound(p);
  bool improved = false;
  for (const ShapeSpec& s : cache.shapes) {
    if (s.m == s.n - 1) continue;
    if (definitely_less(shape_norms(p, s).min(), nf)) {
      improved = true;
      break;
    }
  }
  if (!improved) return;
  const TailStats st = tail_stats(p);
  const double lhs = (st.count_at_max - 1) * st.max_abs;
  const double rhs = 1.0 - std::abs(p.constant_term());
  if (lhs >= rhs + kMargin) {
    rep.violate("improving shape exists", {lhs, rhs});
  } else if (near(lhs, rhs)) {
    rep.boundary();
  }
}

void check_3_4(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const double nf = frobenius_bound(p);
  for (const ShapeSpec& s : cache.shapes) {
    if (s.m == s.n - 1) continue;
    const double nc = shape_norms(p, s).min();
    if (nf > 2.0 * nc + kMargin) {
      rep.violate(shape_context(s), {nf, nc});
    } else if (near(nf, 2.0 * nc)) {
      rep.boundary();
    }
    if (nf - nc > 1.0 + kMargin) {
      rep.violate(shape_context(s), {nf, nc, nf - nc});
    } else if (near(nf - nc, 1.0) && std::abs(p.constant_term()) > kMargin) {
      rep.boundary();  // the gap may reach 1 only with a vanishing constant term
    }
  }
}

void check_4_1(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const int n = p.degree();
  for (const ShapeSpec& s : cache.fiedler) {
    int first_last_row = n - 1;
    while (first_last_row > 0 && s.pos[static_cast<std::size_t>(first_last_row - 1)] == n) {
      --first_last_row;
    }
    const int b = n - 1 - first_last_row;  // largest coefficient index in the last row
    if (b == n - 1) continue;              // the all-row path is the classical form
    const double lb = shape_norms(p, l_shape(n, b)).inf;
    const double fs = shape_norms(p, s).inf;
    if (lb > fs + kMargin) rep.violate(shape_context(s), {lb, fs, double(b)});
  }
}

void check_4_2(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const int n = p.degree();
  const int r = best_fiedler_index(p);
  const double lr = shape_norms(p, l_shape(n, r)).inf;
  for (int b = 0; b <= n - 1; ++b) {
    const double lb = shape_norms(p, l_shape(n, b)).inf;
    if (lr > lb + kMargin) rep.violate("b=" + std::to_string(b), {lr, lb, double(r)});
  }
  for (const ShapeSpec& s : cache.fiedler) {
    const double fs = shape_norms(p, s).inf;
    if (lr > fs + kMargin) rep.violate(shape_context(s), {lr, fs, double(r)});
  }
}

PartitionSpec random_partition(int n, SplitMix64& rng) {
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  int max_part = 0;
  for (int i = 1; i < n; ++i) {
    assign[static_cast<std::size_t>(i)] = static_cast<int>(rng.uniform_int(0, max_part + 1));
    max_part = std::max(max_part, assign[static_cast<std::size_t>(i)]);
  }
  PartitionSpec spec;
  spec.parts.assign(static_cast<std::size_t>(max_part) + 1, {});
  for (int i = 0; i < n; ++i) {
    spec.parts[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])].push_back(i);
  }
  const int t = spec.part_count();
  std::vector<int> feasible;
  for (int j = 0; j < t; ++j) {
    const auto& part = spec.parts[static_cast<std::size_t>(j)];
    if (*std::max_element(part.begin(), part.end()) <= n - t) feasible.push_back(j);
  }
  spec.p1_index = feasible[static_cast<std::size_t>(
      rng.uniform_int(0, static_cast<long long>(feasible.size()) - 1))];
  return spec;
}

std::string partition_context(const PartitionSpec& spec) {
  std::ostringstream os;
  os << "partition p1=" << spec.p1_index << " parts=";
  for (const auto& part : spec.parts) {
    os << "{";
    for (std::size_t i = 0; i < part.size(); ++i) os << (i ? "," : "") << part[i];
    os << "}";
  }
  return os.str();
}

void check_5_2(const Polynomial& p, const DegreeCache&, SplitMix64& rng, Reporter& rep) {
  const PartitionSpec spec = random_partition(p.degree(), rng);
  const double bp = partition_bound(p, spec);
  const CompanionMatrix ext = build_extended_companion(p, spec);

  const double max_mod = oracle::max_root_modulus(p);
  if (bp < max_mod - 1e-8) rep.violate(partition_context(spec), {bp, max_mod});

  const double inf = norm_inf(ext.entries);
  if (!near(bp, inf)) rep.violate(partition_context(spec), {bp, inf});

  // The extended matrix keeps the classical two-sided relation.
  const double nf = frobenius_bound(p);
  const double next = n_min(ext.entries);
  if (nf > 2.0 * next + kMargin) {
    rep.violate(partition_context(spec), {nf, next});
  } else if (near(nf, 2.0 * next)) {
    rep.boundary();
  }
  if (nf - next > 1.0 + kMargin) rep.violate(partition_context(spec), {nf, next, nf - next});
}

void check_6_2(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const double a0 = std::abs(p.constant_term());
  if (a0 >= 1.0) {
    const double nf = frobenius_bound(p);
    for (const ShapeSpec& s : cache.shapes) {
      const double nc = shape_norms(p, s).min();
      if (nf > nc + kMargin) rep.violate(shape_context(s), {nf, nc, a0});
    }
  }
  if (a0 <= 1.0 && a0 > 0.0) {
    const Polynomial rev = reversal(p);
    const double nf = frobenius_bound(rev);
    for (const ShapeSpec& s : cache.shapes) {
      const double nc = shape_norms(rev, s).min();
      if (nf > nc + kMargin) rep.violate(shape_context(s), {nf, nc, a0});
    }
  }
}

void check_6_3(const Polynomial& p, const DegreeCache& cache, SplitMix64& rng, Reporter& rep) {
  if (std::abs(p.constant_term()) != 1.0) return;  // applies exactly on the unit band
  check_6_2(p, cache, rng, rep);
}

void check_7_1(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  if (p.degree() < 3 || p.constant_term() == 0.0) return;
  const double a0 = std::abs(p.constant_term());
  const double nf = frobenius_bound(p);
  const TailStats st = tail_stats(p);
  const bool last_is_max = std::abs(p.coeff(p.degree() - 1)) == st.max_abs;
  const double winf = w_bound(p);
  const Polynomial rev = reversal(p);
  for (const ShapeSpec& s : cache.u_zero) {
    const CompanionMatrix inv = inverse_sparse(sparse_from_shape(rev, s));
    const double ainf = norm_inf(inv.entries);
    const double aone = norm_one(inv.entries);
    const double na = std::min(ainf, aone);
    if (a0 == 1.0 && nf > na + kMargin) {
      rep.violate(shape_context(s) + " |a0|=1", {nf, na});
    }
    if (a0 > 1.0 + kMargin) {
      if (winf > ainf + kMargin) rep.violate(shape_context(s) + " w-opt", {winf, ainf});
      if (last_is_max && nf > na + kMargin) {
        rep.violate(shape_context(s) + " leading-max", {nf, na});
      }
    }
    if (a0 < 1.0 - kMargin) {
      if (nf - ainf > 1.0 + kMargin) rep.violate(shape_context(s) + " gap", {nf, ainf});
      if (nf > 2.0 * ainf + kMargin) rep.violate(shape_context(s) + " ratio", {nf, ainf});
      if (nf > aone + kMargin) rep.violate(shape_context(s) + " one-norm", {nf, aone});
    }
  }
}

void check_7_2(const Polynomial& p, const DegreeCache&, SplitMix64&, Reporter& rep) {
  if (p.degree() < 3 || p.constant_term() == 0.0) return;
  const double a0 = std::abs(p.constant_term());
  const TailStats st = tail_stats(p);
  const double last = std::abs(p.coeff(p.degree() - 1));
  const double cap = 1.0 + st.max_abs - last;
  // The characterization concerns the row-sum expression
  // max{|a0|+|a_{n-1}|, 1+M/|a0|}; it can exceed the dense norm of W when
  // |a0| < 1 and only the leading tail coefficient attains M, so the reverse
  // direction is tested against the expression, not the dense norm.
  const double expr = std::max(a0 + last, 1.0 + st.max_abs / a0);
  const double winf = w_bound(p);
  const double nf = frobenius_bound(p);
  if (a0 >= 1.0 && std::abs(winf - expr) > kMargin) {
    rep.violate("norm expression mismatch", {winf, expr, a0});
  }
  if (w_improves(p) && !(expr < nf && winf < nf)) {
    rep.violate("improvement predicted", {winf, expr, nf, a0, cap});
  }
  if (definitely_less(expr, nf) && !(a0 > 1.0 && a0 < cap)) {
    rep.violate("improvement observed", {winf, expr, nf, a0, cap});
  }
  if (near(expr, nf) || near(a0, 1.0) || near(a0, cap)) rep.boundary();
}

void check_7_3(const Polynomial& p, const DegreeCache&, SplitMix64&, Reporter& rep) {
  if (p.degree() < 3 || p.constant_term() == 0.0) return;
  const double a0 = std::abs(p.constant_term());
  if (!(a0 > 1.0 + kMargin)) return;
  const double winf = w_bound(p);
  const double nf = frobenius_bound(p);
  if (!definitely_less(nf, winf)) return;
  if (winf > 2.0 * nf + kMargin) {
    rep.violate("reverse ratio", {winf, nf});
  } else if (near(winf, 2.0 * nf)) {
    rep.boundary();
  }
}

void check_8_1(const Polynomial& p, const DegreeCache& cache, SplitMix64&, Reporter& rep) {
  const int n = p.degree();
  if (n < 3 || p.constant_term() == 0.0) return;
  const double a0 = std::abs(p.constant_term());
  const TailStats st = tail_stats(p);
  if (!(a0 > 1.0 + kMargin)) return;
  if (!(std::abs(p.coeff(n - 1)) < st.max_abs - kMargin)) return;
  const XBound best = best_x_bound(p);
  bool member = near(best.value, a0) || near(best.value, 1.0 + std::abs(p.coeff(n - 1)));
  for (int k = 1; k <= best.index - 1 && !member; ++k) {
    member = near(best.value, 1.0 + std::abs(p.coeff(k)) / a0);
  }
  if (!member) return;
  const Polynomial rev = reversal(p);
  for (const ShapeSpec& s : cache.u_zero) {
    const CompanionMatrix inv = inverse_sparse(sparse_from_shape(rev, s));
    const double aone = norm_one(inv.entries);
    if (best.value > aone + kMargin) {
      rep.violate(shape_context(s) + " beta=" + std::to_string(best.index),
                  {best.value, aone});
    }
  }
}

void check_8_2(const Polynomial& p, const DegreeCache&, SplitMix64&, Reporter& rep) {
  const int n = p.degree();
  if (n < 3 || p.constant_term() == 0.0) return;
  const double a0 = std::abs(p.constant_term());
  const TailStats st = tail_stats(p);
  const double nf = frobenius_bound(p);
  for (int b = 1; b <= n - 2; ++b) {
    const double xb = x_bound(p, b);
    if (x_improves(p, b) && !(xb < nf)) {
      rep.violate("b=" + std::to_string(b) + " improvement predicted", {xb, nf});
    }
    const double merged = std::abs(p.coeff(b + 1)) + std::abs(p.coeff(b)) / a0;
    const bool plain = a0 > 1.0 && a0 < 1.0 + st.max_abs && b >= st.last_at_max &&
                       merged < st.max_abs;
    if (definitely_less(xb, nf) && !plain) {
      rep.violate("b=" + std::to_string(b) + " improvement observed",
                  {xb, nf, a0, merged, st.max_abs});
    }
    if (near(xb, nf) || near(a0, 1.0) || near(a0, 1.0 + st.max_abs) ||
        near(merged, st.max_abs)) {
      rep.boundary();
    }
  }
}

void check_8_3(const Polynomial& p, const DegreeCache&, SplitMix64&, Reporter& rep) {
  const int n = p.degree();
  if (n < 3 || p.constant_term() == 0.0) return;
  const double a0 = std::abs(p.constant_term());
  if (!(a0 > 1.0 + kMargin)) return;
  const double winf = w_bound(p);
  const double cap = 2.0 - 1.0 / a0;
  for (int b = 1; b <= n - 2; ++b) {
    const double xb = x_bound(p, b);
    if (winf / xb > cap + kMargin) {
      rep.violate("b=" + std::to_string(b), {winf, xb, winf / xb, cap});
    } else if (near(winf / xb, cap)) {
      rep.boundary();
    }
  }
}

/// Scaling family: cubics x^3 + a1 x + a0 over power-of-ten grids reproduce
/// an unbounded classical-to-inverse bound ratio (1+10^(2m)) / (1+10^m).
PropertyResult run_remark_8_1() {
  PropertyResult result;
  result.theorem_id = "remark_8_1";
  for (int m = 1; m <= 3; ++m) {
    ++result.trials;
    const double target_nf = 1.0 + std::pow(10.0, 2 * m);
    const double target_w = 1.0 + std::pow(10.0, m);
    bool found = false;
    for (int e0 = 1; e0 <= 4 && !found; ++e0) {
      for (int sign0 = -1; sign0 <= 1 && !found; sign0 += 2) {
        for (int e1 = 1; e1 <= 8 && !found; ++e1) {
          for (int sign1 = -1; sign1 <= 1 && !found; sign1 += 2) {
            const Polynomial p(
                {sign0 * std::pow(10.0, e0), sign1 * std::pow(10.0, e1), 0.0});
            const double nf = frobenius_bound(p);
            const double winf = w_bound(p);
            const double x1 = x_bound(p, 1);
            if (std::abs(nf - target_nf) <= 1e-6 && std::abs(winf - target_w) <= 1e-9 &&
                std::abs(x1 - winf) <= 1e-9 &&
                std::abs(nf / winf - target_nf / target_w) <= 1e-9) {
              found = true;
            }
          }
        }
      }
    }
    if (!found) {
      result.violations.push_back(
          {{}, "no family member for m=" + std::to_string(m), {target_nf, target_w}});
    }
  }
  return result;
}

const std::vector<PropertyDef>& properties() {
  static const std::vector<PropertyDef> defs = [] {
    std::vector<PropertyDef> v;
    v.push_back({{"thm_3_1", "a sharper shape bound forces |a0| < 1"}, check_3_1});
    v.push_back({{"thm_3_2", "improving shapes keep maximal coefficients in one line"},
                 check_3_2});
    v.push_back({{"cor_3_3", "an improving shape forces (u-1)M < 1-|a0|"}, check_3_3});
    v.push_back({{"thm_3_4", "shape bounds lose at most a factor two and a gap of one"},
                 check_3_4});
    v.push_back({{"thm_4_1", "the L-shaped path dominates every path sharing its split"},
                 check_4_1});
    v.push_back({{"thm_4_2", "the prefix-sum split minimizes the L-shaped bound"},
                 check_4_2});
    v.push_back({{"thm_5_2", "partition bounds are sound and match the built matrix"},
                 check_5_2});
    v.push_back({{"thm_6_2", "the classical form wins on the side |a0| selects"},
                 check_6_2});
    v.push_back({{"cor_6_3", "|a0| = 1 makes the classical form best on both sides"},
                 check_6_3});
    v.push_back({{"thm_7_1", "inverse-block bound comparisons by |a0| regime"}, check_7_1});
    v.push_back({{"thm_7_2", "exact criterion for the W bound to improve"}, check_7_2});
    v.push_back({{"thm_7_3", "when W loses it loses by less than a factor two"}, check_7_3});
    v.push_back({{"thm_8_1", "a column-extremal best X dominates all inverse blocks"},
                 check_8_1});
    v.push_back({{"thm_8_2", "exact criterion for an X bound to improve"}, check_8_2});
    v.push_back({{"thm_8_3", "W never exceeds X by the a0-scaled factor"}, check_8_3});
    v.push_back({{"remark_8_1", "ratio family with unbounded improvement"}, nullptr, false});
    return v;
  }();
  return defs;
}

}  // namespace

const std::vector<PropertyInfo>& registry() {
  static const std::vector<PropertyInfo> infos = [] {
    std::vector<PropertyInfo> v;
    for (const auto& def : properties()) v.push_back(def.info);
    return v;
  }();
  return infos;
}

Polynomial sample_polynomial(int degree, Distribution dist, double range, int band,
                             SplitMix64& rng) {
  std::vector<double> tail(static_cast<std::size_t>(degree));
  if (dist == Distribution::Integer) {
    const long long k = std::max<long long>(1, static_cast<long long>(range));
    for (int i = 1; i < degree; ++i) {
      tail[static_cast<std::size_t>(i)] = static_cast<double>(rng.uniform_int(-k, k));
    }
    const double sign = rng.next() % 2 == 0 ? 1.0 : -1.0;
    if (band == 0) {
      tail[0] = 0.0;
    } else if (band == 1) {
      tail[0] = sign;
    } else {
      tail[0] = sign * static_cast<double>(rng.uniform_int(2, std::max<long long>(2, k)));
    }
    return Polynomial(std::move(tail));
  }
  for (int i = 1; i < degree; ++i) {
    tail[static_cast<std::size_t>(i)] = rng.uniform(-range, range);
  }
  const double sign = rng.next() % 2 == 0 ? 1.0 : -1.0;
  if (band == 0) {
    tail[0] = rng.uniform(-1.0, 1.0);
  } else if (band == 1) {
    tail[0] = sign;
  } else {
    tail[0] = sign * rng.uniform(1.0, std::max(1.5, range));
  }
  return Polynomial(std::move(tail));
}

const std::vector<Polynomial>& example_corpus() {
  static const std::vector<Polynomial> corpus = {
      Polynomial({-0.1, -0.1, -0.1, -0.5, -0.1, -0.3, -0.1, -0.1}),
      Polynomial({-3, -2, -4, -1, -2, -1}),
      Polynomial({-3, -5, -3, -4, -2, -2, -3, -1}),
      Polynomial({-1, -3, -5, -1, -6, -1, -3, -1}),
      Polynomial({-5, -1, -5, -4, -10, -3}),
      Polynomial({-0.2, -2, -5, -6, -2, -1, -4}),
      Polynomial({-0.2, -2, -2, -1, -1, -1}),
      Polynomial({-6, 18, 36, 6, 12, -1}),
      Polynomial({5, -5, -10, 20, 17, 1, -1, 4}),
      Polynomial({10, 100, 0}),
  };
  return corpus;
}

PropertyResult run_property(const std::string& theorem_id, const CorpusConfig& config) {
  const PropertyDef* def = nullptr;
  for (const auto& d : properties()) {
    if (d.info.id == theorem_id) def = &d;
  }
  if (!def) throw UnknownTheorem("no registered property named " + theorem_id);
  if (!def->corpus) return run_remark_8_1();

  std::vector<Polynomial> fixed;
  std::vector<int> degrees = config.degrees;
  if (config.dist == Distribution::Examples) {
    fixed = example_corpus();
    degrees.clear();
    for (const auto& p : fixed) degrees.push_back(p.degree());
  }

  std::map<int, DegreeCache> caches;
  for (int n : degrees) {
    if (!caches.count(n)) caches.emplace(n, build_cache(n, config.seed));
  }

  const std::size_t trials =
      config.dist == Distribution::Examples
          ? fixed.size()
          : degrees.size() * static_cast<std::size_t>(std::max(0, config.samples_per_degree));

  PropertyResult result;
  result.theorem_id = theorem_id;
  result.trials = static_cast<long>(trials);
  if (trials == 0) return result;

  const std::uint64_t stream = config.seed ^ fnv1a(theorem_id);
  std::vector<Reporter> reporters(trials);
  for_each_index(trials, config.exec, [&](std::size_t t) {
    SplitMix64 rng(derive_seed(stream, t));
    Polynomial p = [&] {
      if (config.dist == Distribution::Examples) return fixed[t];
      const std::size_t per = static_cast<std::size_t>(config.samples_per_degree);
      const int degree = degrees[t / per];
      return sample_polynomial(degree, config.dist, config.range, static_cast<int>(t % 3),
                               rng);
    }();
    Reporter& rep = reporters[t];
    rep.p = &p;
    try {
      def->check(p, caches.at(p.degree()), rng, rep);
    } catch (const NoConvergence& e) {
      rep.violate(std::string("oracle failure: ") + e.what(), {});
    }
    rep.p = nullptr;
  });

  for (Reporter& rep : reporters) {
    result.near_boundary += rep.near_boundary;
    for (auto& v : rep.violations) result.violations.push_back(std::move(v));
  }
  return result;
}

std::vector<PropertyResult> run_all(const CorpusConfig& config) {
  std::vector<PropertyResult> results;
  for (const auto& info : registry()) results.push_back(run_property(info.id, config));
  return results;
}

}  // namespace rootbounds::theorems
