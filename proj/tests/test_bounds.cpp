#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rootbounds/bounds.hpp"
#include "rootbounds/oracle.hpp"
#include "test_support.hpp"

using namespace rootbounds;

namespace {

const Polynomial kDecimalEight({-0.1, -0.1, -0.1, -0.5, -0.1, -0.3, -0.1, -0.1});
const Polynomial kExtendedSix({-3, -2, -4, -1, -2, -1});
const Polynomial kPartitionBig({-3, -5, -3, -4, -2, -2, -3, -1});
const Polynomial kPartitionSmall({-1, -3, -5, -1, -6, -1, -3, -1});
const Polynomial kReversalSix({-5, -1, -5, -4, -10, -3});
const Polynomial kReversalSeven({-0.2, -2, -5, -6, -2, -1, -4});
const Polynomial kInverseSix({-6, 18, 36, 6, 12, -1});
const Polynomial kInverseEight({5, -5, -10, 20, 17, 1, -1, 4});

/// Column-sum form of the X bound, assembled term by term.
double x_bound_closed_form(const Polynomial& p, int b) {
  const int n = p.degree();
  const double a0 = std::abs(p.constant_term());
  double best = std::abs(p.constant_term());
  for (int i = b + 2; i < n; ++i) best = std::max(best, 1.0 + std::abs(p.coeff(i)));
  best = std::max(best, 1.0 + std::abs(p.coeff(b + 1)) + std::abs(p.coeff(b)) / a0);
  for (int k = 1; k <= b - 1; ++k) best = std::max(best, 1.0 + std::abs(p.coeff(k)) / a0);
  return std::max(best, 1.0);
}

}  // namespace

TEST_CASE("induced norms") {
  const CompanionMatrix F = frobenius(kReversalSix);
  CHECK(norm_one(F.entries) == doctest::Approx(11.0));
  CHECK(n_min(F.entries) == doctest::Approx(11.0));
  CHECK(norm_inf(Eigen::MatrixXd::Zero(4, 4)) == 0.0);
  CHECK(norm_one(Eigen::MatrixXd::Zero(4, 4)) == 0.0);
}

TEST_CASE("shape_norms agrees with the dense norms") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Polynomial p = test_support::random_poly(6, 5.0, 40 + seed);
    for (const auto& s : enumerate_shapes(6)) {
      const ShapeNorms fast = shape_norms(p, s);
      const CompanionMatrix C = sparse_from_shape(p, s);
      CHECK(fast.inf == doctest::Approx(norm_inf(C.entries)).epsilon(1e-14));
      CHECK(fast.one == doctest::Approx(norm_one(C.entries)).epsilon(1e-14));
    }
  }
}

TEST_CASE("cauchy bound") {
  CHECK(cauchy_bound(kExtendedSix) == doctest::Approx(5.0));
  CHECK(cauchy_bound(Polynomial({0, 0, 0, 0})) == doctest::Approx(1.0));
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Polynomial p = test_support::random_poly(3 + static_cast<int>(seed % 8), 5.0, seed);
    CHECK(cauchy_bound(p) >= oracle::max_root_modulus(p) - 1e-8);
  }
}

TEST_CASE("classical companion bound") {
  CHECK(frobenius_bound(kInverseEight) == doctest::Approx(21.0));
  CHECK(frobenius_bound(kReversalSeven) == doctest::Approx(7.0));
  CHECK(frobenius_bound(kPartitionSmall) == doctest::Approx(7.0));
  CHECK_THROWS_AS(frobenius_bound(Polynomial({2})), DegreeTooSmall);
}

TEST_CASE("bound_from_matrix on display shapes") {
  const ShapeSpec seven{7, 3, {4, 4, 6, 7, 5, 6, 7}};
  CHECK(bound_from_matrix(sparse_from_shape(kReversalSeven, seven)) == doctest::Approx(6.2));

  const PartitionSpec spec{{{2}, {0}, {3, 4}, {1, 5}}, 0};
  CHECK(norm_inf(build_extended_companion(kExtendedSix, spec).entries) ==
        doctest::Approx(4.0));

  for (std::uint64_t seed = 100; seed < 106; ++seed) {
    const Polynomial p = test_support::random_poly(5, 4.0, seed);
    const double max_mod = oracle::max_root_modulus(p);
    for (const auto& s : enumerate_shapes(5)) {
      CHECK(bound_from_matrix(sparse_from_shape(p, s)) >= max_mod - 1e-8);
    }
  }
}

TEST_CASE("best Fiedler split") {
  CHECK(best_fiedler_index(kDecimalEight) == 5);
  CHECK(best_fiedler_index(Polynomial({2, 1, 1})) == 0);

  const FiedlerBound fb = best_fiedler_bound(kDecimalEight);
  CHECK(fb.index == 5);
  CHECK(fb.value == doctest::Approx(1.2).epsilon(1e-12));
  const double table[8] = {1.5, 1.5, 1.5, 1.3, 1.3, 1.2, 1.3, 1.4};
  for (int b = 0; b <= 7; ++b) {
    CHECK(norm_inf(l_matrix(kDecimalEight, b).entries) ==
          doctest::Approx(table[b]).epsilon(1e-12));
  }

  const FiedlerBound trivial = best_fiedler_bound(Polynomial({0, 0, 0, 0}));
  CHECK(trivial.value == doctest::Approx(1.0));
  CHECK(trivial.index == 3);

  // The selected split beats every split and every lattice path.
  for (std::uint64_t seed = 200; seed < 260; ++seed) {
    const Polynomial p = test_support::random_poly(6, 2.0, seed);
    const FiedlerBound best = best_fiedler_bound(p);
    for (int b = 0; b <= 5; ++b) {
      CHECK(best.value <= norm_inf(l_matrix(p, b).entries) + 1e-12);
    }
    for (const auto& s : enumerate_fiedler(6)) {
      CHECK(best.value <= shape_norms(p, s).inf + 1e-12);
    }
  }
}

TEST_CASE("partition bound on the worked examples") {
  const PartitionSpec big{{{0, 7}, {1}, {2}, {3}, {4}, {5}, {6}}, 1};
  CHECK(partition_bound(kPartitionBig, big) == doctest::Approx(5.0));
  CHECK(frobenius_bound(kPartitionBig) == doctest::Approx(6.0));

  const PartitionSpec small{{{4}, {2}, {0, 5, 6}, {1, 3, 7}}, 0};
  CHECK(partition_bound(kPartitionSmall, small) == doctest::Approx(6.0));

  const PartitionSpec whole{{{0, 1, 2, 3, 4, 5, 6, 7}}, 0};
  double sum = 0.0;
  for (double c : kPartitionSmall.coeffs()) sum += std::abs(c);
  CHECK(partition_bound(kPartitionSmall, whole) == doctest::Approx(std::max(1.0, sum)));
}

TEST_CASE("partition validation rejects malformed partitions") {
  const Polynomial p({1, 2, 3, 4});
  CHECK_THROWS_AS(partition_bound(p, PartitionSpec{{{0, 1}, {1, 2, 3}}, 0}), InvalidPartition);
  CHECK_THROWS_AS(partition_bound(p, PartitionSpec{{{0, 1}, {3}}, 0}), InvalidPartition);
  CHECK_THROWS_AS(partition_bound(p, PartitionSpec{{{0, 1, 2, 3}, {}}, 0}), InvalidPartition);
  // Designated part must respect the row budget: max(P_1) <= n - t.
  CHECK_THROWS_AS(partition_bound(p, PartitionSpec{{{0, 3}, {1, 2}}, 0}), InvalidPartition);
  CHECK_THROWS_AS(partition_bound(p, PartitionSpec{{{0, 1, 2, 3}}, 2}), InvalidPartition);
}

TEST_CASE("partition search") {
  const PartitionResult ex = search_partition(kPartitionSmall, PartitionSearch::Exhaustive);
  CHECK(ex.bound <= 6.0 + 1e-12);
  validate_partition(ex.partition, 8);
  CHECK(partition_bound(kPartitionSmall, ex.partition) == doctest::Approx(ex.bound));

  const PartitionResult trivial =
      search_partition(Polynomial({0, 0, 0, 0, 0}), PartitionSearch::Exhaustive);
  CHECK(trivial.bound == doctest::Approx(1.0));

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Polynomial p = test_support::random_poly(3 + static_cast<int>(seed % 6), 4.0, seed);
    const PartitionResult best = search_partition(p, PartitionSearch::Exhaustive);
    const PartitionResult greedy = search_partition(p, PartitionSearch::Greedy);
    validate_partition(best.partition, p.degree());
    validate_partition(greedy.partition, p.degree());
    CHECK(best.bound <= greedy.bound + 1e-12);
    CHECK(greedy.bound <= frobenius_bound(p) + 1e-12);
  }

  CHECK_THROWS_AS(search_partition(test_support::random_poly(11, 1.0, 5),
                                   PartitionSearch::Exhaustive),
                  DegreeOutOfRange);
}

TEST_CASE("reversal lower bounds on the worked examples") {
  CHECK(lower_bound_reversal(kReversalSix, ReversalStrategy::FrobeniusOnly) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(lower_bound_reversal(kReversalSix, ReversalStrategy::BestSparse) ==
        doctest::Approx(5.0 / 11.0).epsilon(1e-12));
  CHECK(lower_bound_reversal(kReversalSeven, ReversalStrategy::FrobeniusOnly) ==
        doctest::Approx(1.0 / 31.0).epsilon(1e-12));
  CHECK_THROWS_AS(lower_bound_reversal(Polynomial({0, 1, 1}), ReversalStrategy::FrobeniusOnly),
                  ZeroConstantTerm);
  CHECK_THROWS_AS(lower_bound_reversal(test_support::random_poly(11, 1.0, 3, true),
                                       ReversalStrategy::BestSparse),
                  DegreeOutOfRange);

  for (std::uint64_t seed = 300; seed < 360; ++seed) {
    const Polynomial p = test_support::random_poly(3 + static_cast<int>(seed % 6), 5.0, seed,
                                                   /*nonzero_a0=*/true);
    const auto min_mod = oracle::min_nonzero_root_modulus(p);
    REQUIRE(min_mod.has_value());
    CHECK(lower_bound_reversal(p, ReversalStrategy::FrobeniusOnly) <= *min_mod + 1e-8);
    CHECK(lower_bound_reversal(p, ReversalStrategy::BestSparse) <= *min_mod + 1e-8);
  }
}

TEST_CASE("W bound values and soundness") {
  CHECK(w_bound(kInverseEight) == doctest::Approx(9.0));
  CHECK(w_bound(kInverseSix) == doctest::Approx(7.0));
  CHECK(frobenius_bound(kInverseSix) == doctest::Approx(37.0));
  for (std::uint64_t seed = 400; seed < 440; ++seed) {
    const Polynomial p = test_support::random_poly(6, 5.0, seed, /*nonzero_a0=*/true);
    CHECK(w_bound(p) >= oracle::max_root_modulus(p) - 1e-8);
  }
}

TEST_CASE("X bounds, closed form, and the minimizing split") {
  CHECK(x_bound(kInverseEight, 5) == doctest::Approx(5.0));
  const XBound best = best_x_bound(kInverseEight);
  CHECK(best.index == 5);
  CHECK(best.value == doctest::Approx(5.0));
  for (int b = 1; b <= 6; ++b) CHECK(best.value <= x_bound(kInverseEight, b) + 1e-12);

  for (std::uint64_t seed = 500; seed < 540; ++seed) {
    const Polynomial p = test_support::random_poly(7, 5.0, seed, /*nonzero_a0=*/true);
    for (int b = 1; b <= 5; ++b) {
      CHECK(x_bound(p, b) == doctest::Approx(x_bound_closed_form(p, b)).epsilon(1e-12));
    }
    CHECK(x_bound(p, 1) >= oracle::max_root_modulus(p) - 1e-8);
  }
}

TEST_CASE("inverse lower bound") {
  for (std::uint64_t seed = 600; seed < 615; ++seed) {
    const Polynomial p = test_support::random_poly(6, 4.0, seed, /*nonzero_a0=*/true);
    const double via_inverse = inverse_lower_bound(p, frobenius_shape(6));
    const double via_reversal = 1.0 / frobenius_bound(reversal(p));
    CHECK(via_inverse == doctest::Approx(via_reversal).epsilon(1e-12));
    const auto min_mod = oracle::min_nonzero_root_modulus(p);
    for (const auto& s : enumerate_shapes(6)) {
      CHECK(inverse_lower_bound(p, s) <= *min_mod + 1e-8);
    }
  }

  const BoundReport unit = bound_report(Polynomial({-1, 0}));
  CHECK(unit.best_upper >= 1.0 - 1e-12);
  REQUIRE(unit.best_lower.has_value());
  CHECK(*unit.best_lower <= 1.0 + 1e-12);
}

TEST_CASE("improvement predicates") {
  CHECK(w_improves(kInverseEight));
  CHECK(x_improves(kInverseEight, 5));
  const Polynomial unit_a0({1, 7, 7, 7, 2});
  CHECK(!w_improves(unit_a0));
  for (int b = 1; b <= 3; ++b) CHECK(!x_improves(unit_a0, b));

  // Predicted improvements are real ones.
  for (std::uint64_t seed = 700; seed < 760; ++seed) {
    const Polynomial p = test_support::random_poly(6, 6.0, seed, /*nonzero_a0=*/true);
    if (w_improves(p)) CHECK(w_bound(p) < frobenius_bound(p));
    for (int b = 1; b <= 4; ++b) {
      if (x_improves(p, b)) CHECK(x_bound(p, b) < frobenius_bound(p));
    }
  }
}

TEST_CASE("bound_report on the displayed degree-eight polynomial") {
  const BoundReport r = bound_report(kInverseEight);
  CHECK(r.best_upper == doctest::Approx(5.0));
  CHECK(r.best_upper_source == "x_5");
  CHECK(*r.frobenius == doctest::Approx(21.0));
  CHECK(*r.w == doctest::Approx(9.0));
  CHECK(r.zero_root_multiplicity == 0);
  REQUIRE(r.best_lower.has_value());
  CHECK(*r.best_lower <= r.best_upper);
}

TEST_CASE("bound_report handles zero roots") {
  const BoundReport all_zero = bound_report(Polynomial({0, 0}));
  CHECK(all_zero.all_roots_zero);
  CHECK(all_zero.zero_root_multiplicity == 2);
  CHECK(all_zero.best_upper == 0.0);

  const BoundReport stripped = bound_report(Polynomial({0, 0, 5, 1}));
  CHECK(stripped.zero_root_multiplicity == 2);
  CHECK(stripped.effective_degree == 2);

  const BoundReport linear = bound_report(Polynomial({0, 3}));
  CHECK(linear.effective_degree == 1);
  CHECK(linear.best_upper == doctest::Approx(3.0));
  CHECK(*linear.best_lower == doctest::Approx(3.0));
}

TEST_CASE("bound_report extrema and containment on a random corpus") {
  for (std::uint64_t seed = 800; seed < 860; ++seed) {
    const Polynomial p = test_support::random_poly(3 + static_cast<int>(seed % 6), 5.0, seed);
    const BoundReport r = bound_report(p);
    for (const auto& [tag, v] : r.upper_bounds()) CHECK(r.best_upper <= v + 1e-12);
    for (const auto& [tag, v] : r.lower_bounds()) CHECK(*r.best_lower >= v - 1e-12);
    CHECK(*r.best_lower <= r.best_upper + 1e-12);

    const double max_mod = oracle::max_root_modulus(p);
    const auto min_mod = oracle::min_nonzero_root_modulus(p);
    for (const auto& [tag, v] : r.upper_bounds()) CHECK(v >= max_mod - 1e-8);
    if (min_mod) {
      for (const auto& [tag, v] : r.lower_bounds()) CHECK(v <= *min_mod + 1e-8);
    }
  }
}
