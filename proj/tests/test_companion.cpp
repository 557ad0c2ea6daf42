#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "rootbounds/bounds.hpp"
#include "rootbounds/companion.hpp"
#include "rootbounds/exact.hpp"
#include "rootbounds/oracle.hpp"
#include "test_support.hpp"

using namespace rootbounds;
using test_support::random_int_tail;
using test_support::to_poly;

namespace {

/// Dense matrix from a sparse cell list (1-based rows/cols) plus the
/// superdiagonal ones every unit Hessenberg companion carries.
Eigen::MatrixXd grid(int n, const std::vector<std::tuple<int, int, double>>& cells) {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) A(i, i + 1) = 1.0;
  for (const auto& [r, c, v] : cells) A(r - 1, c - 1) = v;
  return A;
}

bool exact_check_shape(const ShapeSpec& s, std::uint64_t seed) {
  const auto tail = random_int_tail(s.n, seed);
  const CompanionMatrix C = sparse_from_shape(to_poly(tail), s);
  return oracle::charpoly_exact_check(C.entries, tail);
}

long long count_fiedler_paths(int row, int steps) {
  // Independent recursive count of up/right paths from (row, *).
  if (steps == 0) return 1;
  long long total = count_fiedler_paths(row, steps - 1);  // right
  if (row > 1) total += count_fiedler_paths(row - 1, steps - 1);  // up
  return total;
}

}  // namespace

TEST_CASE("frobenius matrix layout") {
  const auto tail = random_int_tail(5, 11);
  const Polynomial p = to_poly(tail);
  const CompanionMatrix F = frobenius(p);
  std::vector<std::tuple<int, int, double>> cells;
  for (int j = 0; j < 5; ++j) cells.emplace_back(5, j + 1, -double(tail[j]));
  CHECK(test_support::max_abs_diff(F.entries, grid(5, cells)) == 0.0);
  CHECK(F.kind == MatrixKind::Frobenius);

  const CompanionMatrix sq = frobenius(Polynomial({0, 0}));
  Eigen::MatrixXd expected(2, 2);
  expected << 0, 1, 0, 0;
  CHECK(test_support::max_abs_diff(sq.entries, expected) == 0.0);

  CHECK_THROWS_AS(frobenius(Polynomial({1})), DegreeTooSmall);
}

TEST_CASE("frobenius characteristic polynomial is exact on random integer input") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const auto tail = random_int_tail(n, 1000 + seed);
    CHECK(oracle::charpoly_exact_check(frobenius(to_poly(tail)).entries, tail));
  }
}

TEST_CASE("shape enumeration counts") {
  CHECK(enumerate_shapes(2).size() == 2);
  CHECK(enumerate_shapes(3).size() == 4);
  {
    int by_m[3] = {0, 0, 0};
    for (const auto& s : enumerate_shapes(3)) ++by_m[s.m];
    CHECK(by_m[0] == 1);
    CHECK(by_m[1] == 2);
    CHECK(by_m[2] == 1);
  }
  // Regression values; the degree-3 value is cross-checked against a
  // placement-pattern search in the acceptance suite.
  CHECK(enumerate_shapes(4).size() == 10);
  CHECK(enumerate_shapes(5).size() == 30);
  CHECK(enumerate_shapes(6).size() == 106);
  CHECK(enumerate_shapes(7).size() == 426);
  for (int n = 2; n <= 7; ++n) {
    CHECK(count_shapes(n) == static_cast<long long>(enumerate_shapes(n).size()));
  }
  CHECK_THROWS_AS(enumerate_shapes(1), DegreeOutOfRange);
  CHECK_THROWS_AS(enumerate_shapes(13), DegreeOutOfRange);
}

TEST_CASE("flip dedup keeps one representative per class") {
  CHECK(enumerate_shapes(2, /*dedup=*/true).size() == 1);
  CHECK(enumerate_shapes(3, /*dedup=*/true).size() == 2);
  for (int n = 2; n <= 6; ++n) {
    const auto raw = enumerate_shapes(n);
    const auto dedup = enumerate_shapes(n, true);
    std::set<std::pair<int, std::vector<int>>> covered;
    for (const auto& s : dedup) {
      covered.insert({s.m, s.pos});
      const ShapeSpec f = flip_shape(s);
      covered.insert({f.m, f.pos});
      CHECK(!shape_precedes(f, s));  // representative is the smaller encoding
    }
    CHECK(covered.size() == raw.size());
  }
}

TEST_CASE("flip is a valid involution") {
  for (const auto& s : enumerate_shapes(6)) {
    const ShapeSpec f = flip_shape(s);
    CHECK(shape_valid(f));
    CHECK(flip_shape(f) == s);
  }
}

TEST_CASE("flip preserves the minimum norm") {
  const Polynomial p = test_support::random_poly(6, 5.0, 77);
  for (const auto& s : enumerate_shapes(6)) {
    const ShapeNorms a = shape_norms(p, s);
    const ShapeNorms b = shape_norms(p, flip_shape(s));
    CHECK(a.min() == doctest::Approx(b.min()).epsilon(1e-14));
    CHECK(a.inf == doctest::Approx(b.one).epsilon(1e-14));
  }
}

TEST_CASE("Fiedler enumeration is the lattice-path family") {
  const auto fiedler5 = enumerate_fiedler(5);
  CHECK(fiedler5.size() == 16);
  const std::vector<std::vector<int>> figure_paths = {
      {3, 4, 4, 5, 5}, {4, 4, 5, 5, 5}, {2, 3, 4, 5, 5}};
  for (const auto& pos : figure_paths) {
    CHECK(std::any_of(fiedler5.begin(), fiedler5.end(),
                      [&](const ShapeSpec& s) { return s.pos == pos; }));
  }

  // Subset of the full enumeration, and exactly the shapes the step rule accepts.
  for (int n = 2; n <= 6; ++n) {
    const auto all = enumerate_shapes(n);
    const auto fiedler = enumerate_fiedler(n);
    std::set<std::pair<int, std::vector<int>>> all_set;
    for (const auto& s : all) all_set.insert({s.m, s.pos});
    for (const auto& s : fiedler) CHECK(all_set.count({s.m, s.pos}) == 1);
    const auto step_rule = std::count_if(all.begin(), all.end(),
                                         [](const ShapeSpec& s) { return is_fiedler(s); });
    CHECK(static_cast<std::size_t>(step_rule) == fiedler.size());
  }

  CHECK(enumerate_fiedler(4).size() == 8);
  CHECK(count_fiedler_paths(4, 3) == 8);  // independent recursive count
  CHECK_THROWS_AS(enumerate_fiedler(17), DegreeOutOfRange);
}

TEST_CASE("shape sampling stays within the raw family") {
  const auto sample = sample_shapes(9, 400, 99);
  CHECK(sample.size() <= 700);
  CHECK(!sample.empty());
  for (const auto& s : sample) CHECK(shape_valid(s));
  CHECK(sample_shapes(5, 1000, 1).size() == enumerate_shapes(5).size());
}

TEST_CASE("u-zero shapes avoid the first column above the constant term") {
  for (int n = 3; n <= 6; ++n) {
    const auto family = enumerate_u_zero_shapes(n);
    CHECK(!family.empty());
    for (const auto& s : family) {
      CHECK(s.m >= 1);
      CHECK(s.m <= n - 2);
      for (int k = 0; k < n - 1; ++k) CHECK(s.col(k) >= 2);
    }
  }
  // The stacked-column and two-row reversal shapes both belong to the family.
  const auto family6 = enumerate_u_zero_shapes(6);
  const auto contains = [&](const ShapeSpec& s) {
    return std::any_of(family6.begin(), family6.end(),
                       [&](const ShapeSpec& t) { return t == s; });
  };
  CHECK(contains(l_shape(6, 1)));
  ShapeSpec two_row{6, 4, {5, 5, 6, 6, 6, 6}};
  CHECK(contains(two_row));
}

TEST_CASE("is_fiedler follows the up/right step rule") {
  for (int b = 0; b <= 5; ++b) CHECK(is_fiedler(l_shape(6, b)));
  CHECK(is_fiedler(frobenius_shape(6)));
  const ShapeSpec off_path{6, 2, {3, 3, 4, 6, 5, 6}};
  CHECK(shape_valid(off_path));
  CHECK(!is_fiedler(off_path));
}

TEST_CASE("sparse_from_shape reproduces the order-6 display matrices") {
  const auto tail = random_int_tail(6, 21);
  const Polynomial p = to_poly(tail);
  const auto a = [&](int i) { return -double(tail[static_cast<std::size_t>(i)]); };

  const ShapeSpec first{6, 2, {3, 3, 4, 6, 5, 6}};
  CHECK(test_support::max_abs_diff(
            sparse_from_shape(p, first).entries,
            grid(6, {{3, 2, a(4)}, {3, 3, a(5)}, {4, 2, a(3)},
                     {5, 1, a(1)}, {6, 1, a(0)}, {6, 3, a(2)}})) == 0.0);

  const ShapeSpec second{6, 1, {2, 2, 4, 4, 6, 6}};
  CHECK(test_support::max_abs_diff(
            sparse_from_shape(p, second).entries,
            grid(6, {{2, 1, a(4)}, {2, 2, a(5)}, {4, 1, a(2)},
                     {4, 2, a(3)}, {6, 1, a(0)}, {6, 2, a(1)}})) == 0.0);

  const ShapeSpec third{6, 3, {4, 4, 6, 4, 5, 6}};
  CHECK(test_support::max_abs_diff(
            sparse_from_shape(p, third).entries,
            grid(6, {{4, 1, a(2)}, {4, 3, a(4)}, {4, 4, a(5)},
                     {5, 1, a(1)}, {6, 1, a(0)}, {6, 4, a(3)}})) == 0.0);

  CHECK(sparse_from_shape(p, frobenius_shape(6)).entries == frobenius(p).entries);
  CHECK_THROWS_AS(sparse_from_shape(Polynomial({1, 2}), first), ShapeMismatch);
}

TEST_CASE("every degree-5 shape passes the exact characteristic check") {
  std::uint64_t seed = 400;
  for (const auto& s : enumerate_shapes(5)) {
    for (int trial = 0; trial < 3; ++trial) CHECK(exact_check_shape(s, seed++));
  }
}

TEST_CASE("shapes with nonvanishing coefficients have exactly 2n-1 nonzeros") {
  const Polynomial p({-3, 2, -4, 1, -2, 5});
  for (const auto& s : enumerate_shapes(6)) {
    const CompanionMatrix C = sparse_from_shape(p, s);
    CHECK((C.entries.array() != 0.0).count() == 11);
  }
}

TEST_CASE("l_matrix layout and norms") {
  const auto tail = random_int_tail(6, 31);
  const Polynomial p = to_poly(tail);
  CHECK(l_matrix(p, 5).entries == frobenius(p).entries);

  // Coefficient row -a_0, -a_1, -a_2 with the rest stacked in column 3.
  const CompanionMatrix L2 = l_matrix(Polynomial({1, 2, 3, 4, 5}), 2);
  Eigen::MatrixXd expected(5, 5);
  expected << 0, 1, 0, 0, 0,
              0, 0, 1, 0, 0,
              0, 0, -5, 1, 0,
              0, 0, -4, 0, 1,
              -1, -2, -3, 0, 0;
  CHECK(test_support::max_abs_diff(L2.entries, expected) == 0.0);
  CHECK(is_fiedler(*L2.shape));

  for (int b = 0; b <= 5; ++b) {
    const auto lt = random_int_tail(6, 500 + static_cast<std::uint64_t>(b));
    CHECK(oracle::charpoly_exact_check(l_matrix(to_poly(lt), b).entries, lt));
  }
  CHECK_THROWS_AS(l_matrix(p, 6), IndexOutOfRange);

  // Row norm closed form: the coefficient row sum against 1 + each stacked entry.
  for (std::uint64_t seed = 600; seed < 620; ++seed) {
    const Polynomial q = test_support::random_poly(7, 4.0, seed);
    for (int b = 0; b <= 6; ++b) {
      double row_sum = 0.0;
      double stacked = 0.0;
      for (int i = 0; i <= b; ++i) row_sum += std::abs(q.coeff(i));
      for (int i = b + 1; i < 7; ++i) stacked = std::max(stacked, std::abs(q.coeff(i)));
      const double closed = std::max(row_sum, b == 6 ? 1.0 : 1.0 + stacked);
      CHECK(norm_inf(l_matrix(q, b).entries) ==
            doctest::Approx(std::max(closed, 1.0)).epsilon(1e-14));
    }
  }
}

TEST_CASE("build_extended_companion reproduces the order-9 display") {
  const Polynomial p({-3, -2, -4, -1, -2, -1});
  const PartitionSpec spec{{{2}, {0}, {3, 4}, {1, 5}}, 0};
  const CompanionMatrix C = build_extended_companion(p, spec);
  REQUIRE(C.order() == 9);
  const Eigen::MatrixXd expected =
      grid(9, {{6, 2, 2}, {6, 6, 1}, {7, 5, 1}, {7, 6, 2}, {8, 3, 3}, {9, 6, 4}});
  CHECK(test_support::max_abs_diff(C.entries, expected) == 0.0);
  CHECK(C.kind == MatrixKind::Extended);
  CHECK(C.source_degree == 6);
  CHECK(norm_inf(C.entries) == doctest::Approx(4.0));
}

TEST_CASE("build_extended_companion reproduces the order-14 display") {
  const Polynomial p({-3, -5, -3, -4, -2, -2, -3, -1});
  const PartitionSpec spec{{{0, 7}, {1}, {2}, {3}, {4}, {5}, {6}}, 1};
  const CompanionMatrix C = build_extended_companion(p, spec);
  REQUIRE(C.order() == 14);
  const Eigen::MatrixXd expected = grid(
      14, {{8, 1, 3}, {8, 8, 1}, {9, 8, 3}, {10, 8, 2}, {11, 8, 2},
           {12, 8, 4}, {13, 8, 3}, {14, 8, 5}});
  CHECK(test_support::max_abs_diff(C.entries, expected) == 0.0);
  CHECK(norm_inf(C.entries) == doctest::Approx(5.0));
}

TEST_CASE("extended companion matches the extended polynomial exactly") {
  SplitMix64 rng(9001);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng.next() % 4);  // keeps order within the exact cap
    const auto tail = random_int_tail(n, 7000 + static_cast<std::uint64_t>(trial));
    const Polynomial p = to_poly(tail);
    // Random partition: random assignment, then a feasible designated part.
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < n; ++i) {
      const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long long>(parts.size())));
      if (j == parts.size()) {
        parts.push_back({i});
      } else {
        parts[j].push_back(i);
      }
    }
    PartitionSpec spec{parts, 0};
    const int t = spec.part_count();
    for (int e = 0; e < t; ++e) {
      const auto& part = parts[static_cast<std::size_t>(e)];
      if (*std::max_element(part.begin(), part.end()) <= n - t) spec.p1_index = e;
    }
    const CompanionMatrix C = build_extended_companion(p, spec);
    std::vector<long long> ext_tail(static_cast<std::size_t>(t - 1), 0);
    ext_tail.insert(ext_tail.end(), tail.begin(), tail.end());
    CHECK(oracle::charpoly_exact_check(C.entries, ext_tail));
  }
}

TEST_CASE("one-part partition gives the classical row layout") {
  const Polynomial p({-3, -2, -4, -1, -2, -1});
  const PartitionSpec whole{{{0, 1, 2, 3, 4, 5}}, 0};
  const CompanionMatrix C = build_extended_companion(p, whole);
  CHECK(C.order() == 6);
  CHECK(norm_inf(C.entries) == doctest::Approx(13.0));  // max{1, sum |a_i|}
}

TEST_CASE("w_matrix matches the displayed order-8 inverse") {
  const Polynomial p({5, -5, -10, 20, 17, 1, -1, 4});
  const CompanionMatrix W = w_matrix(p);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(8, 8);
  const double first_col[8] = {-4, 1, -1, -2, 4, 3.4, 0.2, -0.2};
  for (int i = 0; i < 8; ++i) expected(i, 0) = first_col[i];
  expected(0, 7) = -5;
  for (int i = 2; i < 8; ++i) expected(i, i - 1) = 1.0;
  CHECK(test_support::max_abs_diff(W.entries, expected) < 1e-12);
  CHECK(W.kind == MatrixKind::W);

  CHECK_THROWS_AS(w_matrix(Polynomial({0, 1, 1})), ZeroConstantTerm);
  CHECK_THROWS_AS(w_matrix(Polynomial({1, 1})), DegreeTooSmall);
}

TEST_CASE("w_matrix inverts the reversal companion with the stacked column") {
  for (std::uint64_t seed = 800; seed < 815; ++seed) {
    const Polynomial p = test_support::random_poly(6, 4.0, seed, /*nonzero_a0=*/true);
    const CompanionMatrix W = w_matrix(p);
    const CompanionMatrix E1 = l_matrix(reversal(p), 1);
    CHECK(test_support::max_abs_diff(W.entries * E1.entries,
                                     Eigen::MatrixXd::Identity(6, 6)) < 1e-10);
    // Same spectrum as p itself.
    const auto cp = char_poly(W);
    for (int i = 0; i < 6; ++i) CHECK(cp[static_cast<std::size_t>(i)] ==
                                      doctest::Approx(p.coeff(i)).epsilon(1e-8));
  }
}

TEST_CASE("x_matrix matches the displayed order-8 inverse") {
  const Polynomial p({5, -5, -10, 20, 17, 1, -1, 4});
  const CompanionMatrix X5 = x_matrix(p, 5);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(8, 8);
  expected(0, 0) = -4;
  expected(0, 1) = 1;
  expected(0, 7) = -5;
  for (int i = 1; i <= 6; ++i) expected(i, i - 1) = 1.0;
  const double last_row[8] = {0, 0.2, 3.4, 4, -2, -1, 1, 0};
  for (int j = 0; j < 8; ++j) expected(7, j) = last_row[j];
  CHECK(test_support::max_abs_diff(X5.entries, expected) < 1e-12);

  CHECK_THROWS_AS(x_matrix(p, 0), IndexOutOfRange);
  CHECK_THROWS_AS(x_matrix(p, 7), IndexOutOfRange);
}

TEST_CASE("x_matrix inverts the two-row reversal path") {
  for (std::uint64_t seed = 900; seed < 910; ++seed) {
    const Polynomial p = test_support::random_poly(7, 4.0, seed, /*nonzero_a0=*/true);
    const int n = p.degree();
    for (int b = 1; b <= n - 2; ++b) {
      // Reversal shape with the first n-b coefficients along the last row and
      // the rest one row higher.
      ShapeSpec two_row;
      two_row.n = n;
      two_row.m = n - 2;
      two_row.pos.assign(static_cast<std::size_t>(n), n);
      for (int k = 0; k < b; ++k) two_row.pos[static_cast<std::size_t>(k)] = n - 1;
      const CompanionMatrix defining = sparse_from_shape(reversal(p), two_row);
      CHECK(test_support::max_abs_diff(x_matrix(p, b).entries * defining.entries,
                                       Eigen::MatrixXd::Identity(n, n)) < 1e-10);
    }
    const auto cp = char_poly(x_matrix(p, 2));
    for (int i = 0; i < n; ++i) CHECK(cp[static_cast<std::size_t>(i)] ==
                                      doctest::Approx(p.coeff(i)).epsilon(1e-8));
  }
}

TEST_CASE("ec_partition splits the classical form into tail and constant") {
  const Polynomial p({3, 1, 4, 1, 5});
  const ECPartition e = ec_partition(frobenius(p));
  CHECK(e.c == 4);
  CHECK(e.u.size() == 0);
  CHECK(e.H.size() == 0);
  REQUIRE(e.y.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(e.y(i) == -p.coeff(i + 1));
  CHECK(e.a0 == 3.0);

  const ECPartition l1 = ec_partition(l_matrix(p, 1));
  CHECK(l1.c == 1);
  CHECK(l1.u.cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(ec_partition(w_matrix(p)), NotHessenbergSparse);
  CHECK_THROWS_AS(ec_partition(frobenius(Polynomial({0, 1, 1}))), ZeroConstantTerm);
}

TEST_CASE("ec_partition round-trips every degree-6 shape") {
  const Polynomial p = test_support::random_poly(6, 4.0, 1234, /*nonzero_a0=*/true);
  for (const auto& s : enumerate_shapes(6)) {
    const CompanionMatrix C = sparse_from_shape(p, s);
    CHECK(test_support::max_abs_diff(assemble_ec(ec_partition(C)), C.entries) == 0.0);
  }
}

TEST_CASE("inverse_sparse inverts every degree-6 shape") {
  const Polynomial p = test_support::random_poly(6, 4.0, 4321, /*nonzero_a0=*/true);
  for (const auto& s : enumerate_shapes(6)) {
    const CompanionMatrix C = sparse_from_shape(p, s);
    const CompanionMatrix inv = inverse_sparse(C);
    CHECK(test_support::max_abs_diff(C.entries * inv.entries,
                                     Eigen::MatrixXd::Identity(6, 6)) < 1e-10);
  }
}

TEST_CASE("inverse of the classical form has the empty-block layout") {
  const Polynomial p({2, 1, 4, 1, 5});
  const CompanionMatrix inv = inverse_sparse(frobenius(p));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(5, 5);
  for (int i = 0; i < 4; ++i) expected(0, i) = -p.coeff(i + 1) / 2.0;
  expected(0, 4) = -1.0 / 2.0;
  for (int i = 1; i < 5; ++i) expected(i, i - 1) = 1.0;
  CHECK(test_support::max_abs_diff(inv.entries, expected) < 1e-14);

  // Spectrum of the inverse is the reversal's spectrum.
  const auto cp = char_poly(inv);
  const Polynomial rev = reversal(p);
  for (int i = 0; i < 5; ++i) CHECK(cp[static_cast<std::size_t>(i)] ==
                                    doctest::Approx(rev.coeff(i)).epsilon(1e-8));
}

TEST_CASE("char_poly on the identity and on display shapes") {
  const auto id3 = char_poly(Eigen::MatrixXd::Identity(3, 3));
  REQUIRE(id3.size() == 3);
  CHECK(id3[0] == doctest::Approx(-1.0));
  CHECK(id3[1] == doctest::Approx(3.0));
  CHECK(id3[2] == doctest::Approx(-3.0));

  const ShapeSpec fig_first{6, 2, {3, 3, 4, 6, 5, 6}};
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto tail = random_int_tail(6, 5000 + seed);
    CHECK(oracle::charpoly_exact_check(sparse_from_shape(to_poly(tail), fig_first).entries,
                                       tail));
  }

  CHECK_THROWS_AS(char_poly(Eigen::MatrixXd::Identity(65, 65)), OrderTooLarge);
}
