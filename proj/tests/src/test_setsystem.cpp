#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "coverbound/eigen_sym.hpp"
#include "coverbound/generators.hpp"
#include "coverbound/moment.hpp"
#include "coverbound/set_family.hpp"
#include "coverbound/sym_matrix.hpp"

using namespace coverbound;

namespace {

std::shared_ptr<const SetFamily> family_ptr(SetFamily f) {
  return std::make_shared<const SetFamily>(std::move(f));
}

std::shared_ptr<const SetFamily> power_set(int n) {
  return family_ptr(SetFamily::all_subsets(n, n));
}

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

// Independent reference enumeration: all masks of size <= t whose pairs pass,
// sorted by (cardinality, element sequence).
std::vector<std::uint32_t> brute_family(int n, int t, const Graph* g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (popcount(m) > t) continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if ((m >> u & 1) && (m >> v & 1) && g && g->adjacent(u, v)) ok = false;
    if (ok) out.push_back(m);
  }
  auto key = [](std::uint32_t m) {
    std::vector<int> elems;
    for (int i = 0; i < 32; ++i)
      if (m >> i & 1) elems.push_back(i);
    return std::make_pair(popcount(m), elems);
  };
  std::sort(out.begin(), out.end(),
            [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
  return out;
}

}  // namespace

TEST_CASE("power set truncations have binomial sizes") {
  CHECK(SetFamily::all_subsets(3, 3).size() == 8);
  CHECK(SetFamily::all_subsets(3, 1).size() == 4);
  CHECK(SetFamily::all_subsets(3, 0).size() == 1);
  CHECK(SetFamily::all_subsets(5, 2).size() == 1 + 5 + 10);
}

TEST_CASE("members come in graded order, element-lexicographic inside a grade") {
  SetFamily f = SetFamily::all_subsets(4, 2);
  std::vector<std::uint32_t> expect = {0b0000, 0b0001, 0b0010, 0b0100, 0b1000,
                                       0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100};
  REQUIRE(f.size() == expect.size());
  for (std::size_t p = 0; p < expect.size(); ++p) CHECK(f.subset(p) == expect[p]);

  CHECK(f.prefix_size(0) == 1);
  CHECK(f.prefix_size(1) == 5);
  CHECK(f.prefix_size(2) == 11);
  CHECK(f.prefix_size(-1) == 0);
  CHECK_THROWS_AS(f.prefix_size(3), std::out_of_range);
}

TEST_CASE("index_of inverts the ordering and flags absentees") {
  SetFamily f = SetFamily::all_subsets(4, 2);
  for (std::size_t p = 0; p < f.size(); ++p)
    CHECK(f.index_of(f.subset(p)) == static_cast<int>(p));
  CHECK(f.index_of(0b0111) == -1);
}

TEST_CASE("independent-set families match brute enumeration") {
  Graph c5 = cycle_graph(5);
  SetFamily f = SetFamily::independent_sets(c5, 2);
  CHECK(f.size() == 11);  // empty + 5 singletons + 5 non-adjacent pairs

  auto expect = brute_family(5, 2, &c5);
  REQUIRE(f.size() == expect.size());
  for (std::size_t p = 0; p < f.size(); ++p) CHECK(f.subset(p) == expect[p]);

  Graph pt = petersen_graph();
  SetFamily fp = SetFamily::independent_sets(pt, 4);
  auto expect_p = brute_family(10, 4, &pt);
  REQUIRE(fp.size() == expect_p.size());
  for (std::size_t p = 0; p < fp.size(); ++p) CHECK(fp.subset(p) == expect_p[p]);
  CHECK(fp.predicate() == FamilyPredicate::Independent);
}

TEST_CASE("families are downward closed") {
  Graph pt = petersen_graph();
  SetFamily f = SetFamily::independent_sets(pt, 4);
  for (std::size_t p = 0; p < f.size(); ++p) {
    std::uint32_t m = f.subset(p);
    for (std::uint32_t sub = m; sub; sub = (sub - 1) & m) CHECK(f.index_of(sub) >= 0);
  }
}

TEST_CASE("separated families exclude pairs at distance up to eps inclusive") {
  FiniteMetricSpace cm = cycle_metric(5);
  SetFamily f = SetFamily::separated_sets(cm, 1.0, 2);
  CHECK(f.size() == 11);  // only the distance-2 pairs survive
  CHECK(f.predicate() == FamilyPredicate::Separated);

  // eps below the minimum distance excludes nothing.
  CHECK(SetFamily::separated_sets(cm, 0.5, 2).size() == SetFamily::all_subsets(5, 2).size());
  // eps at the diameter kills every pair; the threshold is closed.
  CHECK(SetFamily::separated_sets(cm, 2.0, 2).size() == 6);

  // With eps = 1 the members coincide with independent sets of the r=1
  // covering graph; the assemblies lean on this correspondence.
  Graph cg = covering_graph(cm, 1.0);
  SetFamily fi = SetFamily::independent_sets(cg, 2);
  REQUIRE(f.size() == fi.size());
  for (std::size_t p = 0; p < f.size(); ++p) CHECK(f.subset(p) == fi.subset(p));
}

TEST_CASE("family enumeration enforces caps and ground limits") {
  CHECK_THROWS_WITH_AS(SetFamily::all_subsets(20, 10, 100), doctest::Contains("100"),
                       FamilyCapError);
  CHECK_THROWS_AS(SetFamily::all_subsets(31, 1), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily::all_subsets(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(SetFamily::all_subsets(3, -1), std::invalid_argument);
}

TEST_CASE("sym matrix storage is symmetric with packed upper triangle") {
  SymMatrix m(2);
  m.set(0, 1, 2.0);
  m.set(0, 0, 1.0);
  m.set(1, 1, 3.0);
  CHECK(m(1, 0) == 2.0);
  m.add(1, 0, 0.5);
  CHECK(m(0, 1) == 2.5);
  CHECK(m.frobenius_norm() ==
        doctest::Approx(std::sqrt(1.0 + 2 * 2.5 * 2.5 + 9.0)).epsilon(1e-15));
  CHECK(m.max_abs() == 3.0);

  auto d = m.dense();
  CHECK(d == std::vector<double>{1.0, 2.5, 2.5, 3.0});
  CHECK_THROWS_AS(m.pos(0, 2), std::out_of_range);
  CHECK_THROWS_AS(SymMatrix(0), std::invalid_argument);
}

TEST_CASE("characteristic vectors indicate subsets") {
  auto f2 = power_set(2);
  MomentVector all = char_vector(0b11, f2);
  CHECK(all.values == std::vector<double>{1, 1, 1, 1});
  MomentVector empty = char_vector(0, f2);
  CHECK(empty.values == std::vector<double>{1, 0, 0, 0});

  auto f3 = family_ptr(SetFamily::all_subsets(3, 2));
  MomentVector v = char_vector(0b101, f3);
  for (std::size_t p = 0; p < f3->size(); ++p) {
    bool inside = (f3->subset(p) & ~0b101u) == 0;
    CHECK(v.values[p] == (inside ? 1.0 : 0.0));
  }
}

TEST_CASE("characteristic vectors are multiplicative on unions") {
  for (int n = 1; n <= 5; ++n) {
    auto f = power_set(n);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      MomentVector chi = char_vector(s, f);
      for (std::uint32_t a = 0; a < (1u << n); ++a)
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
          double lhs = chi.values[static_cast<std::size_t>(f->index_of(a | b))];
          double rhs = chi.values[static_cast<std::size_t>(f->index_of(a))] *
                       chi.values[static_cast<std::size_t>(f->index_of(b))];
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("dual basis vectors carry signed superset indicators") {
  auto f1 = power_set(1);
  CHECK(dual_basis_vector(0, f1).values == std::vector<double>{1, -1});

  auto f2 = power_set(2);
  MomentVector psi = dual_basis_vector(0b01, f2);
  CHECK(psi.values[static_cast<std::size_t>(f2->index_of(0b01))] == 1.0);
  CHECK(psi.values[static_cast<std::size_t>(f2->index_of(0b11))] == -1.0);
  CHECK(psi.values[static_cast<std::size_t>(f2->index_of(0b00))] == 0.0);
  CHECK(psi.values[static_cast<std::size_t>(f2->index_of(0b10))] == 0.0);

  auto truncated = family_ptr(SetFamily::all_subsets(3, 2));
  CHECK_THROWS_AS(dual_basis_vector(0, truncated), std::invalid_argument);
  auto restricted = family_ptr(SetFamily::independent_sets(cycle_graph(3), 3));
  CHECK_THROWS_AS(dual_basis_vector(0, restricted), std::invalid_argument);
}

TEST_CASE("characteristic and dual bases pair to the identity") {
  for (int n = 4; n <= 5; ++n) {
    auto f = power_set(n);
    for (std::uint32_t j = 0; j < (1u << n); ++j) {
      MomentVector chi = char_vector(j, f);
      for (std::uint32_t k = 0; k < (1u << n); ++k) {
        MomentVector psi = dual_basis_vector(k, f);
        double dot = 0.0;
        for (std::size_t p = 0; p < f->size(); ++p) dot += chi.values[p] * psi.values[p];
        CHECK(dot == (j == k ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("moment values read zero outside the family") {
  Graph c5 = cycle_graph(5);
  auto f = family_ptr(SetFamily::independent_sets(c5, 2));
  std::vector<double> ones(f->size(), 1.0);
  MomentVector y = make_moment_vector(f, ones);
  CHECK(moment_value(y, 0b00101) == 1.0);  // {0,2} independent
  CHECK(moment_value(y, 0b00011) == 0.0);  // {0,1} is an edge
  CHECK_THROWS_AS(make_moment_vector(f, std::vector<double>(3, 0.0)), std::invalid_argument);
}

TEST_CASE("moment matrices tabulate union values") {
  auto f2 = power_set(2);
  SymMatrix m_full = moment_matrix(char_vector(0b11, f2), 1);
  REQUIRE(m_full.dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m_full(i, j) == 1.0);
  CHECK(min_eigenvalue(m_full) >= -1e-12);

  SymMatrix m_empty = moment_matrix(char_vector(0, f2), 1);
  CHECK(m_empty(0, 0) == 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i || j) CHECK(m_empty(i, j) == 0.0);
}

TEST_CASE("moment matrices read zero at non-member unions") {
  Graph c5 = cycle_graph(5);
  auto f = family_ptr(SetFamily::independent_sets(c5, 2));
  MomentVector y = make_moment_vector(f, std::vector<double>(f->size(), 1.0));
  SymMatrix m = moment_matrix(y, 1);
  REQUIRE(m.dim() == 6);  // empty set + 5 singletons
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      CHECK(m(1 + u, 1 + v) == (c5.adjacent(u, v) ? 0.0 : 1.0));
}

TEST_CASE("lower-order moment matrices are principal submatrices") {
  std::mt19937_64 rng(11);
  auto f = family_ptr(SetFamily::all_subsets(5, 4));
  std::vector<double> vals(f->size());
  for (double& v : vals) v = std::uniform_real_distribution<double>(-1, 1)(rng);
  MomentVector y = make_moment_vector(f, vals);
  SymMatrix m1 = moment_matrix(y, 1);
  SymMatrix m2 = moment_matrix(y, 2);
  REQUIRE(m1.dim() == 6);
  REQUIRE(m2.dim() == 16);
  for (int i = 0; i < m1.dim(); ++i)
    for (int j = 0; j < m1.dim(); ++j) CHECK(m1(i, j) == m2(i, j));
}

TEST_CASE("moment matrix level must fit the family") {
  auto f = family_ptr(SetFamily::all_subsets(4, 2));
  MomentVector y = make_moment_vector(f, std::vector<double>(f->size(), 1.0));
  CHECK_NOTHROW(moment_matrix(y, 1));
  CHECK_THROWS_AS(moment_matrix(y, 2), std::invalid_argument);
}

TEST_CASE("localizing matrices evaluate row constraints") {
  auto f1 = power_set(1);
  std::vector<double> a1 = {1.0};
  SymMatrix l1 = localizing_matrix(char_vector(0b1, f1), a1, 1.0, 0);
  REQUIRE(l1.dim() == 1);
  CHECK(l1(0, 0) == 0.0);

  auto f2 = power_set(2);
  std::vector<double> a2 = {1.0, 1.0};
  SymMatrix l2 = localizing_matrix(char_vector(0b01, f2), a2, 1.0, 0);
  CHECK(l2(0, 0) == 0.0);

  std::vector<double> a3 = {2.0, 3.0};
  SymMatrix l3 = localizing_matrix(char_vector(0b11, f2), a3, 1.0, 0);
  CHECK(l3(0, 0) == 4.0);
}

TEST_CASE("localizing matrices at higher levels match the direct sum formula") {
  std::mt19937_64 rng(5);
  auto f = power_set(3);
  std::vector<double> vals(f->size());
  for (double& v : vals) v = std::uniform_real_distribution<double>(-1, 1)(rng);
  MomentVector y = make_moment_vector(f, vals);
  std::vector<double> a = {0.7, -1.3, 2.1};
  double b = 0.4;
  SymMatrix l = localizing_matrix(y, a, b, 1);
  REQUIRE(l.dim() == 4);
  for (int p = 0; p < 4; ++p)
    for (int q = p; q < 4; ++q) {
      std::uint32_t u = f->subset(static_cast<std::size_t>(p)) |
                        f->subset(static_cast<std::size_t>(q));
      double want = -b * moment_value(y, u);
      for (int i = 0; i < 3; ++i) want += a[static_cast<std::size_t>(i)] *
                                         moment_value(y, u | (1u << i));
      CHECK(l(p, q) == doctest::Approx(want).epsilon(1e-14));
    }

  auto restricted = family_ptr(SetFamily::independent_sets(cycle_graph(3), 1));
  MomentVector yr = make_moment_vector(restricted,
                                       std::vector<double>(restricted->size(), 1.0));
  CHECK_THROWS_AS(localizing_matrix(yr, a, b, 0), std::invalid_argument);
}

TEST_CASE("domination localizing matrices count covered mass") {
  Graph k2 = complete_graph(2);
  auto f2 = power_set(2);
  MomentVector y = make_moment_vector(f2, {1.0, 1.0, 0.0, 0.0});
  SymMatrix l = domination_localizing_matrix(y, k2, 0, 0);
  REQUIRE(l.dim() == 1);
  CHECK(l(0, 0) == 0.0);

  Graph p3 = path_graph(3);
  auto f3 = power_set(3);
  SymMatrix lc = domination_localizing_matrix(char_vector(0b010, f3), p3, 1, 0);
  CHECK(lc(0, 0) == 0.0);

  // On an indicator of a dominating set the level-0 block is |D cap N[j]| - 1.
  Graph c5 = cycle_graph(5);
  auto f5 = power_set(5);
  std::uint32_t d_mask = 0b00101;  // {0,2} dominates C5
  MomentVector chi = char_vector(d_mask, f5);
  for (int j = 0; j < 5; ++j) {
    SymMatrix lj = domination_localizing_matrix(chi, c5, j, 0);
    int covered = popcount(c5.closed_neighborhood_mask(j) & d_mask);
    CHECK(lj(0, 0) == doctest::Approx(covered - 1));
    CHECK(lj(0, 0) >= 0.0);
  }
  CHECK_THROWS_AS(domination_localizing_matrix(chi, c5, 5, 0), std::out_of_range);
}

TEST_CASE("neighborhood localizing matrices zero-fill outside restricted families") {
  Graph c5 = cycle_graph(5);
  // Independent sets of C5 stop at size 2, but level-1 entries reach unions
  // of size up to 4, so the family is enumerated with that headroom.
  auto f = family_ptr(SetFamily::independent_sets(c5, 4));
  MomentVector y = make_moment_vector(f, std::vector<double>(f->size(), 1.0));
  std::uint32_t nbhd = c5.closed_neighborhood_mask(0);  // {4,0,1}
  SymMatrix l = neighborhood_localizing_matrix(y, nbhd, 0);
  REQUIRE(l.dim() == 1);
  // Unions {4},{0},{1} are members (value 1 each), minus y(empty) = 1.
  CHECK(l(0, 0) == doctest::Approx(2.0));

  SymMatrix l1 = neighborhood_localizing_matrix(y, nbhd, 1);
  REQUIRE(l1.dim() == 6);
  // Row {2}, column {2}: of the unions {2,4},{0,2},{1,2} only the independent
  // pairs {2,4},{0,2} are members; {1,2} is an edge and reads 0.
  int p2 = f->index_of(0b00100);
  REQUIRE(p2 >= 0);
  CHECK(l1(p2, p2) == doctest::Approx(2.0 - 1.0));
}

TEST_CASE("cone coefficients invert the characteristic expansion") {
  auto f2 = power_set(2);
  MomentVector top = make_moment_vector(f2, {1, 1, 1, 1});
  std::vector<double> alpha = cone_coefficients(top);
  CHECK(alpha == std::vector<double>{0, 0, 0, 1});

  // One step down the lattice: exactly one negative coefficient, and the
  // moment matrix picks up a negative eigenvalue in agreement.
  MomentVector dip = make_moment_vector(f2, {1, 1, 1, 0});
  std::vector<double> beta = cone_coefficients(dip);
  CHECK(beta == std::vector<double>{-1, 1, 1, 0});
  CHECK(min_eigenvalue(moment_matrix(dip, 2)) < -1e-8);
}

TEST_CASE("cone coefficients reconstruct the vector exactly") {
  std::mt19937_64 rng(23);
  auto f = power_set(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> vals(f->size());
    for (double& v : vals) v = std::uniform_real_distribution<double>(-1, 1)(rng);
    MomentVector y = make_moment_vector(f, vals);
    std::vector<double> alpha = cone_coefficients(y);
    std::vector<double> rebuilt(f->size(), 0.0);
    for (std::size_t p = 0; p < f->size(); ++p) {
      MomentVector chi = char_vector(f->subset(p), f);
      for (std::size_t q = 0; q < f->size(); ++q) rebuilt[q] += alpha[p] * chi.values[q];
    }
    for (std::size_t q = 0; q < f->size(); ++q)
      CHECK(rebuilt[q] == doctest::Approx(vals[q]).epsilon(1e-12));
  }
}

TEST_CASE("nonnegative cone combinations have PSD moment matrices") {
  std::mt19937_64 rng(31);
  auto f = power_set(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> y(f->size(), 0.0);
    for (std::size_t p = 0; p < f->size(); ++p) {
      double w = std::uniform_real_distribution<double>(0, 1)(rng);
      if (w < 0.4) continue;
      MomentVector chi = char_vector(f->subset(p), f);
      for (std::size_t q = 0; q < f->size(); ++q) y[q] += w * chi.values[q];
    }
    MomentVector yv = make_moment_vector(f, y);
    CHECK(min_eigenvalue(moment_matrix(yv, 3)) >= -1e-10);
    std::vector<double> alpha = cone_coefficients(yv);
    for (double a : alpha) CHECK(a >= -1e-10);
  }
}

TEST_CASE("cone membership and moment matrix positivity agree on random vectors") {
  std::mt19937_64 rng(47);
  for (int n = 2; n <= 4; ++n) {
    auto f = power_set(n);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> vals(f->size());
      for (double& v : vals) v = std::uniform_real_distribution<double>(-1, 1)(rng);
      MomentVector y = make_moment_vector(f, vals);
      bool psd = min_eigenvalue(moment_matrix(y, n)) >= -1e-8;
      std::vector<double> alpha = cone_coefficients(y);
      double min_alpha = *std::min_element(alpha.begin(), alpha.end());
      CHECK(psd == (min_alpha >= -1e-8));
    }
  }
}

TEST_CASE("cone coefficients require the full power set at small ground size") {
  auto truncated = family_ptr(SetFamily::all_subsets(4, 2));
  MomentVector y = make_moment_vector(truncated,
                                      std::vector<double>(truncated->size(), 1.0));
  CHECK_THROWS_AS(cone_coefficients(y), std::invalid_argument);
}
