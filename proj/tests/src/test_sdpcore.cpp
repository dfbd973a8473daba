#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "coverbound/assemble.hpp"
#include "coverbound/eigen_sym.hpp"
#include "coverbound/generators.hpp"
#include "coverbound/sdp_problem.hpp"
#include "coverbound/sdpa_io.hpp"
#include "coverbound/solver.hpp"
#include "coverbound/sym_matrix.hpp"

using namespace coverbound;

namespace {

SymMatrix random_symmetric(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) m.set(i, j, u(rng));
  return m;
}

double reconstruction_error(const SymMatrix& m, const EigenDecomposition& ed) {
  int dim = m.dim();
  double err2 = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double v = 0.0;
      for (int k = 0; k < dim; ++k)
        v += ed.vectors[static_cast<std::size_t>(i) * dim + k] * ed.values[static_cast<std::size_t>(k)] *
             ed.vectors[static_cast<std::size_t>(j) * dim + k];
      double d = v - m(i, j);
      err2 += d * d;
    }
  return std::sqrt(err2);
}

double orthonormality_error(const EigenDecomposition& ed, int dim) {
  double worst = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      double dot = 0.0;
      for (int i = 0; i < dim; ++i)
        dot += ed.vectors[static_cast<std::size_t>(i) * dim + a] *
               ed.vectors[static_cast<std::size_t>(i) * dim + b];
      worst = std::max(worst, std::fabs(dot - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

// min y s.t. [[y,1],[1,y]] is PSD; optimum y = 1.
SdpProblem scalar_psd_problem() {
  SdpProblem p;
  p.num_vars = 1;
  p.objective = {1.0};
  p.nonneg = {0};
  LmiBlock b(2);
  b.constant.set(0, 1, 1.0);
  b.terms.push_back({0, 0, 0, 1.0});
  b.terms.push_back({0, 1, 1, 1.0});
  p.blocks.push_back(b);
  p.optimum_box = 2.0;
  return p;
}

}  // namespace

TEST_CASE("eigendecomposition of fixed small matrices") {
  SymMatrix id3(3);
  for (int i = 0; i < 3; ++i) id3.set(i, i, 1.0);
  EigenDecomposition ed = sym_eigen(id3);
  for (double v : ed.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

  SymMatrix swap2(2);
  swap2.set(0, 1, 1.0);
  ed = sym_eigen(swap2);
  CHECK(ed.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ed.values[1] == doctest::Approx(1.0).epsilon(1e-14));

  SymMatrix m2(2);
  m2.set(0, 0, 2.0);
  m2.set(1, 1, 2.0);
  m2.set(0, 1, 1.0);
  ed = sym_eigen(m2);
  CHECK(ed.values[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ed.values[1] == doctest::Approx(3.0).epsilon(1e-13));

  SymMatrix d(3);
  d.set(0, 0, 3.0);
  d.set(1, 1, -5.0);
  ed = sym_eigen(d);
  CHECK(ed.values == std::vector<double>{-5.0, 0.0, 3.0});

  SymMatrix one(1);
  one.set(0, 0, 42.0);
  CHECK(sym_eigen(one).values == std::vector<double>{42.0});
}

TEST_CASE("eigendecomposition self-checks across both kernel paths") {
  // dim 64 is the last Jacobi size, 65 the first tridiagonal+QL size.
  for (int dim : {2, 5, 17, 50, 64, 65, 100, 130}) {
    SymMatrix m = random_symmetric(dim, 1000 + static_cast<std::uint64_t>(dim));
    EigenDecomposition ed = sym_eigen(m);
    for (std::size_t k = 1; k < ed.values.size(); ++k) CHECK(ed.values[k - 1] <= ed.values[k]);
    CHECK(orthonormality_error(ed, dim) <= 1e-9);
    CHECK(reconstruction_error(m, ed) <= 1e-10 * (1.0 + m.frobenius_norm()));
    CHECK(min_eigenvalue(m) == ed.values[0]);
  }
}

TEST_CASE("eigendecomposition rejects non-finite input") {
  SymMatrix m(2);
  m.set(0, 1, std::numeric_limits<double>::quiet_NaN());
  CHECK_THROWS_AS(sym_eigen(m), std::invalid_argument);
  m.set(0, 1, std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(sym_eigen(m), std::invalid_argument);
}

TEST_CASE("psd projection clips negative eigenvalues") {
  SymMatrix d(2);
  d.set(0, 0, -1.0);
  d.set(1, 1, 2.0);
  SymMatrix proj = psd_project(d);
  CHECK(proj(0, 0) == doctest::Approx(0.0));
  CHECK(proj(1, 1) == doctest::Approx(2.0));
  CHECK(proj(0, 1) == doctest::Approx(0.0));
}

TEST_CASE("psd projection fixes PSD matrices") {
  // Gram matrix of random vectors is PSD by construction.
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int dim = 8;
  std::vector<std::vector<double>> cols(dim, std::vector<double>(dim));
  for (auto& c : cols)
    for (auto& x : c) x = u(rng);
  SymMatrix g(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      double dot = 0.0;
      for (int k = 0; k < dim; ++k) dot += cols[i][k] * cols[j][k];
      g.set(i, j, dot);
    }
  SymMatrix proj = psd_project(g);
  double dist2 = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double d = proj(i, j) - g(i, j);
      dist2 += d * d;
    }
  CHECK(std::sqrt(dist2) <= 1e-9);
}

TEST_CASE("psd projection matches a direct eigen-clip recomputation") {
  int dim = 6;
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(dim);
  double norm = 0.0;
  for (double& x : v) { x = u(rng); norm += x * x; }
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;

  // I - 2vv^T has one eigenvalue -1 (along v) and 1 elsewhere.
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      m.set(i, j, (i == j ? 1.0 : 0.0) - 2.0 * v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)]);

  SymMatrix proj = psd_project(m);
  EigenDecomposition ed = sym_eigen(m);
  SymMatrix direct(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      double s = 0.0;
      for (int k = 0; k < dim; ++k)
        s += ed.vectors[static_cast<std::size_t>(i) * dim + k] *
             std::max(0.0, ed.values[static_cast<std::size_t>(k)]) *
             ed.vectors[static_cast<std::size_t>(j) * dim + k];
      direct.set(i, j, s);
    }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      CHECK(proj(i, j) == doctest::Approx(direct(i, j)).epsilon(1e-12));
  CHECK(min_eigenvalue(proj) >= -1e-10);

  // Expected closed form: I - vv^T.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      CHECK(proj(i, j) == doctest::Approx((i == j ? 1.0 : 0.0) -
                                          v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)])
                              .epsilon(1e-10));
}

TEST_CASE("problem validation rejects structural defects") {
  SdpProblem p = scalar_psd_problem();
  CHECK_NOTHROW(validate(p));

  SdpProblem bad = p;
  bad.objective.clear();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = p;
  bad.blocks[0].terms.push_back({1, 0, 0, 1.0});  // var out of range
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = p;
  bad.blocks[0].terms.push_back({0, 1, 0, 1.0});  // row > col
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = p;
  bad.blocks[0].terms[0].coeff = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = p;
  bad.blocks.clear();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = p;
  bad.nonneg.clear();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("block evaluation and feasibility slack") {
  SdpProblem p = scalar_psd_problem();
  std::vector<double> y = {2.0};
  SymMatrix s = evaluate_block(p.blocks[0], y);
  CHECK(s(0, 0) == 2.0);
  CHECK(s(0, 1) == 1.0);
  CHECK(s(1, 1) == 2.0);

  FeasibilityReport fr = feasibility_slack(p, y);
  CHECK(fr.min_block_eigenvalue == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fr.min_nonneg_value == 0.0);  // nothing flagged
  // With no flagged variables the sign floor contributes 0, so the combined
  // slack never exceeds 0; strictly interior blocks still report 0 here.
  CHECK(fr.worst_slack == 0.0);

  std::vector<double> infeas = {0.5};
  CHECK(feasibility_slack(p, infeas).worst_slack == doctest::Approx(-0.5).epsilon(1e-12));

  SdpProblem flagged = p;
  flagged.nonneg = {1};
  std::vector<double> neg = {-0.25};
  CHECK(feasibility_slack(flagged, neg).min_nonneg_value == doctest::Approx(-0.25));
}

TEST_CASE("solver reaches the hand-solved scalar optimum") {
  SdpSolution sol = solve(scalar_psd_problem());
  CHECK(sol.status == SolveStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sol.y[0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sol.primal_infeas <= 1e-6);
  CHECK(sol.dual_gap_bound <= 1e-6);
  // The gap is the clamped shortfall of the certified side, never negative.
  CHECK(sol.dual_gap_bound ==
        doctest::Approx(std::max(0.0, sol.objective - sol.dual_objective)).epsilon(1e-12));
  CHECK(sol.certificate_from_box);
  CHECK(sol.iterations > 0);
}

TEST_CASE("solver handles a zero objective and max sense") {
  SdpProblem p = scalar_psd_problem();
  p.objective = {0.0};
  SdpSolution sol = solve(p);
  CHECK(sol.status == SolveStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(0.0).epsilon(1e-8));

  SdpProblem q = scalar_psd_problem();
  q.sense = SdpProblem::Sense::Max;
  q.objective = {-1.0};  // max -y, same optimum y = 1
  SdpSolution ms = solve(q);
  CHECK(ms.status == SolveStatus::Optimal);
  CHECK(ms.objective == doctest::Approx(-1.0).epsilon(1e-6));
  // For a max problem the certified side lies above the objective, up to the
  // reported gap plus convergence noise.
  CHECK(ms.dual_objective >= ms.objective - ms.dual_gap_bound - 1e-6);
  CHECK(ms.dual_gap_bound ==
        doctest::Approx(std::max(0.0, ms.dual_objective - ms.objective)).epsilon(1e-12));
}

TEST_CASE("solver value matches the closed-form covering relaxation") {
  AssembledSdp asdp = assemble_cover(cycle_graph(5), 1);
  SdpSolution sol = solve(asdp.problem);
  CHECK(sol.status == SolveStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(5.0 / 3.0).epsilon(1e-5));

  // Optimal status implies the evaluated solution is feasible to tolerance.
  SolveOptions opts;
  for (const LmiBlock& b : asdp.problem.blocks) {
    SymMatrix s = evaluate_block(b, sol.y);
    CHECK(min_eigenvalue(s) >= -opts.tol * (1.0 + b.constant.frobenius_norm()));
  }
}

TEST_CASE("solves are deterministic") {
  AssembledSdp asdp = assemble_cover(cycle_graph(5), 1);
  SdpSolution a = solve(asdp.problem);
  SdpSolution b = solve(asdp.problem);
  CHECK(a.iterations == b.iterations);
  CHECK(a.objective == b.objective);
  CHECK(a.y == b.y);
  CHECK(a.dual_gap_bound == b.dual_gap_bound);
}

TEST_CASE("diagonal rescaling does not move the reported objective") {
  std::vector<SdpProblem> golden;
  golden.push_back(assemble_cover(complete_graph(2), 1).problem);
  golden.push_back(assemble_cover(cycle_graph(5), 1).problem);
  golden.push_back(assemble_pack(cycle_graph(5), 1).problem);
  for (const SdpProblem& p : golden) {
    SolveOptions on;
    SolveOptions off;
    off.scale = false;
    SdpSolution a = solve(p, on);
    SdpSolution b = solve(p, off);
    CHECK(a.status == SolveStatus::Optimal);
    CHECK(b.status == SolveStatus::Optimal);
    CHECK(std::fabs(a.objective - b.objective) <= on.tol);
  }
}

TEST_CASE("iteration cap reports best residuals instead of lying") {
  SolveOptions opts;
  opts.max_iter = 10;
  SdpSolution sol = solve(scalar_psd_problem(), opts);
  CHECK(sol.status == SolveStatus::MaxIter);
  CHECK(sol.iterations <= 10);
  CHECK(std::isfinite(sol.objective));
  CHECK(std::isfinite(sol.primal_infeas));
  CHECK(std::isfinite(sol.dual_gap_bound));
  CHECK(sol.primal_infeas >= 0.0);
  CHECK(sol.dual_gap_bound >= 0.0);
}

TEST_CASE("divergent problems do not come back optimal") {
  // min -y with only y >= 0 as a 1x1 block: unbounded below.
  SdpProblem p;
  p.num_vars = 1;
  p.objective = {-1.0};
  p.nonneg = {0};
  LmiBlock b(1);
  b.terms.push_back({0, 0, 0, 1.0});
  p.blocks.push_back(b);

  SolveOptions opts;
  opts.max_iter = 20000;
  SdpSolution sol = solve(p, opts);
  CHECK(sol.status != SolveStatus::Optimal);
}

TEST_CASE("status strings are stable") {
  CHECK(to_string(SolveStatus::Optimal) == "optimal");
  CHECK(to_string(SolveStatus::MaxIter) == "max_iter");
  CHECK(to_string(SolveStatus::UnboundedDetected) == "unbounded_detected");
}

TEST_CASE("sdpa export writes the sparse format") {
  SdpProblem p = scalar_psd_problem();
  std::ostringstream out;
  write_sdpa(p, out);
  std::string text = out.str();
  CHECK(text.find("1 = mDIM") != std::string::npos);
  CHECK(text.find("1 = nBLOCK") != std::string::npos);
  CHECK(text.find("2 = bLOCKsTRUCT") != std::string::npos);
  // F0 is written negated per the format's sign convention.
  CHECK(text.find("0 1 1 2 -1\n") != std::string::npos);
  CHECK(text.find("1 1 1 1 1\n") != std::string::npos);
  CHECK(text.find("1 1 2 2 1\n") != std::string::npos);

  // Flagged variables get a trailing diagonal block; max problems negate c.
  SdpProblem q = p;
  q.sense = SdpProblem::Sense::Max;
  q.nonneg = {1};
  std::ostringstream out2;
  write_sdpa(q, out2);
  std::string t2 = out2.str();
  CHECK(t2.find("2 = nBLOCK") != std::string::npos);
  CHECK(t2.find("2 -1 = bLOCKsTRUCT") != std::string::npos);
  CHECK(t2.find("objective negated") != std::string::npos);
  CHECK(t2.find("-1\n0 1 1 2 -1\n") != std::string::npos);  // negated objective row
  CHECK(t2.find("1 2 1 1 1\n") != std::string::npos);       // the flag block entry
}
