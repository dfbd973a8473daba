#pragma once

#include <string>
#include <vector>

#include "coverbound/sdp_problem.hpp"

namespace coverbound {

enum class SolveStatus { Optimal, MaxIter, UnboundedDetected };

std::string to_string(SolveStatus s);

struct SolveOptions {
  double tol = 1e-8;        // residual and certified-gap tolerance
  long max_iter = 200000;
  bool scale = true;        // diagonal data rescaling
  double rho = 1.0;         // initial penalty
  double over_relax = 1.6;
  int check_interval = 25;  // iterations between convergence checks
  // Give up (status max_iter) after this many certificate attempts whose gap
  // stopped improving; avoids burning the full budget on unattained optima.
  int stall_attempts = 100;
};

struct SdpSolution {
  std::vector<double> y;
  double objective = 0.0;
  SolveStatus status = SolveStatus::MaxIter;
  // Worst primal violation, per-block normalized: max over blocks of
  // max(0, -lambda_min(S_B(y))) / (1 + ||F0_B||_F), and max(0, -y_i) over
  // flagged variables.
  double primal_infeas = 0.0;
  // Absolute certified duality gap: for min problems,
  // objective - dual_gap_bound is a valid lower bound on the optimum
  // (mirrored for max). Backed by a PSD-projected dual candidate plus
  // residuals charged against the problem's optimum box.
  double dual_gap_bound = 0.0;
  double dual_objective = 0.0;       // the certified bound itself
  bool certificate_from_box = false; // box was problem-supplied, not heuristic
  long iterations = 0;
  double wall_seconds = 0.0;
};

// First-order splitting: alternate a pre-factorized affine projection with
// cone projections (PSD per block, clip for flags), over-relaxed, with
// residual-balanced penalty updates. Deterministic: fixed iteration order, no
// threading, no time-dependent decisions. status = optimal only when the
// evaluated blocks satisfy lambda_min >= -tol*(1+||F0||_F), flagged variables
// >= -tol, and the certified gap is <= tol.
SdpSolution solve(const SdpProblem& p, const SolveOptions& opts = {});

}  // namespace coverbound
