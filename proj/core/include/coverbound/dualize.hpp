#pragma once

#include <cstddef>
#include <vector>

#include "coverbound/sdp_problem.hpp"

namespace coverbound {

// Explicit SDP dual of an LMI problem. For a minimization primal
//   min c^T y  s.t.  S_B(y) = F0_B + sum_i y_i F_i_B >= 0,  y_f >= 0,
// the dual is
//   max -sum_B <Z_B, F0_B>  s.t.  sum_B <Z_B, F_i_B> = c_i (free i),
//                                 sum_B <Z_B, F_i_B> <= c_i (flagged i),
//                                 Z_B >= 0,
// expressed again as an SdpProblem: one scalar variable per upper-triangle
// cell of each Z_B, one PSD block per Z_B, and the per-variable constraints
// as 1x1 blocks (two for an equality, one for an inequality). Maximization
// primals dualize to the mirrored minimization form. Weak duality holds by
// construction: every dual-feasible value bounds the primal optimum.
struct DualizeResult {
  SdpProblem dual;
  int num_primal_vars = 0;
  std::vector<int> block_dim;                 // primal block dimensions
  std::vector<std::size_t> block_var_offset;  // dual-var start of Z_B's cells
  // dual.blocks layout: [0, block_dim.size()) reproduce the Z_B, then the
  // per-primal-variable constraint blocks; eq_block_index[i] is the first
  // block of primal variable i.
  std::vector<std::size_t> eq_block_index;

  // Dual variable holding Z_B's (r, c) cell, r <= c.
  std::size_t var_of_cell(std::size_t b, int r, int c) const;
};

DualizeResult dualize(const SdpProblem& p);

}  // namespace coverbound
