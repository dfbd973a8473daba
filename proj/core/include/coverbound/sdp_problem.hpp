#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coverbound/sym_matrix.hpp"

namespace coverbound {

// One coefficient of an LMI block: variable `var` contributes `coeff` at
// (row, col), row <= col, mirrored below the diagonal.
struct BlockTerm {
  int var;
  int row;
  int col;
  double coeff;
};

// S_B(y) = F0 + sum_i y_i F_i, required PSD.
struct LmiBlock {
  int dim;
  SymMatrix constant;  // F0
  std::vector<BlockTerm> terms;

  explicit LmiBlock(int d) : dim(d), constant(d) {}
};

// min/max c^T y subject to every block PSD and flagged variables >= 0.
struct SdpProblem {
  enum class Sense { Min, Max };

  Sense sense = Sense::Min;
  int num_vars = 0;
  std::vector<double> objective;      // size num_vars
  std::vector<LmiBlock> blocks;       // at least one
  std::vector<std::uint8_t> nonneg;   // size num_vars; 1 = constrained >= 0

  // When > 0: every optimal y is known a priori to satisfy |y_i| <= box
  // (and y_i in [0, box] if flagged). Lets the solver charge dual residuals
  // against a finite range and certify its duality gap. 0 = unknown.
  double optimum_box = 0.0;
};

// Structural checks: sizes line up, terms in range, coefficients finite.
// Throws std::invalid_argument.
void validate(const SdpProblem& p);

SymMatrix evaluate_block(const LmiBlock& block, std::span<const double> y);

struct FeasibilityReport {
  double min_block_eigenvalue = 0.0;  // min over blocks of lambda_min(S_B(y))
  double min_nonneg_value = 0.0;      // min over flagged variables, 0 if none
  double worst_slack = 0.0;           // min of the two
};

FeasibilityReport feasibility_slack(const SdpProblem& p, std::span<const double> y);

}  // namespace coverbound
