#include "coverbound/sdp_problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "coverbound/eigen_sym.hpp"

namespace coverbound {

void validate(const SdpProblem& p) {
  if (p.num_vars < 0) throw std::invalid_argument("SdpProblem: negative num_vars");
  if (p.objective.size() != static_cast<std::size_t>(p.num_vars))
    throw std::invalid_argument("SdpProblem: objective size mismatch");
  if (p.nonneg.size() != static_cast<std::size_t>(p.num_vars))
    throw std::invalid_argument("SdpProblem: nonneg flag size mismatch");
  if (p.blocks.empty()) throw std::invalid_argument("SdpProblem: needs at least one block");
  for (double c : p.objective)
    if (!std::isfinite(c)) throw std::invalid_argument("SdpProblem: non-finite objective");
  if (!(p.optimum_box >= 0.0))
    throw std::invalid_argument("SdpProblem: optimum_box must be >= 0");
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const LmiBlock& blk = p.blocks[b];
    std::string where = "SdpProblem block " + std::to_string(b);
    if (blk.dim < 1) throw std::invalid_argument(where + ": dim >= 1");
    if (blk.constant.dim() != blk.dim)
      throw std::invalid_argument(where + ": constant dim mismatch");
    for (const BlockTerm& t : blk.terms) {
      if (t.var < 0 || t.var >= p.num_vars)
        throw std::invalid_argument(where + ": term variable out of range");
      if (t.row < 0 || t.col < t.row || t.col >= blk.dim)
        throw std::invalid_argument(where + ": term position out of range");
      if (!std::isfinite(t.coeff))
        throw std::invalid_argument(where + ": non-finite coefficient");
    }
  }
}

SymMatrix evaluate_block(const LmiBlock& block, std::span<const double> y) {
  SymMatrix s = block.constant;
  for (const BlockTerm& t : block.terms)
    s.add(t.row, t.col, t.coeff * y[static_cast<std::size_t>(t.var)]);
  return s;
}

FeasibilityReport feasibility_slack(const SdpProblem& p, std::span<const double> y) {
  if (y.size() != static_cast<std::size_t>(p.num_vars))
    throw std::invalid_argument("feasibility_slack: y size mismatch");
  FeasibilityReport rep;
  rep.min_block_eigenvalue = std::numeric_limits<double>::infinity();
  for (const LmiBlock& blk : p.blocks)
    rep.min_block_eigenvalue =
        std::min(rep.min_block_eigenvalue, min_eigenvalue(evaluate_block(blk, y)));
  rep.min_nonneg_value = 0.0;
  bool any = false;
  for (int i = 0; i < p.num_vars; ++i)
    if (p.nonneg[static_cast<std::size_t>(i)]) {
      double v = y[static_cast<std::size_t>(i)];
      rep.min_nonneg_value = any ? std::min(rep.min_nonneg_value, v) : v;
      any = true;
    }
  if (!any) rep.min_nonneg_value = 0.0;
  rep.worst_slack = std::min(rep.min_block_eigenvalue, rep.min_nonneg_value);
  return rep;
}

}  // namespace coverbound
