#include "coverbound/dualize.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverbound {

namespace {

std::size_t svec_pos(int dim, int r, int c) {
  // packed upper triangle, row major; r <= c
  return static_cast<std::size_t>(r) * dim - static_cast<std::size_t>(r) * (r - 1) / 2 +
         (c - r);
}

}  // namespace

std::size_t DualizeResult::var_of_cell(std::size_t b, int r, int c) const {
  if (b >= block_dim.size()) throw std::out_of_range("var_of_cell: block index");
  if (r > c) std::swap(r, c);
  if (r < 0 || c >= block_dim[b]) throw std::out_of_range("var_of_cell: cell index");
  return block_var_offset[b] + svec_pos(block_dim[b], r, c);
}

DualizeResult dualize(const SdpProblem& p) {
  validate(p);
  const double s = p.sense == SdpProblem::Sense::Min ? 1.0 : -1.0;

  DualizeResult out;
  out.num_primal_vars = p.num_vars;
  out.block_dim.reserve(p.blocks.size());
  out.block_var_offset.reserve(p.blocks.size());
  std::size_t nv = 0;
  for (const auto& blk : p.blocks) {
    out.block_dim.push_back(blk.dim);
    out.block_var_offset.push_back(nv);
    nv += static_cast<std::size_t>(blk.dim) * (blk.dim + 1) / 2;
  }

  SdpProblem& d = out.dual;
  d.sense = p.sense == SdpProblem::Sense::Min ? SdpProblem::Sense::Max
                                              : SdpProblem::Sense::Min;
  d.num_vars = static_cast<int>(nv);
  d.objective.assign(nv, 0.0);
  d.nonneg.assign(nv, 0);
  d.optimum_box = 0.0;

  // objective: -s * <Z_B, F0_B>, off-diagonal cells counted twice
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const LmiBlock& blk = p.blocks[b];
    for (int r = 0; r < blk.dim; ++r) {
      for (int c = r; c < blk.dim; ++c) {
        double f0 = blk.constant(r, c);
        if (f0 == 0.0) continue;
        double mult = r == c ? 1.0 : 2.0;
        d.objective[out.block_var_offset[b] + svec_pos(blk.dim, r, c)] = -s * f0 * mult;
      }
    }
  }

  // PSD blocks reproducing each Z_B from its cell variables
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const LmiBlock& blk = p.blocks[b];
    LmiBlock zb(blk.dim);
    zb.terms.reserve(static_cast<std::size_t>(blk.dim) * (blk.dim + 1) / 2);
    for (int r = 0; r < blk.dim; ++r) {
      for (int c = r; c < blk.dim; ++c) {
        zb.terms.push_back(
            {static_cast<int>(out.block_var_offset[b] + svec_pos(blk.dim, r, c)), r, c,
             1.0});
      }
    }
    d.blocks.push_back(std::move(zb));
  }

  // <Z_B, F_i_B> as a linear form in the cell variables, duplicates merged
  std::vector<std::vector<std::pair<int, double>>> pairing(p.num_vars);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const LmiBlock& blk = p.blocks[b];
    for (const BlockTerm& term : blk.terms) {
      double mult = term.row == term.col ? 1.0 : 2.0;
      pairing[term.var].emplace_back(
          static_cast<int>(out.block_var_offset[b] + svec_pos(blk.dim, term.row, term.col)),
          term.coeff * mult);
    }
  }
  for (auto& lin : pairing) {
    std::sort(lin.begin(), lin.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (w > 0 && lin[w - 1].first == lin[i].first) {
        lin[w - 1].second += lin[i].second;
      } else {
        lin[w++] = lin[i];
      }
    }
    lin.resize(w);
  }

  // per-variable constraints: expr_i = s*c_i - <Z, F_i>; flagged primal
  // variables need expr_i >= 0 only, free ones force expr_i = 0
  out.eq_block_index.reserve(p.num_vars);
  for (int i = 0; i < p.num_vars; ++i) {
    out.eq_block_index.push_back(d.blocks.size());
    LmiBlock ge(1);
    ge.constant.set(0, 0, s * p.objective[i]);
    for (const auto& [dv, coef] : pairing[i]) {
      if (coef != 0.0) ge.terms.push_back({dv, 0, 0, -coef});
    }
    d.blocks.push_back(std::move(ge));
    if (!p.nonneg[i]) {
      LmiBlock le(1);
      le.constant.set(0, 0, -s * p.objective[i]);
      for (const auto& [dv, coef] : pairing[i]) {
        if (coef != 0.0) le.terms.push_back({dv, 0, 0, coef});
      }
      d.blocks.push_back(std::move(le));
    }
  }

  validate(d);
  return out;
}

}  // namespace coverbound
