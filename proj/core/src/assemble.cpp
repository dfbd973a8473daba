#include "coverbound/assemble.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace coverbound {

namespace {

// Adds sum of coeff*y(mask) contributions at cell (p,q), p <= q. The empty
// set is pinned to 1 and lands in the constant part; masks outside the family
// read as 0 and are dropped. Coefficients on the same variable merge so the
// block carries at most one term per (var, cell).
void emit_cell(const SetFamily& fam, LmiBlock& block, int p, int q,
               const std::vector<std::pair<std::uint32_t, double>>& contribs) {
  double constant = 0.0;
  std::vector<std::pair<int, double>> acc;
  acc.reserve(contribs.size());
  for (const auto& [mask, coeff] : contribs) {
    if (mask == 0) {
      constant += coeff;
      continue;
    }
    int idx = fam.index_of(mask);
    if (idx < 0) continue;
    int var = idx - 1;
    bool merged = false;
    for (auto& [v, c] : acc) {
      if (v == var) {
        c += coeff;
        merged = true;
        break;
      }
    }
    if (!merged) acc.emplace_back(var, coeff);
  }
  if (constant != 0.0) block.constant.add(p, q, constant);
  for (const auto& [v, c] : acc) {
    if (c != 0.0) block.terms.push_back({v, p, q, c});
  }
}

// Rows of a level-`level` block: the family members of size <= level.
int block_dim(const SetFamily& fam, int level) {
  int capped = std::min(level, fam.max_size());
  return static_cast<int>(fam.prefix_size(capped));
}

LmiBlock moment_block(const SetFamily& fam, int t) {
  int dim = block_dim(fam, t);
  LmiBlock block(dim);
  std::vector<std::pair<std::uint32_t, double>> contribs;
  for (int p = 0; p < dim; ++p) {
    for (int q = p; q < dim; ++q) {
      contribs.clear();
      contribs.emplace_back(fam.subset(p) | fam.subset(q), 1.0);
      emit_cell(fam, block, p, q, contribs);
    }
  }
  return block;
}

// [sum_i a_i y(J u J' u {i}) - b y(J u J')] over rows of size <= level.
LmiBlock localizing_block(const SetFamily& fam, std::span<const double> a,
                          double b, int level) {
  int dim = block_dim(fam, level);
  LmiBlock block(dim);
  std::vector<std::pair<std::uint32_t, double>> contribs;
  for (int p = 0; p < dim; ++p) {
    for (int q = p; q < dim; ++q) {
      std::uint32_t u = fam.subset(p) | fam.subset(q);
      contribs.clear();
      for (int i = 0; i < fam.ground_size(); ++i) {
        if (a[i] != 0.0) contribs.emplace_back(u | (1u << i), a[i]);
      }
      contribs.emplace_back(u, -b);
      emit_cell(fam, block, p, q, contribs);
    }
  }
  return block;
}

// Same with a = indicator of nbhd_mask, b = 1: "some element of the
// neighborhood is present".
LmiBlock neighborhood_block(const SetFamily& fam, std::uint32_t nbhd_mask,
                            int level) {
  int dim = block_dim(fam, level);
  LmiBlock block(dim);
  std::vector<std::pair<std::uint32_t, double>> contribs;
  for (int p = 0; p < dim; ++p) {
    for (int q = p; q < dim; ++q) {
      std::uint32_t u = fam.subset(p) | fam.subset(q);
      contribs.clear();
      for (std::uint32_t rest = nbhd_mask; rest != 0; rest &= rest - 1) {
        std::uint32_t bit = rest & ~(rest - 1);
        contribs.emplace_back(u | bit, 1.0);
      }
      contribs.emplace_back(u, -1.0);
      emit_cell(fam, block, p, q, contribs);
    }
  }
  return block;
}

void init_problem(AssembledSdp& out, std::shared_ptr<const SetFamily> fam,
                  int level, SdpProblem::Sense sense, bool nonneg_vars) {
  out.family = std::move(fam);
  out.level = level;
  SdpProblem& p = out.problem;
  p.sense = sense;
  p.num_vars = static_cast<int>(out.family->size()) - 1;
  p.objective.assign(p.num_vars, 0.0);
  p.nonneg.assign(p.num_vars, nonneg_vars ? 1 : 0);
  p.optimum_box = 1.0;
}

void singleton_objective(AssembledSdp& out, std::span<const double> c) {
  for (int i = 0; i < out.family->ground_size(); ++i) {
    int idx = out.family->index_of(1u << i);
    // singletons satisfy every pairwise predicate, so they are present
    out.problem.objective[idx - 1] = c[i];
  }
}

void check_level(int t, const char* who) {
  if (t < 1) {
    throw std::invalid_argument(std::string(who) + ": level must be >= 1, got " +
                                std::to_string(t));
  }
}

}  // namespace

void validate(const IlpInstance& inst) {
  const int n = inst.num_vars();
  if (n < 1 || n > 30) throw std::invalid_argument("IlpInstance: need 1 <= vars <= 30");
  if (inst.a.size() != inst.b.size())
    throw std::invalid_argument("IlpInstance: row count mismatch between a and b");
  for (const auto& row : inst.a) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("IlpInstance: row length does not match cost length");
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("IlpInstance: non-finite entry in a");
  }
  for (double v : inst.b)
    if (!std::isfinite(v)) throw std::invalid_argument("IlpInstance: non-finite entry in b");
  for (double v : inst.c)
    if (!std::isfinite(v)) throw std::invalid_argument("IlpInstance: non-finite entry in c");
}

AssembledSdp assemble_ilp(const IlpInstance& inst, int t, std::size_t cap) {
  validate(inst);
  const int n = inst.num_vars();
  if (t < 1 || t > n + 1) {
    throw std::invalid_argument("assemble_ilp: level must be in [1, n+1], got " +
                                std::to_string(t));
  }
  auto fam = std::make_shared<const SetFamily>(
      SetFamily::all_subsets(n, std::min(2 * t, n), cap));
  AssembledSdp out;
  init_problem(out, fam, t, SdpProblem::Sense::Min, false);
  singleton_objective(out, inst.c);
  out.problem.blocks.push_back(moment_block(*fam, t));
  for (int j = 0; j < inst.num_rows(); ++j) {
    out.problem.blocks.push_back(localizing_block(*fam, inst.a[j], inst.b[j], t - 1));
  }
  return out;
}

AssembledSdp assemble_pack(const Graph& g, int t, std::size_t cap) {
  const int n = g.vertex_count();
  check_level(t, "assemble_pack");
  auto fam = std::make_shared<const SetFamily>(
      SetFamily::independent_sets(g, std::min(2 * t, n), cap));
  AssembledSdp out;
  init_problem(out, fam, t, SdpProblem::Sense::Max, true);
  std::vector<double> ones(n, 1.0);
  singleton_objective(out, ones);
  out.problem.blocks.push_back(moment_block(*fam, t));
  return out;
}

AssembledSdp assemble_cover(const Graph& g, int t, std::size_t cap) {
  const int n = g.vertex_count();
  check_level(t, "assemble_cover");
  auto fam = std::make_shared<const SetFamily>(
      SetFamily::all_subsets(n, std::min(2 * t, n), cap));
  AssembledSdp out;
  init_problem(out, fam, t, SdpProblem::Sense::Min, false);
  std::vector<double> ones(n, 1.0);
  singleton_objective(out, ones);
  out.problem.blocks.push_back(moment_block(*fam, t));
  for (int j = 0; j < n; ++j) {
    out.problem.blocks.push_back(
        neighborhood_block(*fam, g.closed_neighborhood_mask(j), t - 1));
  }
  return out;
}

AssembledSdp assemble_cover_separated(const FiniteMetricSpace& space, double r,
                                      double eps, int t, std::size_t cap) {
  const int m = space.point_count();
  check_level(t, "assemble_cover_separated");
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("assemble_cover_separated: need radius r > 0");
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("assemble_cover_separated: need separation eps > 0");
  if (!(eps < 2.0 * r))
    throw std::invalid_argument("assemble_cover_separated: need eps < 2r");
  auto fam = std::make_shared<const SetFamily>(
      SetFamily::separated_sets(space, eps, std::min(2 * t, m), cap));
  AssembledSdp out;
  init_problem(out, fam, t, SdpProblem::Sense::Min, true);
  std::vector<double> ones(m, 1.0);
  singleton_objective(out, ones);
  out.problem.blocks.push_back(moment_block(*fam, t));
  for (int z = 0; z < m; ++z) {
    std::uint32_t nbhd = 0;
    for (int x = 0; x < m; ++x) {
      if (space.distance(z, x) <= r) nbhd |= 1u << x;
    }
    out.problem.blocks.push_back(neighborhood_block(*fam, nbhd, t - 1));
  }
  return out;
}

std::vector<double> witness_variable_values(const AssembledSdp& asdp,
                                            std::uint32_t d_mask) {
  const SetFamily& fam = *asdp.family;
  std::vector<double> y(asdp.problem.num_vars, 0.0);
  for (std::size_t pos = 1; pos < fam.size(); ++pos) {
    if ((fam.subset(pos) & ~d_mask) == 0) y[pos - 1] = 1.0;
  }
  return y;
}

}  // namespace coverbound
