#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "coverbound/graph.hpp"
#include "coverbound/metric_space.hpp"
#include "coverbound/moment.hpp"
#include "coverbound/sdp_problem.hpp"
#include "coverbound/set_family.hpp"

namespace coverbound {

// 0/1 integer program min c^T x, Ax >= b, x in {0,1}^n.
struct IlpInstance {
  std::vector<std::vector<double>> a;  // m rows of length n
  std::vector<double> b;               // length m
  std::vector<double> c;               // length n

  int num_vars() const { return static_cast<int>(c.size()); }
  int num_rows() const { return static_cast<int>(b.size()); }
};

void validate(const IlpInstance& inst);

// An assembled relaxation step. Variable k of the SDP is the moment value of
// family member k+1; the empty set's value is pinned to 1 and folded into the
// constant parts. All assemblies stamp optimum_box = 1: any feasible moment
// vector has entries in [0,1] on the diagonal (2x2 minors against the
// empty-set row) and in [-1,1] off it.
struct AssembledSdp {
  SdpProblem problem;
  std::shared_ptr<const SetFamily> family;
  int level = 1;
};

// General hierarchy step for a 0/1 ILP: moment block M_t over P_t, one
// localizing block M^j_{t-1} per row. pre: 1 <= t <= n+1.
AssembledSdp assemble_ilp(const IlpInstance& inst, int t,
                          std::size_t cap = SetFamily::kDefaultCap);

// Packing (independence) step: maximize over independent-set moments,
// nonnegative entries, moment block over I_t with zero-fill outside I_2t.
// Level 1 is the nonnegativity-strengthened theta function.
AssembledSdp assemble_pack(const Graph& g, int t,
                           std::size_t cap = SetFamily::kDefaultCap);

// Covering (domination) step: minimize over P_2t moments, moment block over
// P_t, one domination localizing block per vertex at level t-1.
AssembledSdp assemble_cover(const Graph& g, int t,
                            std::size_t cap = SetFamily::kDefaultCap);

// Metric covering step over eps-separated index sets: nonnegative moments,
// moment block over I_t, one localizing block per point z with neighborhood
// {x : d(z,x) <= r}. Unions leaving the family read as 0.
// pre: 0 < eps < 2r.
AssembledSdp assemble_cover_separated(const FiniteMetricSpace& space, double r,
                                      double eps, int t,
                                      std::size_t cap = SetFamily::kDefaultCap);

// Values the assembled variables take on the indicator moment vector of the
// set d_mask: 1 on family members contained in d_mask, else 0. For a
// dominating set and a cover assembly this is the classical feasible witness.
std::vector<double> witness_variable_values(const AssembledSdp& asdp,
                                            std::uint32_t d_mask);

}  // namespace coverbound
