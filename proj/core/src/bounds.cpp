#include "coverbound/bounds.hpp"

#include <chrono>
#include <stdexcept>

namespace coverbound {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void finish_report(BoundReport& rep, const AssembledSdp& asdp, SdpSolution sol) {
  rep.level = asdp.level;
  rep.bound = sol.objective;
  rep.status = to_string(sol.status);
  if (asdp.problem.sense == SdpProblem::Sense::Min) {
    // headline number: bound minus the certified gap is always a true lower
    // bound on the relaxation value, hence on the covering number
    rep.certified_lower_bound = sol.objective - sol.dual_gap_bound;
  }
  rep.residual_primal = sol.primal_infeas;
  rep.residual_gap = sol.dual_gap_bound;
  rep.iterations = sol.iterations;
  rep.solution = std::move(sol);
}

void attach_graph_references(BoundReport& rep, const Graph& g, ProblemKind kind,
                             const BoundRequest& req) {
  if (!req.attach_references) return;
  const int n = g.vertex_count();
  if (kind == ProblemKind::Pack) {
    if (n <= req.exact_limit) rep.exact = independence_number(g).value;
    return;
  }
  rep.volume_bound = volume_bound(g);
  rep.greedy_set = greedy_dominating_set(g);
  rep.greedy_size = static_cast<int>(rep.greedy_set.size());
  if (n <= req.exact_limit) rep.exact = domination_number(g).value;
}

}  // namespace

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Cover: return "cover";
    case ProblemKind::Pack: return "pack";
    case ProblemKind::CoverSeparated: return "cover_separated";
  }
  throw std::logic_error("unknown problem kind");
}

BoundReport solve_bound(const Graph& g, const BoundRequest& req,
                        const InstanceRef& ref) {
  if (req.problem == ProblemKind::CoverSeparated)
    throw std::invalid_argument("solve_bound: cover_separated needs a metric space");
  auto t0 = Clock::now();
  BoundReport rep;
  rep.instance = ref;
  rep.instance.n = g.vertex_count();
  rep.problem = to_string(req.problem);
  AssembledSdp asdp = req.problem == ProblemKind::Cover
                          ? assemble_cover(g, req.level, req.family_cap)
                          : assemble_pack(g, req.level, req.family_cap);
  finish_report(rep, asdp, solve(asdp.problem, req.solve));
  attach_graph_references(rep, g, req.problem, req);
  rep.wall_time_ms = ms_since(t0);
  return rep;
}

BoundReport solve_bound(const FiniteMetricSpace& space, const BoundRequest& req,
                        const InstanceRef& ref) {
  if (req.problem != ProblemKind::CoverSeparated)
    throw std::invalid_argument("solve_bound: metric spaces take cover_separated");
  auto t0 = Clock::now();
  BoundReport rep;
  rep.instance = ref;
  rep.instance.n = space.point_count();
  rep.problem = to_string(req.problem);
  AssembledSdp asdp =
      assemble_cover_separated(space, req.r, req.eps, req.level, req.family_cap);
  finish_report(rep, asdp, solve(asdp.problem, req.solve));
  if (req.attach_references) {
    // references come from the radius-r covering graph
    Graph cg = covering_graph(space, req.r);
    rep.volume_bound = volume_bound(cg);
    rep.greedy_set = greedy_dominating_set(cg);
    rep.greedy_size = static_cast<int>(rep.greedy_set.size());
    if (cg.vertex_count() <= req.exact_limit) rep.exact = domination_number(cg).value;
  }
  rep.wall_time_ms = ms_since(t0);
  return rep;
}

}  // namespace coverbound
