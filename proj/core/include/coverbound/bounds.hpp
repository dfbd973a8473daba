#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverbound/assemble.hpp"
#include "coverbound/exact.hpp"
#include "coverbound/graph.hpp"
#include "coverbound/metric_space.hpp"
#include "coverbound/rational.hpp"
#include "coverbound/solver.hpp"

namespace coverbound {

enum class ProblemKind { Cover, Pack, CoverSeparated };

std::string to_string(ProblemKind kind);

struct InstanceRef {
  std::string kind;                 // generator name, "file", or "metric"
  std::vector<std::string> params;  // generator arguments / input description
  int n = 0;
};

// One solved hierarchy step plus cheap reference values. `bound` is the
// solver's value of the relaxation; certified_lower_bound = bound minus the
// certified duality gap (minimization only), so it stays a valid lower bound
// even when the solve stops short of optimality.
struct BoundReport {
  InstanceRef instance;
  std::string problem;
  int level = 1;
  double bound = 0.0;
  std::string status;
  std::optional<double> certified_lower_bound;
  std::optional<Rational> volume_bound;
  std::optional<int> exact;
  std::optional<int> greedy_size;
  std::vector<int> greedy_set;
  double residual_primal = 0.0;
  double residual_gap = 0.0;
  long iterations = 0;
  double wall_time_ms = 0.0;
  SdpSolution solution;  // full solver output for downstream checks
};

struct BoundRequest {
  ProblemKind problem = ProblemKind::Cover;
  int level = 1;
  double r = 0.0;    // metric cover only
  double eps = 0.0;  // metric cover only
  SolveOptions solve;
  std::size_t family_cap = SetFamily::kDefaultCap;
  bool attach_references = true;  // volume/exact/greedy when cheap
  int exact_limit = 20;           // skip exact reference above this many points
};

BoundReport solve_bound(const Graph& g, const BoundRequest& req,
                        const InstanceRef& ref = {});
BoundReport solve_bound(const FiniteMetricSpace& space, const BoundRequest& req,
                        const InstanceRef& ref = {});

}  // namespace coverbound
