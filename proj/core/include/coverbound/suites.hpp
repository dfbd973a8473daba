#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coverbound/bounds.hpp"
#include "coverbound/graph.hpp"
#include "coverbound/metric_space.hpp"
#include "coverbound/solver.hpp"

namespace coverbound {

// Configuration shared by the named verification suites. Given a fixed seed,
// every suite is fully deterministic: instance streams derive from the seed,
// solves are deterministic, and reports carry no wall-clock data.
struct SuiteOptions {
  std::uint64_t seed = 1;
  int jobs = 0;  // worker threads; 0 = hardware concurrency
  std::size_t family_cap = SetFamily::kDefaultCap;
  SolveOptions solve;
  std::string instance_set;  // named set; empty = suite default
  int graphs = 0;            // random-graph count; 0 = suite default
  int samples = 1000;        // random vectors per ground size (lindstrom_wilf)
  int cone_samples = 100;    // constructed cone members per ground size
  // eps_sweep grid
  double r = 1.0;
  double eps_lo = 0.1;
  double eps_hi = 1.9;
  int eps_points = 10;
};

struct SuiteCase {
  std::string instance;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs for ordered checks; 0 when not applicable
  bool pass = true;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::string instance_set;
  bool pass = true;
  double worst_slack = 0.0;     // most negative slack across cases
  std::string counterexample;   // first failing instance, empty on pass
  std::vector<SuiteCase> cases;
};

// Suite names: lindstrom_wilf, monotone, sandwich, convergence, collapse,
// weak_duality, eps_sweep. Failing checks are recorded in the report, not
// thrown; only unusable configuration (unknown suite/set) throws.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

std::vector<std::string> suite_names();

// Every graph on n vertices up to isomorphism (canonical-form dedup), ordered
// by edge count then adjacency mask. n <= 5 keeps the permutation scan exact.
std::vector<Graph> nonisomorphic_graphs(int n);

// Deterministic random-graph stream used by the random suites: graph k has
// n = n_lo + (k mod (n_hi-n_lo+1)) vertices and edge density cycling over a
// fixed ladder, seeded per index.
Graph suite_random_graph(std::uint64_t seed, int k, int n_lo, int n_hi);

struct SweepPoint {
  double eps = 0.0;
  BoundReport report;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::string trend;  // nondecreasing | nonincreasing | constant | non_monotone
  double min_bound = 0.0;
  double max_bound = 0.0;
};

// Solves the separated covering step across an inclusive eps grid and
// classifies how the bound moves with eps (comparison tolerance 1e-7).
// Points solve on a worker pool (jobs = 0: hardware concurrency) and are
// reported in grid order.
SweepResult sweep_eps(const FiniteMetricSpace& space, double r, double eps_lo,
                      double eps_hi, int points, const BoundRequest& base,
                      int jobs = 0);

}  // namespace coverbound
