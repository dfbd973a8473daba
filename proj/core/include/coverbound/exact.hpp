#pragma once

#include <vector>

#include "coverbound/graph.hpp"
#include "coverbound/rational.hpp"

namespace coverbound {

struct ExactResult {
  int value = 0;
  std::vector<int> witness;  // sorted optimal set
  double wall_seconds = 0.0;
};

// Exact domination number gamma(G). n <= 30: plain subset enumeration up to
// n = 20, branch and bound above. Deterministic witness.
ExactResult domination_number(const Graph& g);

// Exact independence number alpha(G), same caps and strategy.
ExactResult independence_number(const Graph& g);

// n / max_j |N[j]| as an exact rational; lower bound for gamma(G).
Rational volume_bound(const Graph& g);

// Greedy cover: repeatedly take the vertex covering the most uncovered
// vertices, ties to the lowest index. Classical guarantee:
// gamma <= |greedy| <= gamma * (1 + ln n).
std::vector<int> greedy_dominating_set(const Graph& g);

bool is_dominating_set(const Graph& g, const std::vector<int>& verts);
bool is_independent_set(const Graph& g, const std::vector<int>& verts);

// All closed degrees equal. Holds for vertex-transitive graphs; the volume
// bound collapse results apply to instances with this property.
bool is_neighborhood_regular(const Graph& g);

}  // namespace coverbound
