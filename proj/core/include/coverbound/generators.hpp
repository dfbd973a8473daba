#pragma once

#include <cstdint>

#include "coverbound/graph.hpp"
#include "coverbound/metric_space.hpp"

namespace coverbound {

Graph cycle_graph(int n);     // n >= 3
Graph path_graph(int n);      // n >= 1
Graph complete_graph(int n);  // n >= 1
Graph petersen_graph();

// G(n, p): each pair independently an edge. Fixed pair order (u < v,
// lexicographic) and one mt19937_64 draw per pair, so a seed pins the graph
// across platforms.
Graph random_graph(int n, double edge_prob, std::uint64_t seed);

// Binary words of length d under Hamming distance, 2^d points. d <= 8 keeps
// the O(m^3) metric validation cheap.
FiniteMetricSpace hamming_space(int d);

// m points sampled uniformly on the unit sphere in R^dim, chordal distance.
// Gaussians come from a hand-rolled Box-Muller over mt19937_64 so identical
// seeds reproduce the exact doubles everywhere.
FiniteMetricSpace sphere_sample_space(int m, int dim, std::uint64_t seed);

// n points on a discrete cycle, arc distance min(|i-j|, n-|i-j|).
FiniteMetricSpace cycle_metric(int n);

}  // namespace coverbound
