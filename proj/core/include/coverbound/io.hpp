#pragma once

#include <iosfwd>
#include <string>

#include "coverbound/graph.hpp"
#include "coverbound/metric_space.hpp"

namespace coverbound {

// DIMACS edge format: 'c' comments, one 'p edge <n> <m>' line, 'e <u> <v>'
// lines with 1-based endpoints. Duplicate edges collapse; self-loops and
// out-of-range endpoints are input errors.
Graph read_dimacs(std::istream& in, const std::string& name = "dimacs");
Graph read_dimacs_file(const std::string& path);
void write_dimacs(const Graph& g, std::ostream& out);
void write_dimacs_file(const Graph& g, const std::string& path);

// Distance matrix CSV: an optional first row of point labels, then an m x m
// numeric matrix. Values round-trip at full double precision.
FiniteMetricSpace read_distance_csv(std::istream& in, const std::string& name = "csv");
FiniteMetricSpace read_distance_csv_file(const std::string& path);
void write_distance_csv(const FiniteMetricSpace& space, std::ostream& out);
void write_distance_csv_file(const FiniteMetricSpace& space, const std::string& path);

}  // namespace coverbound
