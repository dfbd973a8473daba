#pragma once

#include <string>
#include <vector>

#include "coverbound/graph.hpp"

namespace coverbound {

// Finite metric space given by its distance matrix.
// Constructor validates: zero diagonal, symmetry, positivity off the
// diagonal, triangle inequality. Tolerance kTriangleTol absorbs float noise
// in the inputs; the stored matrix is symmetrized exactly.
class FiniteMetricSpace {
 public:
  static constexpr double kTriangleTol = 1e-9;

  FiniteMetricSpace(int m, std::vector<double> dist,
                    std::vector<std::string> labels = {}, std::string name = "");

  int point_count() const { return m_; }
  double distance(int i, int j) const;
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  const std::vector<std::string>& labels() const { return labels_; }

  // Smallest off-diagonal distance. m >= 2.
  double min_distance() const;

 private:
  int m_;
  std::vector<double> dist_;  // m*m, symmetric, zero diagonal
  std::vector<std::string> labels_;
  std::string name_;
};

// Graph on the points with i ~ j iff 0 < d(i,j) <= r: dominating sets of this
// graph are exactly the r-covers of the space.
Graph covering_graph(const FiniteMetricSpace& space, double r);

// Graph on the points with i ~ j iff 0 < d(i,j) < 2r: independent sets are
// exactly the r-packings (open balls of radius r pairwise disjoint).
Graph packing_graph(const FiniteMetricSpace& space, double r);

}  // namespace coverbound
