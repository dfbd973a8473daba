#include "coverbound/metric_space.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace coverbound {

FiniteMetricSpace::FiniteMetricSpace(int m, std::vector<double> dist,
                                     std::vector<std::string> labels,
                                     std::string name)
    : m_(m), dist_(std::move(dist)), labels_(std::move(labels)), name_(std::move(name)) {
  if (m < 1) throw std::invalid_argument("FiniteMetricSpace: need at least one point");
  if (dist_.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("FiniteMetricSpace: distance matrix size mismatch");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("FiniteMetricSpace: label count mismatch");

  for (int i = 0; i < m; ++i) {
    if (dist_[static_cast<std::size_t>(i) * m + i] != 0.0)
      throw std::invalid_argument("FiniteMetricSpace: nonzero diagonal");
    for (int j = i + 1; j < m; ++j) {
      double a = dist_[static_cast<std::size_t>(i) * m + j];
      double b = dist_[static_cast<std::size_t>(j) * m + i];
      if (!std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("FiniteMetricSpace: non-finite distance");
      if (std::fabs(a - b) > kTriangleTol)
        throw std::invalid_argument("FiniteMetricSpace: asymmetric distances");
      double d = 0.5 * (a + b);
      if (d <= 0.0)
        throw std::invalid_argument("FiniteMetricSpace: non-positive off-diagonal distance");
      dist_[static_cast<std::size_t>(i) * m + j] = d;
      dist_[static_cast<std::size_t>(j) * m + i] = d;
    }
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        double lhs = distance(i, k);
        double rhs = distance(i, j) + distance(j, k);
        if (lhs > rhs + kTriangleTol)
          throw std::invalid_argument("FiniteMetricSpace: triangle inequality violated");
      }
}

double FiniteMetricSpace::distance(int i, int j) const {
  if (i < 0 || i >= m_ || j < 0 || j >= m_)
    throw std::out_of_range("FiniteMetricSpace: point out of range");
  return dist_[static_cast<std::size_t>(i) * m_ + j];
}

double FiniteMetricSpace::min_distance() const {
  if (m_ < 2) throw std::logic_error("FiniteMetricSpace: min_distance needs two points");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j) best = std::min(best, distance(i, j));
  return best;
}

Graph covering_graph(const FiniteMetricSpace& space, double r) {
  if (!(r > 0)) throw std::invalid_argument("covering_graph: radius must be positive");
  Graph g(space.point_count(), space.name().empty() ? "covering" : space.name() + ":cover");
  for (int i = 0; i < space.point_count(); ++i)
    for (int j = i + 1; j < space.point_count(); ++j)
      if (space.distance(i, j) <= r) g.add_edge(i, j);
  return g;
}

Graph packing_graph(const FiniteMetricSpace& space, double r) {
  if (!(r > 0)) throw std::invalid_argument("packing_graph: radius must be positive");
  Graph g(space.point_count(), space.name().empty() ? "packing" : space.name() + ":pack");
  for (int i = 0; i < space.point_count(); ++i)
    for (int j = i + 1; j < space.point_count(); ++j)
      if (space.distance(i, j) < 2.0 * r) g.add_edge(i, j);
  return g;
}

}  // namespace coverbound
