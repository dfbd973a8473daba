#include "coverbound/generators.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace coverbound {

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3");
  Graph g(n, "cycle:" + std::to_string(n));
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n >= 1");
  Graph g(n, "path:" + std::to_string(n));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n >= 1");
  Graph g(n, "complete:" + std::to_string(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph petersen_graph() {
  Graph g(10, "petersen");
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);              // outer cycle
    g.add_edge(5 + i, 5 + ((i + 2) % 5));    // inner pentagram
    g.add_edge(i, 5 + i);                    // spokes
  }
  return g;
}

namespace {

// Uniform double in [0,1) from the top 53 bits of one 64-bit draw.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller, one gaussian per call; the mate is cached. Avoids
// std::normal_distribution whose algorithm varies across standard libraries.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0,1]: +1 before scaling keeps log finite.
    double u1 = static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53;
    double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    double mag = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * std::numbers::pi * u2;
    spare_ = mag * std::sin(ang);
    have_spare_ = true;
    return mag * std::cos(ang);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_graph: n >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("random_graph: edge_prob in [0,1]");
  std::mt19937_64 rng(seed);
  Graph g(n, "random:" + std::to_string(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < edge_prob) g.add_edge(u, v);
  return g;
}

FiniteMetricSpace hamming_space(int d) {
  if (d < 1 || d > 8) throw std::invalid_argument("hamming_space: d in [1,8]");
  int m = 1 << d;
  std::vector<double> dist(static_cast<std::size_t>(m) * m, 0.0);
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    std::string w(d, '0');
    for (int b = 0; b < d; ++b)
      if (i & (1 << b)) w[d - 1 - b] = '1';
    labels[i] = w;
    for (int j = 0; j < m; ++j)
      dist[static_cast<std::size_t>(i) * m + j] =
          static_cast<double>(std::popcount(static_cast<unsigned>(i ^ j)));
  }
  return FiniteMetricSpace(m, std::move(dist), std::move(labels),
                           "hamming:" + std::to_string(d));
}

FiniteMetricSpace sphere_sample_space(int m, int dim, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("sphere_sample_space: m >= 1");
  if (dim < 2) throw std::invalid_argument("sphere_sample_space: dim >= 2");
  Gaussian gauss(seed);
  std::vector<double> pts(static_cast<std::size_t>(m) * dim);
  for (int i = 0; i < m; ++i) {
    for (;;) {
      double norm2 = 0.0;
      for (int k = 0; k < dim; ++k) {
        double z = gauss();
        pts[static_cast<std::size_t>(i) * dim + k] = z;
        norm2 += z * z;
      }
      if (norm2 < 1e-24) continue;  // resample a degenerate draw
      double inv = 1.0 / std::sqrt(norm2);
      for (int k = 0; k < dim; ++k) pts[static_cast<std::size_t>(i) * dim + k] *= inv;
      // Coincident points would break metric validation; resample instead.
      bool distinct = true;
      for (int j = 0; j < i && distinct; ++j) {
        double d2 = 0.0;
        for (int k = 0; k < dim; ++k) {
          double t = pts[static_cast<std::size_t>(i) * dim + k] -
                     pts[static_cast<std::size_t>(j) * dim + k];
          d2 += t * t;
        }
        if (d2 < 1e-24) distinct = false;
      }
      if (distinct) break;
    }
  }
  std::vector<double> dist(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double d2 = 0.0;
      for (int k = 0; k < dim; ++k) {
        double t = pts[static_cast<std::size_t>(i) * dim + k] -
                   pts[static_cast<std::size_t>(j) * dim + k];
        d2 += t * t;
      }
      double d = std::sqrt(d2);
      dist[static_cast<std::size_t>(i) * m + j] = d;
      dist[static_cast<std::size_t>(j) * m + i] = d;
    }
  return FiniteMetricSpace(m, std::move(dist), {},
                           "sphere:" + std::to_string(m) + ":" + std::to_string(dim));
}

FiniteMetricSpace cycle_metric(int n) {
  if (n < 3) throw std::invalid_argument("cycle_metric: n >= 3");
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int a = std::abs(i - j);
      dist[static_cast<std::size_t>(i) * n + j] = static_cast<double>(std::min(a, n - a));
    }
  return FiniteMetricSpace(n, std::move(dist), {}, "cycle-metric:" + std::to_string(n));
}

}  // namespace coverbound
