#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coverbound {

// Simple undirected graph on vertices 0..n-1, no self-loops, no multi-edges.
// Dense adjacency; everything in this project is small (n <= a few hundred).
class Graph {
 public:
  explicit Graph(int n, std::string name = "");

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }

  // Closed neighborhood N[j] = {j} union {i : ij in E}, sorted.
  std::vector<int> closed_neighborhood(int j) const;
  int closed_degree(int j) const;  // |N[j]|

  // Bitmask form of N[j]; requires n <= 30 (set-system ground cap).
  std::uint32_t closed_neighborhood_mask(int j) const;

  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

 private:
  std::size_t idx(int u, int v) const;

  int n_;
  int m_ = 0;
  std::string name_;
  std::vector<std::uint8_t> adj_;  // n*n, symmetric
};

}  // namespace coverbound
