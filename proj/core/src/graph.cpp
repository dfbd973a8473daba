#include "coverbound/graph.hpp"

#include <stdexcept>

namespace coverbound {

Graph::Graph(int n, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 1) throw std::invalid_argument("Graph: need at least one vertex");
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t Graph::idx(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("Graph: vertex out of range");
  return static_cast<std::size_t>(u) * n_ + v;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
  std::size_t a = idx(u, v), b = idx(v, u);
  if (!adj_[a]) {
    adj_[a] = adj_[b] = 1;
    ++m_;
  }
}

std::vector<int> Graph::closed_neighborhood(int j) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (i == j || adj_[idx(j, i)]) out.push_back(i);
  return out;
}

int Graph::closed_degree(int j) const {
  int c = 0;
  for (int i = 0; i < n_; ++i)
    if (i == j || adj_[idx(j, i)]) ++c;
  return c;
}

std::uint32_t Graph::closed_neighborhood_mask(int j) const {
  if (n_ > 30) throw std::invalid_argument("Graph: neighborhood masks need n <= 30");
  std::uint32_t m = 0;
  for (int i = 0; i < n_; ++i)
    if (i == j || adj_[idx(j, i)]) m |= (std::uint32_t{1} << i);
  return m;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[idx(u, v)]) out.emplace_back(u, v);
  return out;
}

}  // namespace coverbound
