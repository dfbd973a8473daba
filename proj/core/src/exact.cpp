#include "coverbound/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace coverbound {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint32_t;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> mask_to_verts(Mask m) {
  std::vector<int> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> cov(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) cov[v] = g.closed_neighborhood_mask(v);
  return cov;
}

std::vector<Mask> open_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    adj[v] = g.closed_neighborhood_mask(v) & ~(Mask{1} << v);
  return adj;
}

struct DomSearch {
  const std::vector<Mask>& cov;
  Mask full;
  int max_closed_degree;
  int best_size;
  Mask best_mask = 0;

  void rec(Mask chosen, Mask covered, int size) {
    if (covered == full) {
      if (size < best_size) {
        best_size = size;
        best_mask = chosen;
      }
      return;
    }
    int uncovered = std::popcount(full & ~covered);
    int lb = (uncovered + max_closed_degree - 1) / max_closed_degree;
    if (size + lb >= best_size) return;
    int u = std::countr_zero(full & ~covered);
    // Some vertex of N[u] must be chosen; branch over them in index order.
    Mask cands = cov[u];
    while (cands) {
      int v = std::countr_zero(cands);
      cands &= cands - 1;
      rec(chosen | (Mask{1} << v), covered | cov[v], size + 1);
    }
  }
};

struct IndSearch {
  const std::vector<Mask>& adj;
  int best_size = 0;
  Mask best_mask = 0;

  void rec(Mask allowed, Mask chosen, int size) {
    if (size + std::popcount(allowed) <= best_size) return;
    if (!allowed) {
      if (size > best_size) {
        best_size = size;
        best_mask = chosen;
      }
      return;
    }
    int v = std::countr_zero(allowed);
    Mask bit = Mask{1} << v;
    rec(allowed & ~(adj[v] | bit), chosen | bit, size + 1);  // take v first
    rec(allowed & ~bit, chosen, size);
  }
};

}  // namespace

ExactResult domination_number(const Graph& g) {
  auto t0 = Clock::now();
  int n = g.vertex_count();
  if (n > 30) throw std::invalid_argument("domination_number: n <= 30");
  auto cov = closed_masks(g);
  Mask full = (n == 30) ? 0x3fffffffu : ((Mask{1} << n) - 1);

  ExactResult res;
  if (n <= 20) {
    int best = n + 1;
    Mask best_mask = full;
    Mask end = Mask{1} << n;
    for (Mask m = 0; m < end; ++m) {
      if (std::popcount(m) >= best) continue;
      Mask covered = 0;
      Mask rest = m;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        covered |= cov[v];
      }
      if (covered == full) {
        best = std::popcount(m);
        best_mask = m;
      }
    }
    res.value = best;
    res.witness = mask_to_verts(best_mask);
  } else {
    auto greedy = greedy_dominating_set(g);
    Mask gm = 0;
    for (int v : greedy) gm |= (Mask{1} << v);
    int maxdeg = 1;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.closed_degree(v));
    DomSearch s{cov, full, maxdeg, static_cast<int>(greedy.size()), gm};
    s.rec(0, 0, 0);
    res.value = s.best_size;
    res.witness = mask_to_verts(s.best_mask);
  }
  res.wall_seconds = seconds_since(t0);
  return res;
}

ExactResult independence_number(const Graph& g) {
  auto t0 = Clock::now();
  int n = g.vertex_count();
  if (n > 30) throw std::invalid_argument("independence_number: n <= 30");
  auto adj = open_masks(g);

  ExactResult res;
  if (n <= 20) {
    int best = -1;
    Mask best_mask = 0;
    Mask end = Mask{1} << n;
    for (Mask m = 0; m < end; ++m) {
      if (std::popcount(m) <= best) continue;
      bool ok = true;
      Mask rest = m;
      while (rest && ok) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (adj[v] & m) ok = false;
      }
      if (ok) {
        best = std::popcount(m);
        best_mask = m;
      }
    }
    res.value = best;
    res.witness = mask_to_verts(best_mask);
  } else {
    Mask full = (n == 30) ? 0x3fffffffu : ((Mask{1} << n) - 1);
    IndSearch s{adj};
    s.rec(full, 0, 0);
    res.value = s.best_size;
    res.witness = mask_to_verts(s.best_mask);
  }
  res.wall_seconds = seconds_since(t0);
  return res;
}

Rational volume_bound(const Graph& g) {
  int maxdeg = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    maxdeg = std::max(maxdeg, g.closed_degree(v));
  return Rational(g.vertex_count(), maxdeg);
}

std::vector<int> greedy_dominating_set(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  std::vector<int> picked;
  int num_covered = 0;
  while (num_covered < n) {
    int best_v = -1, best_gain = -1;
    for (int v = 0; v < n; ++v) {
      int gain = 0;
      for (int u : g.closed_neighborhood(v))
        if (!covered[u]) ++gain;
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    picked.push_back(best_v);
    for (int u : g.closed_neighborhood(best_v))
      if (!covered[u]) {
        covered[u] = 1;
        ++num_covered;
      }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& verts) {
  int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  for (int v : verts) {
    if (v < 0 || v >= n) throw std::out_of_range("is_dominating_set: vertex out of range");
    for (int u : g.closed_neighborhood(v)) covered[u] = 1;
  }
  for (int u = 0; u < n; ++u)
    if (!covered[u]) return false;
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (verts[a] == verts[b]) return false;
      if (g.adjacent(verts[a], verts[b])) return false;
    }
  return true;
}

bool is_neighborhood_regular(const Graph& g) {
  int d = g.closed_degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.closed_degree(v) != d) return false;
  return true;
}

}  // namespace coverbound
