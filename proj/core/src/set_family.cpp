#include "coverbound/set_family.hpp"

namespace coverbound {

template <typename PairOk>
SetFamily SetFamily::enumerate(int ground, int max_size, FamilyPredicate pred,
                               std::size_t cap, PairOk&& pair_ok) {
  if (ground < 1 || ground > 30)
    throw std::invalid_argument("SetFamily: ground size in [1,30]");
  if (max_size < 0 || max_size > ground)
    throw std::invalid_argument("SetFamily: max_size in [0,ground]");

  SetFamily fam;
  fam.ground_ = ground;
  fam.max_size_ = max_size;
  fam.predicate_ = pred;
  fam.prefix_.assign(static_cast<std::size_t>(max_size) + 1, 0);

  auto push = [&](std::uint32_t mask) {
    if (fam.members_.size() >= cap)
      throw FamilyCapError("SetFamily: family size exceeds cap of " + std::to_string(cap));
    fam.index_.emplace(mask, static_cast<int>(fam.members_.size()));
    fam.members_.push_back(mask);
  };

  // Per cardinality, DFS over increasing elements emits lexicographic order.
  // Pair predicates are symmetric and subsets are built element by element,
  // so pruning a prefix prunes all its extensions (downward closure).
  std::vector<int> chosen;
  int k = 0;
  auto rec = [&](auto&& self, int from, std::uint32_t cur) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      push(cur);
      return;
    }
    int need = k - static_cast<int>(chosen.size());
    for (int e = from; e <= ground - need; ++e) {
      bool ok = true;
      for (int prev : chosen)
        if (!pair_ok(prev, e)) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(e);
      self(self, e + 1, cur | (std::uint32_t{1} << e));
      chosen.pop_back();
    }
  };
  for (k = 0; k <= max_size; ++k) {
    rec(rec, 0, 0);
    fam.prefix_[k] = fam.members_.size();
  }
  return fam;
}

SetFamily SetFamily::all_subsets(int ground, int max_size, std::size_t cap) {
  return enumerate(ground, max_size, FamilyPredicate::All, cap,
                   [](int, int) { return true; });
}

SetFamily SetFamily::independent_sets(const Graph& g, int max_size, std::size_t cap) {
  return enumerate(g.vertex_count(), max_size, FamilyPredicate::Independent, cap,
                   [&g](int a, int b) { return !g.adjacent(a, b); });
}

SetFamily SetFamily::separated_sets(const FiniteMetricSpace& space, double eps,
                                    int max_size, std::size_t cap) {
  if (!(eps >= 0)) throw std::invalid_argument("SetFamily: eps must be >= 0");
  return enumerate(space.point_count(), max_size, FamilyPredicate::Separated, cap,
                   [&space, eps](int a, int b) { return space.distance(a, b) > eps; });
}

}  // namespace coverbound
