#include "coverbound/moment.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace coverbound {

namespace {

void check_vector(const MomentVector& y) {
  if (!y.family) throw std::invalid_argument("MomentVector: null family");
  if (y.values.size() != y.family->size())
    throw std::invalid_argument("MomentVector: value count does not match family");
}

void check_ground_mask(const SetFamily& fam, std::uint32_t mask) {
  std::uint32_t ground_mask =
      (fam.ground_size() == 30) ? 0x3fffffffu : ((std::uint32_t{1} << fam.ground_size()) - 1);
  if (mask & ~ground_mask)
    throw std::invalid_argument("set mask contains elements outside the ground set");
}

int effective_entry_cap(const SetFamily& fam, int t, int extra) {
  // Entries use unions of two size-<=t members plus `extra` singletons.
  return std::min(2 * t + extra, fam.ground_size());
}

}  // namespace

MomentVector make_moment_vector(std::shared_ptr<const SetFamily> family,
                                std::vector<double> values) {
  MomentVector y{std::move(family), std::move(values)};
  check_vector(y);
  return y;
}

double moment_value(const MomentVector& y, std::uint32_t mask) {
  int p = y.family->index_of(mask);
  return p < 0 ? 0.0 : y.values[static_cast<std::size_t>(p)];
}

MomentVector char_vector(std::uint32_t set_mask, std::shared_ptr<const SetFamily> family) {
  if (!family) throw std::invalid_argument("char_vector: null family");
  check_ground_mask(*family, set_mask);
  MomentVector y{std::move(family), {}};
  y.values.resize(y.family->size());
  for (std::size_t p = 0; p < y.family->size(); ++p)
    y.values[p] = ((y.family->subset(p) & ~set_mask) == 0) ? 1.0 : 0.0;
  return y;
}

MomentVector dual_basis_vector(std::uint32_t set_mask,
                               std::shared_ptr<const SetFamily> family) {
  if (!family) throw std::invalid_argument("dual_basis_vector: null family");
  // Only dual to the characteristic basis over the untruncated power set.
  if (family->predicate() != FamilyPredicate::All ||
      family->max_size() != family->ground_size())
    throw std::invalid_argument("dual_basis_vector: family must be the full power set");
  check_ground_mask(*family, set_mask);
  MomentVector y{std::move(family), {}};
  y.values.resize(y.family->size());
  for (std::size_t p = 0; p < y.family->size(); ++p) {
    std::uint32_t member = y.family->subset(p);
    if (set_mask & ~member) {
      y.values[p] = 0.0;
    } else {
      int extra = std::popcount(member & ~set_mask);
      y.values[p] = (extra % 2 == 0) ? 1.0 : -1.0;
    }
  }
  return y;
}

SymMatrix moment_matrix(const MomentVector& y, int t) {
  check_vector(y);
  const SetFamily& fam = *y.family;
  if (t < 0) throw std::invalid_argument("moment_matrix: t >= 0");
  if (fam.max_size() < effective_entry_cap(fam, t, 0))
    throw std::invalid_argument("moment_matrix: family max_size below 2t");
  int rows = static_cast<int>(fam.prefix_size(std::min(t, fam.max_size())));
  SymMatrix m(rows);
  for (int p = 0; p < rows; ++p)
    for (int q = p; q < rows; ++q)
      m.set(p, q, moment_value(y, fam.subset(p) | fam.subset(q)));
  return m;
}

namespace {

SymMatrix localizing_common(const MomentVector& y, std::span<const double> a, double b,
                            int t) {
  const SetFamily& fam = *y.family;
  if (t < 0) throw std::invalid_argument("localizing_matrix: t >= 0");
  if (a.size() != static_cast<std::size_t>(fam.ground_size()))
    throw std::invalid_argument("localizing_matrix: coefficient row length mismatch");
  if (fam.max_size() < effective_entry_cap(fam, t, 2))
    throw std::invalid_argument("localizing_matrix: family max_size below 2t+2");
  int rows = static_cast<int>(fam.prefix_size(std::min(t, fam.max_size())));
  SymMatrix m(rows);
  for (int p = 0; p < rows; ++p)
    for (int q = p; q < rows; ++q) {
      std::uint32_t u = fam.subset(p) | fam.subset(q);
      double acc = -b * moment_value(y, u);
      for (int i = 0; i < fam.ground_size(); ++i)
        if (a[static_cast<std::size_t>(i)] != 0.0)
          acc += a[static_cast<std::size_t>(i)] *
                 moment_value(y, u | (std::uint32_t{1} << i));
      m.set(p, q, acc);
    }
  return m;
}

}  // namespace

SymMatrix localizing_matrix(const MomentVector& y, std::span<const double> a, double b,
                            int t) {
  check_vector(y);
  if (y.family->predicate() != FamilyPredicate::All)
    throw std::invalid_argument("localizing_matrix: needs the unrestricted family");
  return localizing_common(y, a, b, t);
}

SymMatrix neighborhood_localizing_matrix(const MomentVector& y, std::uint32_t nbhd_mask,
                                         int t) {
  check_vector(y);
  check_ground_mask(*y.family, nbhd_mask);
  std::vector<double> a(static_cast<std::size_t>(y.family->ground_size()), 0.0);
  for (int i = 0; i < y.family->ground_size(); ++i)
    if (nbhd_mask & (std::uint32_t{1} << i)) a[static_cast<std::size_t>(i)] = 1.0;
  return localizing_common(y, a, 1.0, t);
}

SymMatrix domination_localizing_matrix(const MomentVector& y, const Graph& g, int j,
                                       int t) {
  check_vector(y);
  if (g.vertex_count() != y.family->ground_size())
    throw std::invalid_argument("domination_localizing_matrix: graph/family size mismatch");
  return neighborhood_localizing_matrix(y, g.closed_neighborhood_mask(j), t);
}

std::vector<double> cone_coefficients(const MomentVector& y) {
  check_vector(y);
  const SetFamily& fam = *y.family;
  if (fam.predicate() != FamilyPredicate::All || fam.max_size() != fam.ground_size())
    throw std::invalid_argument("cone_coefficients: needs the full power set");
  if (fam.ground_size() > 12)
    throw std::invalid_argument("cone_coefficients: ground size <= 12");
  int n = fam.ground_size();
  std::size_t total = std::size_t{1} << n;
  // alpha[J] = sum_{J' >= J} (-1)^{|J'\J|} y(J'), via one pass per element.
  std::vector<double> alpha(total);
  for (std::size_t m = 0; m < total; ++m)
    alpha[m] = y.values[static_cast<std::size_t>(fam.index_of(static_cast<std::uint32_t>(m)))];
  for (int b = 0; b < n; ++b) {
    std::uint32_t bit = std::uint32_t{1} << b;
    for (std::uint32_t m = 0; m < total; ++m)
      if (!(m & bit)) alpha[m] -= alpha[m | bit];
  }
  std::vector<double> out(fam.size());
  for (std::size_t p = 0; p < fam.size(); ++p) out[p] = alpha[fam.subset(p)];
  return out;
}

}  // namespace coverbound
