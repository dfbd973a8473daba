#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "coverbound/graph.hpp"
#include "coverbound/set_family.hpp"
#include "coverbound/sym_matrix.hpp"

namespace coverbound {

// A real vector indexed by the members of a truncated subset family.
struct MomentVector {
  std::shared_ptr<const SetFamily> family;
  std::vector<double> values;  // values[p] belongs to family->subset(p)
};

MomentVector make_moment_vector(std::shared_ptr<const SetFamily> family,
                                std::vector<double> values);

// y(J), with unions outside the family reading as 0.
double moment_value(const MomentVector& y, std::uint32_t mask);

// chi^S over the family: 1 on subsets of S, else 0. Multiplicative on unions:
// chi^S(J u J') = chi^S(J) chi^S(J').
MomentVector char_vector(std::uint32_t set_mask, std::shared_ptr<const SetFamily> family);

// psi^S over the family: (-1)^{|J'\S|} on supersets J' of S, else 0. Dual to
// the characteristic vectors under the pointwise pairing.
MomentVector dual_basis_vector(std::uint32_t set_mask,
                               std::shared_ptr<const SetFamily> family);

// [M_t(y)]_{J,J'} = y(J u J'), rows/cols the family members of size <= t.
// pre: family max_size >= min(2t, ground).
SymMatrix moment_matrix(const MomentVector& y, int t);

// [M^a_t(y)]_{J,J'} = sum_i a_i y(J u J' u {i}) - b y(J u J').
// pre: family max_size >= min(2t+2, ground); predicate all.
SymMatrix localizing_matrix(const MomentVector& y, std::span<const double> a, double b,
                            int t);

// Localizing matrix for "element of nbhd_mask present at weight 1, rhs 1":
// sum_{i in nbhd} y(J u J' u {i}) - y(J u J'). Restricted predicates allowed;
// non-member unions read as 0.
SymMatrix neighborhood_localizing_matrix(const MomentVector& y, std::uint32_t nbhd_mask,
                                         int t);

// Same with nbhd = closed neighborhood of vertex j: the "j is dominated" row.
SymMatrix domination_localizing_matrix(const MomentVector& y, const Graph& g, int j,
                                       int t);

// Coefficients alpha_J with y = sum_J alpha_J chi^J over the full power set
// (Moebius inversion over supersets). y is in the cone spanned by the chi^J
// iff all coefficients are >= 0; equivalent to M_n(y) being PSD.
// pre: predicate all, max_size == ground, ground <= 12.
std::vector<double> cone_coefficients(const MomentVector& y);

}  // namespace coverbound
