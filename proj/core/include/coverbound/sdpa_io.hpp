#pragma once

#include <iosfwd>
#include <string>

#include "coverbound/sdp_problem.hpp"

namespace coverbound {

// SDPA sparse format (.dat-s): comments, m, nblocks, block structure,
// objective row, then "matno blkno i j value" entries (1-based, upper
// triangle). The format's standard form is a minimization with
// X = sum_i x_i F_i - F0, so the constant block is written negated. Flagged
// variables go into one trailing diagonal block; a max-sense objective is
// written negated with a comment saying so.
void write_sdpa(const SdpProblem& p, std::ostream& out);
void write_sdpa_file(const SdpProblem& p, const std::string& path);

}  // namespace coverbound
