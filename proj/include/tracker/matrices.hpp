#pragma once

#include <iosfwd>
#include <string>

#include "tracker/types.hpp"

namespace tracker {

// Tridiagonal random-walk family over states 0..max_state: interior rows hold
// [eps, 1-2*eps, eps] around the diagonal, boundary rows [1-eps, eps].
// Requires 0 <= eps <= 0.5; eps = 0 yields the identity.
TransitionMatrix tridiagonal_eps(int max_state, double eps);

// Fixed 20-state banded family used by the larger experiment suite. The first
// three and last two rows are pinned; interior rows slide the band
// [.3 .1 .2 .1 .2 .1] one column per row, aligned so that row 17 carries the
// full band ending in the last column (rows 18 and 19 fold the overflow into
// the final entry).
TransitionMatrix banded20();

// Parses a matrix from plain text: one row per line, whitespace-separated
// decimals, '#' starts a comment line. Throws std::invalid_argument with the
// offending row/entry named.
TransitionMatrix load_matrix(std::istream& in);
TransitionMatrix load_matrix_file(const std::string& path);

// Writes the matrix in the same plain-text format.
void save_matrix(std::ostream& out, const TransitionMatrix& matrix);

}  // namespace tracker
