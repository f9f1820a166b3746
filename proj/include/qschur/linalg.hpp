#pragma once

#include "qschur/exact_poly.hpp"

#include <vector>

namespace qschur {

using BigMatrix = std::vector<std::vector<BigInt>>;

// Rank over Q by fraction-free (Bareiss) elimination. Rows may have different lengths;
// missing entries count as zero.
int rank(BigMatrix rows);
bool in_row_span(const BigMatrix& rows, const std::vector<BigInt>& v);

}  // namespace qschur
