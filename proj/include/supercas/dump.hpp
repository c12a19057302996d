// Matrix dump format: JSON object
//   {rows, cols, parities: [0|1,...], entries: [[r, c, "p/q"], ...]}
// with entries sorted by (r, c), 0-based indices, rationals in canonical
// "p/q" form ("p" when q = 1). Parities are those of the row space.
#pragma once

#include <string>

#include "supercas/supermatrix.hpp"

namespace supercas {

std::string dump_matrix_json(const SuperMatrix& m);

} // namespace supercas
