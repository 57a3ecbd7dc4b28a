#ifndef JF_LINALG_HPP
#define JF_LINALG_HPP

#include <optional>
#include <vector>

#include "jf/rational.hpp"

namespace jf {

using RatRow = std::vector<Rational>;

struct NullspaceResult {
    // Primitive integer vectors (content 1, first nonzero entry positive),
    // one per free column, free columns in ascending order.
    std::vector<RatRow> basis;
    i64 rank = 0;
};

// Kernel of the row system over the rationals.  Rows are cleared to integers,
// reduced by fraction-free elimination (exact divisions only), and the kernel
// is read off deterministically: pivot column = first column of maximal
// support among the remaining rows.
NullspaceResult nullspace(std::vector<RatRow> rows, std::size_t ncols);

// Unique solution of a square system, or nullopt when singular.
std::optional<RatRow> solve_square(std::vector<RatRow> a, RatRow b);

} // namespace jf

#endif
