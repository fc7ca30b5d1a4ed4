#ifndef SEMITOP_SMITH_HPP_
#define SEMITOP_SMITH_HPP_

#include <cstdint>
#include <vector>

#include "semitop/group_presentation.hpp"

namespace semitop {

//! Diagonal of the Smith normal form of an integer matrix: non-negative
//! entries d_1 | d_2 | ... padded with zeros up to min(rows, cols).
//! Throws std::overflow_error if intermediate values leave int64 range.
std::vector<int64_t>
smith_diagonal(std::vector<std::vector<int64_t>> matrix);

//! Elementary divisors of the abelianization of <ngens | relators>:
//! the diagonal entries > 1 in divisibility order followed by one 0 per
//! free factor.
std::vector<int64_t> abelian_invariants(size_t ngens,
                                        std::vector<GroupWord> const& relators);

}  // namespace semitop
#endif  // SEMITOP_SMITH_HPP_
