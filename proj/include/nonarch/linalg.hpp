#pragma once

#include <cstddef>
#include <vector>

#include "nonarch/field.hpp"

namespace nonarch {

/**
 * Exact dense linear algebra over K at desk scale.  Elimination picks the
 * minimal-valuation (largest absolute value) pivot in each column: with
 * exact scalars any nonzero pivot is correct, but the valuation-aware choice
 * keeps intermediate rationals small and mirrors how rank certificates are
 * stated over a valued field.
 */

/// rank of the row list (rows may have any common length)
std::size_t exact_rank(std::vector<std::vector<Scalar>> rows);

/// determinant of a square matrix; DomainError if not square
Scalar exact_det(std::vector<std::vector<Scalar>> a);

/// unique solution of a x = b; DomainError if a is singular or shapes differ
std::vector<Scalar> exact_solve(std::vector<std::vector<Scalar>> a,
                                std::vector<Scalar> b);

}  // namespace nonarch
