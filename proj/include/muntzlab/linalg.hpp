#pragma once

#include <Eigen/Dense>

#include "muntzlab/rational.hpp"

namespace muntzlab {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Exact determinant by fraction-free (Bareiss) elimination: row denominators
/// are cleared first, then the integer recurrence runs with exact divisions.
/// Pivots are the first nonzero entry of each column; row swaps flip the sign.
/// The 0x0 determinant is 1, so bordered ratios degenerate gracefully.
/// Throws std::invalid_argument on non-square input.
Rational bareiss_determinant(const RatMatrix& m);

/// Exact solution of a nonsingular square system a*x = b. The result is
/// re-substituted into the system before returning; a mismatch (which would
/// indicate a broken elimination) throws std::logic_error. Singular input
/// throws std::domain_error, dimension mismatches std::invalid_argument.
RatVector solve_exact(const RatMatrix& a, const RatVector& b);

/// binary64 Gaussian-elimination determinant with partial pivoting.
double float_determinant(const Eigen::MatrixXd& m);

/// Entry-wise nearest-binary64 image of an exact matrix.
Eigen::MatrixXd to_double(const RatMatrix& m);

}  // namespace muntzlab
