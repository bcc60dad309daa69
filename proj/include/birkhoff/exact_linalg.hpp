#pragma once

#include <optional>
#include <vector>

#include "birkhoff/numeric.hpp"

namespace birkhoff {

/// Exact determinant of a square rational matrix. Rows are scaled to a common
/// integer denominator and the integer determinant is computed fraction-free.
Rational det_exact(const MatrixXq& m);

/// Exact determinant of a square integer matrix (Bareiss elimination).
Integer det_exact(const MatrixXz& m);

/// Expression-friendly entry point: evaluates and dispatches on the scalar.
template <typename Derived>
auto det_exact(const Eigen::MatrixBase<Derived>& m) {
    if constexpr (std::is_same_v<typename Derived::Scalar, Integer>)
        return det_exact(MatrixXz(m));
    else
        return det_exact(MatrixXq(m));
}

/// Exact solution of A x = b for invertible A. Throws SingularMatrixError.
VectorXq solve_exact(const MatrixXq& a, const VectorXq& b);

/// Exact inverse via Gauss-Jordan. Throws SingularMatrixError.
MatrixXq inverse_exact(const MatrixXq& a);

/// Rank over the rationals.
Index rank_exact(const MatrixXq& a);
Index rank_exact(const MatrixXz& a);

/// Row-style Hermite normal form H = U * A with U unimodular (|det U| = 1).
/// Pivots are positive, entries above each pivot are reduced into [0, pivot),
/// zero rows sink to the bottom. pivot_cols[i] is the pivot column of row i.
struct HnfResult {
    MatrixXz h;
    MatrixXz u;
    Index rank = 0;
    std::vector<Index> pivot_cols;
};

HnfResult hnf(const MatrixXz& a);

/// Basis (as rows) of the lattice {x in Z^n : A x = 0}. The result is
/// saturated: it also spans the rational kernel of A.
MatrixXz integer_kernel(const MatrixXz& a);

/// One integer solution of A x = b, if any exists.
std::optional<VectorXz> integer_solve(const MatrixXz& a, const VectorXz& b);

/// Basis (as rows) of span_Q(rows of A) intersected with Z^cols — the
/// saturation of the row lattice of A.
MatrixXz saturate_row_lattice(const MatrixXz& a);

}  // namespace birkhoff
