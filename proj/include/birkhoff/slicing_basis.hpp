#pragma once

#include <vector>

#include "birkhoff/numeric.hpp"

namespace birkhoff {

class PermutationMatrix;
class CycleMatrix;

/// The n x n slicing matrix V_n: zero first row and first column, and
/// a(i,j) = j * n^(i-1) elsewhere (0-based indices; in 1-based terms
/// (j-1) * n^(i-2)). V_1 is the 1 x 1 matrix (1). No edge direction of B_n
/// is orthogonal to V_n, so hyperplanes normal to it slice every edge.
class SlicingVector {
public:
    explicit SlicingVector(int n);

    int order() const { return n_; }
    Integer entry(int i, int j) const;  // 0-based
    MatrixXz matrix() const;
    VectorXz vectorized() const { return vectorize_rows(matrix()); }

    /// Entrywise inner product with a cycle matrix.
    Integer inner_product(const CycleMatrix& m) const;

private:
    int n_;
};

inline SlicingVector slicing_vector(int n) { return SlicingVector(n); }

/// The ordered change-of-basis for R^(n^2): first the 2n-1 elementary
/// matrices with a single 1 in the top row (left to right) or left column
/// (top to bottom, corner excluded), then for each (i,j) with i,j >= 2 and
/// (i,j) != (2,2), row-major, the matrix with -a(i,j) at (2,2) and 1 at
/// (i,j), and finally the offset matrix E(2,2). All but the offset span the
/// hyperplane orthogonal to V_n; the offset has inner product 1 with V_n.
class SlicingBasis {
public:
    int order() const { return n_; }
    const std::vector<MatrixXz>& vectors() const { return vectors_; }
    /// n^2 x n^2 matrix whose k-th row is the row-major vectorization of the
    /// k-th basis matrix.
    const MatrixXz& matrix_form() const { return matrix_form_; }
    /// Position of the offset vector (always last).
    Index offset_index() const { return static_cast<Index>(vectors_.size()) - 1; }

private:
    SlicingBasis(int n, std::vector<MatrixXz> vectors, MatrixXz matrix_form)
        : n_(n), vectors_(std::move(vectors)), matrix_form_(std::move(matrix_form)) {}
    int n_;
    std::vector<MatrixXz> vectors_;
    MatrixXz matrix_form_;

    friend SlicingBasis build_basis(int n);
};

SlicingBasis build_basis(int n);  // n >= 2

/// True iff |det| of the basis matrix form is 1, computed exactly.
bool check_unimodular(const SlicingBasis& b);

/// Coordinates x of a point with respect to the basis: matrix_form^T x =
/// vec(p), vec row-major. Integral points get integral coordinates.
VectorXq to_new_coordinates(const SlicingBasis& b, const VectorXq& point);
VectorXz to_new_coordinates(const SlicingBasis& b, const PermutationMatrix& p);

/// Inverse of to_new_coordinates.
VectorXq from_new_coordinates(const SlicingBasis& b, const VectorXq& coords);

/// V_n . P = sum_i a(i, sigma(i)): the offset coordinate of the transformed
/// vertex, and the integer slice level the vertex lands on.
Integer slicing_coordinate(const SlicingVector& v, const PermutationMatrix& p);

/// True iff every edge direction has a nonzero component along the given
/// coordinate axis. Throws DomainError on a degenerate (zero-length) edge.
bool is_1_general_position(const std::vector<VectorXq>& vertices,
                           const std::vector<IndexPair>& edges, Index axis);

struct NonOrthogonalityReport {
    bool pass = false;
    long cycle_count = 0;
    Integer min_abs_inner_product;  // over all cycles
};

/// Exhaustively checks V_n . M != 0 over every cycle matrix M of K_{n,n}.
NonOrthogonalityReport verify_edge_nonorthogonality(int n);

}  // namespace birkhoff
