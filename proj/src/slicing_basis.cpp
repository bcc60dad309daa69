#include "birkhoff/slicing_basis.hpp"

#include "birkhoff/combinatorics.hpp"
#include "birkhoff/exact_linalg.hpp"

namespace birkhoff {

SlicingVector::SlicingVector(int n) : n_(n) {
    if (n < 1) throw DomainError("SlicingVector: order must be >= 1");
}

Integer SlicingVector::entry(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw DimensionError("SlicingVector::entry: index out of range");
    if (n_ == 1) return 1;
    if (i == 0 || j == 0) return 0;
    Integer p = 1;
    for (int k = 1; k < i; ++k) p *= n_;
    return Integer(j) * p;
}

MatrixXz SlicingVector::matrix() const {
    MatrixXz m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = entry(i, j);
    return m;
}

Integer SlicingVector::inner_product(const CycleMatrix& m) const {
    if (m.order() != n_) throw DimensionError("inner_product: order mismatch");
    Integer s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (m.entry(i, j) != 0) s += Integer(m.entry(i, j)) * entry(i, j);
    return s;
}

SlicingBasis build_basis(int n) {
    if (n < 2) throw DomainError("build_basis: order must be >= 2");
    const SlicingVector v(n);
    std::vector<MatrixXz> vectors;
    vectors.reserve(static_cast<size_t>(n) * n);
    auto elementary = [n](int i, int j) {
        MatrixXz e = MatrixXz::Zero(n, n);
        e(i, j) = 1;
        return e;
    };
    // Top row, left to right.
    for (int j = 0; j < n; ++j) vectors.push_back(elementary(0, j));
    // Left column, top to bottom, corner excluded.
    for (int i = 1; i < n; ++i) vectors.push_back(elementary(i, 0));
    // Two-entry vectors: -a(i,j) at (2,2), +1 at (i,j); row-major, (2,2) excluded.
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (i == 1 && j == 1) continue;
            MatrixXz e = MatrixXz::Zero(n, n);
            e(1, 1) = -v.entry(i, j);
            e(i, j) = 1;
            vectors.push_back(std::move(e));
        }
    // The offset vector.
    vectors.push_back(elementary(1, 1));

    MatrixXz form(n * n, n * n);
    for (size_t k = 0; k < vectors.size(); ++k)
        form.row(static_cast<Index>(k)) = vectorize_rows(vectors[k]).transpose();
    return SlicingBasis(n, std::move(vectors), std::move(form));
}

bool check_unimodular(const SlicingBasis& b) {
    const Integer d = det_exact(b.matrix_form());
    return d == 1 || d == -1;
}

VectorXq to_new_coordinates(const SlicingBasis& b, const VectorXq& point) {
    const Index d = b.matrix_form().rows();
    if (point.size() != d) throw DimensionError("to_new_coordinates: dimension mismatch");
    return solve_exact(to_rational(b.matrix_form().transpose().eval()), point);
}

VectorXz to_new_coordinates(const SlicingBasis& b, const PermutationMatrix& p) {
    if (p.order() != b.order()) throw DimensionError("to_new_coordinates: order mismatch");
    return to_integer(to_new_coordinates(b, to_rational(p.vectorized())));
}

VectorXq from_new_coordinates(const SlicingBasis& b, const VectorXq& coords) {
    if (coords.size() != b.matrix_form().rows())
        throw DimensionError("from_new_coordinates: dimension mismatch");
    return to_rational(b.matrix_form().transpose().eval()) * coords;
}

Integer slicing_coordinate(const SlicingVector& v, const PermutationMatrix& p) {
    if (v.order() != p.order()) throw DimensionError("slicing_coordinate: order mismatch");
    Integer s = 0;
    for (int i = 0; i < p.order(); ++i) s += v.entry(i, p.column_of_row(i));
    return s;
}

bool is_1_general_position(const std::vector<VectorXq>& vertices,
                           const std::vector<IndexPair>& edges, Index axis) {
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= static_cast<Index>(vertices.size()) ||
            b >= static_cast<Index>(vertices.size()))
            throw DimensionError("is_1_general_position: edge index out of range");
        const VectorXq& va = vertices[static_cast<size_t>(a)];
        const VectorXq& vb = vertices[static_cast<size_t>(b)];
        if (axis < 0 || axis >= va.size())
            throw DimensionError("is_1_general_position: axis out of range");
        if (va == vb) throw DomainError("is_1_general_position: degenerate edge");
        if (va(axis) == vb(axis)) return false;
    }
    return true;
}

NonOrthogonalityReport verify_edge_nonorthogonality(int n) {
    if (n < 2) throw DomainError("verify_edge_nonorthogonality: order must be >= 2");
    const SlicingVector v(n);
    NonOrthogonalityReport report;
    report.pass = true;
    bool first = true;
    for (const CycleMatrix& m : enumerate_edge_directions(n)) {
        const Integer ip = v.inner_product(m);
        ++report.cycle_count;
        const Integer a = abs(ip);
        if (first || a < report.min_abs_inner_product) report.min_abs_inner_product = a;
        first = false;
        if (ip == 0) report.pass = false;
    }
    return report;
}

}  // namespace birkhoff
