#include "birkhoff/exact_linalg.hpp"

namespace birkhoff {

namespace {

// Bareiss fraction-free elimination. Destroys b; returns the determinant.
Integer bareiss_det(MatrixXz& b) {
    const Index n = b.rows();
    int sign = 1;
    Integer prev = 1;
    for (Index k = 0; k + 1 < n; ++k) {
        if (b(k, k) == 0) {
            Index p = -1;
            for (Index i = k + 1; i < n; ++i)
                if (b(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            b.row(k).swap(b.row(p));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                Integer t = b(i, j) * b(k, k) - b(i, k) * b(k, j);
                b(i, j) = t / prev;  // exact by Sylvester's identity
            }
            b(i, k) = 0;
        }
        prev = b(k, k);
    }
    return Integer(sign) * b(n - 1, n - 1);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw DomainError("parse_rational: cannot parse '" + text + "'");
    }
}

Integer det_exact(const MatrixXz& m) {
    if (m.rows() != m.cols()) throw DimensionError("det_exact: matrix is not square");
    if (m.rows() == 0) return 1;
    MatrixXz b = m;
    return bareiss_det(b);
}

Rational det_exact(const MatrixXq& m) {
    if (m.rows() != m.cols()) throw DimensionError("det_exact: matrix is not square");
    const Index n = m.rows();
    if (n == 0) return 1;
    // Clear each row's denominators, track the combined scale.
    MatrixXz b(n, n);
    Integer scale = 1;
    for (Index i = 0; i < n; ++i) {
        Integer l = 1;
        for (Index j = 0; j < n; ++j) l = lcm(l, Integer(denominator(m(i, j))));
        for (Index j = 0; j < n; ++j)
            b(i, j) = Integer(numerator(m(i, j))) * (l / Integer(denominator(m(i, j))));
        scale *= l;
    }
    return Rational(bareiss_det(b), scale);
}

VectorXq solve_exact(const MatrixXq& a, const VectorXq& b) {
    if (a.rows() != a.cols()) throw DimensionError("solve_exact: matrix is not square");
    if (a.rows() != b.size()) throw DimensionError("solve_exact: size mismatch");
    const Index n = a.rows();
    MatrixXq w(n, n + 1);
    w.leftCols(n) = a;
    w.col(n) = b;
    for (Index c = 0; c < n; ++c) {
        Index p = -1;
        for (Index i = c; i < n; ++i)
            if (w(i, c) != 0) { p = i; break; }
        if (p < 0) throw SingularMatrixError("solve_exact: singular matrix");
        w.row(c).swap(w.row(p));
        const Rational piv = w(c, c);
        for (Index i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            const Rational f = w(i, c) / piv;
            w.row(i) -= f * w.row(c);
            w(i, c) = 0;
        }
    }
    VectorXq x(n);
    for (Index i = 0; i < n; ++i) x(i) = w(i, n) / w(i, i);
    return x;
}

MatrixXq inverse_exact(const MatrixXq& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse_exact: matrix is not square");
    const Index n = a.rows();
    MatrixXq w(n, 2 * n);
    w.leftCols(n) = a;
    w.rightCols(n) = MatrixXq::Identity(n, n);
    for (Index c = 0; c < n; ++c) {
        Index p = -1;
        for (Index i = c; i < n; ++i)
            if (w(i, c) != 0) { p = i; break; }
        if (p < 0) throw SingularMatrixError("inverse_exact: singular matrix");
        w.row(c).swap(w.row(p));
        w.row(c) /= w(c, c);
        for (Index i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            w.row(i) -= w(i, c) * w.row(c);
        }
    }
    return w.rightCols(n);
}

Index rank_exact(const MatrixXq& a) {
    MatrixXq w = a;
    const Index rows = w.rows(), cols = w.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = -1;
        for (Index i = r; i < rows; ++i)
            if (w(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        w.row(r).swap(w.row(p));
        for (Index i = r + 1; i < rows; ++i) {
            if (w(i, c) == 0) continue;
            const Rational f = w(i, c) / w(r, c);
            w.row(i) -= f * w.row(r);
        }
        ++r;
    }
    return r;
}

Index rank_exact(const MatrixXz& a) { return rank_exact(to_rational(a)); }

HnfResult hnf(const MatrixXz& a) {
    const Index rows = a.rows(), cols = a.cols();
    HnfResult res;
    res.h = a;
    res.u = MatrixXz::Identity(rows, rows);
    MatrixXz& h = res.h;
    MatrixXz& u = res.u;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        // Reduce column c below row r to a single nonzero entry by gcd steps.
        for (;;) {
            Index p = -1;
            for (Index i = r; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                if (p < 0 || abs(h(i, c)) < abs(h(p, c))) p = i;
            }
            if (p < 0) break;
            if (p != r) {
                h.row(r).swap(h.row(p));
                u.row(r).swap(u.row(p));
            }
            bool clean = true;
            for (Index i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                const Integer q = h(i, c) / h(r, c);  // truncated division shrinks |h(i,c)|
                if (q != 0) {
                    h.row(i) -= q * h.row(r);
                    u.row(i) -= q * u.row(r);
                }
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.row(r) = -h.row(r);
            u.row(r) = -u.row(r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (Index i = 0; i < r; ++i) {
            if (h(i, c) == 0) continue;
            Integer q = h(i, c) / h(r, c);
            if (h(i, c) - q * h(r, c) < 0) q -= 1;  // floor division
            if (q != 0) {
                h.row(i) -= q * h.row(r);
                u.row(i) -= q * u.row(r);
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

MatrixXz integer_kernel(const MatrixXz& a) {
    // Row-reduce A^T; the transformation rows mapping to zero rows of the HNF
    // form a (saturated) basis of {x : A x = 0}.
    const HnfResult res = hnf(a.transpose().eval());
    const Index n = a.cols();
    MatrixXz kernel(n - res.rank, n);
    for (Index i = res.rank; i < n; ++i) kernel.row(i - res.rank) = res.u.row(i);
    return kernel;
}

std::optional<VectorXz> integer_solve(const MatrixXz& a, const VectorXz& b) {
    if (a.rows() != b.size()) throw DimensionError("integer_solve: size mismatch");
    // With U A^T = H, substituting x = U^T z turns A x = b into H^T z = b,
    // which column echelon form solves by forward substitution.
    const HnfResult res = hnf(a.transpose().eval());
    const Index k = a.cols();
    VectorXz z = VectorXz::Zero(k);
    for (Index i = 0; i < res.rank; ++i) {
        const Index row = res.pivot_cols[i];  // pivot position inside b
        Integer s = b(row);
        for (Index c = 0; c < i; ++c) s -= res.h(c, row) * z(c);
        if (s % res.h(i, row) != 0) return std::nullopt;
        z(i) = s / res.h(i, row);
    }
    VectorXz x = res.u.transpose() * z;
    if (a * x != b) return std::nullopt;  // consistency of the non-pivot rows
    return x;
}

MatrixXz saturate_row_lattice(const MatrixXz& a) {
    return integer_kernel(integer_kernel(a));
}

}  // namespace birkhoff
