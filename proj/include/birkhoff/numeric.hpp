#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace birkhoff {

// Exact scalars. All geometry runs on these; no floating point anywhere.
using Integer  = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = DenseMatrix<Rational>;
using VectorXq = DenseVector<Rational>;
using MatrixXz = DenseMatrix<Integer>;
using VectorXz = DenseVector<Integer>;

using Index = Eigen::Index;
using IndexPair = std::pair<Index, Index>;

class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class SingularMatrixError : public std::domain_error {
public:
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

/// Requested slicing depth k that the engine does not support (only k <= 1 is).
class UnsupportedDepthError : public std::domain_error {
public:
    explicit UnsupportedDepthError(const std::string& what) : std::domain_error(what) {}
};

/// Slicing functional whose gcd over the direction lattice is not 1.
class NonPrimitiveFunctionalError : public std::domain_error {
public:
    explicit NonPrimitiveFunctionalError(const std::string& what) : std::domain_error(what) {}
};

/// An edge parallel to the slicing hyperplanes; carries the offending edge.
class GeneralPositionError : public std::domain_error {
public:
    GeneralPositionError(const std::string& what, IndexPair edge)
        : std::domain_error(what), edge_(edge) {}
    IndexPair edge() const { return edge_; }

private:
    IndexPair edge_;
};

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline bool is_integral(const VectorXq& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!is_integral(v(i))) return false;
    return true;
}

inline Integer to_integer(const Rational& q) {
    if (!is_integral(q)) throw DomainError("to_integer: " + q.str() + " is not an integer");
    return numerator(q);
}

inline VectorXz to_integer(const VectorXq& v) {
    VectorXz out(v.size());
    for (Index i = 0; i < v.size(); ++i) out(i) = to_integer(v(i));
    return out;
}

/// Integer-to-rational widening for any dense expression.
template <typename Derived>
auto to_rational(const Eigen::MatrixBase<Derived>& m) {
    return m.template cast<Rational>().eval();
}

/// Common denominator of a rational vector's entries.
inline Integer common_denominator(const VectorXq& v) {
    Integer l = 1;
    for (Index i = 0; i < v.size(); ++i) l = lcm(l, Integer(denominator(v(i))));
    return l;
}

/// Scale a rational vector to a primitive integer vector with the same direction.
/// The zero vector maps to the zero vector.
inline VectorXz primitive_direction(const VectorXq& v) {
    const Integer l = common_denominator(v);
    VectorXz out(v.size());
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) {
        out(i) = Integer(numerator(v(i))) * (l / Integer(denominator(v(i))));
        g = gcd(g, out(i));
    }
    if (g > 1)
        for (Index i = 0; i < v.size(); ++i) out(i) /= g;
    return out;
}

inline Integer content(const VectorXz& v) {
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) g = gcd(g, v(i));
    return g;
}

/// Parse "p", "-p", or "p/q" into an exact rational.
Rational parse_rational(const std::string& text);

/// Canonical exact rendering: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

/// Row-major flattening of an n x m matrix into a length-nm vector.
template <typename Scalar>
DenseVector<Scalar> vectorize_rows(const DenseMatrix<Scalar>& m) {
    DenseVector<Scalar> v(m.rows() * m.cols());
    Index k = 0;
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) v(k++) = m(i, j);
    return v;
}

/// Inverse of vectorize_rows.
template <typename Scalar>
DenseMatrix<Scalar> unvectorize_rows(const DenseVector<Scalar>& v, Index rows, Index cols) {
    if (v.size() != rows * cols) throw DimensionError("unvectorize_rows: size mismatch");
    DenseMatrix<Scalar> m(rows, cols);
    Index k = 0;
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = v(k++);
    return m;
}

}  // namespace birkhoff
