#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "birkhoff/exact_linalg.hpp"
#include "birkhoff/slicing_basis.hpp"

using namespace birkhoff;

namespace {

MatrixXz random_int_matrix(std::mt19937& rng, Index rows, Index cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    MatrixXz m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

MatrixXq random_rat_matrix(std::mt19937& rng, Index rows, Index cols) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    MatrixXq m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = Rational(num(rng), den(rng));
    return m;
}

// Reference addition by big-integer cross-multiplication, reduced by gcd.
Rational brute_force_add(const Rational& a, const Rational& b) {
    const Integer num = Integer(numerator(a)) * Integer(denominator(b)) +
                        Integer(numerator(b)) * Integer(denominator(a));
    const Integer den = Integer(denominator(a)) * Integer(denominator(b));
    const Integer g = gcd(abs(num), den);
    return Rational(num / g, den / g);
}

}  // namespace

TEST_CASE("determinant of small fixed matrices") {
    CHECK(det_exact(MatrixXq::Identity(3, 3)) == 1);

    MatrixXq swap2(2, 2);
    swap2 << 0, 1, 1, 0;
    CHECK(det_exact(swap2) == -1);

    MatrixXz scaled(2, 2);
    scaled << 3, 1, 4, 2;
    CHECK(det_exact(scaled) == 2);

    MatrixXq rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(det_exact(rect), DimensionError);
}

TEST_CASE("determinant of the order-3 basis matrix form is a unit") {
    const SlicingBasis b = build_basis(3);
    const Integer d = det_exact(b.matrix_form());
    CHECK((d == 1 || d == -1));
}

TEST_CASE("determinant equals determinant of the transpose") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const Index n = 1 + trial % 5;
        const MatrixXq m = random_rat_matrix(rng, n, n);
        CHECK(det_exact(m) == det_exact(m.transpose().eval()));
    }
}

TEST_CASE("determinant is multiplicative on integer matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const Index n = 2 + trial % 4;
        const MatrixXz a = random_int_matrix(rng, n, n, -9, 9);
        const MatrixXz b = random_int_matrix(rng, n, n, -9, 9);
        CHECK(det_exact((a * b).eval()) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("hnf of the identity and of a diagonal already in form") {
    const MatrixXz id = MatrixXz::Identity(3, 3);
    HnfResult r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);
    CHECK(r.rank == 3);

    MatrixXz diag(2, 2);
    diag << 2, 0, 0, 3;
    r = hnf(diag);
    CHECK(r.h == diag);
    CHECK(r.u == MatrixXz::Identity(2, 2));
}

TEST_CASE("hnf defining identities on a worked example") {
    MatrixXz a(2, 2);
    a << 2, 4, 1, 3;
    const HnfResult r = hnf(a);
    CHECK(r.u * a == r.h);
    const Integer du = det_exact(r.u);
    CHECK((du == 1 || du == -1));
    CHECK(r.rank == 2);
    CHECK(r.h(0, 0) > 0);
    CHECK(r.h(1, 1) > 0);
    CHECK(r.h(1, 0) == 0);
    CHECK(r.h(0, 1) >= 0);
    CHECK(r.h(0, 1) < r.h(1, 1));
}

TEST_CASE("hnf identities hold on random integer matrices") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const Index rows = 1 + trial % 5;
        const Index cols = 1 + (trial / 2) % 5;
        const MatrixXz a = random_int_matrix(rng, rows, cols, -15, 15);
        const HnfResult r = hnf(a);
        CHECK(r.u * a == r.h);
        const Integer du = det_exact(r.u);
        CHECK((du == 1 || du == -1));
        CHECK(r.rank == rank_exact(a));
        // Echelon shape with positive pivots and reduced columns above them.
        for (Index i = 0; i < r.rank; ++i) {
            const Index c = r.pivot_cols[static_cast<size_t>(i)];
            CHECK(r.h(i, c) > 0);
            for (Index j = 0; j < c; ++j) CHECK(r.h(i, j) == 0);
            for (Index k = 0; k < i; ++k) {
                CHECK(r.h(k, c) >= 0);
                CHECK(r.h(k, c) < r.h(i, c));
            }
        }
        for (Index i = r.rank; i < rows; ++i) CHECK(r.h.row(i).isZero());
    }
}

TEST_CASE("solve_exact on fixed systems") {
    VectorXq b(2);
    b << 5, 7;
    CHECK(solve_exact(MatrixXq::Identity(2, 2), b) == b);

    const MatrixXq twice = Rational(2) * MatrixXq::Identity(2, 2);
    VectorXq ones(2);
    ones << 1, 1;
    const VectorXq x = solve_exact(twice, ones);
    CHECK(x(0) == Rational(1, 2));
    CHECK(x(1) == Rational(1, 2));

    MatrixXq singular(2, 2);
    singular << 1, 2, 2, 4;
    CHECK_THROWS_AS(solve_exact(singular, ones), SingularMatrixError);
}

TEST_CASE("solve_exact substitutes back on random invertible systems") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 30) {
        const Index n = 1 + done % 5;
        const MatrixXq a = random_rat_matrix(rng, n, n);
        if (det_exact(a) == 0) continue;
        const MatrixXq bmat = random_rat_matrix(rng, n, 1);
        const VectorXq b = bmat.col(0);
        const VectorXq x = solve_exact(a, b);
        CHECK(a * x == b);
        ++done;
    }
}

TEST_CASE("inverse_exact round trip") {
    std::mt19937 rng(43);
    int done = 0;
    while (done < 15) {
        const Index n = 1 + done % 4;
        const MatrixXq a = random_rat_matrix(rng, n, n);
        if (det_exact(a) == 0) continue;
        CHECK(a * inverse_exact(a) == MatrixXq::Identity(n, n));
        ++done;
    }
}

TEST_CASE("rational arithmetic agrees with brute-force cross-multiplication") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int trial = 0; trial < 10000; ++trial) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational sum = a + b;
        CHECK(sum == brute_force_add(a, b));
        CHECK(denominator(sum) > 0);
        CHECK(gcd(Integer(abs(numerator(sum))), Integer(denominator(sum))) == 1);
        CHECK(a - b == brute_force_add(a, -b));
        if (b != 0) CHECK((a / b) * b == a);
        CHECK(a * b == Rational(Integer(numerator(a)) * Integer(numerator(b)),
                                Integer(denominator(a)) * Integer(denominator(b))));
    }
}

TEST_CASE("integer_kernel is a saturated basis of the kernel") {
    MatrixXz a(1, 2);
    a << 2, 4;
    const MatrixXz k = integer_kernel(a);
    REQUIRE(k.rows() == 1);
    CHECK((a * k.transpose()).isZero());
    CHECK(content(k.row(0).transpose().eval()) == 1);  // (2,-1) up to sign

    MatrixXz b(2, 3);
    b << 1, 0, 1, 0, 1, 1;
    const MatrixXz kb = integer_kernel(b);
    REQUIRE(kb.rows() == 1);
    CHECK((b * kb.transpose()).isZero());
}

TEST_CASE("integer_solve finds solutions exactly when they exist") {
    MatrixXz a(1, 1);
    a << 2;
    VectorXz b(1);
    b << 4;
    auto x = integer_solve(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0) == 2);

    b << 3;
    CHECK(!integer_solve(a, b).has_value());

    // 3x + 5y = 1 has integer solutions.
    MatrixXz c(1, 2);
    c << 3, 5;
    VectorXz one(1);
    one << 1;
    auto xy = integer_solve(c, one);
    REQUIRE(xy.has_value());
    CHECK(c * *xy == one);

    // Inconsistent overdetermined system.
    MatrixXz d(2, 1);
    d << 1, 1;
    VectorXz rhs(2);
    rhs << 1, 2;
    CHECK(!integer_solve(d, rhs).has_value());
}

TEST_CASE("integer_solve on random solvable systems") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const Index rows = 1 + trial % 4;
        const Index cols = 1 + (trial / 3) % 4;
        const MatrixXz a = random_int_matrix(rng, rows, cols, -8, 8);
        const VectorXz x0 = random_int_matrix(rng, cols, 1, -5, 5).col(0);
        const VectorXz b = a * x0;
        auto x = integer_solve(a, b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("saturate_row_lattice recovers primitive generators") {
    MatrixXz a(1, 2);
    a << 2, 4;
    const MatrixXz sat = saturate_row_lattice(a);
    REQUIRE(sat.rows() == 1);
    // The saturation of span{(2,4)} is generated by (1,2) up to sign.
    CHECK(abs(sat(0, 0)) == 1);
    CHECK(abs(sat(0, 1)) == 2);

    MatrixXz id = MatrixXz::Identity(3, 3);
    const MatrixXz sat3 = saturate_row_lattice(id);
    CHECK(sat3.rows() == 3);
    const Integer d3 = det_exact(sat3);
    CHECK((d3 == 1 || d3 == -1));
}
