#pragma once

#include <vector>

#include "birkhoff/numeric.hpp"

namespace birkhoff {

class SlicingVector;

/// A vertex of the Birkhoff polytope B_n, stored as the permutation sigma
/// with sigma[i] = column of the 1 in row i (0-based).
class PermutationMatrix {
public:
    explicit PermutationMatrix(std::vector<int> sigma);
    static PermutationMatrix identity(int n);

    int order() const { return static_cast<int>(sigma_.size()); }
    int column_of_row(int i) const { return sigma_[i]; }
    const std::vector<int>& sigma() const { return sigma_; }

    MatrixXz matrix() const;
    VectorXz vectorized() const;  // row-major, length n^2

    friend bool operator==(const PermutationMatrix& a, const PermutationMatrix& b) {
        return a.sigma_ == b.sigma_;
    }

private:
    std::vector<int> sigma_;
};

/// A (-1,0,1) matrix encoding one directed simple cycle in K_{n,n}:
/// +1 at (i,j) is the edge u_i -> v_j, -1 the edge v_j -> u_i. These are
/// exactly the edge directions of B_n.
class CycleMatrix {
public:
    explicit CycleMatrix(MatrixXz entries);

    /// Build from signed positions (row, col, sign). Validates as above.
    static CycleMatrix from_signed_positions(
        int n, const std::vector<std::tuple<int, int, int>>& elements);

    int order() const { return static_cast<int>(m_.rows()); }
    const MatrixXz& matrix() const { return m_; }
    int entry(int i, int j) const { return static_cast<int>(m_(i, j)); }
    VectorXz vectorized() const { return vectorize_rows(m_); }

    CycleMatrix negated() const;

    friend bool operator==(const CycleMatrix& a, const CycleMatrix& b) {
        return a.m_ == b.m_;
    }

private:
    struct Unchecked {};
    CycleMatrix(MatrixXz entries, Unchecked) : m_(std::move(entries)) {}
    MatrixXz m_;

    friend std::vector<CycleMatrix> enumerate_edge_directions(int n);
};

/// True iff d is a valid cycle matrix (used by adjacency and validation).
bool is_cycle_matrix(const MatrixXz& d);

/// One element of a Birkhoff cycle: a position in V_n, the sign inherited
/// from the cycle matrix, and the V_n value at that position.
struct CycleElement {
    int row;        // 0-based
    int col;        // 0-based
    int sign;       // +1 or -1
    Integer value;  // entry of V_n at (row, col)
};

/// The sequence of V_n entries along one cycle matrix, signs included.
class BirkhoffCycle {
public:
    BirkhoffCycle(int n, std::vector<CycleElement> elements)
        : n_(n), elements_(std::move(elements)) {}

    int order() const { return n_; }
    const std::vector<CycleElement>& elements() const { return elements_; }

private:
    int n_;
    std::vector<CycleElement> elements_;
};

/// All n! vertices of B_n in lexicographic order of sigma. n >= 1.
std::vector<PermutationMatrix> enumerate_vertices(int n);

/// True iff P - Q is a single directed simple cycle of K_{n,n}, i.e. iff the
/// vertices P and Q are adjacent on B_n.
bool are_adjacent(const PermutationMatrix& p, const PermutationMatrix& q);

/// Every directed simple cycle of K_{n,n} as a CycleMatrix, each exactly
/// once, in a deterministic canonical order (lowest row on the cycle first,
/// then depth-first with ascending neighbors). Both orientations appear.
std::vector<CycleMatrix> enumerate_edge_directions(int n);

/// Read the entries of v along the nonzero positions of m, starting from the
/// maximal (bottom-rightmost) element and following the cycle.
BirkhoffCycle birkhoff_cycle(const SlicingVector& v, const CycleMatrix& m);

/// The unique bottom-rightmost element of the cycle.
CycleElement maximal_element(const BirkhoffCycle& c);

/// Sign of the maximal element: the sign of the cycle itself.
int cycle_sign(const BirkhoffCycle& c);

/// Sum of the elements, signs included. Equals the inner product of V_n with
/// the cycle matrix.
Integer cycle_sum(const BirkhoffCycle& c);

struct SignCoherenceReport {
    bool pass = false;
    long cycle_count = 0;
    long violations = 0;
    Integer min_sum;  // extremal sums over all cycles
    Integer max_sum;
};

/// Exhaustively checks sign(cycle_sum) == cycle_sign over every cycle of
/// K_{n,n}, n >= 2.
SignCoherenceReport verify_sign_coherence(int n);

/// For a positive cycle with maximal element in (1-based) row r, compares the
/// unsigned sum S of its negative elements strictly above row r against the
/// worst-case bound sum_{k=0}^{r-3} (n - r + k + 2) n^k. Returns S <= bound.
/// Throws DomainError for negative cycles.
bool check_negative_sum_bound(const BirkhoffCycle& c);

}  // namespace birkhoff
