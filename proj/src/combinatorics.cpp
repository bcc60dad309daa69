#include "birkhoff/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "birkhoff/slicing_basis.hpp"

namespace birkhoff {

PermutationMatrix::PermutationMatrix(std::vector<int> sigma) : sigma_(std::move(sigma)) {
    const int n = static_cast<int>(sigma_.size());
    if (n == 0) throw DomainError("PermutationMatrix: order must be >= 1");
    std::vector<bool> seen(n, false);
    for (int v : sigma_) {
        if (v < 0 || v >= n || seen[v])
            throw DomainError("PermutationMatrix: sigma is not a bijection");
        seen[v] = true;
    }
}

PermutationMatrix PermutationMatrix::identity(int n) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    return PermutationMatrix(std::move(sigma));
}

MatrixXz PermutationMatrix::matrix() const {
    const int n = order();
    MatrixXz m = MatrixXz::Zero(n, n);
    for (int i = 0; i < n; ++i) m(i, sigma_[i]) = 1;
    return m;
}

VectorXz PermutationMatrix::vectorized() const { return vectorize_rows(matrix()); }

std::vector<PermutationMatrix> enumerate_vertices(int n) {
    if (n < 1) throw DomainError("enumerate_vertices: order must be >= 1");
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<PermutationMatrix> out;
    do {
        out.emplace_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

bool is_cycle_matrix(const MatrixXz& d) {
    const Index n = d.rows();
    if (n != d.cols() || n < 2) return false;
    // Each occupied row and column must hold exactly one +1 and one -1.
    std::vector<int> row_pos(n, -1), row_neg(n, -1), col_pos(n, -1), col_neg(n, -1);
    Index nonzeros = 0;
    for (Index i = 0; i < n; ++i) {
        int pos = 0, neg = 0;
        for (Index j = 0; j < n; ++j) {
            if (d(i, j) == 0) continue;
            if (d(i, j) == 1) {
                ++pos;
                row_pos[i] = static_cast<int>(j);
            } else if (d(i, j) == -1) {
                ++neg;
                row_neg[i] = static_cast<int>(j);
            } else {
                return false;
            }
            ++nonzeros;
        }
        if (!((pos == 0 && neg == 0) || (pos == 1 && neg == 1))) return false;
    }
    for (Index j = 0; j < n; ++j) {
        int pos = 0, neg = 0;
        for (Index i = 0; i < n; ++i) {
            if (d(i, j) == 1) {
                ++pos;
                col_pos[j] = static_cast<int>(i);
            } else if (d(i, j) == -1) {
                ++neg;
                col_neg[j] = static_cast<int>(i);
            }
        }
        if (!((pos == 0 && neg == 0) || (pos == 1 && neg == 1))) return false;
    }
    if (nonzeros < 4) return false;
    // The support must be one cycle: walk +1 -> same row -1 -> same column +1.
    int start = -1;
    for (Index i = 0; i < n && start < 0; ++i)
        if (row_pos[i] >= 0) start = static_cast<int>(i);
    if (start < 0) return false;
    Index visited = 0;
    int r = start;
    do {
        const int jpos = row_pos[r];        // +1 at (r, jpos)
        const int rneg = col_neg[jpos];     // -1 in the same column
        if (jpos < 0 || rneg < 0) return false;
        visited += 2;
        r = rneg;                           // its row partner continues the walk
    } while (r != start && visited <= nonzeros);
    return visited == nonzeros;
}

CycleMatrix::CycleMatrix(MatrixXz entries) : m_(std::move(entries)) {
    if (!is_cycle_matrix(m_))
        throw DomainError("CycleMatrix: entries do not form a single directed simple cycle");
}

CycleMatrix CycleMatrix::from_signed_positions(
    int n, const std::vector<std::tuple<int, int, int>>& elements) {
    MatrixXz m = MatrixXz::Zero(n, n);
    for (const auto& [i, j, s] : elements) m(i, j) = s;
    return CycleMatrix(std::move(m));
}

CycleMatrix CycleMatrix::negated() const { return CycleMatrix((-m_).eval(), Unchecked{}); }

std::vector<CycleMatrix> enumerate_edge_directions(int n) {
    if (n < 2) throw DomainError("enumerate_edge_directions: order must be >= 2");
    std::vector<CycleMatrix> out;
    MatrixXz work = MatrixXz::Zero(n, n);
    std::vector<bool> row_used(n, false), col_used(n, false);

    // Depth-first over directed cycles anchored at their lowest row r0.
    // A cycle u_r0 -> v_c1 -> u_r1 -> ... -> v_cL -> u_r0 writes +1 at
    // (r_i, c_{i+1}) and -1 at (r_{i+1}, c_{i+1}); closing early emits the
    // cycle before longer extensions, columns and rows in ascending order.
    auto dfs = [&](auto&& self, int r0, int r, int cols_used) -> void {
        for (int c = 0; c < n; ++c) {
            if (col_used[c]) continue;
            work(r, c) = 1;
            col_used[c] = true;
            if (cols_used + 1 >= 2) {
                work(r0, c) -= 1;  // close the cycle back to u_r0
                out.push_back(CycleMatrix(work, CycleMatrix::Unchecked{}));
                work(r0, c) += 1;
            }
            for (int r2 = r0 + 1; r2 < n; ++r2) {
                if (row_used[r2]) continue;
                work(r2, c) = -1;
                row_used[r2] = true;
                self(self, r0, r2, cols_used + 1);
                row_used[r2] = false;
                work(r2, c) = 0;
            }
            col_used[c] = false;
            work(r, c) = 0;
        }
    };

    for (int r0 = 0; r0 + 1 < n; ++r0) {
        row_used[r0] = true;
        dfs(dfs, r0, r0, 0);
        row_used[r0] = false;
    }
    return out;
}

bool are_adjacent(const PermutationMatrix& p, const PermutationMatrix& q) {
    if (p.order() != q.order()) throw DimensionError("are_adjacent: order mismatch");
    if (p == q) throw DomainError("are_adjacent: vertices must be distinct");
    return is_cycle_matrix(p.matrix() - q.matrix());
}

BirkhoffCycle birkhoff_cycle(const SlicingVector& v, const CycleMatrix& m) {
    if (v.order() != m.order())
        throw DimensionError("birkhoff_cycle: slicing vector and cycle order mismatch");
    const int n = m.order();
    // Locate the maximal (bottom-rightmost) nonzero position.
    int r0 = -1, c0 = -1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.entry(i, j) != 0) { r0 = i; c0 = j; }
    std::vector<CycleElement> elems;
    // Walk the cycle: alternate between the row partner and the column partner.
    int r = r0, c = c0;
    bool move_in_row = true;
    do {
        elems.push_back({r, c, m.entry(r, c), v.entry(r, c)});
        if (move_in_row) {
            for (int j = 0; j < n; ++j)
                if (j != c && m.entry(r, j) != 0) { c = j; break; }
        } else {
            for (int i = 0; i < n; ++i)
                if (i != r && m.entry(i, c) != 0) { r = i; break; }
        }
        move_in_row = !move_in_row;
    } while (!(r == r0 && c == c0));
    return BirkhoffCycle(n, std::move(elems));
}

CycleElement maximal_element(const BirkhoffCycle& c) {
    if (c.elements().empty()) throw DomainError("maximal_element: empty cycle");
    const CycleElement* best = &c.elements().front();
    for (const CycleElement& e : c.elements())
        if (e.row > best->row || (e.row == best->row && e.col > best->col)) best = &e;
    return *best;
}

int cycle_sign(const BirkhoffCycle& c) { return maximal_element(c).sign; }

Integer cycle_sum(const BirkhoffCycle& c) {
    Integer s = 0;
    for (const CycleElement& e : c.elements()) s += Integer(e.sign) * e.value;
    return s;
}

SignCoherenceReport verify_sign_coherence(int n) {
    if (n < 2) throw DomainError("verify_sign_coherence: order must be >= 2");
    const SlicingVector v(n);
    SignCoherenceReport report;
    report.pass = true;
    bool first = true;
    for (const CycleMatrix& m : enumerate_edge_directions(n)) {
        const BirkhoffCycle c = birkhoff_cycle(v, m);
        const Integer s = cycle_sum(c);
        ++report.cycle_count;
        if (first || s < report.min_sum) report.min_sum = s;
        if (first || s > report.max_sum) report.max_sum = s;
        first = false;
        const int expected = cycle_sign(c);
        if (s == 0 || (s > 0) != (expected > 0)) {
            ++report.violations;
            report.pass = false;
        }
    }
    return report;
}

bool check_negative_sum_bound(const BirkhoffCycle& c) {
    if (cycle_sign(c) != 1)
        throw DomainError("check_negative_sum_bound: cycle must be positive");
    const int n = c.order();
    const int r = maximal_element(c).row + 1;  // 1-based row of the maximal element
    Integer s = 0;
    for (const CycleElement& e : c.elements())
        if (e.sign < 0 && e.row + 1 < r) s += e.value;
    Integer bound = 0;
    Integer npow = 1;
    for (int k = 0; k <= r - 3; ++k) {
        bound += Integer(n - r + k + 2) * npow;
        npow *= n;
    }
    return s <= bound;
}

}  // namespace birkhoff
