#include "birkhoff/geometry.hpp"

#include <algorithm>
#include <map>

#include "birkhoff/exact_linalg.hpp"

namespace birkhoff {

namespace {

bool lex_less(const VectorXq& a, const VectorXq& b) {
    for (Index i = 0; i < a.size(); ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

MatrixXz integer_difference_matrix(const std::vector<VectorXq>& points, const VectorXq& origin) {
    MatrixXz dirs(static_cast<Index>(points.size()), origin.size());
    Index r = 0;
    for (const VectorXq& p : points) {
        if (p.size() != origin.size())
            throw DimensionError("inconsistent point dimensions");
        const VectorXz d = primitive_direction(p - origin);
        if (d.isZero()) continue;
        dirs.row(r++) = d.transpose();
    }
    return dirs.topRows(r);
}

}  // namespace

VPolytope::VPolytope(std::vector<VectorXq> verts, std::vector<IndexPair> edge_list)
    : vertices(std::move(verts)), edges(std::move(edge_list)) {
    if (vertices.empty()) {
        if (!edges.empty()) throw DimensionError("VPolytope: edges without vertices");
        return;
    }
    ambient = vertices[0].size();
    for (const VectorXq& v : vertices)
        if (v.size() != ambient) throw DimensionError("VPolytope: inconsistent dimensions");
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= static_cast<Index>(vertices.size()) ||
            b >= static_cast<Index>(vertices.size()))
            throw DimensionError("VPolytope: edge index out of range");
        if (vertices[static_cast<size_t>(a)] == vertices[static_cast<size_t>(b)])
            throw DomainError("VPolytope: edge joins equal vertices");
    }
    const MatrixXz dirs = integer_difference_matrix(vertices, vertices[0]);
    dim = rank_exact(dirs);
}

VectorXq project(const VectorXq& p, Index k) {
    if (k < 0 || k > p.size()) throw DimensionError("project: depth out of range");
    return p.head(k);
}

bool is_affinely_integral(const std::vector<VectorXq>& points) {
    if (points.empty()) throw DomainError("is_affinely_integral: no points");
    const Index big_d = points[0].size();
    const MatrixXz dirs = integer_difference_matrix(points, points[0]);
    const Index r = rank_exact(dirs);
    if (r == 0) return is_integral(points[0]);
    if (r == big_d) return true;  // affine hull is all of R^D

    // Functionals cutting out the affine hull: U = {x : N x = N p0}.
    const MatrixXz n = integer_kernel(dirs);
    VectorXq c = to_rational(n) * points[0];
    if (!is_integral(c)) return false;  // U contains no lattice point
    if (!integer_solve(n, to_integer(c)).has_value()) return false;

    // Projection of the direction lattice onto the first r coordinates.
    const MatrixXz lattice = integer_kernel(n);  // saturated, r x D
    const MatrixXz head = lattice.leftCols(r);
    const HnfResult res = hnf(head);
    if (res.rank != r) return false;
    return res.h.topLeftCorner(r, r) == MatrixXz::Identity(r, r);
}

bool is_in_general_position(const std::vector<VectorXq>& points) {
    if (points.empty()) throw DomainError("is_in_general_position: no points");
    const MatrixXz dirs = integer_difference_matrix(points, points[0]);
    const Index r = rank_exact(dirs);
    if (r == 0) return true;
    return rank_exact(dirs.leftCols(r).eval()) == r;
}

bool is_k_general_position(const VPolytope& p, int k) {
    if (k < 0) throw DomainError("is_k_general_position: negative depth");
    if (k > 1)
        throw UnsupportedDepthError("is_k_general_position: only depths 0 and 1 are supported");
    if (p.empty()) throw DomainError("is_k_general_position: empty polytope");
    if (k == 0) return true;  // single points are always in general position
    if (p.dim >= 1 && p.edges.empty())
        throw DomainError("is_k_general_position: edge list required at depth 1");
    for (const auto& [a, b] : p.edges) {
        const VectorXq& va = p.vertices[static_cast<size_t>(a)];
        const VectorXq& vb = p.vertices[static_cast<size_t>(b)];
        if (va(0) == vb(0)) return false;
    }
    return true;
}

VectorXq LatticeChart::to_chart(const VectorXq& x) const {
    if (x.size() != ambient()) throw DimensionError("to_chart: dimension mismatch");
    const Index d = dim();
    const VectorXq rhs = x - to_rational(base);
    if (d == 0) {
        if (!rhs.isZero()) throw DimensionError("to_chart: point not in the affine hull");
        return VectorXq(0);
    }
    const MatrixXq dirs = to_rational(directions);
    const VectorXq c = solve_exact(dirs * dirs.transpose(), dirs * rhs);
    if (dirs.transpose() * c != rhs)
        throw DimensionError("to_chart: point not in the affine hull");
    return c;
}

VectorXz LatticeChart::to_chart(const VectorXz& x) const {
    return to_integer(to_chart(to_rational(x)));
}

VectorXq LatticeChart::from_chart(const VectorXq& c) const {
    if (c.size() != dim()) throw DimensionError("from_chart: dimension mismatch");
    return to_rational(base) + to_rational(directions).transpose() * c;
}

VectorXz LatticeChart::from_chart(const VectorXz& c) const {
    if (c.size() != dim()) throw DimensionError("from_chart: dimension mismatch");
    return base + directions.transpose() * c;
}

LatticeChart build_lattice_chart(const VPolytope& p, const VectorXz& functional) {
    if (p.empty()) throw DomainError("build_lattice_chart: empty polytope");
    if (functional.size() != p.ambient)
        throw DimensionError("build_lattice_chart: functional dimension mismatch");
    for (const VectorXq& v : p.vertices)
        if (!is_integral(v))
            throw DomainError("build_lattice_chart: vertices must be integral");

    // Base point: a vertex minimizing the functional, so levels start at 0.
    size_t base_idx = 0;
    Integer best;
    for (size_t i = 0; i < p.vertices.size(); ++i) {
        Integer val = functional.dot(to_integer(p.vertices[i]));
        if (i == 0 || val < best) {
            best = std::move(val);
            base_idx = i;
        }
    }
    const VectorXz base = to_integer(p.vertices[base_idx]);

    const MatrixXz dirs = integer_difference_matrix(p.vertices, p.vertices[base_idx]);
    const MatrixXz lattice = saturate_row_lattice(dirs);
    const Index d = lattice.rows();

    LatticeChart chart;
    chart.base = base;
    chart.functional = functional;
    if (d == 0) {
        chart.directions = MatrixXz(0, p.ambient);
        return chart;
    }
    const VectorXz values = lattice * functional;
    if (content(values) != 1)
        throw NonPrimitiveFunctionalError(
            "build_lattice_chart: functional gcd over the direction lattice is " +
            content(values).str() + ", not 1");
    // Unimodular row mix turning the value vector into (1, 0, ..., 0).
    const HnfResult res = hnf(MatrixXz(values));
    chart.directions = res.u * lattice;
    return chart;
}

namespace {

// Fan triangulation of a full-dimensional point set, memoized per face so
// each face of the hull is triangulated once. Returns index tuples into
// `points`; every tuple has d+1 entries.
class Triangulator {
public:
    Triangulator(const std::vector<VectorXq>& points, const HullLimits& limits)
        : points_(points), limits_(limits) {}

    std::vector<std::vector<Index>> run(Index d) {
        std::vector<Index> all(points_.size());
        for (size_t i = 0; i < points_.size(); ++i) all[i] = static_cast<Index>(i);
        return triangulate(all, d);
    }

private:
    std::vector<std::vector<Index>> triangulate(const std::vector<Index>& subset, Index d) {
        if (auto it = cache_.find(subset); it != cache_.end()) return it->second;
        std::vector<std::vector<Index>> out;
        if (static_cast<Index>(subset.size()) == d + 1) {
            out.push_back(subset);
            cache_.emplace(subset, out);
            return out;
        }
        // Coordinates for the face: project onto d independent columns.
        std::vector<VectorXq> local = project_face(subset, d);
        const std::vector<Facet> facets = hull_facets(local, limits_);
        const Index apex = 0;  // local index; any point of the face works
        for (const Facet& f : facets) {
            if (std::binary_search(f.point_indices.begin(), f.point_indices.end(), apex))
                continue;
            std::vector<Index> sub_global(f.point_indices.size());
            for (size_t i = 0; i < f.point_indices.size(); ++i)
                sub_global[i] = subset[static_cast<size_t>(f.point_indices[i])];
            for (const std::vector<Index>& simplex : triangulate(sub_global, d - 1)) {
                std::vector<Index> cone;
                cone.reserve(simplex.size() + 1);
                cone.push_back(subset[apex]);
                cone.insert(cone.end(), simplex.begin(), simplex.end());
                out.push_back(std::move(cone));
            }
        }
        cache_.emplace(subset, out);
        return out;
    }

    // Affine-isomorphic image of the face in Q^d via d independent coordinates.
    std::vector<VectorXq> project_face(const std::vector<Index>& subset, Index d) {
        const VectorXq& origin = points_[static_cast<size_t>(subset[0])];
        MatrixXq diffs(static_cast<Index>(subset.size()) - 1, origin.size());
        for (size_t i = 1; i < subset.size(); ++i)
            diffs.row(static_cast<Index>(i - 1)) =
                points_[static_cast<size_t>(subset[i])] - origin;
        const std::vector<Index> cols = pivot_columns(diffs);
        if (static_cast<Index>(cols.size()) != d)
            throw DomainError("triangulate: face has unexpected dimension");
        std::vector<VectorXq> local(subset.size());
        for (size_t i = 0; i < subset.size(); ++i) {
            VectorXq v(d);
            for (Index j = 0; j < d; ++j)
                v(j) = points_[static_cast<size_t>(subset[i])](cols[static_cast<size_t>(j)]);
            local[i] = std::move(v);
        }
        return local;
    }

    static std::vector<Index> pivot_columns(MatrixXq m) {
        std::vector<Index> cols;
        Index r = 0;
        for (Index c = 0; c < m.cols() && r < m.rows(); ++c) {
            Index p = -1;
            for (Index i = r; i < m.rows(); ++i)
                if (m(i, c) != 0) { p = i; break; }
            if (p < 0) continue;
            m.row(r).swap(m.row(p));
            for (Index i = r + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0) continue;
                const Rational f = m(i, c) / m(r, c);
                m.row(i) -= f * m.row(r);
            }
            cols.push_back(c);
            ++r;
        }
        return cols;
    }

    const std::vector<VectorXq>& points_;
    HullLimits limits_;
    std::map<std::vector<Index>, std::vector<std::vector<Index>>> cache_;
};

// Euclidean volume of a full-dimensional point set in Q^d.
Rational volume_fulldim(const std::vector<VectorXq>& points, Index d, const HullLimits& limits) {
    if (d == 0) return 1;
    if (static_cast<Index>(points.size()) < d + 1) return 0;
    Triangulator tri(points, limits);
    Integer dfact = 1;
    for (Index i = 2; i <= d; ++i) dfact *= i;
    Rational total = 0;
    for (const std::vector<Index>& simplex : tri.run(d)) {
        MatrixXq edges(d, d);
        for (Index i = 0; i < d; ++i)
            edges.col(i) = points[static_cast<size_t>(simplex[static_cast<size_t>(i + 1)])] -
                           points[static_cast<size_t>(simplex[0])];
        total += abs(det_exact(edges));
    }
    return total / Rational(dfact);
}

// Normalized volume shared by relative_volume and the oracle: express the
// vertices in a basis of the saturated direction lattice, then triangulate.
Rational lattice_volume(const VPolytope& q, const HullLimits& limits) {
    if (q.empty()) throw DomainError("volume: empty polytope");
    const Index d = q.dim;
    if (d == 0) return 1;
    const MatrixXz dirs = integer_difference_matrix(q.vertices, q.vertices[0]);
    const MatrixXz lattice = saturate_row_lattice(dirs);
    const MatrixXq basis = to_rational(lattice);
    const MatrixXq gram_inv = inverse_exact(basis * basis.transpose());
    std::vector<VectorXq> local(q.vertices.size());
    for (size_t i = 0; i < q.vertices.size(); ++i) {
        const VectorXq c = gram_inv * (basis * (q.vertices[i] - q.vertices[0]));
        local[i] = c;
    }
    return volume_fulldim(local, d, limits);
}

}  // namespace

Rational relative_volume(const VPolytope& q, const HullLimits& limits) {
    return lattice_volume(q, limits);
}

Rational triangulation_oracle(const VPolytope& p, const HullLimits& limits) {
    return lattice_volume(p, limits);
}

SliceRecord slice_at(const VPolytope& chart_polytope, const Integer& y,
                     const HullLimits& limits) {
    const VPolytope& p = chart_polytope;
    if (p.empty()) throw DomainError("slice_at: empty polytope");
    if (p.dim != p.ambient)
        throw DomainError("slice_at: polytope must be full-dimensional in chart coordinates");
    const Rational level(y);

    std::vector<VectorXq> cut;
    for (const VectorXq& v : p.vertices)
        if (v(0) == level) cut.push_back(v);
    for (const auto& [a, b] : p.edges) {
        const VectorXq& va = p.vertices[static_cast<size_t>(a)];
        const VectorXq& vb = p.vertices[static_cast<size_t>(b)];
        const Rational fa = va(0), fb = vb(0);
        if ((fa < level && level < fb) || (fb < level && level < fa)) {
            const Rational t = (level - fa) / (fb - fa);
            cut.push_back(va + t * (vb - va));
        }
    }
    std::sort(cut.begin(), cut.end(), lex_less);
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());

    SliceRecord rec;
    rec.level = y;
    rec.slice = VPolytope(std::move(cut));
    rec.volume = 0;
    if (!rec.slice.empty() && rec.slice.dim == p.dim - 1)
        rec.volume = relative_volume(rec.slice, limits);
    return rec;
}

SlicingResult volume_by_slicing(const VPolytope& p, const LatticeChart& chart,
                                const HullLimits& limits) {
    if (p.empty()) throw DomainError("volume_by_slicing: empty polytope");
    if (p.dim <= 1)
        throw DomainError("volume_by_slicing: degenerate dimension " +
                          std::to_string(p.dim) + "; the slicing formula needs dimension >= 2");
    if (chart.ambient() != p.ambient)
        throw DimensionError("volume_by_slicing: chart ambient dimension mismatch");
    if (chart.dim() != p.dim)
        throw DimensionError("volume_by_slicing: chart dimension mismatch");
    if (p.edges.empty()) throw DomainError("volume_by_slicing: edge list required");
    for (size_t i = 0; i < p.vertices.size(); ++i)
        if (!is_integral(p.vertices[i]))
            throw DomainError("volume_by_slicing: vertex " + std::to_string(i) +
                              " is not integral (the polytope must be 0-integral)");

    std::vector<VectorXq> chart_vertices(p.vertices.size());
    for (size_t i = 0; i < p.vertices.size(); ++i)
        chart_vertices[i] = to_rational(chart.to_chart(to_integer(p.vertices[i])));

    for (const auto& [a, b] : p.edges) {
        if (chart_vertices[static_cast<size_t>(a)](0) == chart_vertices[static_cast<size_t>(b)](0))
            throw GeneralPositionError(
                "volume_by_slicing: edge (" + std::to_string(a) + ", " + std::to_string(b) +
                    ") is parallel to the slicing hyperplanes",
                {a, b});
    }

    const VPolytope in_chart(chart_vertices, p.edges);
    Integer lo = to_integer(chart_vertices[0](0)), hi = lo;
    for (const VectorXq& v : chart_vertices) {
        const Integer f = to_integer(v(0));
        lo = min(lo, f);
        hi = max(hi, f);
    }

    SlicingResult result;
    result.total = 0;
    for (Integer y = lo; y <= hi; ++y) {
        SliceRecord rec = slice_at(in_chart, y, limits);
        result.total += rec.volume;
        result.slices.push_back(std::move(rec));
    }
    return result;
}

}  // namespace birkhoff
