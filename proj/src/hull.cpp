#include "birkhoff/hull.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>

#include "birkhoff/exact_linalg.hpp"

namespace birkhoff {

namespace {

using Bitset = boost::dynamic_bitset<>;

struct Ray {
    VectorXz coords;  // primitive vector in Z^(d+1)
    Bitset active;    // constraints satisfied with equality (among processed)
};

VectorXz reduce_primitive(VectorXz v) {
    const Integer g = content(v);
    if (g > 1)
        for (Index i = 0; i < v.size(); ++i) v(i) /= g;
    return v;
}

Index affine_rank(const std::vector<VectorXq>& points) {
    if (points.size() <= 1) return 0;
    MatrixXq diffs(static_cast<Index>(points.size()) - 1, points[0].size());
    for (size_t i = 1; i < points.size(); ++i)
        diffs.row(static_cast<Index>(i) - 1) = points[i] - points[0];
    return rank_exact(diffs);
}

}  // namespace

std::vector<Facet> hull_facets(const std::vector<VectorXq>& points, const HullLimits& limits) {
    if (points.empty()) throw DomainError("hull_facets: no points");
    const Index d = points[0].size();
    if (d < 1) throw DomainError("hull_facets: ambient dimension must be >= 1");
    if (d > limits.max_dim)
        throw DomainError("hull_facets: dimension " + std::to_string(d) +
                          " exceeds the cap of " + std::to_string(limits.max_dim));
    if (points.size() > limits.max_points)
        throw DomainError("hull_facets: point count exceeds the cap of " +
                          std::to_string(limits.max_points));
    for (const VectorXq& p : points)
        if (p.size() != d) throw DimensionError("hull_facets: inconsistent point dimensions");
    if (affine_rank(points) != d)
        throw DomainError("hull_facets: points are not full-dimensional");

    const size_t m = points.size();
    VectorXq centroid = VectorXq::Zero(d);
    for (const VectorXq& p : points) centroid += p;
    centroid /= Rational(static_cast<long>(m));

    // Polar dual: facets of conv(points) are the extreme rays of the cone
    // {(t,a) : t - a.(p_i - c) >= 0 for all i}, read at t > 0.
    std::vector<VectorXz> constraints(m);
    for (size_t i = 0; i < m; ++i) {
        VectorXq n(d + 1);
        n(0) = 1;
        n.tail(d) = centroid - points[i];
        constraints[i] = primitive_direction(n);
    }

    // Initial simplicial cone from d+1 independent constraints.
    std::vector<size_t> seed;
    {
        MatrixXq sel(0, d + 1);
        for (size_t i = 0; i < m && sel.rows() < d + 1; ++i) {
            MatrixXq trial(sel.rows() + 1, d + 1);
            trial.topRows(sel.rows()) = sel;
            trial.row(sel.rows()) = to_rational(constraints[i]).transpose();
            if (rank_exact(trial) == trial.rows()) {
                sel = std::move(trial);
                seed.push_back(i);
            }
        }
        if (static_cast<Index>(seed.size()) != d + 1)
            throw DomainError("hull_facets: could not seed the dual cone");
    }

    MatrixXq seed_matrix(d + 1, d + 1);
    for (Index i = 0; i < d + 1; ++i)
        seed_matrix.row(i) = to_rational(constraints[seed[static_cast<size_t>(i)]]).transpose();
    const MatrixXq seed_inverse = inverse_exact(seed_matrix);

    // Active sets must only cover processed constraints, or the combinatorial
    // adjacency test below is no longer exact.
    std::vector<Ray> rays;
    for (Index j = 0; j < d + 1; ++j) {
        Ray r;
        r.coords = primitive_direction(seed_inverse.col(j));
        r.active.resize(m);
        for (size_t i : seed) r.active[i] = (constraints[i].dot(r.coords) == 0);
        rays.push_back(std::move(r));
    }

    std::vector<bool> processed(m, false);
    for (size_t i : seed) processed[i] = true;

    for (size_t k = 0; k < m; ++k) {
        if (processed[k]) continue;
        processed[k] = true;
        std::vector<Integer> s(rays.size());
        bool any_neg = false;
        for (size_t j = 0; j < rays.size(); ++j) {
            s[j] = constraints[k].dot(rays[j].coords);
            if (s[j] < 0) any_neg = true;
        }
        if (!any_neg) {
            for (size_t j = 0; j < rays.size(); ++j)
                if (s[j] == 0) rays[j].active[k] = true;
            continue;
        }

        std::vector<Ray> next;
        for (size_t j = 0; j < rays.size(); ++j)
            if (s[j] >= 0) {
                next.push_back(rays[j]);
                if (s[j] == 0) next.back().active[k] = true;
            }

        // Combine adjacent (positive, negative) ray pairs on the new hyperplane.
        for (size_t p = 0; p < rays.size(); ++p) {
            if (s[p] <= 0) continue;
            for (size_t q = 0; q < rays.size(); ++q) {
                if (s[q] >= 0) continue;
                Bitset common = rays[p].active & rays[q].active;
                if (static_cast<Index>(common.count()) < d - 1) continue;
                bool adjacent = true;
                for (size_t w = 0; w < rays.size(); ++w) {
                    if (w == p || w == q) continue;
                    if (common.is_subset_of(rays[w].active)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Ray nr;
                nr.coords = reduce_primitive(s[p] * rays[q].coords - s[q] * rays[p].coords);
                nr.active = std::move(common);
                nr.active[k] = true;
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<Facet> facets;
    facets.reserve(rays.size());
    for (const Ray& r : rays) {
        const Integer t = r.coords(0);
        if (t <= 0) throw DomainError("hull_facets: unbounded dual (input degenerate)");
        VectorXz a = r.coords.tail(d);
        const Integer g = content(a);
        Facet f;
        f.normal = a;
        for (Index i = 0; i < d; ++i) f.normal(i) /= g;
        Rational ac = 0;
        for (Index i = 0; i < d; ++i) ac += Rational(a(i)) * centroid(i);
        f.offset = (Rational(t) + ac) / Rational(g);
        for (size_t i = 0; i < m; ++i) {
            Rational dot = 0;
            for (Index j = 0; j < d; ++j) dot += Rational(f.normal(j)) * points[i](j);
            if (dot == f.offset) f.point_indices.push_back(static_cast<Index>(i));
        }
        facets.push_back(std::move(f));
    }

    std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) {
        for (Index i = 0; i < x.normal.size(); ++i)
            if (x.normal(i) != y.normal(i)) return x.normal(i) < y.normal(i);
        return x.offset < y.offset;
    });
    return facets;
}

namespace {

Index rank_of_normals(const std::vector<const Facet*>& fs, Index d) {
    MatrixXq mat(static_cast<Index>(fs.size()), d);
    for (size_t i = 0; i < fs.size(); ++i)
        mat.row(static_cast<Index>(i)) = to_rational(fs[i]->normal).transpose();
    return rank_exact(mat);
}

}  // namespace

std::vector<IndexPair> hull_edges(const std::vector<VectorXq>& points,
                                  const std::vector<Facet>& facets) {
    const Index d = points.empty() ? 0 : points[0].size();
    const size_t m = points.size();
    std::vector<Bitset> on_facet(m, Bitset(facets.size()));
    for (size_t f = 0; f < facets.size(); ++f)
        for (Index i : facets[f].point_indices) on_facet[static_cast<size_t>(i)][f] = true;

    std::vector<IndexPair> edges;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            Bitset common = on_facet[i] & on_facet[j];
            if (static_cast<Index>(common.count()) < d - 1) continue;
            std::vector<const Facet*> fs;
            for (size_t f = common.find_first(); f != Bitset::npos; f = common.find_next(f))
                fs.push_back(&facets[f]);
            if (rank_of_normals(fs, d) == d - 1)
                edges.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
        }
    }
    return edges;
}

std::vector<Index> non_extreme_points(const std::vector<VectorXq>& points,
                                      const std::vector<Facet>& facets) {
    const Index d = points.empty() ? 0 : points[0].size();
    std::vector<Index> out;
    for (size_t i = 0; i < points.size(); ++i) {
        std::vector<const Facet*> fs;
        for (const Facet& f : facets)
            if (std::binary_search(f.point_indices.begin(), f.point_indices.end(),
                                   static_cast<Index>(i)))
                fs.push_back(&f);
        if (rank_of_normals(fs, d) != d) out.push_back(static_cast<Index>(i));
    }
    return out;
}

}  // namespace birkhoff
