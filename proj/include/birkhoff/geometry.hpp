#pragma once

#include <optional>
#include <vector>

#include "birkhoff/hull.hpp"
#include "birkhoff/numeric.hpp"

namespace birkhoff {

/// A polytope given by its vertices (exact rational points), with an optional
/// edge list. Vertices are expected to be extreme points; the CLI validates
/// this for file input via the hull. The empty polytope has dim -1.
struct VPolytope {
    std::vector<VectorXq> vertices;
    std::vector<IndexPair> edges;
    Index ambient = 0;
    Index dim = -1;

    VPolytope() = default;
    explicit VPolytope(std::vector<VectorXq> verts, std::vector<IndexPair> edge_list = {});

    bool empty() const { return vertices.empty(); }
};

/// First k coordinates of a point. Throws DimensionError if k > dim or k < 0.
VectorXq project(const VectorXq& p, Index k);

/// True iff the affine hull U of the points satisfies
/// pi^(dim U)(U n Z^D) = Z^(dim U): U contains lattice points and they
/// project onto the full lattice of the first dim U coordinates.
bool is_affinely_integral(const std::vector<VectorXq>& points);

/// True iff the affine hull U satisfies pi^(dim U)(U) = R^(dim U): the first
/// dim U coordinates restricted to U are surjective.
bool is_in_general_position(const std::vector<VectorXq>& points);

/// k-general position for k <= 1: every face of dimension <= k is in
/// affinely general position. For k = 1 this means no edge direction has a
/// zero first coordinate (edges must be supplied). k > 1 throws
/// UnsupportedDepthError.
bool is_k_general_position(const VPolytope& p, int k);

/// Affine coordinates on aff(P) n Z^D: base point plus a lattice basis whose
/// first vector w has functional(w) = 1 and whose remaining vectors span the
/// kernel lattice of the functional. The first chart coordinate of any point
/// equals functional(x) - functional(base).
struct LatticeChart {
    VectorXz base;
    MatrixXz directions;  // rows; dim x ambient
    VectorXz functional;

    Index dim() const { return directions.rows(); }
    Index ambient() const { return base.size(); }

    VectorXq to_chart(const VectorXq& x) const;   // throws if x not in aff(P)
    VectorXz to_chart(const VectorXz& x) const;   // integral for lattice points
    VectorXq from_chart(const VectorXq& c) const;
    VectorXz from_chart(const VectorXz& c) const;
};

/// Build the chart for a polytope with integer vertices. The base point is a
/// vertex minimizing the functional, so chart levels start at zero. Throws
/// NonPrimitiveFunctionalError when the functional's gcd over the direction
/// lattice is not 1.
LatticeChart build_lattice_chart(const VPolytope& p, const VectorXz& functional);

/// One slice of a full-dimensional polytope in chart coordinates.
struct SliceRecord {
    Integer level;
    VPolytope slice;
    Rational volume;  // zero when the slice has dimension < d-1
};

/// Intersection with the hyperplane x_0 = y: slice vertices are the parent
/// vertices on the hyperplane plus interior edge crossings. Requires edges.
SliceRecord slice_at(const VPolytope& chart_polytope, const Integer& y,
                     const HullLimits& limits = {});

/// Volume of q normalized so a fundamental cell of the lattice
/// span(q - v0) n Z^ambient has volume 1. A single point has volume 1.
/// Computed by exact convex hull and fan triangulation.
Rational relative_volume(const VPolytope& q, const HullLimits& limits = {});

struct SlicingResult {
    Rational total;
    std::vector<SliceRecord> slices;  // sorted by level, zero-volume ends included
};

/// The slicing formula at depth 1: transform into chart coordinates, slice
/// at every integer level between the extreme first coordinates, and sum the
/// normalized slice volumes. Requires an integral, at least 2-dimensional
/// polytope with edges, in 1-general position in the chart (violations raise
/// GeneralPositionError naming the offending edge).
SlicingResult volume_by_slicing(const VPolytope& p, const LatticeChart& chart,
                                const HullLimits& limits = {});

/// Independent route to the same normalized volume: direction-lattice
/// coordinates, convex hull, fan triangulation, simplex determinant sum.
/// Shares no slicing machinery with volume_by_slicing.
Rational triangulation_oracle(const VPolytope& p, const HullLimits& limits = {});

}  // namespace birkhoff
