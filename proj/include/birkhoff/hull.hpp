#pragma once

#include <vector>

#include "birkhoff/numeric.hpp"

namespace birkhoff {

/// A facet of a full-dimensional polytope conv(points):
/// normal . x <= offset for every point, with equality exactly on the facet.
struct Facet {
    VectorXz normal;  // primitive integer outer normal
    Rational offset;
    std::vector<Index> point_indices;  // sorted indices of points on the facet
};

/// Caps protecting desk-scale use; raise explicitly for bigger inputs.
struct HullLimits {
    Index max_dim = 9;
    size_t max_points = 5000;
};

/// Exact facet enumeration of conv(points) for a full-dimensional point set,
/// by double description of the polar dual cone. Deterministic output order.
/// Throws DomainError if the points do not affinely span the ambient space
/// or a limit is exceeded.
std::vector<Facet> hull_facets(const std::vector<VectorXq>& points,
                               const HullLimits& limits = {});

/// Vertex pairs forming edges: the facets containing both endpoints have
/// normals of rank dim-1. Requires every point to be extreme.
std::vector<IndexPair> hull_edges(const std::vector<VectorXq>& points,
                                  const std::vector<Facet>& facets);

/// Indices of points that are not vertices of conv(points) (rank of active
/// facet normals below the ambient dimension).
std::vector<Index> non_extreme_points(const std::vector<VectorXq>& points,
                                      const std::vector<Facet>& facets);

}  // namespace birkhoff
