#include "birkhoff/birkhoff_polytope.hpp"

namespace birkhoff {

VPolytope birkhoff_polytope(int n) {
    const std::vector<PermutationMatrix> perms = enumerate_vertices(n);
    std::vector<VectorXq> vertices(perms.size());
    for (size_t i = 0; i < perms.size(); ++i)
        vertices[i] = to_rational(perms[i].vectorized());
    std::vector<IndexPair> edges;
    for (size_t i = 0; i < perms.size(); ++i)
        for (size_t j = i + 1; j < perms.size(); ++j)
            if (are_adjacent(perms[i], perms[j]))
                edges.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
    return VPolytope(std::move(vertices), std::move(edges));
}

VectorXz birkhoff_slicing_functional(int n) { return SlicingVector(n).vectorized(); }

LatticeChart birkhoff_chart(int n) {
    return build_lattice_chart(birkhoff_polytope(n), birkhoff_slicing_functional(n));
}

}  // namespace birkhoff
