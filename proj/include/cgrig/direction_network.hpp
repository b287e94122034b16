#pragma once

#include "cgrig/graph.hpp"
#include "cgrig/linear_rep.hpp"
#include "cgrig/matrix.hpp"
#include "cgrig/random.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace cgrig {

using Vec2 = std::array<double, 2>;

/// One unit direction per edge id.
struct DirectionAssignment {
    std::vector<Vec2> d;

    /// d rotated by +90 degrees: (-d_y, d_x).
    Vec2 perp(EdgeId e) const { return {-d[e][1], d[e][0]}; }
};

/// Independent uniform angles, one per edge.
DirectionAssignment random_directions(std::size_t edges, Rng& rng);

/// The system <p_j + L gamma - p_i, d_perp> = 0 as the M222 pattern with
/// (a, b) = d_perp. Throws DomainError on a zero direction and
/// StructuralError when directions do not cover every edge.
NaturalMatrix<double> build_P_system(const ColoredGraph& g, const DirectionAssignment& directions);

struct RealizationKernel {
    std::size_t dim = 0;
    std::vector<Realization> basis;
};

RealizationKernel realization_kernel(const ColoredGraph& g, const DirectionAssignment& directions,
                                     double tolerance = 1e-9);

struct EdgeStatus {
    EdgeId id = 0;
    Vec2 eta{};
    /// Signed length along the edge direction: eta = alpha d when not collapsed.
    double alpha = 0.0;
    bool collapsed = false;
};

/// max(max_i |p_i - p_0|, |L|_F, max_i |p_i|).
double realization_scale(const Realization& r);

/// Collapsed means |eta| <= tolerance * realization_scale.
std::vector<EdgeStatus> edge_status(const ColoredGraph& g, const DirectionAssignment& directions,
                                    const Realization& realization, double tolerance = 1e-6);

/// Realization with every edge collapsed. `anchors` holds one point per
/// connected component of the whole graph (isolated vertices included),
/// components ordered by their smallest vertex. `lattice_seed` is projected
/// onto the solutions of L rho(C) = 0 (identity by default). Throws
/// StructuralError on an anchor count mismatch and InternalError if the
/// result is not fully collapsed.
Realization collapsed_realization(const ColoredGraph& g, const std::vector<Vec2>& anchors,
                                  const std::array<std::array<double, 2>, 2>& lattice_seed = {{{1.0, 0.0}, {0.0, 1.0}}});

/// Number of connected components of the whole graph, isolated vertices
/// counted.
std::size_t component_count(const ColoredGraph& g);

inline constexpr int default_retry_cap = 16;

struct FaithfulRealization {
    Realization realization;
    DirectionAssignment directions;
    std::vector<EdgeStatus> status;
    int attempts = 0;
    std::uint64_t seed = 0;
};

/// Selects from a 3-dimensional realization kernel the element with p_0 at
/// the origin, unit norm, and first coordinate above 1e-9 in magnitude
/// positive. Throws InternalError if the kernel has another dimension.
Realization normalize_kernel(const FloatKernel& kernel, std::size_t n);

/// The unique faithful realization of a colored-Laman graph for sampled
/// generic directions. Throws DomainError when the graph is not
/// colored-Laman and GenericityError when retry_cap samples all fail.
FaithfulRealization faithful_realization(const ColoredGraph& g, std::uint64_t seed, int retry_cap = default_retry_cap);

} // namespace cgrig
