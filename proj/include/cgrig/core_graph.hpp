#pragma once

#include "cgrig/graph.hpp"
#include "cgrig/lattice.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cgrig {

/// Signed color sum over a closed walk: forward steps add, backward steps
/// subtract. Throws StructuralError when consecutive steps do not share an
/// endpoint or the walk does not return to its start.
Color rho_of_walk(const ColoredGraph& g, const ClosedWalk& walk);

/// Rank over Q (0, 1 or 2) of the cycle images of the edge-induced subgraph.
int z2_rank(const ColoredGraph& g, std::span<const EdgeId> subset);

struct ComponentPartition {
    std::size_t count = 0;
    /// Each part lists its vertices in increasing order; parts are ordered by
    /// their smallest vertex.
    std::vector<std::vector<VertexId>> parts;
};

/// Connected components of the edge-induced subgraph (empty subset: none).
ComponentPartition components(const ColoredGraph& g, std::span<const EdgeId> subset);

/// A fundamental cycle of a spanning forest of the subset, as a closed walk
/// that starts with its closing edge traversed forward.
struct FundamentalCycle {
    EdgeId closing_edge;
    ClosedWalk walk;
    Color image;
};

/// Spanning forest built by scanning edges in the given order; every edge
/// that closes a cycle yields one fundamental cycle.
std::vector<FundamentalCycle> fundamental_cycles(const ColoredGraph& g, std::span<const EdgeId> subset);

/// Signed tree-path color sums sigma(root, v) for every vertex, one root per
/// component of the whole graph (the smallest vertex). Vertices not touched by
/// any edge have sigma = 0 and are their own root.
struct TreePotentials {
    std::vector<VertexId> root;
    std::vector<Color> sigma;
};
TreePotentials tree_potentials(const ColoredGraph& g);

/// Integer window [x_min, x_max] x [y_min, y_max] of translates.
struct Window {
    std::int64_t x_min = 0, x_max = 0, y_min = 0, y_max = 0;

    bool contains(Color c) const { return c.g1 >= x_min && c.g1 <= x_max && c.g2 >= y_min && c.g2 <= y_max; }
    bool in_core(Color c) const {
        return c.g1 > x_min && c.g1 < x_max && c.g2 > y_min && c.g2 < y_max;
    }
    std::size_t width() const { return static_cast<std::size_t>(x_max - x_min + 1); }
    std::size_t height() const { return static_cast<std::size_t>(y_max - y_min + 1); }
};

enum class DevelopmentShape {
    finite_many_infinite,   // rank 2: index-many infinite components
    infinite_many_infinite, // rank 1
    infinite_many_finite,   // rank 0
};

/// Prediction for one connected component of the quotient graph.
struct ComponentPrediction {
    std::vector<VertexId> vertices;
    int z2_rank = 0;
    HermiteForm image_lattice;
    /// Index of the image lattice in Z^2; nullopt when infinite.
    std::optional<std::int64_t> index;
    DevelopmentShape shape = DevelopmentShape::infinite_many_finite;
};

struct DevelopmentVertex {
    VertexId vertex;
    Color translate;
};

struct DevelopmentEdge {
    EdgeId edge;
    Color translate;
    std::size_t tail; // indices into DevelopmentWindow::vertices
    std::size_t head;
};

/// Finite piece of the development V x Z^2 cut out by a window.
struct DevelopmentWindow {
    Window window;
    std::vector<DevelopmentVertex> vertices;
    std::vector<DevelopmentEdge> edges;
    /// Component id (observed inside the window) per development vertex,
    /// numbered by first appearance.
    std::vector<std::size_t> component;
    std::size_t observed_components = 0;
    /// Distinct observed components that meet the window core (a one-cell
    /// margin removed on each side).
    std::size_t observed_core_components = 0;
    /// Distinct predicted infinite-component labels among core vertices,
    /// computed from tree potentials and image lattices.
    std::size_t predicted_core_classes = 0;
    /// Predicted infinite-component class per development vertex, numbered by
    /// first appearance.
    std::vector<std::size_t> predicted_class;
    std::vector<ComponentPrediction> predictions;
};

/// Throws StructuralError on an empty window.
DevelopmentWindow develop_window(const ColoredGraph& g, const Window& window);

/// Cover of the quotient associated with the sublattice spanned by the basis
/// columns: vertices V x (Z^2/Lambda) numbered coset * n + vertex, edges
/// numbered coset * m + edge, colors in basis coordinates.
ColoredGraph sublattice_cover(const ColoredGraph& g, const IntBasis& basis);

} // namespace cgrig
