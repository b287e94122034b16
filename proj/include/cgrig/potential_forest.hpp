#pragma once

#include "cgrig/color.hpp"
#include "cgrig/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace cgrig {

/// Union-find over vertices where every vertex carries its Z^2 offset
/// relative to the root of its tree. Adding an edge u->v with color g either
/// joins two trees (a forest edge) or closes a cycle whose image
/// pos(u) + g - pos(v) is returned.
///
/// Edges are only ever added, so the image returned for a closing edge is
/// exactly the image of its fundamental cycle in the final forest.
class PotentialForest {
public:
    explicit PotentialForest(std::size_t n) : parent_(n), offset_(n), touched_(n, 0) {}

    /// Untouched vertices are singleton roots.

    void reset();

    /// nullopt for a forest edge, otherwise the fundamental cycle image.
    std::optional<Color> add(VertexId tail, VertexId head, Color color);

    VertexId find(VertexId v);
    /// Offset of v relative to its root.
    Color potential(VertexId v);

    std::size_t vertices_touched() const { return touched_count_; }
    std::size_t forest_edges() const { return forest_edges_; }
    /// Components among touched vertices.
    std::size_t components() const { return touched_count_ - forest_edges_; }

private:
    void touch(VertexId v);

    std::vector<VertexId> parent_;
    std::vector<Color> offset_;
    std::vector<char> touched_;
    std::vector<VertexId> touched_list_;
    std::size_t touched_count_ = 0;
    std::size_t forest_edges_ = 0;
};

/// n', m', c' and Z^2-rank of an edge-induced subgraph plus whether every
/// cycle-closing edge raised the rank (exact independence for f).
struct SubsetCounts {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t components = 0;
    int z2_rank = 0;
    bool f_independent = true;

    /// f = n' + rk' - c'.
    std::int64_t f() const {
        return static_cast<std::int64_t>(vertices) + z2_rank - static_cast<std::int64_t>(components);
    }
};

/// Evaluates the counts in one pass; `forest` is scratch space sized to the
/// graph and is reset on entry.
SubsetCounts count_subset(const ColoredGraph& g, std::span<const EdgeId> subset, PotentialForest& forest);
SubsetCounts count_subset(const ColoredGraph& g, std::span<const EdgeId> subset);

} // namespace cgrig
