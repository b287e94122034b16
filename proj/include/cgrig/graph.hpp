#pragma once

#include "cgrig/color.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cgrig {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Directed colored edge. Loops have tail == head; parallel copies are
/// distinguished by id alone.
struct ColoredEdge {
    EdgeId id = 0;
    VertexId tail = 0;
    VertexId head = 0;
    Color color;

    bool is_loop() const { return tail == head; }
    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Finite Z^2-colored directed multigraph, the quotient of a periodic graph.
///
/// Edge ids are the positions in the edge list, so `edge(e).id == e`.
/// Immutable after construction; the mutators below return new graphs.
class ColoredGraph {
public:
    ColoredGraph() = default;
    explicit ColoredGraph(std::size_t n) : n_(n) {}

    /// Builds a graph from (tail, head, color) triples; ids are assigned in
    /// order. Throws StructuralError on an out-of-range endpoint.
    struct EdgeSpec {
        VertexId tail;
        VertexId head;
        Color color;
    };
    ColoredGraph(std::size_t n, std::span<const EdgeSpec> edges);
    ColoredGraph(std::size_t n, std::initializer_list<EdgeSpec> edges)
        : ColoredGraph(n, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<ColoredEdge>& edges() const { return edges_; }
    const ColoredEdge& edge(EdgeId e) const { return edges_.at(e); }

    /// Copy with one more edge appended (id = previous edge_count()).
    ColoredGraph with_edge(VertexId tail, VertexId head, Color color) const;
    /// Copy with a parallel copy (same endpoints and color) of `e` appended.
    ColoredGraph with_doubled(EdgeId e) const;
    /// Induced graph on a subset of edges, vertices relabelled compactly in
    /// increasing order of original id, edges renumbered in subset order.
    ColoredGraph edge_induced(std::span<const EdgeId> subset) const;

    /// Descriptions of every violation of the K_n^{6,4} multiplicity bound
    /// (at most 6 parallel copies per vertex pair, 4 loops per vertex).
    /// Empty when the graph is inside the ground set.
    std::vector<std::string> multiplicity_warnings() const;

    std::vector<EdgeId> all_edges() const;

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<ColoredEdge> edges_;
};

/// Edge subsets are sorted, duplicate-free lists of edge ids. The induced
/// subgraph is edge-induced: its vertices are exactly the endpoints.
using EdgeSubset = std::vector<EdgeId>;

/// Sorts and deduplicates; throws StructuralError on ids outside the graph.
EdgeSubset make_subset(const ColoredGraph& g, std::vector<EdgeId> ids);

enum class Direction : std::uint8_t { forward, backward };

struct WalkStep {
    EdgeId edge;
    Direction direction;
};

/// Closed walk in the graph, traversing each step's edge tail->head when
/// forward and head->tail when backward.
using ClosedWalk = std::vector<WalkStep>;

} // namespace cgrig
