#include "cgrig/graph.hpp"

#include "cgrig/errors.hpp"
#include "cgrig/potential_forest.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cgrig {

ColoredGraph::ColoredGraph(std::size_t n, std::span<const EdgeSpec> edges) : n_(n) {
    edges_.reserve(edges.size());
    for (const auto& spec : edges) {
        if (spec.tail >= n || spec.head >= n) {
            throw StructuralError("edge " + std::to_string(edges_.size()) + " has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
        }
        edges_.push_back({static_cast<EdgeId>(edges_.size()), spec.tail, spec.head, spec.color});
    }
}

ColoredGraph ColoredGraph::with_edge(VertexId tail, VertexId head, Color color) const {
    if (tail >= n_ || head >= n_) throw StructuralError("edge endpoint outside the vertex range");
    ColoredGraph out = *this;
    out.edges_.push_back({static_cast<EdgeId>(edges_.size()), tail, head, color});
    return out;
}

ColoredGraph ColoredGraph::with_doubled(EdgeId e) const {
    const auto& src = edge(e);
    return with_edge(src.tail, src.head, src.color);
}

ColoredGraph ColoredGraph::edge_induced(std::span<const EdgeId> subset) const {
    std::vector<VertexId> used;
    for (EdgeId e : subset) {
        used.push_back(edge(e).tail);
        used.push_back(edge(e).head);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto relabel = [&](VertexId v) {
        return static_cast<VertexId>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
    };
    std::vector<EdgeSpec> specs;
    specs.reserve(subset.size());
    for (EdgeId e : subset) {
        const auto& src = edge(e);
        specs.push_back({relabel(src.tail), relabel(src.head), src.color});
    }
    return ColoredGraph(used.size(), specs);
}

std::vector<std::string> ColoredGraph::multiplicity_warnings() const {
    std::map<std::pair<VertexId, VertexId>, std::size_t> counts;
    for (const auto& e : edges_) {
        counts[{std::min(e.tail, e.head), std::max(e.tail, e.head)}]++;
    }
    std::vector<std::string> out;
    for (const auto& [key, count] : counts) {
        if (key.first == key.second && count > 4) {
            out.push_back("vertex " + std::to_string(key.first) + " has " + std::to_string(count) +
                          " loops (K_n^{6,4} allows 4)");
        } else if (key.first != key.second && count > 6) {
            out.push_back("vertex pair " + std::to_string(key.first) + "-" + std::to_string(key.second) + " has " +
                          std::to_string(count) + " parallel edges (K_n^{6,4} allows 6)");
        }
    }
    return out;
}

std::vector<EdgeId> ColoredGraph::all_edges() const {
    std::vector<EdgeId> ids(edges_.size());
    std::iota(ids.begin(), ids.end(), EdgeId{0});
    return ids;
}

EdgeSubset make_subset(const ColoredGraph& g, std::vector<EdgeId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (!ids.empty() && ids.back() >= g.edge_count()) {
        throw StructuralError("edge id " + std::to_string(ids.back()) + " is not in the graph");
    }
    return ids;
}

void PotentialForest::reset() {
    for (VertexId v : touched_list_) touched_[v] = 0;
    touched_list_.clear();
    touched_count_ = 0;
    forest_edges_ = 0;
}

void PotentialForest::touch(VertexId v) {
    if (!touched_[v]) {
        touched_[v] = 1;
        parent_[v] = v;
        offset_[v] = {};
        touched_list_.push_back(v);
        ++touched_count_;
    }
}

VertexId PotentialForest::find(VertexId v) {
    if (!touched_[v]) return v;
    VertexId root = v;
    Color acc;
    while (parent_[root] != root) {
        acc += offset_[root];
        root = parent_[root];
    }
    // Path compression: every vertex on the path now points at the root
    // with its full offset.
    VertexId cur = v;
    while (parent_[cur] != root && cur != root) {
        VertexId next = parent_[cur];
        Color here = offset_[cur];
        offset_[cur] = acc;
        parent_[cur] = root;
        acc -= here;
        cur = next;
    }
    return root;
}

Color PotentialForest::potential(VertexId v) {
    if (!touched_[v]) return {};
    find(v);
    return parent_[v] == v ? Color{} : offset_[v];
}

std::optional<Color> PotentialForest::add(VertexId tail, VertexId head, Color color) {
    touch(tail);
    touch(head);
    VertexId rt = find(tail);
    VertexId rh = find(head);
    Color pt = potential(tail);
    Color ph = potential(head);
    if (rt == rh) return pt + color - ph;
    // Require pos(head) = pos(tail) + color.
    parent_[rh] = rt;
    offset_[rh] = pt + color - ph;
    ++forest_edges_;
    return std::nullopt;
}

SubsetCounts count_subset(const ColoredGraph& g, std::span<const EdgeId> subset, PotentialForest& forest) {
    forest.reset();
    SubsetCounts out;
    ImageSpan span;
    for (EdgeId e : subset) {
        const auto& edge = g.edge(e);
        if (auto image = forest.add(edge.tail, edge.head, edge.color)) {
            if (!span.add(*image)) out.f_independent = false;
        }
    }
    out.vertices = forest.vertices_touched();
    out.edges = subset.size();
    out.components = forest.components();
    out.z2_rank = span.rank();
    return out;
}

SubsetCounts count_subset(const ColoredGraph& g, std::span<const EdgeId> subset) {
    PotentialForest forest(g.vertex_count());
    return count_subset(g, subset, forest);
}

} // namespace cgrig
