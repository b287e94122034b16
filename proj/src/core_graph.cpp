#include "cgrig/core_graph.hpp"

#include "cgrig/errors.hpp"
#include "cgrig/potential_forest.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cgrig {
namespace {

struct ForestArc {
    EdgeId edge;
    VertexId to;
    Direction direction;
};

// Forest path from `from` to `to` as walk steps; empty when from == to.
ClosedWalk forest_path(const std::vector<std::vector<ForestArc>>& adj, VertexId from, VertexId to) {
    if (from == to) return {};
    std::vector<int> seen(adj.size(), 0);
    std::vector<std::pair<VertexId, WalkStep>> parent(adj.size());
    std::deque<VertexId> queue{from};
    seen[from] = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (const auto& arc : adj[v]) {
            if (seen[arc.to]) continue;
            seen[arc.to] = 1;
            parent[arc.to] = {v, WalkStep{arc.edge, arc.direction}};
            queue.push_back(arc.to);
        }
    }
    if (!seen[to]) throw InternalError("forest path requested between different trees");
    ClosedWalk path;
    for (VertexId v = to; v != from; v = parent[v].first) path.push_back(parent[v].second);
    std::reverse(path.begin(), path.end());
    return path;
}

// Canonical representative of v modulo the lattice described by `h`.
Color reduce_mod(const HermiteForm& h, Color v) {
    auto floor_div = [](std::int64_t x, std::int64_t y) {
        std::int64_t q = x / y;
        if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
        return q;
    };
    if (h.a != 0) v = v - floor_div(v.g1, h.a) * Color{h.a, h.b};
    if (h.d != 0) v = v - floor_div(v.g2, h.d) * Color{0, h.d};
    return v;
}

} // namespace

Color rho_of_walk(const ColoredGraph& g, const ClosedWalk& walk) {
    if (walk.empty()) throw StructuralError("closed walk has no steps");
    Color sum;
    VertexId start = 0;
    VertexId at = 0;
    for (std::size_t k = 0; k < walk.size(); ++k) {
        const auto& step = walk[k];
        if (step.edge >= g.edge_count()) throw StructuralError("walk uses an edge id outside the graph");
        const auto& e = g.edge(step.edge);
        const bool fwd = step.direction == Direction::forward;
        const VertexId from = fwd ? e.tail : e.head;
        const VertexId to = fwd ? e.head : e.tail;
        if (k == 0) {
            start = from;
        } else if (from != at) {
            throw StructuralError("walk step " + std::to_string(k) + " does not start where step " +
                                  std::to_string(k - 1) + " ended");
        }
        at = to;
        sum += fwd ? e.color : -e.color;
    }
    if (at != start) throw StructuralError("walk does not return to its start vertex");
    return sum;
}

int z2_rank(const ColoredGraph& g, std::span<const EdgeId> subset) {
    return count_subset(g, subset).z2_rank;
}

ComponentPartition components(const ColoredGraph& g, std::span<const EdgeId> subset) {
    PotentialForest forest(g.vertex_count());
    std::vector<char> used(g.vertex_count(), 0);
    for (EdgeId e : subset) {
        const auto& edge = g.edge(e);
        forest.add(edge.tail, edge.head, edge.color);
        used[edge.tail] = used[edge.head] = 1;
    }
    std::map<VertexId, std::size_t> root_to_part;
    ComponentPartition out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!used[v]) continue;
        VertexId r = forest.find(v);
        auto [it, inserted] = root_to_part.try_emplace(r, out.parts.size());
        if (inserted) out.parts.emplace_back();
        out.parts[it->second].push_back(v);
    }
    out.count = out.parts.size();
    return out;
}

std::vector<FundamentalCycle> fundamental_cycles(const ColoredGraph& g, std::span<const EdgeId> subset) {
    PotentialForest forest(g.vertex_count());
    std::vector<std::vector<ForestArc>> adj(g.vertex_count());
    std::vector<FundamentalCycle> out;
    for (EdgeId id : subset) {
        const auto& e = g.edge(id);
        auto image = forest.add(e.tail, e.head, e.color);
        if (!image) {
            adj[e.tail].push_back({id, e.head, Direction::forward});
            adj[e.head].push_back({id, e.tail, Direction::backward});
            continue;
        }
        FundamentalCycle cycle{id, {WalkStep{id, Direction::forward}}, *image};
        auto back = forest_path(adj, e.head, e.tail);
        cycle.walk.insert(cycle.walk.end(), back.begin(), back.end());
        out.push_back(std::move(cycle));
    }
    return out;
}

TreePotentials tree_potentials(const ColoredGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<ForestArc>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.tail].push_back({e.id, e.head, Direction::forward});
        adj[e.head].push_back({e.id, e.tail, Direction::backward});
    }
    TreePotentials out{std::vector<VertexId>(n), std::vector<Color>(n)};
    std::vector<char> seen(n, 0);
    for (VertexId r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        out.root[r] = r;
        std::deque<VertexId> queue{r};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (const auto& arc : adj[v]) {
                if (seen[arc.to]) continue;
                seen[arc.to] = 1;
                const Color c = g.edge(arc.edge).color;
                out.sigma[arc.to] = out.sigma[v] + (arc.direction == Direction::forward ? c : -c);
                out.root[arc.to] = r;
                queue.push_back(arc.to);
            }
        }
    }
    return out;
}

DevelopmentWindow develop_window(const ColoredGraph& g, const Window& window) {
    if (window.x_max < window.x_min || window.y_max < window.y_min) {
        throw StructuralError("development window is empty");
    }
    const std::size_t n = g.vertex_count();
    const std::size_t h = window.height();
    DevelopmentWindow out;
    out.window = window;

    auto index_of = [&](VertexId v, Color t) {
        return (static_cast<std::size_t>(t.g1 - window.x_min) * h + static_cast<std::size_t>(t.g2 - window.y_min)) * n +
               v;
    };
    for (std::int64_t x = window.x_min; x <= window.x_max; ++x) {
        for (std::int64_t y = window.y_min; y <= window.y_max; ++y) {
            for (VertexId v = 0; v < n; ++v) out.vertices.push_back({v, Color{x, y}});
        }
    }

    PotentialForest uf(out.vertices.size());
    for (const auto& dv : out.vertices) {
        if (dv.vertex != 0) continue;
        for (const auto& e : g.edges()) {
            const Color from = dv.translate;
            const Color to = from + e.color;
            if (!window.contains(to)) continue;
            const std::size_t tail = index_of(e.tail, from);
            const std::size_t head = index_of(e.head, to);
            out.edges.push_back({e.id, from, tail, head});
            uf.add(static_cast<VertexId>(tail), static_cast<VertexId>(head), Color{});
        }
    }

    std::map<VertexId, std::size_t> ids;
    out.component.resize(out.vertices.size());
    std::set<std::size_t> core_components;
    for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        VertexId root = uf.find(static_cast<VertexId>(i));
        auto [it, inserted] = ids.try_emplace(root, ids.size());
        out.component[i] = it->second;
        if (window.in_core(out.vertices[i].translate)) core_components.insert(it->second);
    }
    out.observed_components = ids.size();
    out.observed_core_components = core_components.size();

    // Quotient components and their image lattices.
    const auto all = g.all_edges();
    const auto parts = components(g, all);
    const auto potentials = tree_potentials(g);
    std::vector<std::size_t> part_of(n, SIZE_MAX);
    for (std::size_t p = 0; p < parts.parts.size(); ++p) {
        for (VertexId v : parts.parts[p]) part_of[v] = p;
    }
    std::vector<std::vector<Color>> images(parts.parts.size());
    for (const auto& cycle : fundamental_cycles(g, all)) {
        images[part_of[g.edge(cycle.closing_edge).tail]].push_back(cycle.image);
    }
    for (std::size_t p = 0; p < parts.parts.size(); ++p) {
        ComponentPrediction pred;
        pred.vertices = parts.parts[p];
        pred.image_lattice = hermite_form(images[p]);
        pred.z2_rank = pred.image_lattice.rank();
        pred.index = pred.image_lattice.index();
        pred.shape = pred.z2_rank == 2   ? DevelopmentShape::finite_many_infinite
                     : pred.z2_rank == 1 ? DevelopmentShape::infinite_many_infinite
                                         : DevelopmentShape::infinite_many_finite;
        out.predictions.push_back(std::move(pred));
    }

    // (i, t) lies in the same development component as (root, t - sigma_i),
    // and (root, s) ~ (root, s + lattice).
    std::map<std::tuple<std::size_t, std::int64_t, std::int64_t>, std::size_t> labels;
    std::set<std::size_t> core_labels;
    for (const auto& dv : out.vertices) {
        const std::size_t p = part_of[dv.vertex];
        std::tuple<std::size_t, std::int64_t, std::int64_t> key;
        if (p == SIZE_MAX) {
            key = {SIZE_MAX - dv.vertex, dv.translate.g1, dv.translate.g2};
        } else {
            Color label = reduce_mod(out.predictions[p].image_lattice, dv.translate - potentials.sigma[dv.vertex]);
            key = {p, label.g1, label.g2};
        }
        auto [it, inserted] = labels.try_emplace(key, labels.size());
        out.predicted_class.push_back(it->second);
        if (window.in_core(dv.translate)) core_labels.insert(it->second);
    }
    out.predicted_core_classes = core_labels.size();
    return out;
}

ColoredGraph sublattice_cover(const ColoredGraph& g, const IntBasis& basis) {
    const Sublattice lattice(basis);
    const auto sheets = static_cast<std::size_t>(lattice.index());
    const std::size_t n = g.vertex_count();
    std::vector<ColoredGraph::EdgeSpec> specs;
    specs.reserve(sheets * g.edge_count());
    for (std::size_t s = 0; s < sheets; ++s) {
        const Color rep = lattice.representative(s);
        for (const auto& e : g.edges()) {
            const Color target = rep + e.color;
            const Color reduced = lattice.reduce(target);
            const Color coords = lattice.coordinates(target - reduced);
            specs.push_back({static_cast<VertexId>(s * n + e.tail),
                             static_cast<VertexId>(lattice.coset_index(reduced) * n + e.head), coords});
        }
    }
    return ColoredGraph(sheets * n, specs);
}

} // namespace cgrig
