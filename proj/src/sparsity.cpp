#include "cgrig/sparsity.hpp"

#include "cgrig/errors.hpp"

#include <algorithm>
#include <deque>

namespace cgrig {
namespace {

std::vector<EdgeId> without(std::span<const EdgeId> set, EdgeId drop) {
    std::vector<EdgeId> out;
    out.reserve(set.size());
    for (EdgeId e : set) {
        if (e != drop) out.push_back(e);
    }
    return out;
}

// The graph followed by one parallel copy of every edge in `subset`; copy of
// subset[i] gets id m + i.
ColoredGraph append_copies(const ColoredGraph& g, std::span<const EdgeId> subset) {
    std::vector<ColoredGraph::EdgeSpec> specs;
    specs.reserve(g.edge_count() + subset.size());
    for (const auto& e : g.edges()) specs.push_back({e.tail, e.head, e.color});
    for (EdgeId id : subset) {
        const auto& e = g.edge(id);
        specs.push_back({e.tail, e.head, e.color});
    }
    return ColoredGraph(g.vertex_count(), specs);
}

// Greedy scan: B + e is kept when B + e + copy(e) is independent for 2f.
// Since B is sparse, that is exactly sparsity of B + e.
EdgeSubset greedy_sparse(const ColoredGraph& g, std::span<const EdgeId> subset, bool stop_on_reject) {
    const ColoredGraph doubled = append_copies(g, subset);
    const auto m = static_cast<EdgeId>(g.edge_count());
    TwoPartition partition(doubled);
    EdgeSubset kept;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const EdgeId e = subset[i];
        const EdgeId copy = m + static_cast<EdgeId>(i);
        if (!partition.insert(e)) {
            if (stop_on_reject) return kept;
            continue;
        }
        if (!partition.insert(copy)) {
            partition.erase(e);
            if (stop_on_reject) return kept;
            continue;
        }
        partition.erase(copy);
        kept.push_back(e);
    }
    return kept;
}

} // namespace

CountReport count_report(const ColoredGraph& g, std::span<const EdgeId> subset) {
    const SubsetCounts c = count_subset(g, subset);
    CountReport r;
    r.vertices = c.vertices;
    r.edges = c.edges;
    r.components = c.components;
    r.z2_rank = c.z2_rank;
    r.f = c.f();
    r.bound232 = 2 * r.f - 1;
    r.bound222 = 2 * r.f;
    return r;
}

std::int64_t f_value(const ColoredGraph& g, std::span<const EdgeId> subset) {
    return count_subset(g, subset).f();
}

bool is_f_independent(const ColoredGraph& g, std::span<const EdgeId> subset) {
    return count_subset(g, subset).f_independent;
}

ElevenKResult is_11k(const ColoredGraph& g, std::span<const EdgeId> subset) {
    const SubsetCounts c = count_subset(g, subset);
    ElevenKResult r;
    r.k = c.z2_rank;
    const std::size_t n = g.vertex_count();
    const bool spanning = c.vertices == n || (n == 1 && c.vertices == 0);
    const bool connected = c.components == 1 || (n == 1 && c.vertices == 0);
    r.holds = spanning && connected && c.f_independent &&
              c.edges + 1 == n + static_cast<std::size_t>(c.z2_rank);
    return r;
}

ShapeReport classify_11k_shape(const ColoredGraph& g, std::span<const EdgeId> subset) {
    const auto check = is_11k(g, subset);
    if (!check.holds || check.k != 2) throw DomainError("subset is not a (1,1,2)-graph");

    // Strip leaves to reach the 2-core.
    const std::size_t n = g.vertex_count();
    std::vector<int> degree(n, 0);
    std::vector<std::vector<EdgeId>> incident(n);
    for (EdgeId id : subset) {
        const auto& e = g.edge(id);
        degree[e.tail] += 1;
        degree[e.head] += 1;
        incident[e.tail].push_back(id);
        if (!e.is_loop()) incident[e.head].push_back(id);
    }
    std::vector<char> removed(g.edge_count(), 0);
    std::deque<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        const VertexId v = leaves.front();
        leaves.pop_front();
        if (degree[v] != 1) continue;
        for (EdgeId id : incident[v]) {
            if (removed[id]) continue;
            removed[id] = 1;
            const auto& e = g.edge(id);
            const VertexId w = e.tail == v ? e.head : e.tail;
            degree[v] -= 1;
            degree[w] -= 1;
            if (degree[w] == 1) leaves.push_back(w);
            break;
        }
    }

    ShapeReport report{};
    for (EdgeId id : subset) {
        if (!removed[id]) report.core.push_back(id);
    }
    std::vector<VertexId> branch;
    for (VertexId v = 0; v < n; ++v) {
        if (degree[v] >= 3) branch.push_back(v);
    }
    if (branch.size() == 1) {
        report.shape = ElevenKShape::two_loops_at_vertex;
    } else if (branch.size() == 2) {
        // Follow each chain leaving the first branch vertex; a chain that
        // comes back to it is a (subdivided) loop.
        const VertexId b0 = branch[0];
        bool has_loop_chain = false;
        for (EdgeId start : incident[b0]) {
            if (removed[start]) continue;
            EdgeId via = start;
            const auto& e0 = g.edge(start);
            VertexId at = e0.tail == b0 ? e0.head : e0.tail;
            while (degree[at] == 2) {
                EdgeId next = via;
                for (EdgeId id : incident[at]) {
                    if (!removed[id] && id != via) next = id;
                }
                if (next == via) throw InternalError("degree-two core vertex without a second edge");
                const auto& e = g.edge(next);
                at = e.tail == at ? e.head : e.tail;
                via = next;
            }
            if (at == b0) has_loop_chain = true;
        }
        report.shape = has_loop_chain ? ElevenKShape::edge_with_end_loops : ElevenKShape::three_parallel_edges;
    } else {
        throw InternalError("2-core of a (1,1,2)-graph has " + std::to_string(branch.size()) + " branch vertices");
    }

    auto cycles = fundamental_cycles(g, subset);
    if (cycles.size() != 2) throw InternalError("(1,1,2)-graph without exactly two fundamental cycles");
    report.first = std::move(cycles[0]);
    report.second = std::move(cycles[1]);
    return report;
}

TwoPartition::TwoPartition(const ColoredGraph& g)
    : g_(&g), owner_(g.edge_count(), -1), scratch_(g.vertex_count()) {}

EdgeSubset TwoPartition::part(int which) const {
    EdgeSubset out = parts_[which];
    std::sort(out.begin(), out.end());
    return out;
}

bool TwoPartition::independent_with(int which, EdgeId add, std::optional<EdgeId> drop) {
    buffer_.clear();
    for (EdgeId e : parts_[which]) {
        if (!drop || e != *drop) buffer_.push_back(e);
    }
    buffer_.push_back(add);
    return count_subset(*g_, buffer_, scratch_).f_independent;
}

void TwoPartition::erase(EdgeId e) {
    const int w = owner_[e];
    if (w < 0) throw StructuralError("edge is not in the partition");
    auto& p = parts_[w];
    p.erase(std::find(p.begin(), p.end(), e));
    owner_[e] = -1;
}

bool TwoPartition::insert(EdgeId x) {
    if (owner_.at(x) >= 0) throw StructuralError("edge is already in the partition");
    struct Link {
        EdgeId prev;
        int part; // part `prev` enters, displacing this element
    };
    std::vector<char> seen(owner_.size(), 0);
    std::vector<Link> link(owner_.size());
    std::deque<EdgeId> queue{x};
    seen[x] = 1;
    while (!queue.empty()) {
        const EdgeId u = queue.front();
        queue.pop_front();
        for (int i = 0; i < 2; ++i) {
            if (owner_[u] == i) continue;
            if (independent_with(i, u, std::nullopt)) {
                // Shift along the path: u enters part i, the element it
                // displaced moves on, back to x.
                EdgeId cur = u;
                int target = i;
                while (true) {
                    if (owner_[cur] >= 0) erase(cur);
                    parts_[target].push_back(cur);
                    owner_[cur] = target;
                    if (cur == x) return true;
                    const Link l = link[cur];
                    cur = l.prev;
                    target = l.part;
                }
            }
            for (EdgeId y : parts_[i]) {
                if (seen[y]) continue;
                if (!independent_with(i, u, y)) continue;
                seen[y] = 1;
                link[y] = {u, i};
                queue.push_back(y);
            }
        }
    }
    return false;
}

std::optional<Decomposition> union_independent(const ColoredGraph& g, std::span<const EdgeId> subset) {
    TwoPartition partition(g);
    for (EdgeId e : subset) {
        if (!partition.insert(e)) return std::nullopt;
    }
    return Decomposition{partition.part(0), partition.part(1)};
}

bool is_222_sparse(const ColoredGraph& g) {
    return union_independent(g, g.all_edges()).has_value();
}

bool is_222_graph(const ColoredGraph& g) {
    const auto all = g.all_edges();
    const int k = z2_rank(g, all);
    if (g.edge_count() + 2 != 2 * g.vertex_count() + 2 * static_cast<std::size_t>(k)) return false;
    return is_222_sparse(g);
}

Decomposition decompose_two_11k(const ColoredGraph& g) {
    const auto all = g.all_edges();
    const int k = z2_rank(g, all);
    if (g.edge_count() + 2 != 2 * g.vertex_count() + 2 * static_cast<std::size_t>(k)) {
        throw DomainError("edge count is not 2n - 2 + 2k");
    }
    auto split = union_independent(g, all);
    if (!split) throw DomainError("graph is not (2,2,2)-sparse");
    for (const auto* part : {&split->part1, &split->part2}) {
        const auto r = is_11k(g, *part);
        if (!r.holds || r.k != k) throw InternalError("decomposition part is not a spanning (1,1,k)-graph");
    }
    return *split;
}

bool is_colored_laman_sparse(const ColoredGraph& g, std::span<const EdgeId> subset) {
    return greedy_sparse(g, subset, true).size() == subset.size();
}

bool is_colored_laman_sparse(const ColoredGraph& g) {
    const auto all = g.all_edges();
    return is_colored_laman_sparse(g, all);
}

bool is_colored_laman(const ColoredGraph& g) {
    if (g.edge_count() != 2 * g.vertex_count() + 1) return false;
    const auto all = g.all_edges();
    const ColoredGraph doubled = append_copies(g, all);
    const auto m = static_cast<EdgeId>(g.edge_count());
    TwoPartition base(doubled);
    for (EdgeId e : all) {
        if (!base.insert(e)) return false;
    }
    for (EdgeId e : all) {
        TwoPartition trial = base;
        if (!trial.insert(m + e)) return false;
    }
    return true;
}

EdgeSubset maximal_laman_sparse_subset(const ColoredGraph& g) {
    const auto all = g.all_edges();
    return greedy_sparse(g, all, false);
}

CircuitReport find_laman_circuit(const ColoredGraph& g) {
    const EdgeSubset basis = maximal_laman_sparse_subset(g);
    if (basis.size() == g.edge_count()) throw DomainError("graph is colored-Laman sparse; no circuit");
    EdgeId extra = 0;
    while (std::binary_search(basis.begin(), basis.end(), extra)) ++extra;

    EdgeSubset grown = basis;
    grown.insert(std::upper_bound(grown.begin(), grown.end(), extra), extra);
    EdgeSubset circuit;
    for (EdgeId e : grown) {
        if (e == extra || is_colored_laman_sparse(g, without(grown, e))) circuit.push_back(e);
    }

    CircuitReport report{circuit, count_report(g, circuit)};
    // A loop colored (0,0) is a one-edge circuit with f = 0.
    const bool zero_loop = circuit.size() == 1 && report.counts.f == 0;
    if (!zero_loop && static_cast<std::int64_t>(report.counts.edges) != 2 * report.counts.f) {
        throw InternalError("extracted circuit does not have m' = 2f");
    }
    for (EdgeId e : circuit) {
        if (!is_colored_laman_sparse(g, without(circuit, e))) {
            throw InternalError("extracted circuit is not minimal");
        }
    }
    return report;
}

ColoredGraph add_three_loops(const ColoredGraph& g, VertexId vertex) {
    if (vertex >= g.vertex_count()) throw StructuralError("loop vertex outside the graph");
    return g.with_edge(vertex, vertex, {1, 0}).with_edge(vertex, vertex, {0, 1}).with_edge(vertex, vertex, {1, 1});
}

RossReport is_ross(const ColoredGraph& g) {
    RossReport r;
    if (g.vertex_count() == 0) return r;
    r.augmented = is_colored_laman(add_three_loops(g, 0));
    if (g.edge_count() <= brute_force_budget) {
        r.direct = g.edge_count() + 2 == 2 * g.vertex_count() &&
                   brute_force_sparsity(g, SparsityFamily::ross).sparse;
        if (*r.direct != r.augmented) {
            throw InternalError("Ross counts and the three-loop augmentation disagree");
        }
    }
    r.is_ross = r.augmented;
    return r;
}

BruteForceVerdict brute_force_sparsity(const ColoredGraph& g, SparsityFamily family) {
    const std::size_t m = g.edge_count();
    if (m > brute_force_budget) {
        throw BudgetError("brute-force enumeration is limited to " + std::to_string(brute_force_budget) +
                          " edges, graph has " + std::to_string(m));
    }
    PotentialForest forest(g.vertex_count());
    BruteForceVerdict verdict;
    std::int64_t worst = INT64_MIN;
    std::uint32_t worst_mask = 0;
    std::vector<EdgeId> subset;
    subset.reserve(m);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        subset.clear();
        for (EdgeId e = 0; e < m; ++e) {
            if (mask & (std::uint32_t{1} << e)) subset.push_back(e);
        }
        const SubsetCounts c = count_subset(g, subset, forest);
        const std::int64_t f = c.f();
        const auto n = static_cast<std::int64_t>(c.vertices);
        std::int64_t bound = 0;
        switch (family) {
        case SparsityFamily::laman: bound = 2 * f - 1; break;
        case SparsityFamily::two_two_two: bound = 2 * f; break;
        case SparsityFamily::ross: bound = c.z2_rank == 0 ? 2 * n - 3 : 2 * n - 2; break;
        }
        const std::int64_t excess = static_cast<std::int64_t>(c.edges) - bound;
        if (excess > worst) {
            worst = excess;
            worst_mask = mask;
        }
    }
    if (worst > 0) {
        verdict.sparse = false;
        verdict.excess = worst;
        EdgeSubset v;
        for (EdgeId e = 0; e < m; ++e) {
            if (worst_mask & (std::uint32_t{1} << e)) v.push_back(e);
        }
        verdict.violation = std::move(v);
    }
    return verdict;
}

} // namespace cgrig
