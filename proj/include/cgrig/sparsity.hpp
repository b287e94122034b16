#pragma once

#include "cgrig/core_graph.hpp"
#include "cgrig/graph.hpp"
#include "cgrig/potential_forest.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cgrig {

/// Counts of an edge-induced subgraph. The empty subset has all counts 0.
struct CountReport {
    std::size_t vertices = 0;   // n'
    std::size_t edges = 0;      // m'
    std::size_t components = 0; // c'
    int z2_rank = 0;            // rk'
    std::int64_t f = 0;         // n' + rk' - c'
    std::int64_t bound232 = -1; // 2f - 1, the colored-Laman bound
    std::int64_t bound222 = 0;  // 2f
};

CountReport count_report(const ColoredGraph& g, std::span<const EdgeId> subset);

std::int64_t f_value(const ColoredGraph& g, std::span<const EdgeId> subset);

/// Independence in the matroid whose rank function is f.
bool is_f_independent(const ColoredGraph& g, std::span<const EdgeId> subset);

struct ElevenKResult {
    bool holds = false;
    int k = 0;
};

/// Whether the subset is a spanning (1,1,k)-graph with k its own Z^2-rank:
/// a spanning tree plus k edges whose fundamental cycles have independent
/// images. A one-vertex graph accepts the empty spanning tree.
ElevenKResult is_11k(const ColoredGraph& g, std::span<const EdgeId> subset);

enum class ElevenKShape : int {
    two_loops_at_vertex = 1,  // subdivision of a vertex with two loops
    edge_with_end_loops = 2,  // subdivision of an edge with a loop at each end
    three_parallel_edges = 3, // subdivision of a triple edge
};

struct ShapeReport {
    ElevenKShape shape;
    /// Edges of the 2-core left after stripping leaves.
    EdgeSubset core;
    /// Cycles with independent images; `first` has an edge outside `second`.
    FundamentalCycle first;
    FundamentalCycle second;
};

/// Topological type of a (1,1,2)-graph. Throws DomainError otherwise.
ShapeReport classify_11k_shape(const ColoredGraph& g, std::span<const EdgeId> subset);

/// Maintains a partition of a set of edges into two f-independent parts,
/// growing it by Edmonds' matroid-partition augmenting paths (breadth-first,
/// so every augmenting path used is shortest).
class TwoPartition {
public:
    explicit TwoPartition(const ColoredGraph& g);

    /// Adds `e` (an edge of the graph passed at construction). Returns false
    /// and leaves the partition unchanged when the enlarged set is not
    /// independent in the union matroid.
    bool insert(EdgeId e);
    /// Removes a member edge.
    void erase(EdgeId e);

    bool contains(EdgeId e) const { return owner_[e] >= 0; }
    /// Part contents in ascending id order.
    EdgeSubset part(int which) const;
    std::size_t size() const { return parts_[0].size() + parts_[1].size(); }

private:
    bool independent_with(int which, EdgeId add, std::optional<EdgeId> drop);

    const ColoredGraph* g_;
    std::vector<int> owner_;
    std::vector<EdgeId> parts_[2];
    PotentialForest scratch_;
    std::vector<EdgeId> buffer_;
};

struct Decomposition {
    EdgeSubset part1;
    EdgeSubset part2;
};

/// Independence in the union of two copies of the f-matroid (the matroid of
/// the 2f count); returns the certifying partition on success.
std::optional<Decomposition> union_independent(const ColoredGraph& g, std::span<const EdgeId> subset);

bool is_222_sparse(const ColoredGraph& g);
/// Sparse with m = 2n - 2 + 2k, k the Z^2-rank.
bool is_222_graph(const ColoredGraph& g);

/// Splits a (2,2,k)-graph into two spanning (1,1,k)-graphs. Throws
/// DomainError when the graph is not (2,2,k).
Decomposition decompose_two_11k(const ColoredGraph& g);

bool is_colored_laman_sparse(const ColoredGraph& g);
bool is_colored_laman_sparse(const ColoredGraph& g, std::span<const EdgeId> subset);

/// m = 2n + 1 and every single-edge doubling is a (2,2,2)-graph.
bool is_colored_laman(const ColoredGraph& g);

/// Greedy maximal colored-Laman-sparse subset scanning edges by ascending id.
EdgeSubset maximal_laman_sparse_subset(const ColoredGraph& g);

struct CircuitReport {
    EdgeSubset circuit;
    CountReport counts;
};

/// Minimal violation of colored-Laman sparsity: m' = 2f, except a single
/// loop colored (0,0), which has m' = 1 and f = 0. Throws DomainError when the
/// graph is sparse, InternalError when the extracted set fails the circuit
/// invariants.
CircuitReport find_laman_circuit(const ColoredGraph& g);

/// The graph with loops (1,0), (0,1), (1,1) added at `vertex`.
ColoredGraph add_three_loops(const ColoredGraph& g, VertexId vertex);

struct RossReport {
    bool is_ross = false;
    /// Verdict of the direct count route; nullopt when m exceeds the
    /// enumeration budget and only the augmentation route ran.
    std::optional<bool> direct;
    bool augmented = false;
};

/// Decides Ross graphs by direct counts and by adding three loops at vertex 0
/// and testing colored-Laman. Throws InternalError on disagreement.
RossReport is_ross(const ColoredGraph& g);

enum class SparsityFamily { laman, two_two_two, ross };

struct BruteForceVerdict {
    bool sparse = true;
    /// Subset with the largest excess m' - bound; the first in enumeration
    /// order on ties.
    std::optional<EdgeSubset> violation;
    std::int64_t excess = 0;
};

inline constexpr std::size_t brute_force_budget = 22;

/// Enumerates every nonempty edge subset. Throws BudgetError above
/// brute_force_budget edges.
BruteForceVerdict brute_force_sparsity(const ColoredGraph& g, SparsityFamily family);

} // namespace cgrig
