#include "doctest.h"

#include "cgrig/errors.hpp"
#include "cgrig/sparsity.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <set>

using namespace cgrig;

namespace {

ColoredGraph loops(std::initializer_list<Color> colors) {
    std::vector<ColoredGraph::EdgeSpec> specs;
    for (const auto& c : colors) specs.push_back({0, 0, c});
    return ColoredGraph(1, specs);
}

std::vector<EdgeId> mask_subset(std::uint64_t mask, std::size_t m) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < m; ++e) {
        if (mask >> e & 1) out.push_back(e);
    }
    return out;
}

// Exhaustive check that some split of the subset has both parts f-independent
// according to the oracle counts.
bool partition_exists(const ColoredGraph& g, const std::vector<EdgeId>& subset) {
    const std::size_t k = subset.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<EdgeId> a, b;
        for (std::size_t i = 0; i < k; ++i) (mask >> i & 1 ? a : b).push_back(subset[i]);
        auto indep = [&](const std::vector<EdgeId>& s) {
            return oracle::counts(g, s).f() == static_cast<std::int64_t>(s.size());
        };
        if (indep(a) && indep(b)) return true;
    }
    return false;
}

void check_decomposition(const ColoredGraph& g, const Decomposition& d) {
    std::vector<EdgeId> joined = d.part1;
    joined.insert(joined.end(), d.part2.begin(), d.part2.end());
    std::sort(joined.begin(), joined.end());
    CHECK(joined == g.all_edges());
    const int k = z2_rank(g, g.all_edges());
    const auto r1 = is_11k(g, d.part1);
    const auto r2 = is_11k(g, d.part2);
    CHECK(r1.holds);
    CHECK(r2.holds);
    CHECK(r1.k == k);
    CHECK(r2.k == k);
}

} // namespace

TEST_CASE("f value examples") {
    ColoredGraph single(1);
    CHECK(f_value(single, {}) == 0);
    CHECK(f_value(loops({{1, 0}}), std::vector<EdgeId>{0}) == 1);
    const auto three = loops({{1, 0}, {0, 1}, {1, 1}});
    CHECK(f_value(three, three.all_edges()) == 2);
    CHECK(oracle::counts(three, three.all_edges()).f() == 2);

    const auto rep = count_report(three, three.all_edges());
    CHECK(rep.vertices == 1);
    CHECK(rep.edges == 3);
    CHECK(rep.components == 1);
    CHECK(rep.z2_rank == 2);
    CHECK(rep.bound232 == 3);
    CHECK(rep.bound222 == 4);
}

TEST_CASE("f independence examples") {
    ColoredGraph tree(4, {{0, 1, {3, -1}}, {1, 2, {0, 0}}, {3, 1, {5, 2}}});
    CHECK(is_f_independent(tree, tree.all_edges()));
    const auto collinear = loops({{1, 0}, {2, 0}});
    CHECK_FALSE(is_f_independent(collinear, collinear.all_edges()));
    const auto basis = loops({{1, 0}, {0, 1}});
    CHECK(is_f_independent(basis, basis.all_edges()));
}

TEST_CASE("(1,1,k) recognition examples") {
    ColoredGraph tree(3, {{0, 1, {1, 1}}, {1, 2, {-2, 0}}});
    auto r = is_11k(tree, tree.all_edges());
    CHECK(r.holds);
    CHECK(r.k == 0);

    const auto basis = loops({{1, 0}, {0, 1}});
    r = is_11k(basis, basis.all_edges());
    CHECK(r.holds);
    CHECK(r.k == 2);

    ColoredGraph trivial_cycle(3, {{0, 1, {1, 0}}, {1, 2, {0, 1}}, {2, 0, {-1, -1}}});
    CHECK_FALSE(is_11k(trivial_cycle, trivial_cycle.all_edges()).holds);

    ColoredGraph not_spanning(3, {{0, 1, {0, 0}}});
    CHECK_FALSE(is_11k(not_spanning, not_spanning.all_edges()).holds);
}

TEST_CASE("(1,1,2) shape classification") {
    const auto two_loops = loops({{1, 0}, {0, 1}});
    CHECK(classify_11k_shape(two_loops, two_loops.all_edges()).shape == ElevenKShape::two_loops_at_vertex);

    ColoredGraph dumbbell(2, {{0, 1, {0, 0}}, {0, 0, {1, 0}}, {1, 1, {0, 1}}});
    CHECK(classify_11k_shape(dumbbell, dumbbell.all_edges()).shape == ElevenKShape::edge_with_end_loops);

    ColoredGraph theta(2, {{0, 1, {0, 0}}, {0, 1, {1, 0}}, {0, 1, {0, 1}}});
    const auto rep = classify_11k_shape(theta, theta.all_edges());
    CHECK(rep.shape == ElevenKShape::three_parallel_edges);
    CHECK(rep.first.image.g1 * rep.second.image.g2 - rep.first.image.g2 * rep.second.image.g1 != 0);

    // Pendant trees and subdivided edges are stripped or traced through.
    ColoredGraph subdivided(4, {{0, 1, {0, 0}}, {1, 2, {0, 0}}, {0, 0, {1, 0}}, {2, 2, {0, 1}}, {3, 1, {4, 4}}});
    const auto sub = classify_11k_shape(subdivided, subdivided.all_edges());
    CHECK(sub.shape == ElevenKShape::edge_with_end_loops);
    CHECK(std::find(sub.core.begin(), sub.core.end(), EdgeId{4}) == sub.core.end());

    CHECK_THROWS_AS(classify_11k_shape(theta, std::vector<EdgeId>{0, 1}), DomainError);
}

TEST_CASE("shape witnesses hold on random (1,1,2)-graphs") {
    gen::Rng rng(5);
    int seen[4] = {0, 0, 0, 0};
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<ColoredGraph::EdgeSpec> specs;
        for (VertexId v = 1; v < n; ++v) {
            specs.push_back({static_cast<VertexId>(gen::uniform(rng, 0, v - 1)), v, gen::random_color(rng, 2)});
        }
        for (int i = 0; i < 2; ++i) specs.push_back(gen::random_edge(rng, n, 2));
        const auto g = gen::relabel(rng, ColoredGraph(n, specs));
        const auto all = g.all_edges();
        const auto r = is_11k(g, all);
        if (!r.holds || r.k != 2) {
            CHECK_THROWS_AS(classify_11k_shape(g, all), DomainError);
            continue;
        }
        const auto rep = classify_11k_shape(g, all);
        ++seen[static_cast<int>(rep.shape)];
        const Color a = rep.first.image, b = rep.second.image;
        CHECK(a.g1 * b.g2 - a.g2 * b.g1 != 0);
        CHECK(rho_of_walk(g, rep.first.walk) == a);
        CHECK(rho_of_walk(g, rep.second.walk) == b);
        bool outside = false;
        for (const auto& s : rep.first.walk) {
            bool in_second = false;
            for (const auto& t : rep.second.walk) in_second = in_second || t.edge == s.edge;
            outside = outside || !in_second;
        }
        CHECK(outside);
    }
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
    CHECK(seen[3] > 0);
}

TEST_CASE("union independence examples") {
    const auto doubled = loops({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    const auto d = union_independent(doubled, doubled.all_edges());
    REQUIRE(d.has_value());
    CHECK(d->part1.size() == 2);
    CHECK(d->part2.size() == 2);
    CHECK(is_f_independent(doubled, d->part1));
    CHECK(is_f_independent(doubled, d->part2));
    CHECK(partition_exists(doubled, doubled.all_edges()));

    const auto collinear = loops({{1, 0}, {2, 0}, {3, 0}});
    CHECK_FALSE(union_independent(collinear, collinear.all_edges()).has_value());
    CHECK_FALSE(partition_exists(collinear, collinear.all_edges()));

    CHECK(union_independent(collinear, std::vector<EdgeId>{}).has_value());
}

TEST_CASE("union independence agrees with exhaustive partition search") {
    gen::Rng rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = gen::random_graph(rng, 1 + trial % 3, 1 + trial % 7, 2);
        const auto all = g.all_edges();
        const auto d = union_independent(g, all);
        CHECK(d.has_value() == partition_exists(g, all));
        if (d) {
            CHECK(is_f_independent(g, d->part1));
            CHECK(is_f_independent(g, d->part2));
            CHECK(d->part1.size() + d->part2.size() == all.size());
        }
    }
}

TEST_CASE("two partition insert and erase keep a valid partition") {
    gen::Rng rng(13);
    const auto g = gen::random_graph(rng, 4, 14, 2);
    TwoPartition tp(g);
    std::set<EdgeId> members;
    for (int step = 0; step < 60; ++step) {
        const auto e = static_cast<EdgeId>(gen::uniform(rng, 0, 13));
        if (tp.contains(e)) {
            tp.erase(e);
            members.erase(e);
        } else if (tp.insert(e)) {
            members.insert(e);
        } else {
            std::vector<EdgeId> grown(members.begin(), members.end());
            grown.push_back(e);
            CHECK_FALSE(partition_exists(g, grown));
        }
        CHECK(tp.size() == members.size());
        CHECK(is_f_independent(g, tp.part(0)));
        CHECK(is_f_independent(g, tp.part(1)));
    }
}

TEST_CASE("(2,2,k) examples") {
    const auto doubled = loops({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    CHECK(is_222_sparse(doubled));
    CHECK(is_222_graph(doubled));
    CHECK(oracle::sparse(doubled, oracle::Family::two_two_two));

    const auto collinear = loops({{1, 0}, {2, 0}, {3, 0}, {0, 1}});
    CHECK_FALSE(is_222_sparse(collinear));
    const auto bf = brute_force_sparsity(collinear, SparsityFamily::two_two_two);
    CHECK_FALSE(bf.sparse);
    REQUIRE(bf.violation.has_value());
    CHECK(*bf.violation == EdgeSubset{0, 1, 2});

    ColoredGraph two_trees(2, {{0, 1, {0, 0}}, {0, 1, {0, 0}}});
    CHECK(is_222_graph(two_trees));
    const auto d = decompose_two_11k(two_trees);
    CHECK(d.part1.size() == 1);
    CHECK(d.part2.size() == 1);
    check_decomposition(two_trees, d);
}

TEST_CASE("decomposition into two spanning (1,1,k)-graphs") {
    const auto doubled = loops({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    const auto d = decompose_two_11k(doubled);
    check_decomposition(doubled, d);
    auto colors = [&](const EdgeSubset& s) {
        std::set<std::pair<std::int64_t, std::int64_t>> out;
        for (EdgeId e : s) out.insert({doubled.edge(e).color.g1, doubled.edge(e).color.g2});
        return out;
    };
    const std::set<std::pair<std::int64_t, std::int64_t>> expected{{1, 0}, {0, 1}};
    CHECK(colors(d.part1) == expected);
    CHECK(colors(d.part2) == expected);

    // Example (2,2,2)-graph on three vertices: two interleaved (1,1,2)-graphs.
    ColoredGraph g(3, {{0, 1, {0, 0}}, {1, 2, {0, 0}}, {0, 0, {1, 0}}, {2, 2, {0, 1}},
                       {0, 2, {0, 0}}, {1, 0, {1, 0}}, {1, 0, {0, 1}}, {2, 1, {1, 1}}});
    REQUIRE(is_222_graph(g));
    check_decomposition(g, decompose_two_11k(g));

    CHECK_THROWS_AS(decompose_two_11k(loops({{1, 0}, {0, 1}, {1, 1}})), DomainError);
}

TEST_CASE("decompositions of random (2,2,2)-graphs are sound") {
    gen::Rng rng(17);
    int found = 0;
    for (int trial = 0; trial < 400 && found < 40; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto g = gen::random_graph(rng, n, 2 * n + 2, 2);
        if (!is_222_graph(g)) continue;
        ++found;
        check_decomposition(g, decompose_two_11k(g));
    }
    CHECK(found >= 20);
}

TEST_CASE("colored-Laman examples") {
    const auto one = loops({{1, 0}, {0, 1}, {1, 1}});
    CHECK(is_colored_laman(one));
    CHECK(is_colored_laman_sparse(one));
    CHECK(brute_force_sparsity(one, SparsityFamily::laman).sparse);

    const auto dependent = loops({{1, 0}, {2, 0}, {0, 1}});
    CHECK_FALSE(is_colored_laman(dependent));
    CHECK_FALSE(is_colored_laman_sparse(dependent));

    ColoredGraph two_loops(2, {{0, 0, {1, 0}}, {1, 1, {1, 0}}, {0, 1, {0, 0}}, {0, 1, {0, 1}}, {0, 1, {1, 1}}});
    CHECK(two_loops.edge_count() == 5);
    CHECK_FALSE(is_colored_laman(two_loops));
    CHECK_FALSE(oracle::colored_laman(two_loops));
    const auto bf = brute_force_sparsity(two_loops, SparsityFamily::laman);
    CHECK_FALSE(bf.sparse);
    REQUIRE(bf.violation.has_value());
    CHECK(*bf.violation == EdgeSubset{0, 1});

    CHECK(is_colored_laman_sparse(ColoredGraph(3)));
}

TEST_CASE("circuit examples") {
    ColoredGraph two(2, {{0, 0, {1, 0}}, {1, 1, {1, 0}}});
    auto rep = find_laman_circuit(two);
    CHECK(rep.circuit == EdgeSubset{0, 1});
    CHECK(rep.counts.edges == 2);
    CHECK(rep.counts.f == 1);

    rep = find_laman_circuit(loops({{1, 0}, {2, 0}}));
    CHECK(rep.circuit == EdgeSubset{0, 1});

    rep = find_laman_circuit(loops({{1, 0}, {0, 1}, {1, 1}, {1, 2}}));
    CHECK(rep.circuit.size() == 4);
    CHECK(rep.counts.edges == static_cast<std::size_t>(2 * rep.counts.f));

    rep = find_laman_circuit(loops({{1, 0}, {0, 0}}));
    CHECK(rep.circuit == EdgeSubset{1});
    CHECK(rep.counts.f == 0);

    CHECK_THROWS_AS(find_laman_circuit(loops({{1, 0}, {0, 1}, {1, 1}})), DomainError);
}

TEST_CASE("Ross examples") {
    ColoredGraph ross(2, {{0, 1, {0, 0}}, {0, 1, {1, 0}}});
    auto r = is_ross(ross);
    CHECK(r.is_ross);
    CHECK(r.direct == std::optional<bool>(true));
    CHECK(r.augmented);

    ColoredGraph doubled_tree(2, {{0, 1, {0, 0}}, {0, 1, {0, 0}}});
    r = is_ross(doubled_tree);
    CHECK_FALSE(r.is_ross);
    CHECK_FALSE(r.augmented);

    r = is_ross(ColoredGraph(1));
    CHECK(r.is_ross);

    const auto aug = add_three_loops(ross, 1);
    CHECK(aug.edge_count() == 5);
    CHECK(aug.edge(2).tail == 1);
    CHECK(aug.edge(4).color == Color{1, 1});
}

TEST_CASE("brute force examples and budget") {
    CHECK(brute_force_sparsity(ColoredGraph(0), SparsityFamily::laman).sparse);
    CHECK(brute_force_sparsity(ColoredGraph(0), SparsityFamily::two_two_two).sparse);
    CHECK(brute_force_sparsity(ColoredGraph(0), SparsityFamily::ross).sparse);

    std::vector<ColoredGraph::EdgeSpec> specs(brute_force_budget + 1, ColoredGraph::EdgeSpec{0, 1, {0, 0}});
    CHECK_THROWS_AS(brute_force_sparsity(ColoredGraph(2, specs), SparsityFamily::laman), BudgetError);
}

TEST_CASE("f has unit increments and is submodular") {
    gen::Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = gen::random_graph(rng, 1 + trial % 5, 8, 2);
        const auto m = g.edge_count();
        const auto outer_mask = static_cast<std::uint64_t>(gen::uniform(rng, 0, (1 << m) - 1));
        const auto inner_mask = outer_mask & static_cast<std::uint64_t>(gen::uniform(rng, 0, (1 << m) - 1));
        const auto outer = mask_subset(outer_mask, m);
        const auto inner = mask_subset(inner_mask, m);
        for (EdgeId e = 0; e < m; ++e) {
            if (outer_mask >> e & 1) continue;
            auto outer_e = outer;
            outer_e.push_back(e);
            auto inner_e = inner;
            inner_e.push_back(e);
            const auto d_outer = f_value(g, outer_e) - f_value(g, outer);
            const auto d_inner = f_value(g, inner_e) - f_value(g, inner);
            CHECK((d_outer == 0 || d_outer == 1));
            CHECK((d_inner == 0 || d_inner == 1));
            CHECK(d_inner >= d_outer);
        }
        CHECK(f_value(g, outer) == oracle::counts(g, outer).f());
    }
}

TEST_CASE("deciders agree with the enumeration oracle") {
    gen::Rng rng(29);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const std::size_t m = 1 + static_cast<std::size_t>(gen::uniform(rng, 0, 2 * static_cast<std::int64_t>(n) + 2));
        const auto g = gen::random_graph(rng, n, m, trial % 2 ? 1 : 2);
        INFO("trial " << trial);
        const bool laman = oracle::sparse(g, oracle::Family::laman);
        CHECK(is_colored_laman_sparse(g) == laman);
        CHECK(brute_force_sparsity(g, SparsityFamily::laman).sparse == laman);
        CHECK(is_colored_laman(g) == oracle::colored_laman(g));
        const bool s222 = oracle::sparse(g, oracle::Family::two_two_two);
        CHECK(is_222_sparse(g) == s222);
        CHECK(brute_force_sparsity(g, SparsityFamily::two_two_two).sparse == s222);
        CHECK(maximal_laman_sparse_subset(g).size() == oracle::max_sparse_size(g, oracle::Family::laman));
    }
}

TEST_CASE("colored-Laman recognition on generated Laman graphs and their perturbations") {
    gen::Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto g = gen::random_laman(rng, n);
        CHECK(is_colored_laman(g));
        CHECK(oracle::colored_laman(g));
        // Replacing one color by a collinear multiple of another keeps m but
        // may break sparsity; both routes must agree either way.
        const auto e = static_cast<EdgeId>(gen::uniform(rng, 0, static_cast<std::int64_t>(g.edge_count()) - 1));
        std::vector<ColoredGraph::EdgeSpec> specs;
        for (const auto& ed : g.edges()) specs.push_back({ed.tail, ed.head, ed.id == e ? Color{0, 0} : ed.color});
        const ColoredGraph h(n, specs);
        CHECK(is_colored_laman(h) == oracle::colored_laman(h));
    }
}

TEST_CASE("Ross routes agree") {
    gen::Rng rng(37);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto g = gen::random_graph(rng, n, 2 * n - 2, 1);
        const auto r = is_ross(g);
        REQUIRE(r.direct.has_value());
        CHECK(*r.direct == r.augmented);
        CHECK(r.is_ross == oracle::ross(g));
        CHECK(brute_force_sparsity(g, SparsityFamily::ross).sparse == oracle::sparse(g, oracle::Family::ross));
        positives += r.is_ross;
    }
    CHECK(positives > 20);
}

TEST_CASE("circuits are minimal and tight") {
    gen::Rng rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const auto g = gen::random_graph(rng, n, 2 * n + 2, 2);
        if (is_colored_laman_sparse(g)) {
            CHECK_THROWS_AS(find_laman_circuit(g), DomainError);
            continue;
        }
        const auto rep = find_laman_circuit(g);
        const auto c = oracle::counts(g, rep.circuit);
        if (c.m == 1) {
            CHECK(g.edge(rep.circuit[0]).is_loop());
            CHECK(g.edge(rep.circuit[0]).color.is_zero());
        } else {
            CHECK(c.m == 2 * c.f());
        }
        for (std::size_t drop = 0; drop < rep.circuit.size(); ++drop) {
            auto rest = rep.circuit;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
            CHECK(oracle::sparse(g.edge_induced(rest), oracle::Family::laman));
        }
    }
}

TEST_CASE("maximal sparse subsets have equal size in every scan order") {
    gen::Rng rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto g = gen::random_graph(rng, n, 2 * n + 3, 2);
        const auto base = maximal_laman_sparse_subset(g).size();
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            const auto h = gen::relabel(rng, g);
            CHECK(maximal_laman_sparse_subset(h).size() == base);
        }
    }
}

TEST_CASE("(2,2,k)-graphs satisfy basis exchange") {
    gen::Rng rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const auto g = gen::random_graph(rng, n, 2 * n + 4, 1);
        const auto m = g.edge_count();
        const auto k = z2_rank(g, g.all_edges());
        const std::size_t basis_size = 2 * n - 2 + 2 * static_cast<std::size_t>(k);
        std::vector<std::uint64_t> bases;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcountll(mask)) != basis_size) continue;
            const auto s = mask_subset(mask, m);
            if (union_independent(g, s)) bases.push_back(mask);
        }
        auto is_basis = [&](std::uint64_t mask) { return std::find(bases.begin(), bases.end(), mask) != bases.end(); };
        for (auto a : bases) {
            for (auto b : bases) {
                for (EdgeId x = 0; x < m; ++x) {
                    if (!(a >> x & 1) || (b >> x & 1)) continue;
                    bool exchanged = false;
                    for (EdgeId y = 0; y < m && !exchanged; ++y) {
                        if ((b >> y & 1) && !(a >> y & 1)) exchanged = is_basis((a & ~(1ull << x)) | (1ull << y));
                    }
                    CHECK(exchanged);
                }
            }
        }
    }
}

TEST_CASE("verdicts are invariant under reversal and recoloring") {
    gen::Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto g = trial % 2 ? gen::random_laman(rng, n) : gen::random_graph(rng, n, 2 * n + 1, 2);
        const auto h = gen::shift_potentials(rng, gen::reverse_some(rng, g));
        CHECK(is_colored_laman(h) == is_colored_laman(g));
        CHECK(is_colored_laman_sparse(h) == is_colored_laman_sparse(g));
        CHECK(is_222_sparse(h) == is_222_sparse(g));
        CHECK(maximal_laman_sparse_subset(h).size() == maximal_laman_sparse_subset(g).size());
        CHECK(f_value(h, h.all_edges()) == f_value(g, g.all_edges()));
    }
}
