#include "doctest.h"

#include "cgrig/errors.hpp"
#include "cgrig/rigidity.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace cgrig;

namespace {

ColoredGraph loops(std::initializer_list<Color> colors) {
    std::vector<ColoredGraph::EdgeSpec> specs;
    for (const auto& c : colors) specs.push_back({0, 0, c});
    return ColoredGraph(1, specs);
}

double max_abs_product(const MatrixD& m, const std::vector<double>& x) {
    double worst = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        double s = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c) * x[c];
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

} // namespace

TEST_CASE("rigidity matrix examples") {
    Realization r;
    r.p = {{0.0, 0.0}};
    r.L = {{{1.0, 0.0}, {0.0, 1.0}}};
    const auto m = rigidity_matrix(loops({{1, 0}}), r).entries;
    const std::vector<double> expected{0, 0, 1, 0, 0, 0};
    for (std::size_t c = 0; c < 6; ++c) CHECK(m(0, c) == doctest::Approx(expected[c]));

    Realization flat;
    flat.p = {{1.0, 1.0}, {1.0, 1.0}};
    const auto z = rigidity_matrix(ColoredGraph(2, {{0, 1, {0, 0}}}), flat).entries;
    for (std::size_t c = 0; c < z.cols(); ++c) CHECK(z(0, c) == 0.0);
}

TEST_CASE("rigidity matrix is the rescaled P system at a faithful realization") {
    gen::Rng rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = gen::random_laman(rng, 1 + trial % 5);
        const auto fr = faithful_realization(g, static_cast<std::uint64_t>(trial));
        const auto P = build_P_system(g, fr.directions).entries;
        const auto M = rigidity_matrix(g, fr.realization).entries;
        for (const auto& s : fr.status) {
            for (std::size_t c = 0; c < M.cols(); c += 2) {
                CHECK(M(s.id, c) == doctest::Approx(s.alpha * P(s.id, c + 1)).epsilon(1e-9).scale(1.0));
                CHECK(M(s.id, c + 1) == doctest::Approx(-s.alpha * P(s.id, c)).epsilon(1e-9).scale(1.0));
            }
        }
        CHECK(rank_float(M) == rank_float(P));
    }
}

TEST_CASE("generic rigidity rank examples") {
    CHECK(generic_rigidity_rank(loops({{1, 0}, {0, 1}, {1, 1}}), 3, 1).rank == 3);
    CHECK(generic_rigidity_rank(ColoredGraph(2, {{0, 0, {1, 0}}, {1, 1, {1, 0}}}), 3, 1).rank == 1);
    CHECK(generic_rigidity_rank(ColoredGraph(2, {{0, 0, {1, 0}}, {1, 1, {1, 0}}}), 3, 1, Arithmetic::floating).rank ==
          1);

    gen::Rng rng(137);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto g = gen::random_graph(rng, n, 2 * n, 2);
        CHECK(generic_rigidity_rank(g, 2, static_cast<std::uint64_t>(trial)).rank <= 2 * n);
    }
}

TEST_CASE("decide rigidity examples") {
    auto v = decide_rigidity(loops({{1, 0}, {0, 1}, {1, 1}}), 1);
    CHECK(v.status == RigidityStatus::minimally_rigid);
    CHECK(v.rank == 3);
    CHECK(v.dof == 0);
    CHECK(v.witness.has_value());
    CHECK_FALSE(v.circuit.has_value());

    v = decide_rigidity(loops({{1, 0}, {0, 1}, {1, 1}, {1, 2}}), 1);
    CHECK(v.status == RigidityStatus::rigid_overconstrained);
    CHECK(v.rank == 3);
    CHECK(v.circuit.has_value());
    CHECK_FALSE(v.witness.has_value());

    v = decide_rigidity(ColoredGraph(2, {{0, 0, {1, 0}}, {1, 1, {1, 0}}}), 1);
    CHECK(v.status == RigidityStatus::flexible);
    CHECK(v.rank == 1);
    CHECK(v.dof == 4);
    REQUIRE(v.circuit.has_value());
    CHECK(v.circuit->circuit == EdgeSubset{0, 1});

    CHECK(status_name(RigidityStatus::minimally_rigid) == "generically minimally rigid");
    CHECK(status_name(RigidityStatus::rigid_overconstrained) == "generically rigid, overconstrained");
    CHECK(status_name(RigidityStatus::flexible) == "generically flexible");
}

TEST_CASE("rigid realization certificate") {
    const auto cert = rigid_realization_certificate(loops({{1, 0}, {0, 1}, {1, 1}}), 5);
    CHECK(cert.rank == 3);
    CHECK(cert.exact_rank == 3);
    CHECK(cert.deletion_ranks == std::vector<std::size_t>{2, 2, 2});

    gen::Rng rng(139);
    const auto big = gen::random_laman(rng, 20);
    const auto big_cert = rigid_realization_certificate(big, 11);
    CHECK(big_cert.rank == 41);
    CHECK(big_cert.exact_rank == 41);
    CHECK(big_cert.deletion_ranks.size() == 41);
    for (auto r : big_cert.deletion_ranks) CHECK(r == 40);

    CHECK_THROWS_AS(rigid_realization_certificate(loops({{1, 0}, {2, 0}, {0, 1}}), 1), DomainError);
}

TEST_CASE("trivial motions span the kernel at a rigid realization") {
    gen::Rng rng(149);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = gen::random_laman(rng, 1 + trial % 6);
        const auto fr = faithful_realization(g, static_cast<std::uint64_t>(trial));
        const auto M = rigidity_matrix(g, fr.realization).entries;
        const auto n = g.vertex_count();
        const double scale = realization_scale(fr.realization);
        CHECK(max_abs_product(M, translation_motion(n, {1.0, 0.0})) < 1e-12);
        CHECK(max_abs_product(M, translation_motion(n, {0.0, 1.0})) < 1e-12);
        CHECK(max_abs_product(M, rotation_motion(fr.realization)) < 1e-9 * scale * scale);
        CHECK(kernel_float(M).basis.size() == 3);
        const std::vector<std::vector<double>> motions{translation_motion(n, {1.0, 0.0}),
                                                       translation_motion(n, {0.0, 1.0}),
                                                       rotation_motion(fr.realization)};
        MatrixD stacked(3, 2 * n + 4);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 2 * n + 4; ++j) stacked(i, j) = motions[i][j];
        }
        CHECK(rank_float(stacked) == 3);
    }
}

TEST_CASE("main theorem equivalence on random graphs with m = 2n + 1") {
    gen::Rng rng(151);
    int laman = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const auto g = trial % 3 == 0 ? gen::random_laman(rng, n) : gen::random_graph(rng, n, 2 * n + 1, 2);
        const auto seed = static_cast<std::uint64_t>(trial);
        const bool is_laman = is_colored_laman(g);
        INFO("trial " << trial);
        CHECK(is_laman == (generic_rigidity_rank(g, 3, seed).rank == 2 * n + 1));
        CHECK(is_laman == (generic_rigidity_rank(g, 2, seed, Arithmetic::floating).rank == 2 * n + 1));
        if (n <= 3) CHECK(is_laman == oracle::colored_laman(g));
        const auto v = decide_rigidity(g, seed);
        CHECK((v.status == RigidityStatus::minimally_rigid) == is_laman);
        CHECK(v.rank == static_cast<std::size_t>(2 * n + 1 - static_cast<std::size_t>(v.dof)));
        laman += is_laman;
    }
    CHECK(laman > 60);
}

TEST_CASE("circuits carry a row dependency") {
    gen::Rng rng(157);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = gen::random_circuit(rng, 3, 2);
        CHECK(generic_rigidity_rank(c, 3, static_cast<std::uint64_t>(trial)).rank == c.edge_count() - 1);
    }
}

TEST_CASE("Ross graphs become rigid with lattice motions only from rotation") {
    gen::Rng rng(163);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 20; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto g = gen::random_graph(rng, n, 2 * n - 2, 1);
        if (!is_ross(g).is_ross) continue;
        ++checked;
        const auto aug = add_three_loops(g, 0);
        CHECK(generic_rigidity_rank(aug, 3, static_cast<std::uint64_t>(trial)).rank == 2 * n + 1);
        const auto fr = faithful_realization(aug, static_cast<std::uint64_t>(trial));
        const auto ker = kernel_float(rigidity_matrix(aug, fr.realization).entries);
        REQUIRE(ker.basis.size() == 3);
        // The lattice part of every motion is a multiple of J L.
        const auto rot = rotation_motion(fr.realization);
        const std::size_t off = 2 * n;
        double rot_len = 0;
        for (std::size_t i = 0; i < 4; ++i) rot_len += rot[off + i] * rot[off + i];
        for (const auto& v : ker.basis) {
            double dot = 0;
            for (std::size_t i = 0; i < 4; ++i) dot += v[off + i] * rot[off + i];
            for (std::size_t i = 0; i < 4; ++i) {
                CHECK(std::abs(v[off + i] - dot / rot_len * rot[off + i]) < 1e-8);
            }
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("one-dimensional rigidity examples") {
    auto v = is_1d_rigid(loops({{1, 0}}), 1);
    CHECK(v.rigid);
    CHECK(v.minimally_rigid);
    CHECK(v.rank == 1);

    v = is_1d_rigid(ColoredGraph(3, {{0, 1, {0, 0}}, {1, 2, {0, 0}}}), 1);
    CHECK_FALSE(v.rigid);
    CHECK(v.rank == 2);

    v = is_1d_rigid(loops({{0, 0}}), 1);
    CHECK_FALSE(v.rigid);

    v = is_1d_rigid(ColoredGraph(2, {{0, 1, {0, 0}}, {0, 1, {3, 0}}, {1, 1, {1, 0}}}), 1);
    CHECK(v.rigid);
    CHECK_FALSE(v.minimally_rigid);

    CHECK_THROWS_AS(is_1d_rigid(loops({{1, 1}}), 1), DomainError);
    CHECK_THROWS_AS(is_1d_rigid(ColoredGraph(0), 1), DomainError);

    const std::vector<Fp> x{Fp::from_int(2), Fp::from_int(5)};
    const auto m = rigidity_matrix_1d(ColoredGraph(2, {{0, 1, {3, 0}}}), x, Fp::from_int(7));
    // eta = 5 + 21 - 2 = 24
    CHECK(m(0, 0) == Fp::from_int(-24));
    CHECK(m(0, 1) == Fp::from_int(24));
    CHECK(m(0, 2) == Fp::from_int(72));
}

TEST_CASE("one-dimensional routes agree with the counts") {
    gen::Rng rng(167);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<ColoredGraph::EdgeSpec> specs;
        const auto m = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<std::int64_t>(n) + 2));
        for (std::size_t i = 0; i < m; ++i) {
            auto e = gen::random_edge(rng, n, 2);
            e.color.g2 = 0;
            specs.push_back(e);
        }
        const ColoredGraph g(n, specs);
        const auto c = oracle::counts(g, oracle::all(g));
        const bool expected = c.n == static_cast<std::int64_t>(n) && c.c == 1 && c.rank >= 1;
        const auto v = is_1d_rigid(g, static_cast<std::uint64_t>(trial));
        CHECK(v.combinatorial == v.numeric);
        CHECK(v.rigid == expected);
        CHECK(v.minimally_rigid == (expected && m == n));
    }
}

TEST_CASE("rationalize rounds to the 2^-30 grid") {
    Realization r;
    r.p = {{0.5, -0.25}};
    r.L = {{{1.0, 0.0}, {0.0, -1.0}}};
    const auto q = rationalize(r);
    CHECK(q.p[0][0] == Fp::from_int(1 << 29));
    CHECK(q.p[0][1] == Fp::from_int(-(1 << 28)));
    CHECK(q.L[1][1] == Fp::from_int(-(std::int64_t{1} << 30)));
}
