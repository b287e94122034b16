#include "cgrig/rigidity.hpp"

#include "cgrig/core_graph.hpp"
#include "cgrig/errors.hpp"
#include "cgrig/potential_forest.hpp"

#include <cmath>

namespace cgrig {
namespace {

constexpr std::int64_t sample_bound = std::int64_t{1} << 20;

Fp random_bounded(Rng& rng) { return Fp::from_int(random_int(rng, -sample_bound, sample_bound)); }

} // namespace

std::string_view status_name(RigidityStatus s) {
    switch (s) {
    case RigidityStatus::minimally_rigid: return "generically minimally rigid";
    case RigidityStatus::rigid_overconstrained: return "generically rigid, overconstrained";
    case RigidityStatus::flexible: return "generically flexible";
    }
    return "?";
}

NaturalMatrix<double> rigidity_matrix(const ColoredGraph& g, const Realization& realization) {
    return build_rigidity_matrix(g, realization);
}

RankReport generic_rigidity_rank(const ColoredGraph& g, int trials, std::uint64_t seed, Arithmetic mode,
                                 double tolerance) {
    if (trials < 1) throw DomainError("at least one trial is required");
    Rng rng(seed);
    RankReport report{MatrixKind::m232, 0, mode, trials, seed};
    const std::size_t n = g.vertex_count();
    for (int t = 0; t < trials; ++t) {
        std::size_t r = 0;
        if (mode == Arithmetic::prime_field) {
            BasicRealization<Fp> real;
            real.p.resize(n);
            for (auto& q : real.p) q = {random_bounded(rng), random_bounded(rng)};
            for (auto& row : real.L) row = {random_bounded(rng), random_bounded(rng)};
            r = rank(build_rigidity_matrix(g, real).entries);
        } else {
            Realization real;
            real.p.resize(n);
            for (auto& q : real.p) q = {random_symmetric(rng), random_symmetric(rng)};
            for (auto& row : real.L) row = {random_symmetric(rng), random_symmetric(rng)};
            r = rank_float(build_rigidity_matrix(g, real).entries, tolerance);
        }
        report.rank = std::max(report.rank, r);
    }
    return report;
}

BasicRealization<Fp> rationalize(const Realization& r) {
    auto q = [](double v) { return Fp::from_int(static_cast<std::int64_t>(std::llround(std::ldexp(v, 30)))); };
    BasicRealization<Fp> out;
    for (const auto& p : r.p) out.p.push_back({q(p[0]), q(p[1])});
    for (std::size_t i = 0; i < 2; ++i) out.L[i] = {q(r.L[i][0]), q(r.L[i][1])};
    return out;
}

RigidCertificate rigid_realization_certificate(const ColoredGraph& g, std::uint64_t seed) {
    RigidCertificate cert;
    cert.faithful = faithful_realization(g, seed);
    const std::size_t n = g.vertex_count();
    const MatrixD m = rigidity_matrix(g, cert.faithful.realization).entries;
    cert.rank = rank_float(m);
    cert.exact_rank = rank(build_rigidity_matrix(g, rationalize(cert.faithful.realization)).entries);
    if (cert.rank != 2 * n + 1 || cert.exact_rank != 2 * n + 1) {
        throw InternalError("rigidity matrix at the faithful realization has rank " + std::to_string(cert.rank) +
                            " (exact " + std::to_string(cert.exact_rank) + "), expected " +
                            std::to_string(2 * n + 1));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::size_t dr = rank_float(m.without_row(r));
        cert.deletion_ranks.push_back(dr);
        if (dr != 2 * n) throw InternalError("deleting row " + std::to_string(r) + " left rank " + std::to_string(dr));
    }
    return cert;
}

RigidityVerdict decide_rigidity(const ColoredGraph& g, std::uint64_t seed, int trials) {
    RigidityVerdict v;
    v.seed = seed;
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    v.sparse_size = maximal_laman_sparse_subset(g).size();
    v.rank = generic_rigidity_rank(g, trials, seed).rank;
    if (v.rank != v.sparse_size) {
        throw InternalError("generic rank " + std::to_string(v.rank) + " differs from the sparse subset size " +
                            std::to_string(v.sparse_size));
    }
    v.dof = static_cast<std::int64_t>(2 * n + 1) - static_cast<std::int64_t>(v.rank);
    if (v.sparse_size == 2 * n + 1) {
        v.status = m == 2 * n + 1 ? RigidityStatus::minimally_rigid : RigidityStatus::rigid_overconstrained;
    } else {
        v.status = RigidityStatus::flexible;
    }
    if (v.status == RigidityStatus::minimally_rigid) {
        v.witness = rigid_realization_certificate(g, seed).faithful.realization;
    }
    if (v.sparse_size < m) v.circuit = find_laman_circuit(g);
    return v;
}

std::vector<double> rotation_motion(const Realization& r) {
    // J (x, y) = (-y, x)
    std::vector<double> out;
    for (const auto& p : r.p) {
        out.push_back(-p[1]);
        out.push_back(p[0]);
    }
    for (std::size_t q = 0; q < 2; ++q) {
        out.push_back(-r.L[1][q]);
        out.push_back(r.L[0][q]);
    }
    return out;
}

std::vector<double> translation_motion(std::size_t n, Vec2 t) {
    std::vector<double> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(t[0]);
        out.push_back(t[1]);
    }
    out.resize(2 * n + 4, 0.0);
    return out;
}

MatrixFp rigidity_matrix_1d(const ColoredGraph& g, std::span<const Fp> x, Fp L) {
    const std::size_t n = g.vertex_count();
    if (x.size() != n) throw StructuralError("1d realization has the wrong number of points");
    MatrixFp m(g.edge_count(), n + 1);
    for (const auto& e : g.edges()) {
        const Fp gamma = Fp::from_int(e.color.g1);
        const Fp eta = x[e.head] + gamma * L - x[e.tail];
        m(e.id, e.tail) -= eta;
        m(e.id, e.head) += eta;
        m(e.id, n) = gamma * eta;
    }
    return m;
}

OneDVerdict is_1d_rigid(const ColoredGraph& g, std::uint64_t seed, int trials) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw DomainError("1d rigidity needs at least one vertex");
    if (trials < 1) throw DomainError("at least one trial is required");
    for (const auto& e : g.edges()) {
        if (e.color.g2 != 0) throw DomainError("edge " + std::to_string(e.id) + " has a second color coordinate");
    }
    OneDVerdict v;
    const auto all = g.all_edges();
    const SubsetCounts c = count_subset(g, all);
    const bool connected = c.components == 1 && c.vertices == n;
    v.combinatorial = connected && c.z2_rank >= 1;

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Fp> x(n);
        for (auto& xi : x) xi = random_bounded(rng);
        const Fp L = random_bounded(rng);
        v.rank = std::max(v.rank, rank(rigidity_matrix_1d(g, x, L)));
    }
    v.numeric = v.rank == n;
    if (v.numeric != v.combinatorial) throw InternalError("1d combinatorial and rank decisions disagree");
    v.rigid = v.combinatorial;
    v.minimally_rigid = v.rigid && g.edge_count() == n;
    return v;
}

} // namespace cgrig
