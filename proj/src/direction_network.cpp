#include "cgrig/direction_network.hpp"

#include "cgrig/core_graph.hpp"
#include "cgrig/errors.hpp"
#include "cgrig/sparsity.hpp"

#include <cmath>

namespace cgrig {
namespace {

constexpr double solve_tolerance = 1e-9;
constexpr double collapse_tolerance = 1e-6;

double norm(Vec2 v) { return std::hypot(v[0], v[1]); }

Vec2 unit_direction(Rng& rng) {
    const double t = random_angle(rng);
    return {std::cos(t), std::sin(t)};
}

} // namespace

DirectionAssignment random_directions(std::size_t edges, Rng& rng) {
    DirectionAssignment out;
    out.d.reserve(edges);
    for (std::size_t e = 0; e < edges; ++e) out.d.push_back(unit_direction(rng));
    return out;
}

NaturalMatrix<double> build_P_system(const ColoredGraph& g, const DirectionAssignment& directions) {
    const std::size_t m = g.edge_count();
    if (directions.d.size() < m) throw StructuralError("directions do not cover every edge");
    Assignment<double> ab;
    ab.a.reserve(m);
    ab.b.reserve(m);
    for (EdgeId e = 0; e < m; ++e) {
        if (directions.d[e][0] == 0.0 && directions.d[e][1] == 0.0) {
            throw DomainError("edge " + std::to_string(e) + " has a zero direction");
        }
        const Vec2 q = directions.perp(e);
        ab.a.push_back(q[0]);
        ab.b.push_back(q[1]);
    }
    return build_natural_matrix(g, MatrixKind::m222, ab);
}

RealizationKernel realization_kernel(const ColoredGraph& g, const DirectionAssignment& directions, double tolerance) {
    const auto kernel = kernel_float(build_P_system(g, directions).entries, tolerance);
    RealizationKernel out;
    out.dim = kernel.basis.size();
    for (const auto& v : kernel.basis) out.basis.push_back(Realization::unflatten(v));
    return out;
}

double realization_scale(const Realization& r) {
    double s = std::hypot(std::hypot(r.L[0][0], r.L[0][1]), std::hypot(r.L[1][0], r.L[1][1]));
    for (const auto& q : r.p) {
        s = std::max(s, norm(q));
        s = std::max(s, norm({q[0] - r.p[0][0], q[1] - r.p[0][1]}));
    }
    return s;
}

std::vector<EdgeStatus> edge_status(const ColoredGraph& g, const DirectionAssignment& directions,
                                    const Realization& realization, double tolerance) {
    if (directions.d.size() < g.edge_count()) throw StructuralError("directions do not cover every edge");
    if (realization.p.size() != g.vertex_count()) throw StructuralError("realization has the wrong number of points");
    const double scale = realization_scale(realization);
    std::vector<EdgeStatus> out;
    out.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        EdgeStatus s;
        s.id = e.id;
        s.eta = realization.displacement(e);
        const Vec2 d = directions.d[e.id];
        s.alpha = (s.eta[0] * d[0] + s.eta[1] * d[1]) / norm(d);
        s.collapsed = norm(s.eta) <= tolerance * scale;
        out.push_back(s);
    }
    return out;
}

std::size_t component_count(const ColoredGraph& g) {
    const auto pot = tree_potentials(g);
    std::size_t c = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) c += pot.root[v] == v;
    return c;
}

Realization collapsed_realization(const ColoredGraph& g, const std::vector<Vec2>& anchors,
                                  const std::array<std::array<double, 2>, 2>& lattice_seed) {
    const std::size_t n = g.vertex_count();
    const auto pot = tree_potentials(g);
    std::vector<std::size_t> comp(n);
    std::size_t c = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (pot.root[v] == v) comp[v] = c++;
        else comp[v] = comp[pot.root[v]];
    }
    if (anchors.size() != c) throw StructuralError("expected one anchor per connected component");

    // L must kill every cycle image: each row of L is orthogonal to the span.
    const auto all = g.all_edges();
    ImageSpan span;
    for (const auto& cycle : fundamental_cycles(g, all)) span.add(cycle.image);
    Realization r;
    r.L = lattice_seed;
    if (span.rank() == 2) {
        r.L = {};
    } else if (span.rank() == 1) {
        const Color t = span.basis(0);
        const double len = std::hypot(static_cast<double>(t.g1), static_cast<double>(t.g2));
        const Vec2 u{-static_cast<double>(t.g2) / len, static_cast<double>(t.g1) / len};
        for (auto& row : r.L) {
            const double s = row[0] * u[0] + row[1] * u[1];
            row = {s * u[0], s * u[1]};
        }
    }

    r.p.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        const Vec2 a = anchors[comp[v]];
        const double s1 = static_cast<double>(pot.sigma[v].g1);
        const double s2 = static_cast<double>(pot.sigma[v].g2);
        r.p[v] = {a[0] - (r.L[0][0] * s1 + r.L[0][1] * s2), a[1] - (r.L[1][0] * s1 + r.L[1][1] * s2)};
    }

    // Every displacement must vanish; compare against the data's magnitude.
    double magnitude = 1.0;
    for (const auto& q : r.p) magnitude = std::max(magnitude, norm(q));
    for (const auto& row : r.L) magnitude = std::max(magnitude, norm(row));
    for (const auto& e : g.edges()) {
        if (norm(r.displacement(e)) > 1e-9 * magnitude * (1.0 + std::abs(e.color.g1) + std::abs(e.color.g2))) {
            throw InternalError("collapsed construction left edge " + std::to_string(e.id) + " uncollapsed");
        }
    }
    return r;
}

Realization normalize_kernel(const FloatKernel& kernel, std::size_t n) {
    if (kernel.basis.size() != 3) {
        throw InternalError("expected a 3-dimensional realization kernel, got " + std::to_string(kernel.basis.size()));
    }
    const auto& b = kernel.basis;
    // Coefficients c with sum c_k b_k having p_0 = 0: orthogonal to both rows.
    const std::array<double, 3> r0{b[0][0], b[1][0], b[2][0]};
    const std::array<double, 3> r1{b[0][1], b[1][1], b[2][1]};
    const std::array<double, 3> c{r0[1] * r1[2] - r0[2] * r1[1], r0[2] * r1[0] - r0[0] * r1[2],
                                  r0[0] * r1[1] - r0[1] * r1[0]};
    std::vector<double> x(2 * n + 4, 0.0);
    for (std::size_t k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += c[k] * b[k][i];
    }
    x[0] = x[1] = 0.0;
    double len = 0.0;
    for (double v : x) len += v * v;
    len = std::sqrt(len);
    if (len < 1e-12) throw InternalError("realization kernel has no component beyond translations");
    double sign = 1.0;
    for (double v : x) {
        if (std::abs(v / len) > 1e-9) {
            sign = v > 0 ? 1.0 : -1.0;
            break;
        }
    }
    for (double& v : x) v *= sign / len;
    return Realization::unflatten(x);
}

FaithfulRealization faithful_realization(const ColoredGraph& g, std::uint64_t seed, int retry_cap) {
    if (!is_colored_laman(g)) throw DomainError("faithful realizations need a colored-Laman graph");
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    Rng rng(seed);
    for (int attempt = 1; attempt <= retry_cap; ++attempt) {
        DirectionAssignment dirs = random_directions(m, rng);
        const MatrixD P = build_P_system(g, dirs).entries;
        const FloatKernel kernel = kernel_float(P, solve_tolerance);
        if (kernel.rank != 2 * n + 1) continue;

        // Each doubled system, with a fresh direction on the copy, must
        // reach rank 2n + 2.
        bool generic = true;
        for (EdgeId e = 0; e < m && generic; ++e) {
            const ColoredGraph doubled = g.with_doubled(e);
            DirectionAssignment extended = dirs;
            extended.d.push_back(unit_direction(rng));
            generic = rank_float(build_P_system(doubled, extended).entries, solve_tolerance) == 2 * n + 2;
        }
        if (!generic) continue;

        FaithfulRealization out;
        out.realization = normalize_kernel(kernel, n);
        out.status = edge_status(g, dirs, out.realization, collapse_tolerance);
        bool faithful = true;
        for (const auto& s : out.status) faithful = faithful && !s.collapsed;
        if (!faithful) continue;
        out.directions = std::move(dirs);
        out.attempts = attempt;
        out.seed = seed;
        return out;
    }
    throw GenericityError("no generic direction sample within " + std::to_string(retry_cap) + " attempts", seed);
}

} // namespace cgrig
