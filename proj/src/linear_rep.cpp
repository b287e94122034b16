#include "cgrig/linear_rep.hpp"

#include "cgrig/core_graph.hpp"
#include "cgrig/errors.hpp"
#include "cgrig/potential_forest.hpp"

#include <cmath>

namespace cgrig {
namespace {

template <class T>
T lift(std::int64_t v) {
    if constexpr (std::is_same_v<T, Fp>) {
        return Fp::from_int(v);
    } else {
        return static_cast<T>(v);
    }
}

std::vector<ColumnLabel> column_labels(std::size_t n, MatrixKind kind) {
    std::vector<ColumnLabel> out;
    if (kind == MatrixKind::m112) {
        for (std::size_t i = 0; i < n; ++i) out.push_back({ColumnLabel::Block::vertex, i, 0});
        out.push_back({ColumnLabel::Block::lattice, 0, 0});
        out.push_back({ColumnLabel::Block::lattice, 1, 0});
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back({ColumnLabel::Block::vertex, i, 0});
        out.push_back({ColumnLabel::Block::vertex, i, 1});
    }
    for (std::size_t q = 0; q < 2; ++q) {
        out.push_back({ColumnLabel::Block::lattice, q, 0});
        out.push_back({ColumnLabel::Block::lattice, q, 1});
    }
    return out;
}

// Fills one row of the two-column-per-vertex pattern with the pair (x, y).
template <class T>
void fill_pair_row(Matrix<T>& m, std::size_t r, std::size_t n, const ColoredEdge& e, T x, T y) {
    m(r, 2 * e.tail) -= x;
    m(r, 2 * e.tail + 1) -= y;
    m(r, 2 * e.head) += x;
    m(r, 2 * e.head + 1) += y;
    const T g1 = lift<T>(e.color.g1);
    const T g2 = lift<T>(e.color.g2);
    m(r, 2 * n) = g1 * x;
    m(r, 2 * n + 1) = g1 * y;
    m(r, 2 * n + 2) = g2 * x;
    m(r, 2 * n + 3) = g2 * y;
}

template <class T>
T abs_value(T x) {
    if constexpr (std::is_same_v<T, Fp>) {
        return x;
    } else {
        return std::abs(x);
    }
}

} // namespace

std::string_view kind_name(MatrixKind kind) {
    switch (kind) {
    case MatrixKind::m112: return "M112";
    case MatrixKind::m222: return "M222";
    case MatrixKind::m232: return "M232";
    }
    return "?";
}

std::string_view arithmetic_name(Arithmetic mode) { return mode == Arithmetic::prime_field ? "fp" : "float"; }

Assignment<Fp> random_assignment_fp(std::size_t edges, Rng& rng) {
    Assignment<Fp> out;
    out.a.reserve(edges);
    out.b.reserve(edges);
    for (std::size_t e = 0; e < edges; ++e) {
        out.a.push_back(random_nonzero_fp(rng));
        out.b.push_back(random_nonzero_fp(rng));
    }
    return out;
}

Assignment<double> random_assignment_float(std::size_t edges, Rng& rng) {
    Assignment<double> out;
    out.a.reserve(edges);
    out.b.reserve(edges);
    for (std::size_t e = 0; e < edges; ++e) {
        out.a.push_back(random_symmetric(rng));
        out.b.push_back(random_symmetric(rng));
    }
    return out;
}

template <class T>
NaturalMatrix<T> build_natural_matrix(const ColoredGraph& g, MatrixKind kind, const Assignment<T>& assignment) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (kind == MatrixKind::m232) throw StructuralError("M232 is built from a realization, not an assignment");
    if (assignment.a.size() < m || (kind == MatrixKind::m222 && assignment.b.size() < m)) {
        throw StructuralError("assignment does not cover every edge");
    }
    NaturalMatrix<T> out;
    out.kind = kind;
    out.columns = column_labels(n, kind);
    out.entries = Matrix<T>(m, out.columns.size());
    for (const auto& e : g.edges()) {
        const std::size_t r = e.id;
        out.row_edge.push_back(e.id);
        const T a = assignment.a[e.id];
        if (kind == MatrixKind::m112) {
            out.entries(r, e.tail) -= a;
            out.entries(r, e.head) += a;
            out.entries(r, n) = lift<T>(e.color.g1) * a;
            out.entries(r, n + 1) = lift<T>(e.color.g2) * a;
        } else {
            fill_pair_row(out.entries, r, n, e, a, assignment.b[e.id]);
        }
    }
    return out;
}

template <class T>
NaturalMatrix<T> build_rigidity_matrix(const ColoredGraph& g, const BasicRealization<T>& realization) {
    const std::size_t n = g.vertex_count();
    if (realization.p.size() != n) throw StructuralError("realization has the wrong number of points");
    NaturalMatrix<T> out;
    out.kind = MatrixKind::m232;
    out.columns = column_labels(n, MatrixKind::m232);
    out.entries = Matrix<T>(g.edge_count(), out.columns.size());
    for (const auto& e : g.edges()) {
        out.row_edge.push_back(e.id);
        const auto eta = realization.displacement(e);
        fill_pair_row(out.entries, e.id, n, e, eta[0], eta[1]);
    }
    return out;
}

template NaturalMatrix<Fp> build_natural_matrix(const ColoredGraph&, MatrixKind, const Assignment<Fp>&);
template NaturalMatrix<double> build_natural_matrix(const ColoredGraph&, MatrixKind, const Assignment<double>&);
template NaturalMatrix<Fp> build_rigidity_matrix(const ColoredGraph&, const BasicRealization<Fp>&);
template NaturalMatrix<double> build_rigidity_matrix(const ColoredGraph&, const BasicRealization<double>&);

MatrixFp sample_matrix_fp(const ColoredGraph& g, MatrixKind kind, Rng& rng) {
    if (kind != MatrixKind::m232) return build_natural_matrix(g, kind, random_assignment_fp(g.edge_count(), rng)).entries;
    BasicRealization<Fp> r;
    r.p.resize(g.vertex_count());
    for (auto& q : r.p) q = {random_fp(rng), random_fp(rng)};
    for (auto& row : r.L) row = {random_fp(rng), random_fp(rng)};
    return build_rigidity_matrix(g, r).entries;
}

MatrixD sample_matrix_float(const ColoredGraph& g, MatrixKind kind, Rng& rng) {
    if (kind != MatrixKind::m232) {
        return build_natural_matrix(g, kind, random_assignment_float(g.edge_count(), rng)).entries;
    }
    Realization r;
    r.p.resize(g.vertex_count());
    for (auto& q : r.p) q = {random_symmetric(rng), random_symmetric(rng)};
    for (auto& row : r.L) row = {random_symmetric(rng), random_symmetric(rng)};
    return build_rigidity_matrix(g, r).entries;
}

RankReport rank_mod_p(const ColoredGraph& g, MatrixKind kind, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("at least one trial is required");
    Rng rng(seed);
    RankReport report{kind, 0, Arithmetic::prime_field, trials, seed};
    for (int t = 0; t < trials; ++t) report.rank = std::max(report.rank, rank(sample_matrix_fp(g, kind, rng)));
    return report;
}

RankReport rank_float_generic(const ColoredGraph& g, MatrixKind kind, int trials, std::uint64_t seed,
                              double tolerance) {
    if (trials < 1) throw DomainError("at least one trial is required");
    Rng rng(seed);
    RankReport report{kind, 0, Arithmetic::floating, trials, seed};
    for (int t = 0; t < trials; ++t) {
        report.rank = std::max(report.rank, rank_float(sample_matrix_float(g, kind, rng), tolerance));
    }
    return report;
}

template <class T>
DeterminantReport<T> verify_determinant_formulas(const ColoredGraph& g, MatrixKind kind, const Assignment<T>& assignment,
                                                 std::size_t dropped_vertex) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    if (kind != MatrixKind::m112) throw DomainError("determinant formulas are stated for M112");
    if (n == 0 || m + 1 < n || m > n + 1) throw DomainError("edge count must be n-1, n or n+1");
    if (dropped_vertex >= n) throw DomainError("dropped vertex outside the graph");

    DeterminantReport<T> report;
    report.k = static_cast<int>(m + 1 - n);
    report.dropped_vertex = dropped_vertex;
    const auto matrix = build_natural_matrix(g, kind, assignment).entries;

    const auto all = g.all_edges();
    const SubsetCounts counts = count_subset(g, all);
    const bool connected = counts.components == 1 ? counts.vertices == n : (n == 1 && m == 0);
    report.is_11k = connected && counts.z2_rank == report.k;
    const auto cycles = fundamental_cycles(g, all);

    T product = lift<T>(1);
    for (EdgeId e = 0; e < m; ++e) product = product * assignment.a[e];

    std::vector<std::size_t> vertex_cols;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != dropped_vertex) vertex_cols.push_back(i);
    }
    auto add_minor = [&](std::vector<std::size_t> lattice, std::string formula, T closed) {
        std::vector<std::size_t> cols = vertex_cols;
        for (std::size_t q : lattice) cols.push_back(n + q);
        std::vector<std::size_t> rows(m);
        for (std::size_t r = 0; r < m; ++r) rows[r] = r;
        report.determinant.push_back(determinant(matrix.select(rows, cols)));
        report.formula.push_back(connected ? closed : T{});
        report.minors.push_back({std::move(lattice), std::move(formula)});
    };
    switch (report.k) {
    case 0: add_minor({}, "tree", product); break;
    case 1: {
        const Color t = cycles.empty() ? Color{} : cycles[0].image;
        add_minor({0}, "t_q", lift<T>(t.g1) * product);
        add_minor({1}, "t_q", lift<T>(t.g2) * product);
        break;
    }
    default: {
        Color t1, t2;
        if (cycles.size() == 2) {
            t1 = cycles[0].image;
            t2 = cycles[1].image;
        }
        add_minor({0, 1}, "cross", (lift<T>(t1.g1) * lift<T>(t2.g2) - lift<T>(t1.g2) * lift<T>(t2.g1)) * product);
        break;
    }
    }

    report.agree = true;
    for (std::size_t i = 0; i < report.minors.size(); ++i) {
        const T d = report.determinant[i];
        const T f = report.formula[i];
        if constexpr (std::is_same_v<T, Fp>) {
            report.agree = report.agree && (d == f || d == -f);
        } else {
            const double err = std::min(std::abs(d - f), std::abs(d + f));
            // Hadamard's bound scales the zero case.
            double hadamard = 1.0;
            for (std::size_t r = 0; r < m; ++r) {
                double s = 0.0;
                for (double v : matrix.row(r)) s += v * v;
                hadamard *= std::sqrt(s);
            }
            const double scale = f != 0.0 ? abs_value(f) : hadamard;
            report.agree = report.agree && err <= 1e-10 * scale;
        }
    }
    return report;
}

template DeterminantReport<Fp> verify_determinant_formulas(const ColoredGraph&, MatrixKind, const Assignment<Fp>&,
                                                           std::size_t);
template DeterminantReport<double> verify_determinant_formulas(const ColoredGraph&, MatrixKind,
                                                               const Assignment<double>&, std::size_t);

template <class T>
std::vector<T> cycle_elimination_row(const ColoredGraph& g, const Assignment<T>& assignment, const ClosedWalk& walk) {
    rho_of_walk(g, walk); // validates the walk
    const std::size_t n = g.vertex_count();
    const auto matrix = build_natural_matrix(g, MatrixKind::m112, assignment).entries;
    std::vector<T> out(n + 2, T{});
    for (const auto& step : walk) {
        const T inv = lift<T>(1) / assignment.a[step.edge];
        const T sign = step.direction == Direction::forward ? lift<T>(1) : lift<T>(-1);
        for (std::size_t c = 0; c < n + 2; ++c) out[c] = out[c] + sign * inv * matrix(step.edge, c);
    }
    return out;
}

template std::vector<Fp> cycle_elimination_row(const ColoredGraph&, const Assignment<Fp>&, const ClosedWalk&);
template std::vector<double> cycle_elimination_row(const ColoredGraph&, const Assignment<double>&, const ClosedWalk&);

} // namespace cgrig
