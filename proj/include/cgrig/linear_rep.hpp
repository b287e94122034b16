#pragma once

#include "cgrig/graph.hpp"
#include "cgrig/matrix.hpp"
#include "cgrig/random.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace cgrig {

enum class MatrixKind { m112, m222, m232 };
enum class Arithmetic { prime_field, floating };

std::string_view kind_name(MatrixKind kind);
std::string_view arithmetic_name(Arithmetic mode);

/// Values of the generic variables, one (a, b) pair per edge id. `b` is
/// ignored by the one-row-block matrix M112.
template <class T>
struct Assignment {
    std::vector<T> a;
    std::vector<T> b;
};

/// Independent uniform nonzero values in F_p per edge.
Assignment<Fp> random_assignment_fp(std::size_t edges, Rng& rng);
/// Independent uniform values in [-1, 1] per edge.
Assignment<double> random_assignment_float(std::size_t edges, Rng& rng);

/// Points p_i and the 2x2 lattice matrix L, with L[r][c] the entry in row r
/// and column c, so the lattice vectors are the columns L_1 = (L[0][0],
/// L[1][0]) and L_2 = (L[0][1], L[1][1]).
template <class T>
struct BasicRealization {
    std::vector<std::array<T, 2>> p;
    std::array<std::array<T, 2>, 2> L{};

    /// p_j + L gamma - p_i for an edge i -> j with color gamma.
    std::array<T, 2> displacement(const ColoredEdge& e) const {
        const T g1 = scalar(e.color.g1);
        const T g2 = scalar(e.color.g2);
        return {p[e.head][0] + L[0][0] * g1 + L[0][1] * g2 - p[e.tail][0],
                p[e.head][1] + L[1][0] * g1 + L[1][1] * g2 - p[e.tail][1]};
    }

    /// Unknown-vector layout (p_1, ..., p_n, L_1, L_2), length 2n + 4.
    std::vector<T> flatten() const {
        std::vector<T> out;
        out.reserve(2 * p.size() + 4);
        for (const auto& q : p) {
            out.push_back(q[0]);
            out.push_back(q[1]);
        }
        out.push_back(L[0][0]);
        out.push_back(L[1][0]);
        out.push_back(L[0][1]);
        out.push_back(L[1][1]);
        return out;
    }
    static BasicRealization unflatten(std::span<const T> x) {
        BasicRealization r;
        const std::size_t n = (x.size() - 4) / 2;
        r.p.resize(n);
        for (std::size_t i = 0; i < n; ++i) r.p[i] = {x[2 * i], x[2 * i + 1]};
        r.L[0][0] = x[2 * n];
        r.L[1][0] = x[2 * n + 1];
        r.L[0][1] = x[2 * n + 2];
        r.L[1][1] = x[2 * n + 3];
        return r;
    }

private:
    static T scalar(std::int64_t v) {
        if constexpr (std::is_same_v<T, Fp>) {
            return Fp::from_int(v);
        } else {
            return static_cast<T>(v);
        }
    }
};

using Realization = BasicRealization<double>;

/// Column meaning in a natural matrix.
struct ColumnLabel {
    enum class Block { vertex, lattice } block;
    /// Vertex id, or lattice vector index (0 for L_1, 1 for L_2).
    std::size_t index;
    /// Coordinate (0 = x, 1 = y); always 0 for M112.
    int coordinate;
};

template <class T>
struct NaturalMatrix {
    MatrixKind kind;
    Matrix<T> entries;
    /// Edge id per row.
    std::vector<EdgeId> row_edge;
    std::vector<ColumnLabel> columns;
};

/// M112 and M222 from an assignment; throws StructuralError when it does not
/// cover every edge or when asked for M232.
template <class T>
NaturalMatrix<T> build_natural_matrix(const ColoredGraph& g, MatrixKind kind, const Assignment<T>& assignment);
extern template NaturalMatrix<Fp> build_natural_matrix(const ColoredGraph&, MatrixKind, const Assignment<Fp>&);
extern template NaturalMatrix<double> build_natural_matrix(const ColoredGraph&, MatrixKind, const Assignment<double>&);

/// M232: the M222 pattern with (a, b) replaced by the displacement eta.
/// Throws StructuralError when the realization has the wrong point count.
template <class T>
NaturalMatrix<T> build_rigidity_matrix(const ColoredGraph& g, const BasicRealization<T>& realization);
extern template NaturalMatrix<Fp> build_rigidity_matrix(const ColoredGraph&, const BasicRealization<Fp>&);
extern template NaturalMatrix<double> build_rigidity_matrix(const ColoredGraph&, const BasicRealization<double>&);

struct RankReport {
    MatrixKind kind;
    std::size_t rank = 0;
    Arithmetic mode = Arithmetic::prime_field;
    int trials = 0;
    std::uint64_t seed = 0;
};

inline constexpr int default_trials = 3;

/// One random instance of the matrix: uniform nonzero a, b in F_p (for M232,
/// uniform points and lattice in F_p).
MatrixFp sample_matrix_fp(const ColoredGraph& g, MatrixKind kind, Rng& rng);
/// One random instance with every value uniform in [-1, 1].
MatrixD sample_matrix_float(const ColoredGraph& g, MatrixKind kind, Rng& rng);

/// Max rank over `trials` independent samples from sample_matrix_fp seeded
/// with `seed`. Throws DomainError when trials < 1.
RankReport rank_mod_p(const ColoredGraph& g, MatrixKind kind, int trials, std::uint64_t seed);
/// Same over sample_matrix_float, ranked by kernel_float.
RankReport rank_float_generic(const ColoredGraph& g, MatrixKind kind, int trials, std::uint64_t seed,
                              double tolerance = 1e-9);

/// The closed-form determinant check for M112 minors.
struct DeterminantCheck {
    /// Kept L columns (0 or 1 each); the rest of the minor is every vertex
    /// column except `dropped_vertex`.
    std::vector<std::size_t> kept_lattice_columns;
    std::string formula; // "tree", "t_q", "cross"
};

template <class T>
struct DeterminantReport {
    int k = 0;                 // m - n + 1
    bool is_11k = false;       // whether the graph is a (1,1,k)-graph
    std::size_t dropped_vertex = 0;
    std::vector<DeterminantCheck> minors;
    std::vector<T> determinant; // per minor
    std::vector<T> formula;     // closed form per minor
    bool agree = false;
};

/// Evaluates the designated minors of M112 and compares them, up to sign, with
/// the closed forms: +-prod a for a tree (both L columns dropped), +-t_q prod a
/// for one cycle with image t (L column q kept, both q checked), and
/// +-(t^1_1 t^2_2 - t^2_1 t^1_2) prod a for two fundamental cycles (no L
/// column dropped). Graphs of the right size that are not (1,1,k) have closed
/// form 0. Exact in F_p; relative error below 1e-10 in floating point.
/// Throws DomainError unless kind is M112, n >= 1 and n - 1 <= m <= n + 1.
template <class T>
DeterminantReport<T> verify_determinant_formulas(const ColoredGraph& g, MatrixKind kind, const Assignment<T>& assignment,
                                                 std::size_t dropped_vertex = 0);
extern template DeterminantReport<Fp> verify_determinant_formulas(const ColoredGraph&, MatrixKind,
                                                                  const Assignment<Fp>&, std::size_t);
extern template DeterminantReport<double> verify_determinant_formulas(const ColoredGraph&, MatrixKind,
                                                                      const Assignment<double>&, std::size_t);

/// Signed sum of the M112 rows of a closed walk, each scaled by 1/a (forward
/// steps added, backward subtracted). The vertex columns cancel and the L
/// block carries the walk's image.
template <class T>
std::vector<T> cycle_elimination_row(const ColoredGraph& g, const Assignment<T>& assignment, const ClosedWalk& walk);
extern template std::vector<Fp> cycle_elimination_row(const ColoredGraph&, const Assignment<Fp>&, const ClosedWalk&);
extern template std::vector<double> cycle_elimination_row(const ColoredGraph&, const Assignment<double>&,
                                                          const ClosedWalk&);

} // namespace cgrig
