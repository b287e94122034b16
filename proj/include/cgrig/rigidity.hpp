#pragma once

#include "cgrig/direction_network.hpp"
#include "cgrig/graph.hpp"
#include "cgrig/linear_rep.hpp"
#include "cgrig/sparsity.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace cgrig {

enum class RigidityStatus { minimally_rigid, rigid_overconstrained, flexible };

std::string_view status_name(RigidityStatus s);

struct RigidityVerdict {
    RigidityStatus status = RigidityStatus::flexible;
    /// Generic rank of the rigidity matrix.
    std::size_t rank = 0;
    /// Size of a maximal colored-Laman-sparse subset.
    std::size_t sparse_size = 0;
    /// 2n + 1 - rank: internal degrees of freedom beyond the trivial three.
    std::int64_t dof = 0;
    std::optional<Realization> witness;
    std::optional<CircuitReport> circuit;
    std::uint64_t seed = 0;
};

/// M232 at a realization.
NaturalMatrix<double> rigidity_matrix(const ColoredGraph& g, const Realization& realization);

/// Max rank of M232 over random realizations: integers in [-2^20, 2^20]
/// mapped into F_p, or reals in [-1, 1] ranked with kernel_float.
RankReport generic_rigidity_rank(const ColoredGraph& g, int trials, std::uint64_t seed,
                                 Arithmetic mode = Arithmetic::prime_field, double tolerance = 1e-9);

struct RigidCertificate {
    FaithfulRealization faithful;
    /// Floating rank of M232 at the realization.
    std::size_t rank = 0;
    /// Rank over F_p after rounding the realization to multiples of 2^-30.
    std::size_t exact_rank = 0;
    /// Rank after deleting each row in turn.
    std::vector<std::size_t> deletion_ranks;
};

/// Faithful realization of a colored-Laman graph checked to be an
/// infinitesimally rigid framework whose every edge is needed. Throws
/// DomainError for other graphs and InternalError if the checks fail.
RigidCertificate rigid_realization_certificate(const ColoredGraph& g, std::uint64_t seed);

/// Combinatorial decision (maximal sparse subset size) cross-checked with the
/// generic rank; InternalError when they differ.
RigidityVerdict decide_rigidity(const ColoredGraph& g, std::uint64_t seed, int trials = default_trials);

/// Realization coordinates rounded to multiples of 2^-30, as F_p values.
BasicRealization<Fp> rationalize(const Realization& r);

/// Infinitesimal rotation (J p_i, J L_1, J L_2) with J the quarter turn.
std::vector<double> rotation_motion(const Realization& r);
/// Translation (t, ..., t, 0, 0, 0, 0).
std::vector<double> translation_motion(std::size_t n, Vec2 t);

struct OneDVerdict {
    bool combinatorial = false; // connected with a cycle of nonzero image
    bool numeric = false;       // generic rank n of the 1d rigidity matrix
    std::size_t rank = 0;
    bool rigid = false;
    bool minimally_rigid = false;
};

/// 1d rigidity matrix: row for edge i -> j has -eta at column i, +eta at j
/// and gamma eta in the lattice column, eta = x_j + gamma L - x_i.
MatrixFp rigidity_matrix_1d(const ColoredGraph& g, std::span<const Fp> x, Fp L);

/// Colors must have g2 = 0 (DomainError otherwise); the graph must have a
/// vertex. InternalError when the two routes disagree.
OneDVerdict is_1d_rigid(const ColoredGraph& g, std::uint64_t seed, int trials = default_trials);

} // namespace cgrig
