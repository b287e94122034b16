#pragma once

#include "cgrig/color.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace cgrig {

/// 2x2 integer matrix stored by columns: col[0], col[1].
struct IntBasis {
    std::array<Color, 2> col;

    static IntBasis identity() { return {{Color{1, 0}, Color{0, 1}}}; }
    static IntBasis diagonal(std::int64_t a, std::int64_t b) { return {{Color{a, 0}, Color{0, b}}}; }

    std::int64_t det() const { return static_cast<std::int64_t>(cross(col[0], col[1])); }
    Color apply(Color v) const { return v.g1 * col[0] + v.g2 * col[1]; }
    IntBasis compose(const IntBasis& rhs) const { return {{apply(rhs.col[0]), apply(rhs.col[1])}}; }
};

/// Lower-triangular Hermite form [[a, 0], [b, d]] (columns (a, b) and (0, d))
/// of the lattice spanned by a list of Z^2 generators, with a, d >= 0 and
/// 0 <= b < d when d > 0. A full-rank lattice has a, d > 0.
struct HermiteForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t d = 0;

    int rank() const { return (a != 0) + (d != 0); }
    /// |Z^2 / lattice|, or nullopt when the lattice has rank < 2.
    std::optional<std::int64_t> index() const {
        if (rank() < 2) return std::nullopt;
        return a * d;
    }
};

HermiteForm hermite_form(std::span<const Color> generators);

/// Coset arithmetic for Z^2 / Lambda with Lambda spanned by the columns of a
/// nonsingular integer basis.
class Sublattice {
public:
    /// Throws StructuralError when the basis is singular.
    explicit Sublattice(const IntBasis& basis);

    std::int64_t index() const { return index_; }
    const IntBasis& basis() const { return basis_; }

    /// Canonical coset representative of v, in the box [0, a) x [0, d).
    Color reduce(Color v) const;
    /// Position of a canonical representative in [0, index()).
    std::size_t coset_index(Color representative) const;
    Color representative(std::size_t coset) const;
    /// Coordinates of a lattice vector with respect to the basis columns.
    Color coordinates(Color lattice_vector) const;

private:
    IntBasis basis_;
    HermiteForm hnf_;
    std::int64_t index_;
};

} // namespace cgrig
