#include "cgrig/lattice.hpp"

#include "cgrig/errors.hpp"

#include <numeric>
#include <vector>

namespace cgrig {
namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

// Column reduction of the first coordinate: returns the gcd column and the
// remaining columns, whose first coordinate is zero.
void gcd_columns(Color& pivot, Color& other) {
    while (other.g1 != 0) {
        std::int64_t q = pivot.g1 / other.g1;
        pivot = pivot - q * other;
        std::swap(pivot, other);
    }
}

} // namespace

HermiteForm hermite_form(std::span<const Color> generators) {
    std::vector<Color> cols(generators.begin(), generators.end());
    Color pivot{};
    std::int64_t second = 0;
    for (Color c : cols) {
        gcd_columns(pivot, c);
        // c now has zero first coordinate; fold its second coordinate into
        // the gcd of the second row.
        second = std::gcd(second, c.g2);
    }
    if (pivot.g1 < 0) pivot = -pivot;
    HermiteForm h;
    h.a = pivot.g1;
    h.d = std::abs(second);
    if (h.a == 0) {
        // Everything lies on the second axis: the lattice is spanned by
        // (0, gcd) and has rank at most one.
        h.d = std::gcd(h.d, pivot.g2);
        h.b = 0;
        return h;
    }
    h.b = h.d > 0 ? ((pivot.g2 % h.d) + h.d) % h.d : pivot.g2;
    return h;
}

Sublattice::Sublattice(const IntBasis& basis) : basis_(basis) {
    if (basis.det() == 0) throw StructuralError("sublattice basis is singular");
    std::array<Color, 2> gens = basis.col;
    hnf_ = hermite_form(gens);
    index_ = std::abs(basis.det());
}

Color Sublattice::reduce(Color v) const {
    std::int64_t q1 = floor_div(v.g1, hnf_.a);
    v = v - q1 * Color{hnf_.a, hnf_.b};
    std::int64_t q2 = floor_div(v.g2, hnf_.d);
    v = v - q2 * Color{0, hnf_.d};
    return v;
}

std::size_t Sublattice::coset_index(Color r) const {
    return static_cast<std::size_t>(r.g1 * hnf_.d + r.g2);
}

Color Sublattice::representative(std::size_t coset) const {
    auto c = static_cast<std::int64_t>(coset);
    return {c / hnf_.d, c % hnf_.d};
}

Color Sublattice::coordinates(Color w) const {
    // Cramer's rule; exact because w lies in the lattice.
    const Color c0 = basis_.col[0];
    const Color c1 = basis_.col[1];
    const std::int64_t det = basis_.det();
    const __int128 x = cross(w, c1);
    const __int128 y = cross(c0, w);
    if (x % det != 0 || y % det != 0) throw InternalError("vector is not in the sublattice");
    return {static_cast<std::int64_t>(x / det), static_cast<std::int64_t>(y / det)};
}

} // namespace cgrig
