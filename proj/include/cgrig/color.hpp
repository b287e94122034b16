#pragma once

#include <cstdint>
#include <compare>
#include <ostream>

namespace cgrig {

/// Element of Z^2: an edge color, a cycle image, or a vertex potential.
struct Color {
    std::int64_t g1 = 0;
    std::int64_t g2 = 0;

    constexpr Color() = default;
    constexpr Color(std::int64_t a, std::int64_t b) : g1(a), g2(b) {}

    constexpr bool is_zero() const { return g1 == 0 && g2 == 0; }

    constexpr Color operator-() const { return {-g1, -g2}; }
    constexpr Color& operator+=(Color o) { g1 += o.g1; g2 += o.g2; return *this; }
    constexpr Color& operator-=(Color o) { g1 -= o.g1; g2 -= o.g2; return *this; }
    friend constexpr Color operator+(Color a, Color b) { return a += b; }
    friend constexpr Color operator-(Color a, Color b) { return a -= b; }
    friend constexpr Color operator*(std::int64_t s, Color a) { return {s * a.g1, s * a.g2}; }
    friend constexpr auto operator<=>(const Color&, const Color&) = default;
};

/// 2x2 determinant of the column pair (a, b), computed without overflow.
constexpr __int128 cross(Color a, Color b) {
    return static_cast<__int128>(a.g1) * b.g2 - static_cast<__int128>(a.g2) * b.g1;
}

inline std::ostream& operator<<(std::ostream& os, Color c) {
    return os << '(' << c.g1 << ',' << c.g2 << ')';
}

/// Tracks the Q-span of a growing set of Z^2 vectors (dimension at most 2).
class ImageSpan {
public:
    /// Returns true when `v` raised the dimension of the span.
    constexpr bool add(Color v) {
        if (v.is_zero() || rank_ == 2) return false;
        if (rank_ == 0) {
            basis_[0] = v;
            rank_ = 1;
            return true;
        }
        if (cross(basis_[0], v) == 0) return false;
        basis_[1] = v;
        rank_ = 2;
        return true;
    }
    constexpr int rank() const { return rank_; }
    constexpr Color basis(int i) const { return basis_[i]; }
    constexpr void clear() { rank_ = 0; }

private:
    Color basis_[2]{};
    int rank_ = 0;
};

} // namespace cgrig
