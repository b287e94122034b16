#pragma once

#include <cstdint>
#include <ostream>

namespace cgrig {

/// Element of F_p for the Mersenne prime p = 2^61 - 1, stored as its
/// canonical residue in [0, p).
class Fp {
public:
    static constexpr std::uint64_t modulus = (std::uint64_t{1} << 61) - 1;

    constexpr Fp() = default;
    /// Reduces any signed integer into [0, p).
    static constexpr Fp from_int(std::int64_t x) {
        std::int64_t r = x % static_cast<std::int64_t>(modulus);
        if (r < 0) r += static_cast<std::int64_t>(modulus);
        return Fp(static_cast<std::uint64_t>(r), raw_tag{});
    }
    /// `x` must already be below p.
    static constexpr Fp from_residue(std::uint64_t x) { return Fp(x, raw_tag{}); }

    constexpr std::uint64_t value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Fp operator+(Fp a, Fp b) {
        std::uint64_t s = a.v_ + b.v_;
        if (s >= modulus) s -= modulus;
        return Fp(s, raw_tag{});
    }
    friend constexpr Fp operator-(Fp a, Fp b) { return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + modulus - b.v_, raw_tag{}); }
    constexpr Fp operator-() const { return Fp(v_ == 0 ? 0 : modulus - v_, raw_tag{}); }
    friend constexpr Fp operator*(Fp a, Fp b) {
        const unsigned __int128 t = static_cast<unsigned __int128>(a.v_) * b.v_;
        std::uint64_t lo = static_cast<std::uint64_t>(t) & modulus;
        std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
        std::uint64_t s = lo + hi;
        if (s >= modulus) s -= modulus;
        return Fp(s, raw_tag{});
    }
    constexpr Fp& operator+=(Fp o) { return *this = *this + o; }
    constexpr Fp& operator-=(Fp o) { return *this = *this - o; }
    constexpr Fp& operator*=(Fp o) { return *this = *this * o; }

    constexpr Fp pow(std::uint64_t e) const {
        Fp base = *this;
        Fp acc = from_residue(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }
    /// Multiplicative inverse; the inverse of zero is reported as zero.
    constexpr Fp inverse() const { return pow(modulus - 2); }
    friend constexpr Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

    friend constexpr bool operator==(Fp, Fp) = default;

private:
    struct raw_tag {};
    constexpr Fp(std::uint64_t v, raw_tag) : v_(v) {}
    std::uint64_t v_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

} // namespace cgrig
