#pragma once

#include <cstddef>
#include <string_view>

// Inner loops of the floating-point eliminations. Each kernel has a portable
// scalar reference and vector variants; the variant is picked once at startup
// from the running CPU.
namespace cgrig::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Best variant supported by this CPU and build.
Isa detected_isa();
/// Variant currently used by dot() and axpy().
Isa active_isa();
/// Selects a variant (tests use this to compare against the reference).
/// Throws DomainError when the variant is unavailable here.
void set_active_isa(Isa isa);
bool isa_available(Isa isa);

double dot(const double* x, const double* y, std::size_t n);
/// y += a * x
void axpy(double a, const double* x, double* y, std::size_t n);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
} // namespace scalar

namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
} // namespace avx2

namespace neon {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
} // namespace neon

} // namespace cgrig::simd
