#include "cgrig/errors.hpp"
#include "cgrig/simd/kernels.hpp"

#include <atomic>

namespace cgrig::simd {
namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double, const double*, double*, std::size_t);

struct Table {
    Isa isa;
    DotFn dot;
    AxpyFn axpy;
};

Table table_for(Isa isa) {
    switch (isa) {
    case Isa::avx2: return {isa, &avx2::dot, &avx2::axpy};
    case Isa::neon: return {isa, &neon::dot, &neon::axpy};
    case Isa::scalar: break;
    }
    return {Isa::scalar, &scalar::dot, &scalar::axpy};
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}

} // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    case Isa::scalar: break;
    }
    return "scalar";
}

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
        return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Isa detected_isa() {
    if (isa_available(Isa::avx2)) return Isa::avx2;
    if (isa_available(Isa::neon)) return Isa::neon;
    return Isa::scalar;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_available(isa)) throw DomainError("SIMD variant " + std::string(isa_name(isa)) + " is not available");
    current().store(isa, std::memory_order_relaxed);
}

double dot(const double* x, const double* y, std::size_t n) { return table_for(active_isa()).dot(x, y, n); }

void axpy(double a, const double* x, double* y, std::size_t n) { table_for(active_isa()).axpy(a, x, y, n); }

} // namespace cgrig::simd
