#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hdvol/kernels.hpp"

namespace hdvol::kernels {
namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::dot, scalar::axpy, scalar::scale, scalar::argmax_abs};
#if defined(HDVOL_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::dot, avx2::axpy, avx2::scale, avx2::argmax_abs};
#endif
#if defined(HDVOL_HAVE_NEON)
constexpr KernelTable kNeon{Isa::Neon, neon::dot, neon::axpy, neon::scale, neon::argmax_abs};
#endif

const KernelTable* initial_table() {
    const char* env = std::getenv("HDVOL_SIMD");
    if (env != nullptr) {
        const std::string want(env);
        if (want == "scalar") {
            return &kScalar;
        }
        if (want == "avx2" && isa_supported(Isa::Avx2)) {
            return &table_for(Isa::Avx2);
        }
        if (want == "neon" && isa_supported(Isa::Neon)) {
            return &table_for(Isa::Neon);
        }
    }
    return &table_for(best_supported_isa());
}

std::atomic<const KernelTable*>& active_slot() {
    static std::atomic<const KernelTable*> slot{initial_table()};
    return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(HDVOL_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(HDVOL_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& table_for(Isa isa) {
    if (!isa_supported(isa)) {
        throw std::runtime_error("kernel ISA not available: " + std::string(isa_name(isa)));
    }
    switch (isa) {
#if defined(HDVOL_HAVE_AVX2)
        case Isa::Avx2: return kAvx2;
#endif
#if defined(HDVOL_HAVE_NEON)
        case Isa::Neon: return kNeon;
#endif
        default: return kScalar;
    }
}

Isa best_supported_isa() {
    if (isa_supported(Isa::Avx2)) {
        return Isa::Avx2;
    }
    if (isa_supported(Isa::Neon)) {
        return Isa::Neon;
    }
    return Isa::Scalar;
}

const KernelTable& active() {
    return *active_slot().load(std::memory_order_acquire);
}

void set_active_isa(Isa isa) {
    active_slot().store(&table_for(isa), std::memory_order_release);
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("kernels::dot: length mismatch");
    }
    return active().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("kernels::axpy: length mismatch");
    }
    active().axpy(alpha, x.data(), y.data(), x.size());
}

void scale(double alpha, std::span<double> x) {
    active().scale(alpha, x.data(), x.size());
}

std::size_t argmax_abs(std::span<const double> x) {
    return active().argmax_abs(x.data(), x.size());
}

}  // namespace hdvol::kernels
