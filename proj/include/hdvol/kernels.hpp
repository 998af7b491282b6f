#pragma once

// Data-parallel inner loops of the linear-algebra kernel.
//
// Every kernel has a scalar reference implementation and, where the target
// supports it, an AVX2+FMA (x86-64) or NEON (aarch64) variant. The variant is
// chosen once at first use from the CPU's capabilities; HDVOL_SIMD=scalar|avx2|neon
// in the environment forces a particular one. SIMD variants reassociate sums
// and use fused multiply-add, so they agree with the scalar reference to
// rounding, not bit for bit. argmax_abs is exact on every path.

#include <cstddef>
#include <span>
#include <string_view>

namespace hdvol::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
    Isa isa;
    double (*dot)(const double* a, const double* b, std::size_t n);
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
    void (*scale)(double alpha, double* x, std::size_t n);
    std::size_t (*argmax_abs)(const double* x, std::size_t n);
};

std::string_view isa_name(Isa isa);

/// True when the kernels for `isa` were compiled in and the CPU can run them.
bool isa_supported(Isa isa);

/// Kernel table for a specific ISA; throws std::runtime_error if unsupported.
const KernelTable& table_for(Isa isa);

/// Currently active table.
const KernelTable& active();

/// Switch the process-wide active ISA. Not meant to be called while other
/// threads are running kernels.
void set_active_isa(Isa isa);

Isa best_supported_isa();

double dot(std::span<const double> a, std::span<const double> b);

/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

/// x *= alpha
void scale(double alpha, std::span<double> x);

/// Index of the first element of maximal magnitude. Empty input returns 0.
std::size_t argmax_abs(std::span<const double> x);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
std::size_t argmax_abs(const double* x, std::size_t n);
}  // namespace scalar

#if defined(HDVOL_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
std::size_t argmax_abs(const double* x, std::size_t n);
}  // namespace avx2
#endif

#if defined(HDVOL_HAVE_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scale(double alpha, double* x, std::size_t n);
std::size_t argmax_abs(const double* x, std::size_t n);
}  // namespace neon
#endif

}  // namespace hdvol::kernels
