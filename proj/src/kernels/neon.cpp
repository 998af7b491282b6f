#include <arm_neon.h>

#include <cmath>

#include "hdvol/kernels.hpp"

namespace hdvol::kernels::neon {

double dot(const double* a, const double* b, std::size_t n) {
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
        acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    }
    double sum = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    }
    for (; i < n; ++i) {
        y[i] = std::fma(alpha, x[i], y[i]);
    }
}

void scale(double alpha, double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vst1q_f64(x + i, vmulq_n_f64(vld1q_f64(x + i), alpha));
    }
    for (; i < n; ++i) {
        x[i] *= alpha;
    }
}

std::size_t argmax_abs(const double* x, std::size_t n) {
    if (n < 4) {
        return scalar::argmax_abs(x, n);
    }
    float64x2_t vmax = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        vmax = vmaxq_f64(vmax, vabsq_f64(vld1q_f64(x + i)));
    }
    double best = vmaxvq_f64(vmax);
    for (std::size_t j = i; j < n; ++j) {
        best = std::fmax(best, std::fabs(x[j]));
    }
    for (i = 0; i < n; ++i) {
        if (std::fabs(x[i]) == best) {
            return i;
        }
    }
    return 0;
}

}  // namespace hdvol::kernels::neon
