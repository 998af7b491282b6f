#include <cmath>

#include "hdvol/kernels.hpp"

namespace hdvol::kernels::scalar {

double dot(const double* a, const double* b, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

void scale(double alpha, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] *= alpha;
    }
}

std::size_t argmax_abs(const double* x, std::size_t n) {
    std::size_t best = 0;
    double best_abs = n > 0 ? std::fabs(x[0]) : 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double v = std::fabs(x[i]);
        if (v > best_abs) {
            best_abs = v;
            best = i;
        }
    }
    return best;
}

}  // namespace hdvol::kernels::scalar
