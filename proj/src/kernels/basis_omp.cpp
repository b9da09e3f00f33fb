#include "hetc/kernels/basis_kernels.hpp"

#include <cmath>

namespace hetc::kernels {

void gaussian_basis_omp(std::span<const double> x, std::span<const double> centers, double width,
                        std::span<double> out) noexcept {
    const std::size_t dim = x.size();
    const std::size_t nodes = out.size();
    const double inv_w2 = 1.0 / (width * width);
    const double* xp = x.data();
    const double* cp = centers.data();
    double* op = out.data();
    // the inner sum runs in the same order as the serial kernel; no simd reduction here
    #pragma omp parallel for schedule(static) default(none) firstprivate(dim, nodes, inv_w2, xp, cp, op)
    for (std::size_t j = 0; j < nodes; ++j) {
        const double* c = cp + j * dim;
        double d2 = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double diff = xp[k] - c[k];
            d2 += diff * diff;
        }
        op[j] = std::exp(-d2 * inv_w2);
    }
}

}  // namespace hetc::kernels
