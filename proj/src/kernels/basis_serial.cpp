#include "hetc/kernels/basis_kernels.hpp"

#include <cmath>

namespace hetc::kernels {

void gaussian_basis_serial(std::span<const double> x, std::span<const double> centers, double width,
                           std::span<double> out) noexcept {
    const std::size_t dim = x.size();
    const double inv_w2 = 1.0 / (width * width);
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double* c = centers.data() + j * dim;
        double d2 = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double diff = x[k] - c[k];
            d2 += diff * diff;
        }
        out[j] = std::exp(-d2 * inv_w2);
    }
}

void gaussian_basis(std::span<const double> x, std::span<const double> centers, double width,
                    std::span<double> out) noexcept {
    if (out.size() >= kParallelNodeThreshold) {
        gaussian_basis_omp(x, centers, width, out);
    } else {
        gaussian_basis_serial(x, centers, width, out);
    }
}

}  // namespace hetc::kernels
