#include "hetc/rbf.hpp"

#include "hetc/errors.hpp"
#include "hetc/kernels/basis_kernels.hpp"

#include <cmath>
#include <string>

namespace hetc {

RbfBasis::RbfBasis(std::vector<double> centers, std::size_t dim, double width)
    : centers_(std::move(centers)), dim_(dim), width_(width) {
    if (dim_ == 0 || centers_.empty() || centers_.size() % dim_ != 0) {
        throw ConfigInvalid("rbf.centers", "center list must be a nonempty node_count x dim array");
    }
    if (!(width_ > 0.0) || !std::isfinite(width_)) {
        throw ConfigInvalid("rbf.width", "must be positive");
    }
}

RbfBasis RbfBasis::grid(std::span<const std::pair<double, double>> ranges, std::size_t nodes_per_dim, double width) {
    if (ranges.empty()) {
        throw ConfigInvalid("rbf.ranges", "at least one input dimension required");
    }
    if (nodes_per_dim == 0) {
        throw ConfigInvalid("rbf.nodes", "must be at least 1");
    }
    const std::size_t dim = ranges.size();
    std::size_t count = 1;
    for (std::size_t k = 0; k < dim; ++k) {
        count *= nodes_per_dim;
    }

    auto coord = [&](std::size_t k, std::size_t idx) {
        const auto [lo, hi] = ranges[k];
        if (nodes_per_dim == 1) {
            return 0.5 * (lo + hi);
        }
        return lo + (hi - lo) * static_cast<double>(idx) / static_cast<double>(nodes_per_dim - 1);
    };

    std::vector<double> centers(count * dim);
    for (std::size_t j = 0; j < count; ++j) {
        // last dimension varies fastest
        std::size_t rem = j;
        for (std::size_t k = dim; k-- > 0;) {
            centers[j * dim + k] = coord(k, rem % nodes_per_dim);
            rem /= nodes_per_dim;
        }
    }
    return RbfBasis(std::move(centers), dim, width);
}

void evaluate_basis_into(std::span<const double> x, const RbfBasis& basis, std::span<double> out) {
    if (x.size() != basis.dim()) {
        throw DimensionMismatch("basis input has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(basis.dim()));
    }
    if (out.size() != basis.node_count()) {
        throw DimensionMismatch("basis output buffer has wrong length");
    }
    kernels::gaussian_basis(x, basis.centers(), basis.width(), out);
}

std::vector<double> evaluate_basis(std::span<const double> x, const RbfBasis& basis) {
    std::vector<double> out(basis.node_count());
    evaluate_basis_into(x, basis, out);
    return out;
}

double approximate(std::span<const double> weights, std::span<const double> p) {
    if (weights.size() != p.size()) {
        throw DimensionMismatch("weights and basis vector differ in length");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        acc += weights[j] * p[j];
    }
    return acc;
}

double squared_norm(std::span<const double> p) noexcept {
    double acc = 0.0;
    for (double v : p) {
        acc += v * v;
    }
    return acc;
}

void weight_update_rate(double z, double m_gain, std::span<const double> p, double lambda, double e,
                        std::span<const double> weights, std::span<double> rate) {
    if (p.size() != weights.size() || rate.size() != weights.size()) {
        throw DimensionMismatch("weight update: basis, weight and rate lengths differ");
    }
    const double drive = lambda * z * m_gain;
    for (std::size_t j = 0; j < p.size(); ++j) {
        rate[j] = -drive * p[j] - e * weights[j];
    }
}

std::vector<double> weight_update_rate(double z, double m_gain, std::span<const double> p, double lambda, double e,
                                       std::span<const double> weights) {
    std::vector<double> rate(weights.size());
    weight_update_rate(z, m_gain, p, lambda, e, weights, rate);
    return rate;
}

double phi_update_rate_from_norm(double z_n, double p_norm_sq, const AdaptiveScalar& s) noexcept {
    return z_n * z_n * p_norm_sq / (2.0 * s.a0 * s.a0) - s.tau * s.phi_hat;
}

double phi_update_rate(double z_n, std::span<const double> p_n, const AdaptiveScalar& s) noexcept {
    return phi_update_rate_from_norm(z_n, squared_norm(p_n), s);
}

}  // namespace hetc
