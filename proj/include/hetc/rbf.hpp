#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hetc {

/// Adaptive weight estimate; one entry per basis node.
using WeightVector = std::vector<double>;

/**
 * @brief Gaussian RBF network layout: node centers plus one shared width.
 *
 * Entry j of the basis vector is exp(-|x - c_j|^2 / width^2), so every entry
 * lies in (0, 1] and |P(x)|^2 <= node_count().
 */
class RbfBasis {
public:
    RbfBasis() = default;

    /// `centers` is row-major, node_count x dim. Throws ConfigInvalid on bad shape or width.
    RbfBasis(std::vector<double> centers, std::size_t dim, double width);

    /// Uniform tensor grid with `nodes_per_dim` points spanning each [lo, hi] range.
    static RbfBasis grid(std::span<const std::pair<double, double>> ranges, std::size_t nodes_per_dim, double width);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t node_count() const noexcept { return dim_ == 0 ? 0 : centers_.size() / dim_; }
    double width() const noexcept { return width_; }
    std::span<const double> centers() const noexcept { return centers_; }
    std::span<const double> center(std::size_t j) const noexcept {
        return std::span<const double>(centers_).subspan(j * dim_, dim_);
    }

private:
    std::vector<double> centers_;
    std::size_t dim_ = 0;
    double width_ = 1.0;
};

/// Basis vector P(x). Throws DimensionMismatch if x.size() != basis.dim().
std::vector<double> evaluate_basis(std::span<const double> x, const RbfBasis& basis);

/// Allocation-free variant; `out` must have basis.node_count() entries.
void evaluate_basis_into(std::span<const double> x, const RbfBasis& basis, std::span<double> out);

/// W^T P. Throws DimensionMismatch on length mismatch.
double approximate(std::span<const double> weights, std::span<const double> p);

double squared_norm(std::span<const double> p) noexcept;

/**
 * @brief Adaptive weight law dW/dt = -lambda * z * m * P - e * W.
 *
 * Writes into `rate` (same length as weights).
 */
void weight_update_rate(double z, double m_gain, std::span<const double> p, double lambda, double e,
                        std::span<const double> weights, std::span<double> rate);

std::vector<double> weight_update_rate(double z, double m_gain, std::span<const double> p, double lambda, double e,
                                       std::span<const double> weights);

/// Shared scalar estimate phi_hat with its decay rate tau and scaling a0.
struct AdaptiveScalar {
    double phi_hat = 0.0;
    double tau = 1.0;
    double a0 = 1.0;
};

/// dphi/dt = z_n^2 |P_n|^2 / (2 a0^2) - tau * phi_hat.
double phi_update_rate(double z_n, std::span<const double> p_n, const AdaptiveScalar& s) noexcept;

/// Same law with the squared basis norm already computed.
double phi_update_rate_from_norm(double z_n, double p_norm_sq, const AdaptiveScalar& s) noexcept;

}  // namespace hetc
