#pragma once

#include <cstddef>
#include <span>

/**
 * Gaussian basis kernels.
 *
 * Each kernel writes out[j] = exp(-|x - c_j|^2 / width^2) for every node j, with
 * centers stored row-major (node_count x dim). Every output entry is computed by
 * the same instruction sequence in both variants, so serial and OpenMP results
 * are bitwise identical regardless of thread count.
 */
namespace hetc::kernels {

/// Reference implementation; kept for testing and benchmarking.
void gaussian_basis_serial(std::span<const double> x, std::span<const double> centers, double width,
                           std::span<double> out) noexcept;

/// OpenMP parallel-for over nodes.
void gaussian_basis_omp(std::span<const double> x, std::span<const double> centers, double width,
                        std::span<double> out) noexcept;

/// Node count above which gaussian_basis() dispatches to the OpenMP kernel.
inline constexpr std::size_t kParallelNodeThreshold = 4096;

/// Picks the serial kernel for small networks, OpenMP otherwise.
void gaussian_basis(std::span<const double> x, std::span<const double> centers, double width,
                    std::span<double> out) noexcept;

}  // namespace hetc::kernels
