#include <catch2/catch_amalgamated.hpp>

#include "hetc/kernels/basis_kernels.hpp"
#include "hetc/rbf.hpp"

#include <omp.h>

#include <random>
#include <vector>

TEST_CASE("OpenMP basis kernel is bitwise identical to the serial reference", "[kernels]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (std::size_t nodes_per_dim : {2u, 5u, 9u}) {
        for (std::size_t dim : {1u, 2u, 4u}) {
            std::vector<std::pair<double, double>> ranges(dim, {-3.0, 3.0});
            const auto basis = hetc::RbfBasis::grid(ranges, nodes_per_dim, 0.8);
            std::vector<double> x(dim);
            for (auto& v : x) v = d(rng);
            std::vector<double> serial(basis.node_count()), parallel(basis.node_count()), dispatch(basis.node_count());
            hetc::kernels::gaussian_basis_serial(x, basis.centers(), basis.width(), serial);
            for (int threads : {1, 2, 4}) {
                omp_set_num_threads(threads);
                hetc::kernels::gaussian_basis_omp(x, basis.centers(), basis.width(), parallel);
                REQUIRE(parallel == serial);
            }
            hetc::kernels::gaussian_basis(x, basis.centers(), basis.width(), dispatch);
            REQUIRE(dispatch == serial);
        }
    }
}

TEST_CASE("dispatch crosses to the parallel kernel on large networks", "[kernels]") {
    std::vector<std::pair<double, double>> ranges(4, {-1.0, 1.0});
    const auto basis = hetc::RbfBasis::grid(ranges, 9, 0.5);  // 6561 nodes
    REQUIRE(basis.node_count() >= hetc::kernels::kParallelNodeThreshold);
    const std::vector<double> x{0.1, -0.2, 0.3, 0.0};
    std::vector<double> serial(basis.node_count()), dispatch(basis.node_count());
    hetc::kernels::gaussian_basis_serial(x, basis.centers(), basis.width(), serial);
    hetc::kernels::gaussian_basis(x, basis.centers(), basis.width(), dispatch);
    CHECK(dispatch == serial);
}
