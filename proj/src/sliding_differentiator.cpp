#include "hetc/sliding_differentiator.hpp"

#include <cmath>

namespace hetc {

DifferentiatorRates differentiator_rates(const DifferentiatorState& s, double input) noexcept {
    const double gap = s.delta0 - input;
    const double sigma = s.delta1 - s.eps0 * std::sqrt(std::abs(gap)) * signum(gap);
    return {sigma, -s.eps1 * signum(s.delta1 - sigma), sigma};
}

}  // namespace hetc
