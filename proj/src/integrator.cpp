#include "hetc/integrator.hpp"

#include "hetc/errors.hpp"

#include <string>

namespace hetc {

Integrator parse_integrator(std::string_view name) {
    if (name == "rk4") return Integrator::rk4;
    if (name == "euler") return Integrator::euler;
    throw ConfigInvalid("sim.integrator", "expected rk4 or euler, got '" + std::string(name) + "'");
}

std::string_view to_string(Integrator m) noexcept { return m == Integrator::rk4 ? "rk4" : "euler"; }

}  // namespace hetc
