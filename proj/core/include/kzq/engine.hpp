#pragma once

#include <string>
#include <string_view>

#include "kzq/errors.hpp"

namespace kzq {

// How a defect density gets computed: direct ODE integration, the exact
// parabolic-cylinder solution, or ODE + simulated tomographic readout.
enum class Engine { numeric, analytic, tomographic };

inline const char* engine_name(Engine e) {
    switch (e) {
        case Engine::numeric: return "numeric";
        case Engine::analytic: return "analytic";
        case Engine::tomographic: return "tomographic";
    }
    return "?";
}

inline Engine parse_engine(std::string_view s) {
    if (s == "numeric") return Engine::numeric;
    if (s == "analytic") return Engine::analytic;
    if (s == "tomographic") return Engine::tomographic;
    throw config_error("unknown engine '" + std::string(s) +
                       "' (expected numeric, analytic, or tomographic)");
}

}  // namespace kzq
