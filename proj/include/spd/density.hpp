#pragma once

// Common result type for the three density evaluation routes.

#include <cstddef>

namespace spd {

enum class DensityMethod { asym, oracle, envelope };

struct DensityEstimate {
    double value = 0.0;
    DensityMethod method = DensityMethod::asym;
    // asym: the hardness t w^2 phi''(w) (larger => tighter asymptotic);
    // oracle: absolute truncation-plus-quadrature error bound.
    double error_indicator = 0.0;
    bool clamped = false;       // oracle only: negative dust clamped to zero
    double contour_w = 0.0;     // oracle only: abscissa of the vertical contour
    std::size_t nodes_used = 0; // oracle only
};

}  // namespace spd
