#pragma once

// JSON model configs -> LevyModel.
//
// Schema:
//   {
//     "sigma": number >= 0,
//     "b":     number | "centered",
//     "jumps": { "family": "stable" | "stable_boundary" | "tempered_stable"
//                        | "truncated_stable" | "mixture", ...params },
//     "x0":    number >= 0        (optional; defaults per family),
//     "declared_alpha": number    (optional),
//     "declared_beta":  number    (optional)
//   }
//
// Families and parameters (scale is optional, default 1):
//   stable:           alpha in (1,2), scale          -> scale * x^{-1-alpha}
//   stable_boundary:  scale                          -> scale * x^{-2}
//   tempered_stable:  alpha in (0,2), theta>0, scale -> scale e^{-theta x} x^{-1-alpha}
//   truncated_stable: alpha in (0,2), cutoff>0, scale-> scale x^{-1-alpha} 1{x<cutoff}
//   mixture:          components: [jumps...]
//
// "b": "centered" sets the drift so that the process has zero mean at t = 1;
// it is rejected when the jump tail mean is infinite.  "jumps" may be omitted
// only when sigma > 0 (pure Brownian model).  Unknown keys, wrong types, and
// out-of-range parameters raise SchemaError carrying the JSON path of the
// offending field.  The Custom family is programmatic-only (no JSON encoding).

#include <string>

#include "spd/model.hpp"

namespace spd {

LevyModel parse_model_text(const std::string& text);
LevyModel parse_model_file(const std::string& path);

}  // namespace spd
