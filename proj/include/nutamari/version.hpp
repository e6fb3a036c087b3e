#pragma once

namespace nutamari {

inline constexpr const char* kToolVersion = "0.1.0";

// Fingerprint of the arithmetic conventions the outputs depend on.
inline constexpr const char* kConventions =
    "eval=left-fold-position-swaps;action=coordinate-permutation;"
    "reflection=left;cone=support-core;eta=decreasing;node-order=(x,y)";

}  // namespace nutamari
