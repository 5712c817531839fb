#pragma once

#include <stdexcept>
#include <string>

namespace wsatlab {

// Supported clique orders for the bootstrap process and its properties.
inline constexpr int kMinCliqueOrder = 3;
inline constexpr int kMaxCliqueOrder = 12;

inline void check_clique_order(int s) {
    if (s < kMinCliqueOrder || s > kMaxCliqueOrder)
        throw std::invalid_argument("clique order must lie in " + std::to_string(kMinCliqueOrder) +
                                    ".." + std::to_string(kMaxCliqueOrder));
}

}  // namespace wsatlab
