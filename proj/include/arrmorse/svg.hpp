#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrmorse/followup.hpp"

namespace arrmorse {

struct NotPlanar : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RenderOptions {
    std::optional<std::vector<AffineSubspace>> flag;   // draws V_1 and V_0
    std::vector<int> swept;                            // vertex indices to highlight
    std::optional<FlagCandidate2D> sectors;            // shades the Λ_j
    int width = 480;
    int height = 480;
};

// Deterministic byte-for-byte static figure of a line arrangement.
std::string render_svg_2d(const Arrangement& arr, const RenderOptions& opts = {});

}  // namespace arrmorse
