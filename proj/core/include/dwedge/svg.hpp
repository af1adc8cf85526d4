#pragma once

#include <string>
#include <vector>

#include "dwedge/arrangement.hpp"

namespace dwedge {

struct SvgOptions {
    int width = 800;
    int decimals = 3;  // decimal digits for coordinate output
};

// Renders the boxed arrangement with the selected faces filled. Rendering is
// presentation-only: coordinates are decimal approximations of the exact
// rationals and never feed back into any computation.
std::string render_svg(const Arrangement& arr, const CellSet& selected, const SvgOptions& opt = {});

}  // namespace dwedge
