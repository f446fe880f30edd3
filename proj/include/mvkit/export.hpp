#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvkit/polytope.hpp"

namespace mvkit {

// Plane drawing of a 2-face: beta1 goes to (1,0) and beta2 to the unit vector at 120 degrees
// for A2 faces, 90 degrees otherwise. Points follow f.cycle.
std::vector<std::pair<double, double>> face_layout(const Face2& f);

std::string face_to_svg(const Face2& f);
std::string face_to_tikz(const Face2& f);

}  // namespace mvkit
