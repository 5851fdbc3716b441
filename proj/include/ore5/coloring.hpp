#pragma once

#include <array>
#include <vector>

#include "ore5/graph.hpp"

namespace ore5 {

struct EquitableColoring {
    std::array<std::vector<int>, 3> classes; // sorted so |classes[0]| <= |classes[1]| <= |classes[2]|
    std::vector<int> color_of;               // vertex -> index into classes
};

// Proper 3-coloring whose class sizes differ by at most one, built per
// component by a frontier DP and assembled by a size DP across components.
// Throws OreDegreeViolation when ore_degree(h) > 5.
EquitableColoring equitable_3_coloring(const Graph& h);

} // namespace ore5
