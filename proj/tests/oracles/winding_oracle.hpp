#pragma once

// Numeric winding oracle: realizes every fundamental cycle of Gcheck as a
// closed path on the complex fiber {f = t}, t > 0 small, by continuation, and
// integrates d arg l_m along it. Independent of the exact lift bookkeeping
// except for the choice of homotopy class inside each cylinder.

#include "centerkit/fiber_graph.hpp"

#include <vector>

namespace centerkit::oracle {

struct WindingOracleResult {
    std::vector<std::vector<double>> winding;  // [line][basis cycle], in turns
    double max_landing_error = 0;               // relative mismatch where pieces are glued
    double max_phase_slack = 0;                 // turns between a predicted and an actual arg l_i at a vertex
    double t = 0;
};

WindingOracleResult numeric_winding(const FiberGraph& gcheck);

}  // namespace centerkit::oracle
