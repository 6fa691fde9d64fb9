#pragma once

// Span of the monodromy orbit of a center vanishing cycle, the kernel of the
// winding functionals, and the saddle-loop bookkeeping around them.

#include "centerkit/arrangement.hpp"
#include "centerkit/fiber_graph.hpp"
#include "centerkit/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace centerkit {

class OrbitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OrbitGenerator {
    enum class Source { CenterLift, PolygonSum };
    Source source = Source::CenterLift;
    std::size_t face = 0;
    long power = 0;  // CenterLift: monodromy power k
    CycleClass cycle;
};

struct OrbitSpan {
    std::vector<OrbitGenerator> generators;
    Subspace<Rational> span{0};

    std::size_t dimension() const { return span.dimension(); }
};

/// Throws OrbitError unless the multiplicities are pairwise coprime.
void require_pairwise_coprime(const LineArrangement& arr);

OrbitSpan orbit_span(const LineArrangement& arr);
OrbitSpan orbit_span(const FiberGraph& gcheck);

/// Kernel of the winding functionals on H_1.
Subspace<Rational> residue_annihilator(const FiberGraph& gcheck);
Subspace<Rational> residue_annihilator(const LineArrangement& arr);

struct OrbitReport {
    std::size_t b1 = 0;
    std::size_t d = 0;
    std::size_t orbit_dim = 0;
    std::size_t annihilator_dim = 0;
    std::size_t codimension = 0;
    bool contained = false;  // orbit inside the annihilator
    bool equal = false;
    long genus = 0;
    bool surjective_by_dimension = false;  // orbit_dim >= 2 genus
    bool delta_sum_zero = false;
    bool delta_independent = false;        // rank {delta^1..delta^d} = d
    bool delta_basis = false;              // {delta^1..delta^d} + polygon sums spans the loops (informational)
    bool direct_sum = false;               // orbit + d saddle loops = H_1
    std::vector<std::size_t> complement_loops;  // saddle pair indices of the chosen complement

    bool holds() const {
        return contained && equal && codimension == d && surjective_by_dimension && delta_sum_zero && delta_independent &&
               direct_sum;
    }
};

OrbitReport verify_orbit_theorem(const LineArrangement& arr);

struct AlternatingClasses {
    std::vector<CycleClass> delta;  // one per line
    std::vector<int> line_signs;    // sign applied to each line's alternating sum
    bool sums_to_zero = false;
    std::size_t rank_first_d = 0;
    std::size_t rank_with_polygons = 0;  // of {delta^1..delta^d} + polygon sums
    std::size_t loop_span_dimension = 0;
};

/// delta^i = sum_k (-1)^k c_i delta_{P_k} over the saddles P_0, P_1, ... met along l_i,
/// with c_i = +-1 chosen so the classes sum to zero.
AlternatingClasses line_alternating_classes(const FiberGraph& gcheck);
AlternatingClasses line_alternating_classes(const LineArrangement& arr);

struct AdjacencySign {
    int intersection = +1;  // <saddle cycle, oval> under the fixed orientations
    int epsilon = 0;        // 0 if f > 0 at the probe point, 1 if f < 0
    long exponent = 0;      // floor(n_i / 2) + epsilon
    Point probe;
};

/// Faces adjacent across a segment of line `line`; the probe point is the shared
/// segment midpoint pushed into face1. Throws OrbitError if they are not adjacent.
AdjacencySign adjacency_sign(const LineArrangement& arr, const BoundedFace& face1, const BoundedFace& face2,
                             std::size_t line);

}  // namespace centerkit
