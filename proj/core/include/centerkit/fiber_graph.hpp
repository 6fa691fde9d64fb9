#pragma once

// Combinatorial deformation retracts of a regular fiber L_t = {f = t} of
// f = prod l_i^{n_i}, and the homology data read off them.
//
// Two models are built:
//   G      sigma vertices (i, x), x < n_i, saddle vertices ((i,j), h), h < e_ij,
//          saddle-to-sigma edges for x = h (mod e_ij), one loop per saddle vertex.
//   Gcheck one vertex per cylinder ((i,j), h) at each real intersection point,
//          n_i parallel edges per finite segment of l_i, one loop per vertex.
//
// Gcheck is realized on the fiber over a small real t > 0. Every edge end and
// every vertex carries a lifted argument pair (arg l_i, arg l_j) / 2pi at the
// saddle l_i cap l_j; along the fiber piece near the saddle these satisfy
// n_i arg l_i + n_j arg l_j = const, so path windings are exact rationals.

#include "centerkit/arrangement.hpp"
#include "centerkit/linalg.hpp"
#include "centerkit/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace centerkit {

class FiberGraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rational homology class, coordinates over the fundamental-cycle basis.
struct CycleClass {
    std::vector<Rational> coefficients;

    std::size_t size() const { return coefficients.size(); }
    bool is_zero() const;
    CycleClass& operator+=(const CycleClass& o);
    CycleClass& operator-=(const CycleClass& o);
    CycleClass& operator*=(const Rational& s);
    friend CycleClass operator+(CycleClass a, const CycleClass& b) { return a += b; }
    friend CycleClass operator-(CycleClass a, const CycleClass& b) { return a -= b; }
    friend CycleClass operator*(const Rational& s, CycleClass a) { return a *= s; }
    friend bool operator==(const CycleClass& a, const CycleClass& b) { return a.coefficients == b.coefficients; }
};

enum class GraphModel { G, Gcheck };

struct GraphVertex {
    enum class Kind { Sigma, Saddle };
    Kind kind = Kind::Saddle;
    std::size_t line = 0;   // sigma: the line
    long sheet = 0;         // sigma: x
    std::size_t pair = 0;   // saddle: index into intersections()
    std::size_t i = 0;      // saddle: i < j
    std::size_t j = 0;
    long h = 0;             // saddle: cylinder
    Rational tau{0};        // saddle: arg(t / prod_{m != i,j} l_m(P)^{n_m}) / 2pi in {0, 1/2}
    std::array<Rational, 2> base{Rational(0), Rational(0)};  // base point lift (arg l_i, arg l_j)/2pi
};

/// Where an edge end meets a saddle vertex: lifted arguments of (l_i, l_j) at the
/// attachment point and the displacement from the vertex base point to it.
struct Attachment {
    std::array<Rational, 2> lift{Rational(0), Rational(0)};
    std::array<Rational, 2> displacement{Rational(0), Rational(0)};
};

struct GraphEdge {
    enum class Kind { Segment, Link, Loop };
    Kind kind = Kind::Segment;
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t line = 0;     // Segment / Link: the line carrying the edge
    std::size_t segment = 0;  // Segment: position along line_orders()[line]
    long sheet = 0;           // Segment: x in [0, n_i); Link: sigma sheet
    Rational sheet_arg{0};    // Segment: constant arg(l_line)/2pi along the edge
    Attachment at_from;       // Segment only
    Attachment at_to;         // Segment only
};

class FiberGraph {
public:
    GraphModel model() const { return model_; }
    const LineArrangement& arrangement() const { return arr_; }
    const std::vector<IntersectionPoint>& points() const { return points_; }
    const std::vector<std::vector<std::size_t>>& orders() const { return orders_; }
    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t loop_count() const;
    std::size_t non_loop_edge_count() const { return edge_count() - loop_count(); }
    bool connected() const;
    /// E - V + 1 (the graph is connected).
    std::size_t betti1() const { return edge_count() - vertex_count() + 1; }

    /// Edge ids of the fundamental-cycle basis; loops are always their own basis element.
    const std::vector<std::size_t>& basis_edges() const { return basis_edges_; }
    /// Basis position of a non-tree edge, or nullopt for tree edges.
    std::optional<std::size_t> basis_index(std::size_t edge) const;

    /// Closed walk realizing basis cycle k: (edge id, +1 forward / -1 backward) in order.
    std::vector<std::pair<std::size_t, int>> fundamental_walk(std::size_t k) const;

    /// Coordinates of a closed edge flow (one entry per edge). Throws if not closed.
    CycleClass cycle_from_flow(const std::vector<Rational>& flow) const;
    std::vector<Rational> flow_of_basis_cycle(std::size_t k) const;

    /// Saddle vertex id for intersection pair index and cylinder h.
    std::size_t saddle_vertex(std::size_t pair, long h) const;
    /// Loop edge id at a saddle vertex.
    std::size_t loop_edge(std::size_t vertex) const;
    /// Segment edge id (Gcheck only).
    std::size_t segment_edge(std::size_t line, std::size_t segment, long sheet) const;

    /// Loop direction in (arg l_i, arg l_j) turns: (n_j/e, -n_i/e).
    std::array<Rational, 2> loop_vector(std::size_t vertex) const;

    /// Winding of l_0..l_d accumulated along an edge in its forward direction (Gcheck).
    std::vector<Rational> edge_winding(std::size_t edge) const;

    friend FiberGraph build_graph(const LineArrangement& arr);
    friend FiberGraph build_real_graph(const LineArrangement& arr);

private:
    void finish();  // spanning tree + basis

    GraphModel model_ = GraphModel::G;
    LineArrangement arr_;
    std::vector<IntersectionPoint> points_;
    std::vector<std::vector<std::size_t>> orders_;
    std::vector<GraphVertex> vertices_;
    std::vector<GraphEdge> edges_;
    std::vector<std::size_t> saddle_offset_;  // first saddle vertex of each pair
    std::vector<std::size_t> loop_of_vertex_;
    std::vector<std::vector<std::size_t>> segment_edges_;  // [line] -> segment * n_i + sheet
    std::vector<bool> tree_edge_;
    std::vector<long> parent_edge_;  // per vertex, -1 at the root
    std::vector<std::size_t> depth_;
    std::vector<std::size_t> basis_edges_;
    std::vector<long> basis_of_edge_;
};

/// Model G (any validated arrangement).
FiberGraph build_graph(const LineArrangement& arr);
/// Model Gcheck (real validated arrangement; every arrangement read from rationals is real).
FiberGraph build_real_graph(const LineArrangement& arr);

/// (d-1) n + 1, cross-checked against b_1 of both graph models; throws FiberGraphError on mismatch.
long h1_rank(const LineArrangement& arr);
/// Numerator (d-1) n + 2 - sum gcd(n_i, n) of the genus formula.
long genus_numerator(const LineArrangement& arr);
long genus(const LineArrangement& arr);

/// Row i: gamma -> (1/2 pi i) \oint_gamma dl_i / l_i on the basis cycles of Gcheck.
struct WindingFunctionals {
    Matrix<Rational> W;  // (d+1) x b_1
    std::vector<Rational> apply(const CycleClass& c) const;
};

/// Throws FiberGraphError if sum n_i W_i != 0 or rank W != d.
WindingFunctionals winding_matrix(const FiberGraph& gcheck);

struct CenterLift {
    long power = 0;                // k: the lift is h_0^k of the transported real oval
    std::vector<long> side_sheets;  // sheet used on each side
    std::vector<long> corner_turns; // loop multiplicity inserted at each corner
    std::vector<Rational> flow;     // edge flow
    CycleClass cycle;
};

/// The real oval of the face transported to t > 0 and pushed by h_0^k, k = 0..lcm(a_i)-1.
/// One lift per combination of side sheets reachable by monodromy about t = 0.
std::vector<CenterLift> center_cycle_lifts(const FiberGraph& gcheck, const BoundedFace& face);
CenterLift center_cycle_lift(const FiberGraph& gcheck, const BoundedFace& face, long power);

/// Loop at saddle vertex ((i,j), h) as a homology class.
CycleClass saddle_loop_class(const FiberGraph& gcheck, std::size_t i, std::size_t j, long h);

/// +1 or -1: orientation with which the loop at a face corner enters the
/// monodromy iterate (corner from side k-1 into side k).
int corner_orientation(const BoundedFace& face, std::size_t corner);

/// sum_k (a / (a_k a_{k+1})) delta_{k,k+1}, a = prod a_k, delta oriented per corner_orientation.
CycleClass polygon_saddle_sum(const FiberGraph& gcheck, const BoundedFace& face);

}  // namespace centerkit
