#include "centerkit/orbit.hpp"

#include <algorithm>
#include <deque>

namespace centerkit {

void require_pairwise_coprime(const LineArrangement& arr) {
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = i + 1; j < arr.size(); ++j)
            if (arr.pair_gcd(i, j) != 1)
                throw OrbitError("multiplicities must be pairwise coprime: gcd(n_" + std::to_string(i) + ", n_" +
                                 std::to_string(j) + ") = " + std::to_string(arr.pair_gcd(i, j)));
}

OrbitSpan orbit_span(const FiberGraph& g) {
    require_pairwise_coprime(g.arrangement());
    OrbitSpan out;
    out.span = Subspace<Rational>(g.betti1());
    const auto faces = bounded_faces(g.arrangement());
    for (std::size_t f = 0; f < faces.size(); ++f) {
        for (auto& lift : center_cycle_lifts(g, faces[f])) {
            out.span.insert(lift.cycle.coefficients);
            out.generators.push_back({OrbitGenerator::Source::CenterLift, f, lift.power, std::move(lift.cycle)});
        }
        auto sum = polygon_saddle_sum(g, faces[f]);
        out.span.insert(sum.coefficients);
        out.generators.push_back({OrbitGenerator::Source::PolygonSum, f, 0, std::move(sum)});
    }
    return out;
}

OrbitSpan orbit_span(const LineArrangement& arr) {
    require_valid(arr);
    require_pairwise_coprime(arr);
    return orbit_span(build_real_graph(arr));
}

Subspace<Rational> residue_annihilator(const FiberGraph& g) {
    const auto w = winding_matrix(g);
    return Subspace<Rational>::span(g.betti1(), nullspace(w.W));
}

Subspace<Rational> residue_annihilator(const LineArrangement& arr) {
    require_valid(arr);
    return residue_annihilator(build_real_graph(arr));
}

AlternatingClasses line_alternating_classes(const FiberGraph& g) {
    const auto& arr = g.arrangement();
    require_pairwise_coprime(arr);
    const std::size_t N = arr.size();
    const auto& points = g.points();

    // Position parity of every saddle along each of its two lines.
    std::vector<std::vector<int>> parity(N, std::vector<int>(points.size(), 0));
    for (std::size_t i = 0; i < N; ++i) {
        const auto& order = g.orders()[i];
        for (std::size_t k = 0; k < order.size(); ++k) parity[i][order[k]] = k % 2 == 0 ? 1 : -1;
    }

    // Each saddle loop must cancel between its two lines: c_i parity_i + c_j parity_j = 0.
    AlternatingClasses out;
    out.line_signs.assign(N, 0);
    out.line_signs[0] = 1;
    std::deque<std::size_t> queue{0};
    bool consistent = true;
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t p = 0; p < points.size(); ++p) {
            if (points[p].i != i && points[p].j != i) continue;
            const std::size_t j = points[p].i == i ? points[p].j : points[p].i;
            const int want = -out.line_signs[i] * parity[i][p] * parity[j][p];
            if (out.line_signs[j] == 0) {
                out.line_signs[j] = want;
                queue.push_back(j);
            } else if (out.line_signs[j] != want) {
                consistent = false;
            }
        }
    }

    const std::size_t b1 = g.betti1();
    out.delta.assign(N, CycleClass{std::vector<Rational>(b1, Rational(0))});
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t p : g.orders()[i]) {
            const auto loop = saddle_loop_class(g, points[p].i, points[p].j, 0);
            out.delta[i] += Rational(out.line_signs[i] * parity[i][p]) * loop;
        }
    CycleClass total{std::vector<Rational>(b1, Rational(0))};
    for (const auto& d : out.delta) total += d;
    out.sums_to_zero = consistent && total.is_zero();

    Subspace<Rational> first_d(b1);
    for (std::size_t i = 0; i + 1 < N; ++i) first_d.insert(out.delta[i].coefficients);
    out.rank_first_d = first_d.dimension();
    for (const auto& face : bounded_faces(arr)) first_d.insert(polygon_saddle_sum(g, face).coefficients);
    out.rank_with_polygons = first_d.dimension();

    Subspace<Rational> loops(b1);
    for (const auto& ip : points) loops.insert(saddle_loop_class(g, ip.i, ip.j, 0).coefficients);
    out.loop_span_dimension = loops.dimension();
    return out;
}

AlternatingClasses line_alternating_classes(const LineArrangement& arr) {
    require_valid(arr);
    require_pairwise_coprime(arr);
    return line_alternating_classes(build_real_graph(arr));
}

OrbitReport verify_orbit_theorem(const LineArrangement& arr) {
    require_valid(arr);
    require_pairwise_coprime(arr);
    const auto g = build_real_graph(arr);
    OrbitReport r;
    r.b1 = g.betti1();
    r.d = arr.d();
    const auto orbit = orbit_span(g);
    const auto ann = residue_annihilator(g);
    r.orbit_dim = orbit.dimension();
    r.annihilator_dim = ann.dimension();
    r.codimension = r.b1 - r.orbit_dim;
    r.contained = ann.contains(orbit.span);
    r.equal = orbit.span == ann;
    r.genus = genus(arr);
    r.surjective_by_dimension = static_cast<long>(r.orbit_dim) >= 2 * r.genus;

    const auto alt = line_alternating_classes(g);
    r.delta_sum_zero = alt.sums_to_zero;
    r.delta_independent = alt.rank_first_d == r.d;
    r.delta_basis = r.delta_independent && alt.rank_with_polygons == r.d * (r.d + 1) / 2 &&
                    alt.loop_span_dimension == r.d * (r.d + 1) / 2;

    auto sum = orbit.span;
    const auto& points = g.points();
    for (std::size_t p = 0; p < points.size() && r.complement_loops.size() < r.d; ++p)
        if (sum.insert(saddle_loop_class(g, points[p].i, points[p].j, 0).coefficients))
            r.complement_loops.push_back(p);
    r.direct_sum = r.complement_loops.size() == r.d && sum.dimension() == r.b1;
    return r;
}

AdjacencySign adjacency_sign(const LineArrangement& arr, const BoundedFace& face1, const BoundedFace& face2,
                             std::size_t line) {
    auto side_on = [&](const BoundedFace& f) -> const FaceSide* {
        for (const auto& s : f.sides)
            if (s.line == line) return &s;
        return nullptr;
    };
    const FaceSide* s1 = side_on(face1);
    const FaceSide* s2 = side_on(face2);
    const bool same = s1 && s2 &&
                      std::minmax(s1->start_vertex, s1->end_vertex) == std::minmax(s2->start_vertex, s2->end_vertex);
    if (!same || face1.line_signs.at(line) == face2.line_signs.at(line))
        throw OrbitError("faces are not adjacent across line " + std::to_string(line));

    const auto points = intersections(arr);
    const Point& u = points[s1->start_vertex].point;
    const Point& v = points[s1->end_vertex].point;
    const Point mid{(u.x + v.x) / 2, (u.y + v.y) / 2};
    // The face is convex, so the segment from the midpoint to the centroid stays inside.
    const Rational step(1, 1024);
    AdjacencySign out;
    out.probe = {mid.x + step * (face1.centroid.x - mid.x), mid.y + step * (face1.centroid.y - mid.y)};
    out.epsilon = arr.f(out.probe) > 0 ? 0 : 1;
    out.exponent = arr.multiplicity(line) / 2 + out.epsilon;
    out.intersection = +1;
    return out;
}

}  // namespace centerkit
