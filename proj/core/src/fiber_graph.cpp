#include "centerkit/fiber_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace centerkit {

// ---------------------------------------------------------------- CycleClass

bool CycleClass::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& q) { return q == 0; });
}

CycleClass& CycleClass::operator+=(const CycleClass& o) {
    if (o.size() != size()) throw std::invalid_argument("CycleClass: size mismatch");
    for (std::size_t k = 0; k < size(); ++k) coefficients[k] += o.coefficients[k];
    return *this;
}

CycleClass& CycleClass::operator-=(const CycleClass& o) {
    if (o.size() != size()) throw std::invalid_argument("CycleClass: size mismatch");
    for (std::size_t k = 0; k < size(); ++k) coefficients[k] -= o.coefficients[k];
    return *this;
}

CycleClass& CycleClass::operator*=(const Rational& s) {
    for (auto& c : coefficients) c *= s;
    return *this;
}

namespace {

Rational half() { return Rational(1, 2); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long mod(long x, long m) {
    const long r = x % m;
    return r < 0 ? r + m : r;
}

/// u, v with a u + b v = gcd(a, b).
std::pair<long, long> bezout(long a, long b) {
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const long qt = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
    }
    return {old_s, old_t};
}

/// 0 if v > 0, 1/2 if v < 0: the argument of a nonzero real in turns.
Rational arg_of_sign(int s) { return s > 0 ? Rational(0) : half(); }

int sign_of_power(const Rational& v, long n) {
    if (v == 0) throw FiberGraphError("unexpected zero of a line");
    return (v < 0 && n % 2 != 0) ? -1 : 1;
}

}  // namespace

// ---------------------------------------------------------------- FiberGraph

std::size_t FiberGraph::loop_count() const {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [](const GraphEdge& e) { return e.kind == GraphEdge::Kind::Loop; }));
}

bool FiberGraph::connected() const {
    if (vertices_.empty()) return true;
    return std::all_of(depth_.begin(), depth_.end(), [](std::size_t d) { return d != static_cast<std::size_t>(-1); });
}

std::optional<std::size_t> FiberGraph::basis_index(std::size_t edge) const {
    const long b = basis_of_edge_.at(edge);
    if (b < 0) return std::nullopt;
    return static_cast<std::size_t>(b);
}

std::size_t FiberGraph::saddle_vertex(std::size_t pair, long h) const {
    if (pair >= points_.size() || h < 0 || h >= points_[pair].e) throw std::out_of_range("saddle_vertex: bad index");
    return saddle_offset_[pair] + static_cast<std::size_t>(h);
}

std::size_t FiberGraph::loop_edge(std::size_t vertex) const { return loop_of_vertex_.at(vertex); }

std::size_t FiberGraph::segment_edge(std::size_t line, std::size_t segment, long sheet) const {
    if (model_ != GraphModel::Gcheck) throw FiberGraphError("segment edges exist only in the Gcheck model");
    const long n = arr_.multiplicity(line);
    if (sheet < 0 || sheet >= n) throw std::out_of_range("segment_edge: sheet out of range");
    return segment_edges_.at(line).at(segment * static_cast<std::size_t>(n) + static_cast<std::size_t>(sheet));
}

std::array<Rational, 2> FiberGraph::loop_vector(std::size_t vertex) const {
    const auto& v = vertices_.at(vertex);
    const long e = points_[v.pair].e;
    return {Rational(arr_.multiplicity(v.j) / e), Rational(-(arr_.multiplicity(v.i) / e))};
}

std::vector<Rational> FiberGraph::edge_winding(std::size_t edge) const {
    if (model_ != GraphModel::Gcheck) throw FiberGraphError("edge windings are defined on the Gcheck model");
    std::vector<Rational> w(arr_.size(), Rational(0));
    const auto& e = edges_.at(edge);
    if (e.kind == GraphEdge::Kind::Loop) {
        const auto& v = vertices_[e.from];
        const auto lv = loop_vector(e.from);
        w[v.i] += lv[0];
        w[v.j] += lv[1];
        return w;
    }
    // base(from) -> attachment -> along edge (constant arguments) -> attachment -> base(to)
    const auto& vf = vertices_[e.from];
    const auto& vt = vertices_[e.to];
    w[vf.i] += e.at_from.displacement[0];
    w[vf.j] += e.at_from.displacement[1];
    w[vt.i] -= e.at_to.displacement[0];
    w[vt.j] -= e.at_to.displacement[1];
    return w;
}

void FiberGraph::finish() {
    const std::size_t V = vertices_.size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(V);  // (edge, neighbour)
    loop_of_vertex_.assign(V, static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto& e = edges_[k];
        if (e.kind == GraphEdge::Kind::Loop) {
            loop_of_vertex_[e.from] = k;
            continue;
        }
        adj[e.from].emplace_back(k, e.to);
        adj[e.to].emplace_back(k, e.from);
    }
    tree_edge_.assign(edges_.size(), false);
    parent_edge_.assign(V, -1);
    depth_.assign(V, static_cast<std::size_t>(-1));
    if (V > 0) {
        std::deque<std::size_t> queue{0};
        depth_[0] = 0;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (const auto& [edge, w] : adj[u]) {
                if (depth_[w] != static_cast<std::size_t>(-1)) continue;
                depth_[w] = depth_[u] + 1;
                parent_edge_[w] = static_cast<long>(edge);
                tree_edge_[edge] = true;
                queue.push_back(w);
            }
        }
    }
    if (!connected()) throw FiberGraphError("fiber graph is not connected");
    basis_of_edge_.assign(edges_.size(), -1);
    basis_edges_.clear();
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (tree_edge_[k]) continue;
        basis_of_edge_[k] = static_cast<long>(basis_edges_.size());
        basis_edges_.push_back(k);
    }
}

std::vector<std::pair<std::size_t, int>> FiberGraph::fundamental_walk(std::size_t k) const {
    const std::size_t edge = basis_edges_.at(k);
    const auto& e = edges_[edge];
    std::vector<std::pair<std::size_t, int>> walk{{edge, +1}};
    if (e.from == e.to) return walk;
    // After e we stand at e.to; climb to the common ancestor, then descend to e.from.
    std::vector<std::pair<std::size_t, int>> up, down;
    std::size_t a = e.to, b = e.from;
    while (a != b) {
        if (depth_[a] >= depth_[b]) {
            const auto pe = static_cast<std::size_t>(parent_edge_[a]);
            const auto& p = edges_[pe];
            // moving from a to its parent
            up.emplace_back(pe, p.from == a ? +1 : -1);
            a = p.from == a ? p.to : p.from;
        } else {
            const auto pe = static_cast<std::size_t>(parent_edge_[b]);
            const auto& p = edges_[pe];
            // moving from parent down to b
            down.emplace_back(pe, p.to == b ? +1 : -1);
            b = p.from == b ? p.to : p.from;
        }
    }
    walk.insert(walk.end(), up.begin(), up.end());
    walk.insert(walk.end(), down.rbegin(), down.rend());
    return walk;
}

std::vector<Rational> FiberGraph::flow_of_basis_cycle(std::size_t k) const {
    std::vector<Rational> flow(edges_.size(), Rational(0));
    for (const auto& [edge, dir] : fundamental_walk(k)) flow[edge] += dir;
    return flow;
}

CycleClass FiberGraph::cycle_from_flow(const std::vector<Rational>& flow) const {
    if (flow.size() != edges_.size()) throw std::invalid_argument("cycle_from_flow: wrong flow length");
    std::vector<Rational> divergence(vertices_.size(), Rational(0));
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (edges_[k].kind == GraphEdge::Kind::Loop) continue;
        divergence[edges_[k].from] -= flow[k];
        divergence[edges_[k].to] += flow[k];
    }
    for (const auto& d : divergence)
        if (d != 0) throw FiberGraphError("edge flow is not a closed cycle");
    CycleClass c;
    c.coefficients.reserve(basis_edges_.size());
    for (auto edge : basis_edges_) c.coefficients.push_back(flow[edge]);
    return c;
}

// ---------------------------------------------------------------- builders

FiberGraph build_graph(const LineArrangement& arr) {
    FiberGraph g;
    g.model_ = GraphModel::G;
    g.arr_ = arr;
    g.points_ = intersections(arr);
    g.orders_ = line_orders(arr, g.points_);
    const std::size_t N = arr.size();

    std::vector<std::size_t> sigma_offset(N);
    for (std::size_t i = 0; i < N; ++i) {
        sigma_offset[i] = g.vertices_.size();
        for (long x = 0; x < arr.multiplicity(i); ++x) {
            GraphVertex v;
            v.kind = GraphVertex::Kind::Sigma;
            v.line = i;
            v.sheet = x;
            g.vertices_.push_back(v);
        }
    }
    g.saddle_offset_.resize(g.points_.size());
    for (std::size_t p = 0; p < g.points_.size(); ++p) {
        const auto& ip = g.points_[p];
        g.saddle_offset_[p] = g.vertices_.size();
        for (long h = 0; h < ip.e; ++h) {
            GraphVertex v;
            v.kind = GraphVertex::Kind::Saddle;
            v.pair = p;
            v.i = ip.i;
            v.j = ip.j;
            v.h = h;
            g.vertices_.push_back(v);
        }
    }
    for (std::size_t p = 0; p < g.points_.size(); ++p) {
        const auto& ip = g.points_[p];
        for (long h = 0; h < ip.e; ++h) {
            const std::size_t sv = g.saddle_offset_[p] + static_cast<std::size_t>(h);
            for (std::size_t line : {ip.i, ip.j})
                for (long x = h; x < arr.multiplicity(line); x += ip.e) {
                    GraphEdge e;
                    e.kind = GraphEdge::Kind::Link;
                    e.from = sv;
                    e.to = sigma_offset[line] + static_cast<std::size_t>(x);
                    e.line = line;
                    e.sheet = x;
                    g.edges_.push_back(e);
                }
            GraphEdge loop;
            loop.kind = GraphEdge::Kind::Loop;
            loop.from = loop.to = sv;
            g.edges_.push_back(loop);
        }
    }
    g.finish();
    return g;
}

FiberGraph build_real_graph(const LineArrangement& arr) {
    FiberGraph g;
    g.model_ = GraphModel::Gcheck;
    g.arr_ = arr;
    g.points_ = intersections(arr);
    g.orders_ = line_orders(arr, g.points_);
    const std::size_t N = arr.size();

    // Saddle vertices: one per cylinder. tau = arg(t / c_P) with t > 0.
    g.saddle_offset_.resize(g.points_.size());
    for (std::size_t p = 0; p < g.points_.size(); ++p) {
        const auto& ip = g.points_[p];
        int c_sign = 1;
        for (std::size_t m = 0; m < N; ++m)
            if (m != ip.i && m != ip.j) c_sign *= sign_of_power(arr.line(m)(ip.point), arr.multiplicity(m));
        const Rational tau = arg_of_sign(c_sign);
        g.saddle_offset_[p] = g.vertices_.size();
        for (long h = 0; h < ip.e; ++h) {
            GraphVertex v;
            v.kind = GraphVertex::Kind::Saddle;
            v.pair = p;
            v.i = ip.i;
            v.j = ip.j;
            v.h = h;
            v.tau = tau;
            v.base = {Rational(0), (tau + h) / arr.multiplicity(ip.j)};
            g.vertices_.push_back(v);
        }
    }

    // Resolve an edge end at saddle pair p: lifted arguments of (l_i, l_j) at the
    // attachment -> cylinder and displacement from the cylinder base point.
    auto attach = [&](std::size_t p, const std::array<Rational, 2>& lift, std::size_t& vertex_out) {
        const auto& ip = g.points_[p];
        const long ni = arr.multiplicity(ip.i), nj = arr.multiplicity(ip.j);
        const Rational tau = g.vertices_[g.saddle_offset_[p]].tau;
        const Rational K = ni * lift[0] + nj * lift[1] - tau;
        if (!is_integer(K)) throw FiberGraphError("attachment point is not on the fiber");
        const long k = K.get_num().get_si();
        const long h = mod(k, ip.e);
        const auto [u, v] = bezout(ni, nj);
        const long steps = (h - k) / ip.e;  // exact: h = k (mod e)
        const std::size_t vid = g.saddle_offset_[p] + static_cast<std::size_t>(h);
        const auto& base = g.vertices_[vid].base;
        Attachment at;
        at.lift = lift;
        at.displacement = {lift[0] + u * steps - base[0], lift[1] + v * steps - base[1]};
        if (ni * at.displacement[0] + nj * at.displacement[1] != 0)
            throw FiberGraphError("attachment displacement leaves the cylinder");
        vertex_out = vid;
        return at;
    };

    g.segment_edges_.resize(N);
    for (std::size_t i = 0; i < N; ++i) {
        const long ni = arr.multiplicity(i);
        const auto& order = g.orders_[i];
        for (std::size_t s = 0; s + 1 < order.size(); ++s) {
            const std::size_t P = order[s], Q = order[s + 1];
            const Point mid{(g.points_[P].point.x + g.points_[Q].point.x) / 2,
                            (g.points_[P].point.y + g.points_[Q].point.y) / 2};
            int g_sign = 1;
            for (std::size_t m = 0; m < N; ++m)
                if (m != i) g_sign *= sign_of_power(arr.line(m)(mid), arr.multiplicity(m));
            const Rational gamma = arg_of_sign(g_sign);
            for (long x = 0; x < ni; ++x) {
                GraphEdge e;
                e.kind = GraphEdge::Kind::Segment;
                e.line = i;
                e.segment = s;
                e.sheet = x;
                e.sheet_arg = (Rational(x) - gamma) / ni;
                auto end_lift = [&](std::size_t pair) {
                    const auto& ip = g.points_[pair];
                    const std::size_t other = ip.i == i ? ip.j : ip.i;
                    const Rational beta = arg_of_sign(arr.line(other)(mid) > 0 ? 1 : -1);
                    return ip.i == i ? std::array<Rational, 2>{e.sheet_arg, beta}
                                     : std::array<Rational, 2>{beta, e.sheet_arg};
                };
                e.at_from = attach(P, end_lift(P), e.from);
                e.at_to = attach(Q, end_lift(Q), e.to);
                g.segment_edges_[i].push_back(g.edges_.size());
                g.edges_.push_back(std::move(e));
            }
        }
    }
    for (std::size_t vid = 0; vid < g.vertices_.size(); ++vid) {
        GraphEdge loop;
        loop.kind = GraphEdge::Kind::Loop;
        loop.from = loop.to = vid;
        g.edges_.push_back(loop);
    }
    g.finish();
    return g;
}

// ---------------------------------------------------------------- counts

long genus_numerator(const LineArrangement& arr) {
    require_valid(arr);
    const long n = arr.total_multiplicity();
    const long d = static_cast<long>(arr.d());
    long s = 0;
    for (long ni : arr.multiplicities()) s += std::gcd(ni, n);
    return (d - 1) * n + 2 - s;
}

long genus(const LineArrangement& arr) {
    const long num = genus_numerator(arr);
    if (num < 0 || num % 2 != 0) throw FiberGraphError("genus numerator is odd or negative");
    return num / 2;
}

long h1_rank(const LineArrangement& arr) {
    require_valid(arr);
    const long formula = (static_cast<long>(arr.d()) - 1) * arr.total_multiplicity() + 1;
    const auto b1_g = static_cast<long>(build_graph(arr).betti1());
    const auto b1_check = static_cast<long>(build_real_graph(arr).betti1());
    if (b1_g != formula || b1_check != formula)
        throw FiberGraphError("rank mismatch: formula " + std::to_string(formula) + ", b1(G) " + std::to_string(b1_g) +
                              ", b1(Gcheck) " + std::to_string(b1_check));
    return formula;
}

// ---------------------------------------------------------------- windings

std::vector<Rational> WindingFunctionals::apply(const CycleClass& c) const {
    return W.apply(c.coefficients);
}

WindingFunctionals winding_matrix(const FiberGraph& g) {
    if (g.model() != GraphModel::Gcheck) throw FiberGraphError("winding_matrix needs the Gcheck model");
    const auto& arr = g.arrangement();
    const std::size_t N = arr.size();
    const std::size_t b1 = g.betti1();
    WindingFunctionals wf{Matrix<Rational>(N, b1)};
    for (std::size_t k = 0; k < b1; ++k) {
        std::vector<Rational> total(N, Rational(0));
        for (const auto& [edge, dir] : g.fundamental_walk(k)) {
            const auto w = g.edge_winding(edge);
            for (std::size_t i = 0; i < N; ++i) total[i] += dir * w[i];
        }
        for (std::size_t i = 0; i < N; ++i) {
            if (!is_integer(total[i])) throw FiberGraphError("non-integral winding on a closed cycle");
            wf.W(i, k) = total[i];
        }
        Rational relation(0);
        for (std::size_t i = 0; i < N; ++i) relation += arr.multiplicity(i) * total[i];
        if (relation != 0) throw FiberGraphError("winding functionals violate sum n_i W_i = 0");
    }
    if (rank(wf.W) != arr.d()) throw FiberGraphError("winding matrix does not have rank d");
    return wf;
}

// ---------------------------------------------------------------- center cycles

int corner_orientation(const BoundedFace& face, std::size_t corner) {
    const std::size_t s = face.sides.size();
    const std::size_t in_line = face.sides[(corner + s - 1) % s].line;
    const std::size_t out_line = face.sides[corner].line;
    return in_line < out_line ? -1 : +1;
}

CenterLift center_cycle_lift(const FiberGraph& g, const BoundedFace& face, long power) {
    if (g.model() != GraphModel::Gcheck) throw FiberGraphError("center lifts live on the Gcheck model");
    const auto& arr = g.arrangement();
    const auto& points = g.points();
    const std::size_t s = face.sides.size();

    // Real oval of the face lives over arg t = theta_F; transport to arg t = 0, then k turns.
    const Rational theta_face = face.f_sign(arr) > 0 ? Rational(0) : half();
    const Rational dtheta = Rational(power) - theta_face;

    CenterLift lift;
    lift.power = power;
    lift.flow.assign(g.edge_count(), Rational(0));

    auto face_arg = [&](std::size_t line) { return arg_of_sign(face.line_signs[line]); };

    struct SideEdge {
        std::size_t edge;
        int dir;
    };
    std::vector<SideEdge> side_edges(s);
    for (std::size_t k = 0; k < s; ++k) {
        const auto& side = face.sides[k];
        const std::size_t i = side.line;
        const long ni = arr.multiplicity(i);
        const auto& order = g.orders()[i];
        const auto pos_a = static_cast<std::size_t>(std::find(order.begin(), order.end(), side.start_vertex) - order.begin());
        const auto pos_b = static_cast<std::size_t>(std::find(order.begin(), order.end(), side.end_vertex) - order.begin());
        const std::size_t segment = std::min(pos_a, pos_b);
        if (std::max(pos_a, pos_b) != segment + 1) throw FiberGraphError("face side is not a segment");
        const Rational arg_i = face_arg(i) + dtheta / ni;
        // Find the sheet whose constant argument agrees with arg_i modulo 1.
        long sheet = -1;
        for (long x = 0; x < ni; ++x) {
            const auto& e = g.edges()[g.segment_edge(i, segment, x)];
            if (is_integer(e.sheet_arg - arg_i)) {
                sheet = x;
                break;
            }
        }
        if (sheet < 0) throw FiberGraphError("transported oval does not match any sheet");
        side_edges[k] = {g.segment_edge(i, segment, sheet), pos_b > pos_a ? +1 : -1};
        lift.side_sheets.push_back(sheet);
        lift.flow[side_edges[k].edge] += side_edges[k].dir;
    }

    for (std::size_t k = 0; k < s; ++k) {
        const std::size_t kin = (k + s - 1) % s;
        const auto& in = g.edges()[side_edges[kin].edge];
        const auto& out = g.edges()[side_edges[k].edge];
        const std::size_t pair = face.sides[k].start_vertex;
        const auto& ip = points[pair];
        const std::size_t li = face.sides[kin].line, lj = face.sides[k].line;
        const long ni = arr.multiplicity(li), nj = arr.multiplicity(lj);

        // Actual lifted arguments of the oval entering (A) and leaving (B) the corner, in (l_i, l_j) order.
        std::array<Rational, 2> A{face_arg(li) + dtheta / ni, face_arg(lj)};
        std::array<Rational, 2> B{face_arg(li), face_arg(lj) + dtheta / nj};
        if (ip.i != li) {
            std::swap(A[0], A[1]);
            std::swap(B[0], B[1]);
        }
        const Attachment& at_in = side_edges[kin].dir > 0 ? in.at_to : in.at_from;
        const Attachment& at_out = side_edges[k].dir > 0 ? out.at_from : out.at_to;
        const std::size_t v_in = side_edges[kin].dir > 0 ? in.to : in.from;
        const std::size_t v_out = side_edges[k].dir > 0 ? out.from : out.to;
        if (v_in != v_out) throw FiberGraphError("oval passes between different cylinders at a corner");
        for (int c = 0; c < 2; ++c)
            if (!is_integer(A[c] - at_in.lift[c]) || !is_integer(B[c] - at_out.lift[c]))
                throw FiberGraphError("oval corner does not meet the edge attachments");
        const auto loop = g.loop_vector(v_in);
        // (B - A) = (disp_out - disp_in) + turns * loop
        const Rational r0 = (B[0] - A[0]) - (at_out.displacement[0] - at_in.displacement[0]);
        const Rational r1 = (B[1] - A[1]) - (at_out.displacement[1] - at_in.displacement[1]);
        const Rational turns = r0 / loop[0];
        if (!is_integer(turns) || r1 != turns * loop[1]) throw FiberGraphError("corner passage is not a cylinder path");
        const long t = turns.get_num().get_si();
        lift.corner_turns.push_back(t);
        lift.flow[g.loop_edge(v_in)] += t;
    }
    lift.cycle = g.cycle_from_flow(lift.flow);
    return lift;
}

std::vector<CenterLift> center_cycle_lifts(const FiberGraph& g, const BoundedFace& face) {
    long period = 1;
    for (long a : face.side_multiplicities()) period = std::lcm(period, a);
    std::vector<CenterLift> out;
    out.reserve(static_cast<std::size_t>(period));
    for (long k = 0; k < period; ++k) out.push_back(center_cycle_lift(g, face, k));
    return out;
}

CycleClass saddle_loop_class(const FiberGraph& g, std::size_t i, std::size_t j, long h) {
    const std::size_t pair = pair_index(g.arrangement().size(), i, j);
    const std::size_t edge = g.loop_edge(g.saddle_vertex(pair, h));
    CycleClass c{std::vector<Rational>(g.betti1(), Rational(0))};
    c.coefficients[*g.basis_index(edge)] = 1;
    return c;
}

CycleClass polygon_saddle_sum(const FiberGraph& g, const BoundedFace& face) {
    const auto lift = center_cycle_lift(g, face, 0);
    const auto a_k = face.side_multiplicities();
    const std::size_t s = a_k.size();
    Rational a(1);
    for (long v : a_k) a *= v;
    std::vector<Rational> flow(g.edge_count(), Rational(0));
    for (std::size_t k = 0; k < s; ++k) {
        // corner k joins side k-1 and side k
        const long a_prev = a_k[(k + s - 1) % s], a_next = a_k[k];
        const auto& side = face.sides[k];
        const auto& order = g.orders()[side.line];
        const auto pos_a = std::find(order.begin(), order.end(), side.start_vertex) - order.begin();
        const auto pos_b = std::find(order.begin(), order.end(), side.end_vertex) - order.begin();
        const auto& e = g.edges()[g.segment_edge(side.line, static_cast<std::size_t>(std::min(pos_a, pos_b)),
                                                 lift.side_sheets[k])];
        const std::size_t vertex = pos_b > pos_a ? e.from : e.to;
        flow[g.loop_edge(vertex)] += corner_orientation(face, k) * a / (a_prev * a_next);
    }
    return g.cycle_from_flow(flow);
}

}  // namespace centerkit
