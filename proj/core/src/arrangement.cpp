#include "centerkit/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace centerkit {

std::string to_string(ValidationReport::Kind kind) {
    switch (kind) {
        case ValidationReport::Kind::Ok: return "ok";
        case ValidationReport::Kind::TooFewLines: return "too_few_lines";
        case ValidationReport::Kind::MultiplicityCount: return "multiplicity_count";
        case ValidationReport::Kind::ZeroNormal: return "zero_normal";
        case ValidationReport::Kind::NonPositiveMultiplicity: return "non_positive_multiplicity";
        case ValidationReport::Kind::CommonDivisor: return "common_divisor";
        case ValidationReport::Kind::Parallel: return "parallel_lines";
        case ValidationReport::Kind::TriplePoint: return "triple_point";
    }
    return "unknown";
}

long LineArrangement::total_multiplicity() const {
    return std::accumulate(mult_.begin(), mult_.end(), 0L);
}

long LineArrangement::pair_gcd(std::size_t i, std::size_t j) const {
    return std::gcd(mult_.at(i), mult_.at(j));
}

bool LineArrangement::pairwise_coprime() const {
    for (std::size_t i = 0; i < mult_.size(); ++i)
        for (std::size_t j = i + 1; j < mult_.size(); ++j)
            if (pair_gcd(i, j) != 1) return false;
    return true;
}

Rational LineArrangement::f(const Point& p) const {
    Rational v(1);
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        const Rational l = lines_[i](p);
        for (long k = 0; k < mult_[i]; ++k) v *= l;
    }
    return v;
}

double LineArrangement::f(double x, double y) const {
    double v = 1.0;
    for (std::size_t i = 0; i < lines_.size(); ++i) v *= std::pow(lines_[i].eval(x, y), static_cast<double>(mult_[i]));
    return v;
}

namespace {

Rational cross(const Line& p, const Line& q) { return p.a * q.b - p.b * q.a; }

Point meet(const Line& p, const Line& q) {
    const Rational det = cross(p, q);
    return {(p.b * q.c - q.b * p.c) / det, (q.a * p.c - p.a * q.c) / det};
}

ValidationReport fail(ValidationReport::Kind kind, std::string msg, std::vector<std::size_t> witness = {}) {
    ValidationReport r;
    r.kind = kind;
    r.message = std::move(msg);
    r.witness = std::move(witness);
    return r;
}

std::string point_text(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace

ValidationReport validate(const LineArrangement& arr) {
    const auto& lines = arr.lines();
    const auto& mult = arr.multiplicities();
    if (lines.size() < 3)
        return fail(ValidationReport::Kind::TooFewLines, "need at least 3 lines, got " + std::to_string(lines.size()));
    if (mult.size() != lines.size())
        return fail(ValidationReport::Kind::MultiplicityCount,
                    "expected " + std::to_string(lines.size()) + " multiplicities, got " + std::to_string(mult.size()));
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].a == 0 && lines[i].b == 0)
            return fail(ValidationReport::Kind::ZeroNormal, "line " + std::to_string(i) + " has a = b = 0", {i});
    for (std::size_t i = 0; i < mult.size(); ++i)
        if (mult[i] <= 0)
            return fail(ValidationReport::Kind::NonPositiveMultiplicity,
                        "multiplicity of line " + std::to_string(i) + " is not positive", {i});
    const long g = std::accumulate(mult.begin(), mult.end(), 0L, [](long acc, long v) { return std::gcd(acc, v); });
    if (g != 1) {
        auto r = fail(ValidationReport::Kind::CommonDivisor, "multiplicities share the common divisor " + std::to_string(g));
        r.divisor = g;
        return r;
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (cross(lines[i], lines[j]) == 0)
                return fail(ValidationReport::Kind::Parallel,
                            "lines " + std::to_string(i) + " and " + std::to_string(j) + " are parallel", {i, j});
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const Point p = meet(lines[i], lines[j]);
            for (std::size_t k = j + 1; k < lines.size(); ++k)
                if (lines[k](p) == 0) {
                    auto r = fail(ValidationReport::Kind::TriplePoint,
                                  "lines " + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                                      " meet at " + point_text(p),
                                  {i, j, k});
                    r.point = p;
                    return r;
                }
        }
    return {};
}

void require_valid(const LineArrangement& arr) {
    const auto report = validate(arr);
    if (!report.ok()) throw ArrangementError("invalid arrangement: " + report.message);
}

std::size_t pair_index(std::size_t line_count, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (i == j || j >= line_count) throw std::out_of_range("pair_index: bad pair");
    // Pairs (0,1),(0,2),...,(0,N-1),(1,2),...
    return i * line_count - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<IntersectionPoint> intersections(const LineArrangement& arr) {
    require_valid(arr);
    std::vector<IntersectionPoint> out;
    const auto& lines = arr.lines();
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            out.push_back({i, j, meet(lines[i], lines[j]), arr.pair_gcd(i, j)});
    return out;
}

std::vector<std::vector<std::size_t>> line_orders(const LineArrangement& arr,
                                                  const std::vector<IntersectionPoint>& points) {
    std::vector<std::vector<std::size_t>> order(arr.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        order[points[k].i].push_back(k);
        order[points[k].j].push_back(k);
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const Point dir = arr.line(i).direction();
        auto param = [&](std::size_t k) -> Rational { return dir.x * points[k].point.x + dir.y * points[k].point.y; };
        std::sort(order[i].begin(), order[i].end(), [&](std::size_t u, std::size_t v) { return param(u) < param(v); });
    }
    return order;
}

std::vector<long> BoundedFace::side_multiplicities() const {
    std::vector<long> out;
    out.reserve(sides.size());
    for (const auto& s : sides) out.push_back(s.multiplicity);
    return out;
}

int BoundedFace::f_sign(const LineArrangement& arr) const {
    int s = 1;
    for (std::size_t i = 0; i < line_signs.size(); ++i)
        if (line_signs[i] < 0 && arr.multiplicity(i) % 2 != 0) s = -s;
    return s;
}

std::vector<BoundedFace> bounded_faces(const LineArrangement& arr) {
    const auto points = intersections(arr);
    const auto order = line_orders(arr, points);
    const std::size_t N = arr.size();

    // Position of each intersection along each of its two lines.
    std::vector<std::map<std::size_t, std::size_t>> position(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t p = 0; p < order[i].size(); ++p) position[i][order[i][p]] = p;

    auto other_line = [&](std::size_t vertex, std::size_t line) {
        return points[vertex].i == line ? points[vertex].j : points[vertex].i;
    };

    // Half-edge: (line, position along line, step +1/-1). Walk with left turns.
    std::set<std::tuple<std::size_t, std::size_t, int>> used;
    std::vector<BoundedFace> faces;
    for (std::size_t line = 0; line < N; ++line) {
        for (std::size_t pos = 0; pos + 1 < order[line].size() + 1; ++pos) {
            for (int step : {+1, -1}) {
                const long next_pos = static_cast<long>(pos) + step;
                if (next_pos < 0 || next_pos >= static_cast<long>(order[line].size())) continue;
                if (used.count({line, pos, step})) continue;

                std::vector<std::tuple<std::size_t, std::size_t, int>> walk;
                std::vector<FaceSide> sides;
                std::size_t cur_line = line, cur_pos = pos;
                int cur_step = step;
                bool bounded = true;
                for (std::size_t guard = 0; guard <= 2 * N + 2; ++guard) {
                    walk.emplace_back(cur_line, cur_pos, cur_step);
                    const std::size_t from = order[cur_line][cur_pos];
                    const std::size_t to = order[cur_line][cur_pos + cur_step];
                    sides.push_back({cur_line, from, to, arr.multiplicity(cur_line)});
                    // Turn left onto the other line through `to`.
                    const std::size_t nl = other_line(to, cur_line);
                    const Point din = arr.line(cur_line).direction();
                    const Point dnl = arr.line(nl).direction();
                    const Rational c = (din.x * dnl.y - din.y * dnl.x) * cur_step;
                    const int nstep = c > 0 ? +1 : -1;
                    const std::size_t npos = position[nl].at(to);
                    const long np = static_cast<long>(npos) + nstep;
                    if (np < 0 || np >= static_cast<long>(order[nl].size())) {
                        bounded = false;
                        break;
                    }
                    cur_line = nl;
                    cur_pos = npos;
                    cur_step = nstep;
                    if (cur_line == line && cur_pos == pos && cur_step == step) break;
                }
                for (const auto& h : walk) used.insert(h);
                if (!bounded) continue;
                if (!(std::get<0>(walk.front()) == cur_line && std::get<1>(walk.front()) == cur_pos))
                    throw ArrangementError("face walk did not close");

                BoundedFace face;
                face.sides = std::move(sides);
                Rational cx(0), cy(0);
                for (const auto& s : face.sides) {
                    cx += points[s.start_vertex].point.x;
                    cy += points[s.start_vertex].point.y;
                }
                const Rational count(static_cast<long>(face.sides.size()));
                face.centroid = {cx / count, cy / count};
                // Anticlockwise check via the shoelace formula.
                Rational area2(0);
                for (const auto& s : face.sides) {
                    const Point& a = points[s.start_vertex].point;
                    const Point& b = points[s.end_vertex].point;
                    area2 += a.x * b.y - a.y * b.x;
                }
                if (area2 <= 0) throw ArrangementError("bounded face traversed clockwise");
                for (std::size_t i = 0; i < N; ++i) {
                    const Rational v = arr.line(i)(face.centroid);
                    if (v == 0) throw ArrangementError("face centroid lies on a line");
                    face.line_signs.push_back(v > 0 ? 1 : -1);
                }
                faces.push_back(std::move(face));
            }
        }
    }
    return faces;
}

namespace {

struct Grad {
    double gx = 0, gy = 0;
    double hxx = 0, hxy = 0, hyy = 0;
    double phi = 0;    // sum n_i log|l_i|
    double scale = 0;  // sum n_i |grad l_i| / |l_i|, the size of the gradient terms
    double residual() const { return std::hypot(gx, gy) / scale; }
};

Grad log_f_derivatives(const LineArrangement& arr, double x, double y) {
    Grad g;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const Line& l = arr.line(i);
        const double a = to_double(l.a), b = to_double(l.b);
        const double v = l.eval(x, y);
        const double n = static_cast<double>(arr.multiplicity(i));
        g.gx += n * a / v;
        g.gy += n * b / v;
        g.hxx -= n * a * a / (v * v);
        g.hxy -= n * a * b / (v * v);
        g.hyy -= n * b * b / (v * v);
        g.phi += n * std::log(std::abs(v));
        g.scale += n * std::hypot(a, b) / std::abs(v);
    }
    return g;
}

bool inside(const LineArrangement& arr, const BoundedFace& face, double x, double y) {
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const double v = arr.line(i).eval(x, y);
        if (v * face.line_signs[i] <= 0) return false;
    }
    return true;
}

}  // namespace

CenterCriticalPoint center_critical_point(const LineArrangement& arr, const BoundedFace& face, std::size_t face_index) {
    // phi = sum n_i log|l_i| is strictly concave on the face and tends to -inf at
    // its boundary, so damped Newton from the centroid converges to the unique maximum.
    double x = to_double(face.centroid.x), y = to_double(face.centroid.y);
    CenterCriticalPoint out;
    out.face = face_index;
    Grad g = log_f_derivatives(arr, x, y);
    int it = 0;
    for (; it < 200; ++it) {
        const double res = g.residual();
        if (res < 1e-15) break;
        const double det = g.hxx * g.hyy - g.hxy * g.hxy;
        if (!(det > 0)) throw ArrangementError("critical point search: Hessian not negative definite");
        const double dx = -(g.hyy * g.gx - g.hxy * g.gy) / det;
        const double dy = -(-g.hxy * g.gx + g.hxx * g.gy) / det;
        double step = 1.0;
        bool accepted = false;
        for (int k = 0; k < 60; ++k, step *= 0.5) {
            const double nx = x + step * dx, ny = y + step * dy;
            if (!inside(arr, face, nx, ny)) continue;
            const Grad ng = log_f_derivatives(arr, nx, ny);
            if (ng.phi >= g.phi - 1e-15 * std::abs(g.phi) || ng.residual() < res) {
                x = nx;
                y = ny;
                g = ng;
                accepted = true;
                break;
            }
        }
        if (!accepted) break;
    }
    out.x = x;
    out.y = y;
    out.iterations = it;
    out.residual = g.residual();
    out.value = arr.f(x, y);
    if (!inside(arr, face, x, y)) throw ArrangementError("critical point escaped its face");
    if (!(out.residual < 1e-10)) throw ArrangementError("critical point search did not converge");
    return out;
}

CriticalPointReport center_critical_points(const LineArrangement& arr) {
    const auto faces = bounded_faces(arr);
    CriticalPointReport report;
    for (std::size_t k = 0; k < faces.size(); ++k) report.points.push_back(center_critical_point(arr, faces[k], k));
    for (std::size_t a = 0; a < report.points.size(); ++a)
        for (std::size_t b = a + 1; b < report.points.size(); ++b) {
            const double v1 = report.points[a].value, v2 = report.points[b].value;
            if (std::abs(v1 - v2) <= kCriticalValueCoincidence * std::max(1.0, std::abs(v1)))
                report.coincident_values.emplace_back(a, b);
        }
    return report;
}

}  // namespace centerkit
