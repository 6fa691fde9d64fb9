#include "centerkit/melnikov.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace centerkit {

namespace {

using Vec2 = std::array<double, 2>;

double dot(const Vec2& u, const Vec2& v) { return u[0] * v[0] + u[1] * v[1]; }
double norm(const Vec2& u) { return std::hypot(u[0], u[1]); }
Vec2 add(const Vec2& u, const Vec2& v, double s = 1) { return {u[0] + s * v[0], u[1] + s * v[1]}; }

/// phi = log|f| - log|t| and its derivatives, in double precision.
class LevelField {
public:
    LevelField(const LineArrangement& arr, const BoundedFace& face, double t) : face_(face), log_t_(std::log(std::abs(t))) {
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto& l = arr.line(i);
            a_.push_back(to_double(l.a));
            b_.push_back(to_double(l.b));
            c_.push_back(to_double(l.c));
            n_.push_back(static_cast<double>(arr.multiplicity(i)));
        }
    }

    double line(std::size_t i, const Vec2& p) const { return a_[i] * p[0] + b_[i] * p[1] + c_[i]; }
    std::size_t size() const { return a_.size(); }

    bool inside(const Vec2& p) const {
        for (std::size_t i = 0; i < size(); ++i)
            if (line(i, p) * face_.line_signs[i] <= 0) return false;
        return true;
    }
    double phi(const Vec2& p) const {
        double s = -log_t_;
        for (std::size_t i = 0; i < size(); ++i) s += n_[i] * std::log(std::abs(line(i, p)));
        return s;
    }
    Vec2 grad(const Vec2& p) const {
        Vec2 g{0, 0};
        for (std::size_t i = 0; i < size(); ++i) {
            const double li = line(i, p);
            g[0] += n_[i] * a_[i] / li;
            g[1] += n_[i] * b_[i] / li;
        }
        return g;
    }
    /// Curvature of the level curve through p.
    double curvature(const Vec2& p) const {
        double hxx = 0, hxy = 0, hyy = 0;
        for (std::size_t i = 0; i < size(); ++i) {
            const double li = line(i, p);
            const double w = n_[i] / (li * li);
            hxx -= w * a_[i] * a_[i];
            hxy -= w * a_[i] * b_[i];
            hyy -= w * b_[i] * b_[i];
        }
        const Vec2 g = grad(p);
        const double gn = norm(g);
        return std::abs(hxx * g[1] * g[1] - 2 * hxy * g[0] * g[1] + hyy * g[0] * g[0]) / (gn * gn * gn);
    }
    /// Newton along a fixed direction: p + s dir with phi = 0.
    Vec2 project(Vec2 p, const Vec2& dir, int iterations) const {
        for (int it = 0; it < iterations; ++it) {
            const double v = phi(p);
            const double slope = dot(grad(p), dir);
            if (slope == 0) throw MelnikovError("level curve is tangent to the correction direction");
            const double ds = -v / slope;
            p = add(p, dir, ds);
            if (!inside(p)) throw MelnikovError("corrector left the face");
            if (std::abs(ds) < 1e-15 * (1 + norm(p))) break;
        }
        return p;
    }
    /// Newton along the gradient.
    Vec2 correct(Vec2 p, int iterations) const {
        for (int it = 0; it < iterations; ++it) {
            const double v = phi(p);
            const Vec2 g = grad(p);
            const double g2 = dot(g, g);
            const Vec2 step{-v * g[0] / g2, -v * g[1] / g2};
            p = add(p, step);
            if (!inside(p)) throw MelnikovError("corrector left the face");
            if (norm(step) < 1e-15 * (1 + norm(p))) break;
        }
        return p;
    }

private:
    const BoundedFace& face_;
    double log_t_;
    std::vector<double> a_, b_, c_, n_;
};

double relative_residual(const LineArrangement& arr, const Vec2& p, double t) {
    return std::abs(arr.f(p[0], p[1]) - t) / std::abs(t);
}

/// 5-point Gauss-Legendre on [-1, 1].
constexpr std::array<double, 5> kNodes{-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                                       0.9061798459386640};
constexpr std::array<double, 5> kWeights{0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                                         0.4786286704993665, 0.2369268850561891};

struct FormEvaluator {
    std::size_t degree;
    std::vector<double> P, Q;

    FormEvaluator(const FoliationForm& form) : degree(form.degree) {
        const std::size_t m = monomial_count(degree);
        for (std::size_t k = 0; k < m; ++k) {
            P.push_back(to_double(form.coefficients[k]));
            Q.push_back(to_double(form.coefficients[m + k]));
        }
    }
    std::pair<double, double> operator()(const Vec2& p) const {
        double sp = 0, sq = 0;
        for (int m = 0; m <= static_cast<int>(degree); ++m)
            for (int j = 0; j <= m; ++j) {
                const double mono = std::pow(p[0], m - j) * std::pow(p[1], j);
                sp += P[monomial_index(m - j, j)] * mono;
                sq += Q[monomial_index(m - j, j)] * mono;
            }
        return {sp, sq};
    }
};

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Vanishes: return "vanishes";
        case Verdict::NonVanishing: return "non-vanishing";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

double face_critical_value(const LineArrangement& arr, std::size_t face) {
    const auto faces = bounded_faces(arr);
    if (face >= faces.size()) throw MelnikovError("face index out of range");
    return center_critical_point(arr, faces[face], face).value;
}

Oval trace_oval(const LineArrangement& arr, std::size_t face_index, double t, const TraceOptions& opts) {
    require_valid(arr);
    const auto faces = bounded_faces(arr);
    if (face_index >= faces.size()) throw MelnikovError("face index out of range");
    const auto& face = faces[face_index];
    const auto cp = center_critical_point(arr, face, face_index);
    if (!(t / cp.value > 0 && t / cp.value < 1))
        throw MelnikovError("t = " + std::to_string(t) + " is outside the oval window (0, " + std::to_string(cp.value) +
                            ")");
    const LevelField field(arr, face, t);
    Oval oval;
    oval.face = face_index;
    oval.t = t;
    oval.center = {cp.x, cp.y};

    // Start on the ray from the center in the +x direction: phi decreases monotonically to -inf at the face boundary.
    const Vec2 ray{1, 0};
    double r_max = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < field.size(); ++i) {
        const double slope = dot({to_double(arr.line(i).a), to_double(arr.line(i).b)}, ray);
        const double value = field.line(i, oval.center);
        if (slope * value < 0) r_max = std::min(r_max, -value / slope);
    }
    double lo = 0, hi = r_max;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * r_max; ++it) {
        const double mid = 0.5 * (lo + hi);
        (field.phi(add(oval.center, ray, mid)) > 0 ? lo : hi) = mid;
    }
    const Vec2 start = field.project(add(oval.center, ray, 0.5 * (lo + hi)), ray, opts.newton_iterations);
    const double radius = norm(add(start, oval.center, -1));
    const double h_max = opts.max_step_fraction * radius;

    std::vector<Vec2>& pts = oval.points;
    pts.push_back(start);
    double turned = 0;
    Vec2 p = start;
    auto angle_between = [&](const Vec2& u, const Vec2& v) {
        const Vec2 du = add(u, oval.center, -1), dv = add(v, oval.center, -1);
        return std::atan2(du[0] * dv[1] - du[1] * dv[0], dot(du, dv));
    };
    for (int step = 0;; ++step) {
        if (step >= opts.max_steps) throw MelnikovError("oval tracing did not close");
        const Vec2 g = field.grad(p);
        const double gn = norm(g);
        const Vec2 tangent{g[1] / gn, -g[0] / gn};  // anticlockwise around the maximum of log|f|
        const double h = std::min(h_max, opts.max_turn / std::max(field.curvature(p), 1e-300));
        const Vec2 q = field.correct(add(p, tangent, h), opts.newton_iterations);
        const double dtheta = angle_between(p, q);
        if (dtheta <= 0) throw MelnikovError("oval tracing reversed direction");
        if (turned + dtheta >= 2 * std::numbers::pi) {
            // Closing chord: intersect p -> q with the start ray and project radially.
            const Vec2 u = add(start, oval.center, -1);
            const Vec2 d = add(q, p, -1);
            const Vec2 w = add(p, oval.center, -1);
            const double denom = d[0] * u[1] - d[1] * u[0];
            const double s = -(w[0] * u[1] - w[1] * u[0]) / denom;
            const Vec2 cross_pt = add(p, d, s);
            const Vec2 closed = field.project(cross_pt, {u[0] / radius, u[1] / radius}, opts.newton_iterations);
            oval.closure_gap = norm(add(closed, start, -1));
            break;
        }
        turned += dtheta;
        pts.push_back(q);
        p = q;
    }

    double perimeter = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        perimeter += norm(add(pts[(k + 1) % pts.size()], pts[k], -1));
        oval.max_residual = std::max(oval.max_residual, relative_residual(arr, pts[k], t));
        for (std::size_t m = k + 1; m < pts.size(); ++m)
            oval.diameter = std::max(oval.diameter, norm(add(pts[m], pts[k], -1)));
    }
    oval.step = perimeter / static_cast<double>(pts.size());
    oval.closure_gap /= oval.diameter;
    if (oval.max_residual > 1e-10) throw MelnikovError("oval residual above 1e-10");
    if (oval.closure_gap > 1e-9) throw MelnikovError("oval does not close");
    return oval;
}

MelnikovResult melnikov1(const LineArrangement& arr, const Oval& oval, const FoliationForm& omega1,
                         const MelnikovThresholds& thresholds) {
    if (omega1.degree != arr.d()) throw MelnikovError("one-form degree does not match the arrangement");
    const auto faces = bounded_faces(arr);
    const LevelField field(arr, faces.at(oval.face), oval.t);
    const FormEvaluator form(omega1);

    struct Panel {
        double value = 0;
        double scale = 0;
    };
    // Arc between two curve points, parametrized by the chord and projected along the chord normal.
    auto arc = [&](const Vec2& p, const Vec2& q, double s0, double s1) {
        const Vec2 d = add(q, p, -1);
        const double L = norm(d);
        const Vec2 e{d[0] / L, d[1] / L};
        const Vec2 n{-e[1], e[0]};
        Panel out;
        for (std::size_t k = 0; k < kNodes.size(); ++k) {
            const double s = s0 + (s1 - s0) * 0.5 * (kNodes[k] + 1);
            const Vec2 x = field.project(add(p, e, s * L), n, 50);
            const Vec2 g = field.grad(x);
            const double deta = -dot(g, e) / dot(g, n);
            const Vec2 dx{L * (e[0] + deta * n[0]), L * (e[1] + deta * n[1])};
            double prod = 1;
            for (std::size_t i = 0; i < field.size(); ++i) prod *= field.line(i, x);
            const auto [P, Q] = form(x);
            const double w = kWeights[k] * 0.5 * (s1 - s0);
            out.value += w * (P * dx[1] - Q * dx[0]) / prod;
            out.scale += w * std::hypot(P, Q) / std::abs(prod) * norm(dx);
        }
        return out;
    };

    MelnikovResult r;
    double coarse = 0, fine = 0, scale = 0;
    const auto& pts = oval.points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const Vec2& p = pts[k];
        const Vec2& q = pts[(k + 1) % pts.size()];
        const Panel one = arc(p, q, 0, 1);
        const Panel left = arc(p, q, 0, 0.5);
        const Panel right = arc(p, q, 0.5, 1);
        coarse += one.value;
        fine += left.value + right.value;
        scale += left.scale + right.scale;
    }
    r.segments = pts.size();
    r.value = fine;
    r.scale = scale;
    // Rounding floor: the panel comparison alone underestimates once both rules are exact to double precision.
    r.error_estimate = std::abs(fine - coarse) + 1e-13 * scale;
    r.relative = scale > 0 ? std::abs(fine) / scale : 0;
    if (r.relative <= thresholds.accept)
        r.verdict = Verdict::Vanishes;
    else if (r.relative >= thresholds.reject)
        r.verdict = Verdict::NonVanishing;
    else
        r.verdict = Verdict::Inconclusive;
    return r;
}

MelnikovResult melnikov1(const LineArrangement& arr, std::size_t face, const FoliationForm& omega1, double t,
                         const MelnikovThresholds& thresholds, const TraceOptions& opts) {
    return melnikov1(arr, trace_oval(arr, face, t, opts), omega1, thresholds);
}

}  // namespace centerkit
