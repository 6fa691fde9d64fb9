#pragma once

#include "centerkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace centerkit {

class ArrangementError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    Rational x{0};
    Rational y{0};
    friend bool operator==(const Point&, const Point&) = default;
};

/// l(x, y) = a x + b y + c with (a, b) != (0, 0).
struct Line {
    Rational a{0};
    Rational b{0};
    Rational c{0};

    Rational operator()(const Rational& x, const Rational& y) const { return a * x + b * y + c; }
    Rational operator()(const Point& p) const { return (*this)(p.x, p.y); }
    double eval(double x, double y) const { return to_double(a) * x + to_double(b) * y + to_double(c); }
    /// Direction vector (-b, a); the line is traversed in this direction when ordering its points.
    Point direction() const { return {-b, a}; }
};

struct ValidationReport {
    enum class Kind { Ok, TooFewLines, MultiplicityCount, ZeroNormal, NonPositiveMultiplicity, CommonDivisor, Parallel, TriplePoint };

    Kind kind = Kind::Ok;
    std::string message;
    std::vector<std::size_t> witness;  // offending line indices
    std::optional<Point> point;        // triple point location
    long divisor = 1;                  // common divisor of the multiplicities

    bool ok() const { return kind == Kind::Ok; }
};

std::string to_string(ValidationReport::Kind kind);

/// d+1 >= 3 lines with positive integer multiplicities: the polynomial f = prod l_i^{n_i}.
/// Construction does not validate; call validate() or require_valid().
class LineArrangement {
public:
    LineArrangement() = default;
    LineArrangement(std::vector<Line> lines, std::vector<long> multiplicities)
        : lines_(std::move(lines)), mult_(std::move(multiplicities)) {}

    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<long>& multiplicities() const { return mult_; }
    const Line& line(std::size_t i) const { return lines_.at(i); }
    long multiplicity(std::size_t i) const { return mult_.at(i); }

    std::size_t size() const { return lines_.size(); }
    /// Degree parameter d: the arrangement has d+1 lines.
    std::size_t d() const { return lines_.empty() ? 0 : lines_.size() - 1; }
    /// n = sum of the multiplicities.
    long total_multiplicity() const;
    /// e_ij = gcd(n_i, n_j).
    long pair_gcd(std::size_t i, std::size_t j) const;
    bool pairwise_coprime() const;

    Rational f(const Point& p) const;
    double f(double x, double y) const;

private:
    std::vector<Line> lines_;
    std::vector<long> mult_;
};

ValidationReport validate(const LineArrangement& arr);
/// Throws ArrangementError carrying the validation message.
void require_valid(const LineArrangement& arr);

struct IntersectionPoint {
    std::size_t i = 0;  // i < j
    std::size_t j = 0;
    Point point;
    long e = 1;  // gcd(n_i, n_j)
};

/// All d(d+1)/2 pairwise intersections, ordered lexicographically by (i, j).
std::vector<IntersectionPoint> intersections(const LineArrangement& arr);

/// Index of pair (i, j), i < j, in the intersections() ordering.
std::size_t pair_index(std::size_t line_count, std::size_t i, std::size_t j);

/// Intersections met along each line, sorted by the line's direction() parameter.
/// order[i] lists indices into intersections().
std::vector<std::vector<std::size_t>> line_orders(const LineArrangement& arr,
                                                  const std::vector<IntersectionPoint>& points);

struct FaceSide {
    std::size_t line = 0;
    std::size_t start_vertex = 0;  // index into intersections()
    std::size_t end_vertex = 0;
    long multiplicity = 1;
};

/// Bounded cell of the real arrangement; sides listed anticlockwise, side k runs
/// from corner k to corner k+1 (cyclically).
struct BoundedFace {
    std::vector<FaceSide> sides;
    /// sign of l_i on the interior, for every line (+1 / -1).
    std::vector<int> line_signs;
    Point centroid;  // vertex average, strictly interior

    std::size_t corner_count() const { return sides.size(); }
    /// Multiplicities a_1..a_s of the sides in traversal order.
    std::vector<long> side_multiplicities() const;
    /// Sign of f = prod l_i^{n_i} on the interior.
    int f_sign(const LineArrangement& arr) const;
};

std::vector<BoundedFace> bounded_faces(const LineArrangement& arr);

struct CenterCriticalPoint {
    std::size_t face = 0;
    double x = 0;
    double y = 0;
    double value = 0;     // f at the critical point
    double residual = 0;  // |sum n_i grad l_i / l_i| / sum n_i |grad l_i| / |l_i|
    int iterations = 0;
};

struct CriticalPointReport {
    std::vector<CenterCriticalPoint> points;
    std::vector<std::pair<std::size_t, std::size_t>> coincident_values;  // face index pairs
};

/// Relative tolerance under which two critical values are reported as coincident.
inline constexpr double kCriticalValueCoincidence = 1e-9;

/// Newton solve of sum n_i grad l_i / l_i = 0 inside each bounded face.
/// Throws ArrangementError if the iteration fails or leaves the face.
CriticalPointReport center_critical_points(const LineArrangement& arr);
CenterCriticalPoint center_critical_point(const LineArrangement& arr, const BoundedFace& face, std::size_t face_index);

}  // namespace centerkit
