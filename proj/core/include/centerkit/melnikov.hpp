#pragma once

// Real ovals {f = t} around a center and the first Melnikov integral
// M_1(t) = \oint omega_1 / (l_1 ... l_{d+1}) along them.

#include "centerkit/arrangement.hpp"
#include "centerkit/tangent.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace centerkit {

class MelnikovError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TraceOptions {
    double max_step_fraction = 0.02;  // step cap relative to the distance from the center to the start point
    double max_turn = 0.05;           // radians of tangent turning per step
    int max_steps = 200000;
    int newton_iterations = 50;
};

struct Oval {
    std::size_t face = 0;
    double t = 0;
    std::array<double, 2> center{0, 0};
    std::vector<std::array<double, 2>> points;  // anticlockwise, closed: last point != first, wraps around
    double step = 0;                            // mean chord length
    double max_residual = 0;                    // max |f - t| / |t|
    double closure_gap = 0;                     // relative to the diameter
    double diameter = 0;
};

/// Critical value of f at the center of the face (the critical point found by Newton).
double face_critical_value(const LineArrangement& arr, std::size_t face);

/// Throws MelnikovError unless 0 < t / v < 1 for the critical value v of the face.
Oval trace_oval(const LineArrangement& arr, std::size_t face, double t, const TraceOptions& opts = {});

enum class Verdict { Vanishes, NonVanishing, Inconclusive };
std::string to_string(Verdict v);

struct MelnikovThresholds {
    double accept = 1e-8;
    double reject = 1e-4;
};

struct MelnikovResult {
    double value = 0;
    double error_estimate = 0;
    double scale = 0;     // \oint |omega_1 / prod l| |ds|
    double relative = 0;  // |value| / scale
    Verdict verdict = Verdict::Inconclusive;
    std::size_t segments = 0;
};

/// Composite Gauss rule on the oval's arcs; the error estimate compares one and two panels per arc.
MelnikovResult melnikov1(const LineArrangement& arr, const Oval& oval, const FoliationForm& omega1,
                         const MelnikovThresholds& thresholds = {});
MelnikovResult melnikov1(const LineArrangement& arr, std::size_t face, const FoliationForm& omega1, double t,
                         const MelnikovThresholds& thresholds = {}, const TraceOptions& opts = {});

}  // namespace centerkit
