#pragma once

// Picard-Lefschetz combinatorics of the local fibration x^m y^n near a saddle.
//
// The fiber over t consists of e = gcd(m, n) cylinders. Straight paths run from
// a marked point zeta_{k,h} on the transversal {x = 1} (k mod q) to a marked point
// xi_{l,h} on {y = 1} (l mod p) inside cylinder h, and may wind s times around it.

#include "centerkit/rational.hpp"

#include <cstdint>
#include <utility>

namespace centerkit {

struct LocalFibrationModel {
    long m = 1;
    long n = 1;
    long e = 1;  // gcd(m, n)
    long p = 1;  // m / e
    long q = 1;  // n / e
    long a = 1;  // a p - b q = 1
    long b = 0;

    long lcm() const { return p * n; }
};

struct StraightPathState {
    long k = 0;  // zeta index, 0 <= k < q
    long l = 0;  // xi index, 0 <= l < p
    long h = 0;  // cylinder, 0 <= h < e
    std::int64_t s = 0;  // turns around the cylinder loop

    friend bool operator==(const StraightPathState&, const StraightPathState&) = default;
};

/// Orientation sign of the winding increment. Fixed so that iterating the
/// monodromy lcm(m, n) times adds exactly one turn.
inline constexpr int kWindingSign = -1;

/// Throws std::invalid_argument unless m, n >= 1.
LocalFibrationModel build_local_model(long m, long n);

/// Rank of H_1(L_t, L_t cap Sigma): m + n.
long relative_rank(long m, long n);

bool is_valid_state(const LocalFibrationModel& model, const StraightPathState& state);

/// One anticlockwise turn of t around 0.
StraightPathState monodromy_step(const LocalFibrationModel& model, const StraightPathState& state);

StraightPathState iterate(const LocalFibrationModel& model, StraightPathState state, long count);

/// Winding numbers (in full turns) of x and y along the cylinder loop: (n/e, -m/e).
std::pair<Rational, Rational> loop_log_weights(const LocalFibrationModel& model);

}  // namespace centerkit
