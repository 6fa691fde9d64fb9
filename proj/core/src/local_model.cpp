#include "centerkit/local_model.hpp"

#include <numeric>
#include <stdexcept>

namespace centerkit {

namespace {

long floor_div(long x, long y) {
    long d = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --d;
    return d;
}

long mod(long x, long y) { return x - y * floor_div(x, y); }

}  // namespace

LocalFibrationModel build_local_model(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("local model needs m, n >= 1");
    LocalFibrationModel model;
    model.m = m;
    model.n = n;
    model.e = std::gcd(m, n);
    model.p = m / model.e;
    model.q = n / model.e;
    if (model.p == 1) {
        model.a = 1;
        model.b = 0;
    } else if (model.q == 1) {
        model.a = 1;
        model.b = model.p - 1;
    } else {
        // a p = 1 (mod q) with 0 <= a < q, then b = (a p - 1) / q lands in [0, p-1].
        model.a = -1;
        for (long a = 0; a < model.q; ++a)
            if (mod(a * model.p, model.q) == 1) {
                model.a = a;
                break;
            }
        if (model.a < 0) throw std::logic_error("local model: p and q not coprime");
        model.b = (model.a * model.p - 1) / model.q;
    }
    return model;
}

long relative_rank(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("relative_rank needs m, n >= 1");
    return m + n;
}

bool is_valid_state(const LocalFibrationModel& model, const StraightPathState& s) {
    return s.k >= 0 && s.k < model.q && s.l >= 0 && s.l < model.p && s.h >= 0 && s.h < model.e;
}

StraightPathState monodromy_step(const LocalFibrationModel& model, const StraightPathState& state) {
    if (!is_valid_state(model, state)) throw std::invalid_argument("monodromy_step: state out of range");
    StraightPathState next = state;
    if (state.h + 1 < model.e) {
        next.h = state.h + 1;
        return next;
    }
    const long dk = state.k - model.a;
    const long dl = state.l - model.b;
    next.k = mod(dk, model.q);
    next.l = mod(dl, model.p);
    next.h = 0;
    // The zeta end wraps against the path direction, the xi end with it.
    next.s = state.s + kWindingSign * (floor_div(dk, model.q) - floor_div(dl, model.p));
    return next;
}

StraightPathState iterate(const LocalFibrationModel& model, StraightPathState state, long count) {
    if (count < 0) throw std::invalid_argument("iterate: negative count");
    for (long i = 0; i < count; ++i) state = monodromy_step(model, state);
    return state;
}

std::pair<Rational, Rational> loop_log_weights(const LocalFibrationModel& model) {
    return {Rational(model.n / model.e), Rational(-(model.m / model.e))};
}

}  // namespace centerkit
