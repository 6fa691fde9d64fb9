#pragma once

// Deterministic sampling: mt19937_64 with plain modulo reduction, so streams are
// identical across standard libraries (std distributions are not portable).

#include "centerkit/arrangement.hpp"
#include "centerkit/rational.hpp"

#include <cstdint>
#include <random>

namespace centerkit {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish integer in [lo, hi].
    long uniform(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }
    /// p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(long max_num, long max_den) {
        Rational q(uniform(-max_num, max_num), uniform(1, max_den));
        q.canonicalize();
        return q;
    }
    Rational nonzero_rational(long max_num, long max_den) {
        for (;;) {
            Rational q = rational(max_num, max_den);
            if (q != 0) return q;
        }
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

struct ArrangementSampling {
    std::size_t lines = 3;       // d + 1
    long max_multiplicity = 6;
    bool pairwise_coprime = false;
    long max_coefficient = 9;    // numerators of line coefficients
    long max_denominator = 4;
};

/// Rejection-samples a validated arrangement with overall gcd 1.
LineArrangement random_arrangement(Rng& rng, const ArrangementSampling& opts);

}  // namespace centerkit
