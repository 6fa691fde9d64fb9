#include "centerkit/random.hpp"

#include <numeric>

namespace centerkit {

LineArrangement random_arrangement(Rng& rng, const ArrangementSampling& opts) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<Line> lines;
        std::vector<long> mult;
        for (std::size_t i = 0; i < opts.lines; ++i) {
            lines.push_back({rng.rational(opts.max_coefficient, opts.max_denominator),
                             rng.rational(opts.max_coefficient, opts.max_denominator),
                             rng.rational(opts.max_coefficient, opts.max_denominator)});
            mult.push_back(rng.uniform(1, opts.max_multiplicity));
        }
        LineArrangement arr(std::move(lines), std::move(mult));
        if (!validate(arr).ok()) continue;
        if (opts.pairwise_coprime && !arr.pairwise_coprime()) continue;
        return arr;
    }
    throw ArrangementError("could not sample a valid arrangement");
}

}  // namespace centerkit
