#include "fixtures.hpp"

#include <stdexcept>

namespace centerkit::fixture {

namespace {

std::vector<Line> base_lines() {
    return {{1, 0, 0}, {0, 1, 0}, {1, 1, -1}, {1, -2, Rational(1, 3)}, {3, 1, -2}};
}

}  // namespace

LineArrangement standard(std::vector<long> multiplicities) {
    auto lines = base_lines();
    if (multiplicities.size() < 3 || multiplicities.size() > lines.size())
        throw std::invalid_argument("fixture: 3 to 5 lines");
    lines.resize(multiplicities.size());
    LineArrangement arr(std::move(lines), std::move(multiplicities));
    require_valid(arr);
    return arr;
}

LineArrangement random(std::uint64_t seed, std::size_t lines, long max_multiplicity, bool coprime) {
    Rng rng(seed);
    ArrangementSampling s;
    s.lines = lines;
    s.max_multiplicity = max_multiplicity;
    s.pairwise_coprime = coprime;
    return random_arrangement(rng, s);
}

}  // namespace centerkit::fixture
