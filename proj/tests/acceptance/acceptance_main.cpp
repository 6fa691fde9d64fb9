// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include "centerkit/fiber_graph.hpp"
#include "centerkit/io.hpp"
#include "centerkit/local_model.hpp"
#include "centerkit/melnikov.hpp"
#include "centerkit/orbit.hpp"
#include "centerkit/quadratic_bautin.hpp"
#include "centerkit/random.hpp"
#include "centerkit/report.hpp"
#include "centerkit/tangent.hpp"
#include "fixtures.hpp"
#include "tangent_oracle.hpp"
#include "winding_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace centerkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

/// Seeded corpus: d + 1 cycles through 3..max_lines.
std::vector<LineArrangement> corpus(std::uint64_t seed, std::size_t count, std::size_t max_lines, long max_mult,
                                    bool coprime) {
    Rng rng(seed);
    std::vector<LineArrangement> out;
    for (std::size_t k = 0; k < count; ++k) {
        ArrangementSampling s;
        s.lines = 3 + k % (max_lines - 2);
        s.max_multiplicity = max_mult;
        s.pairwise_coprime = coprime;
        out.push_back(random_arrangement(rng, s));
    }
    return out;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome rank_formula() {
    auto cases = corpus(101, 60, 6, 6, false);
    cases.push_back(fixture::standard({2, 4, 3}));
    std::size_t ok = 0, non_coprime = 0;
    double worst = 0;
    for (const auto& arr : cases) {
        const auto t0 = Clock::now();
        const long expected = (static_cast<long>(arr.d()) - 1) * arr.total_multiplicity() + 1;
        const bool match = static_cast<long>(build_graph(arr).betti1()) == expected &&
                           static_cast<long>(build_real_graph(arr).betti1()) == expected;
        worst = std::max(worst, seconds_since(t0));
        ok += match;
        non_coprime += !arr.pairwise_coprime();
    }
    const bool special = h1_rank(fixture::standard({2, 4, 3})) == 10;
    return {ok == cases.size() && special && worst < 1.0 && non_coprime > 0,
            fmt("%.0f/%.0f cases exact, (2,4,3) -> 10, max %.3f s per case", static_cast<double>(ok),
                static_cast<double>(cases.size()), worst)};
}

Outcome genus_check() {
    const bool triangle = genus(fixture::standard({1, 1, 1})) == 1;
    const bool weighted = genus(fixture::standard({1, 2, 3})) == 1;
    std::size_t bad = 0;
    const auto cases = corpus(202, 60, 6, 6, false);
    for (const auto& arr : cases) {
        const long num = genus_numerator(arr);
        bad += num < 0 || num % 2 != 0;
    }
    return {triangle && weighted && bad == 0,
            fmt("xy(x+y-1) genus %.0f, xy^2(x+y-1)^3 genus %.0f, %.0f corpus numerators odd or negative",
                static_cast<double>(genus(fixture::standard({1, 1, 1}))),
                static_cast<double>(genus(fixture::standard({1, 2, 3}))), static_cast<double>(bad))};
}

Outcome picard_lefschetz() {
    const auto t0 = Clock::now();
    std::size_t states = 0, bad = 0;
    for (long m = 1; m <= 12; ++m)
        for (long n = 1; n <= 12; ++n) {
            const auto model = build_local_model(m, n);
            for (long k = 0; k < model.q; ++k)
                for (long l = 0; l < model.p; ++l)
                    for (long h = 0; h < model.e; ++h) {
                        const StraightPathState s0{k, l, h, 0};
                        ++states;
                        bad += !(iterate(model, s0, model.lcm()) == StraightPathState{k, l, h, 1});
                    }
        }
    const double elapsed = seconds_since(t0);
    return {bad == 0 && elapsed < 10,
            fmt("%.0f states, %.0f violations, %.3f s", static_cast<double>(states), static_cast<double>(bad), elapsed)};
}

Outcome orbit_theorem() {
    std::size_t ok = 0, total = 0;
    double worst = 0;
    for (const auto& arr : corpus(303, 30, 5, 7, true)) {
        const auto t0 = Clock::now();
        const auto r = verify_orbit_theorem(arr);
        worst = std::max(worst, seconds_since(t0));
        ok += r.equal && r.codimension == arr.d() && r.holds();
        ++total;
    }
    return {ok == total && worst < 5.0,
            fmt("%.0f/%.0f coprime cases equal with codimension d, max %.3f s per case", static_cast<double>(ok),
                static_cast<double>(total), worst)};
}

Outcome winding() {
    double worst = 0;
    std::size_t oracle_cases = 0;
    for (const auto& m : {std::vector<long>{1, 1, 1}, std::vector<long>{1, 2, 3}, std::vector<long>{2, 3, 1},
                          std::vector<long>{3, 2, 2}}) {
        const auto g = build_real_graph(fixture::standard(m));
        const auto W = winding_matrix(g).W;
        const auto numeric = oracle::numeric_winding(g);
        for (std::size_t i = 0; i < W.rows(); ++i)
            for (std::size_t k = 0; k < W.cols(); ++k)
                worst = std::max(worst, std::abs(numeric.winding[i][k] - to_double(W(i, k))));
        ++oracle_cases;
    }
    std::size_t bad = 0, total = 0;
    for (const auto& arr : corpus(404, 60, 6, 6, false)) {
        const auto W = winding_matrix(build_real_graph(arr)).W;
        ++total;
        bool ok = rank(W) == arr.d();
        for (std::size_t k = 0; k < W.cols(); ++k) {
            Rational s(0);
            for (std::size_t i = 0; i < W.rows(); ++i) s += Rational(arr.multiplicity(i)) * W(i, k);
            ok = ok && s == 0;
        }
        bad += !ok;
    }
    return {worst < 1e-6 && oracle_cases >= 3 && bad == 0,
            fmt("oracle max deviation %.2e on %.0f arrangements, %.0f corpus cases violate sum/rank", worst,
                static_cast<double>(oracle_cases), static_cast<double>(bad)) +
                " of " + std::to_string(total)};
}

Outcome tangent() {
    std::size_t ok = 0, total = 0, round_trips = 0;
    for (std::size_t d = 2; d <= 5; ++d)
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const auto base = oracle::random_log_params(1000 * d + seed, d);
            const auto t = tangent_dimensions(base);
            ++total;
            ok += t.kernel_dim == d + 1 && t.image_dim == 3 * (d + 1);
            const auto omega = dtau(base, oracle::random_direction(seed, d));
            const auto m = tangent_membership(base, omega);
            round_trips += m.member && m.certificate && dtau(base, *m.certificate) == omega;
        }
    return {ok == total && round_trips == total,
            fmt("%.0f/%.0f bases with kernel d+1 and image 3(d+1), %.0f round trips", static_cast<double>(ok),
                static_cast<double>(total), static_cast<double>(round_trips))};
}

Outcome melnikov() {
    const auto arr = fixture::standard({1, 2, 3});
    const auto base = log_params(arr);
    const double t = 0.5 * face_critical_value(arr, 0);
    const auto oval = trace_oval(arr, 0, t);
    std::size_t forms = 0, disagreements = 0, inconclusive = 0;
    Rng rng(707);
    for (std::uint64_t seed = 1; seed <= 12; ++seed)
        for (bool in_image : {true, false}) {
            FoliationForm omega = FoliationForm::zero(2);
            if (in_image)
                omega = dtau(base, oracle::random_direction(seed, 2));
            else
                for (auto& c : omega.coefficients) c = rng.rational(9, 5);
            const bool exact = tangent_membership(base, omega).member;
            const auto r = melnikov1(arr, oval, omega);
            ++forms;
            if (r.verdict == Verdict::Inconclusive)
                ++inconclusive;
            else if ((r.verdict == Verdict::Vanishes) != exact)
                ++disagreements;
        }
    return {forms >= 20 && disagreements == 0 && inconclusive == 0,
            fmt("%.0f forms, %.0f disagreements, %.0f inconclusive", static_cast<double>(forms),
                static_cast<double>(disagreements), static_cast<double>(inconclusive))};
}

Outcome quadratic() {
    const auto t0 = Clock::now();
    const auto r = verify_component_containments(808, 100);
    const auto s = singular_locus_checks();
    const double elapsed = seconds_since(t0);
    std::size_t min_samples = r.components.empty() ? 0 : r.components.front().samples;
    for (const auto& c : r.components) min_samples = std::min(min_samples, c.samples);
    return {r.ok() && s.ok() && min_samples >= 100 && elapsed < 5,
            fmt("4 components x %.0f samples vanish, singular locus and tau collision hold, %.3f s",
                static_cast<double>(min_samples), elapsed)};
}

Outcome determinism() {
    CorpusOptions c;
    RunOptions opts;
    opts.seed = 909;
    const auto a = corpus_command(c, opts);
    const auto b = corpus_command(c, opts);
    return {a.output == b.output && a.exit_code == kExitOk,
            "corpus of " + std::to_string(c.count) + " cases, " + std::to_string(a.output.size()) + " bytes, hash " +
                hex64(fnv1a(a.output)) + (a.output == b.output ? ", identical" : ", differs")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"rank formula", rank_formula},  {"genus", genus_check},     {"local monodromy", picard_lefschetz},
        {"orbit theorem", orbit_theorem}, {"winding functionals", winding}, {"tangent dimensions", tangent},
        {"melnikov iff", melnikov},      {"quadratic components", quadratic}, {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("criterion %zu %-21s %s  %s\n", k + 1, criteria[k].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
