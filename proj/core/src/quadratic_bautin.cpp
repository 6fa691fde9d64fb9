#include "centerkit/quadratic_bautin.hpp"

#include <algorithm>

namespace centerkit {

namespace {

using P6 = BautinPolynomial;

P6 var(std::size_t i) { return P6::variable(6, i); }
P6 cst(long c) { return P6::constant(6, Rational(c)); }

enum Var : std::size_t { kA, kB, kC, kAp, kBp, kCp };

RationalPolynomial param(std::size_t n, std::size_t i, int power = 1) { return RationalPolynomial::variable(n, i, power); }

}  // namespace

std::string to_string(Component c) {
    switch (c) {
        case Component::LotkaVolterra: return "lotka_volterra";
        case Component::Hamiltonian: return "hamiltonian";
        case Component::Reversible: return "reversible";
        case Component::Exceptional: return "exceptional";
    }
    return "unknown";
}

std::array<BautinPolynomial, 3> bautin_polynomials() {
    QuadraticParamsT<P6> p{var(kA), var(kB), var(kC), var(kAp), var(kBp), var(kCp)};
    const auto g = bautin_generators(p);
    return {g.g2, g.g3, g.g4};
}

std::vector<BautinPolynomial> component_equations(Component c) {
    const P6 A = var(kA), B = var(kB), C = var(kC), Ap = var(kAp), Bp = var(kBp), Cp = var(kCp);
    switch (c) {
        case Component::LotkaVolterra: return {B, Bp};
        case Component::Hamiltonian: return {cst(2) * A + Bp, cst(2) * Ap + B};
        case Component::Reversible:
            return {A * B - Ap * Bp, Bp.pow(3) * C - B.pow(3) * Cp, A * Bp.pow(2) * C - Ap * B.pow(2) * Cp,
                    A.pow(2) * Bp * C - Ap.pow(2) * B * Cp, A.pow(3) * C - Ap.pow(3) * Cp};
        case Component::Exceptional: return {A - cst(2) * Bp, Ap - cst(2) * B, C * Cp - B * Bp};
    }
    return {};
}

std::vector<BautinPolynomial> exceptional_literal_equations() {
    const P6 A = var(kA), B = var(kB), C = var(kC), Ap = var(kAp), Bp = var(kBp), Cp = var(kCp);
    return {A - cst(2) * Bp, Ap - cst(2) * Bp, C * Cp - B * Bp};
}

Parametrization component_parametrization(Component c) {
    Parametrization out;
    const Rational two(2);
    switch (c) {
        case Component::LotkaVolterra: {
            out.parameters = 4;  // A, C, A', C'
            const RationalPolynomial zero(4);
            out.images = {param(4, 0), zero, param(4, 1), param(4, 2), zero, param(4, 3)};
            break;
        }
        case Component::Hamiltonian: {
            out.parameters = 4;  // A, A', C, C'
            out.images = {param(4, 0), param(4, 1) * (-two), param(4, 2), param(4, 1), param(4, 0) * (-two), param(4, 3)};
            break;
        }
        case Component::Reversible: {
            out.parameters = 4;  // A, B, C, r: (A, B, C, rA, B/r, C/r^3)
            out.images = {param(4, 0), param(4, 1), param(4, 2), param(4, 3) * param(4, 0),
                          param(4, 1) * param(4, 3, -1), param(4, 2) * param(4, 3, -3)};
            out.nonzero = {3};
            break;
        }
        case Component::Exceptional: {
            out.parameters = 3;  // B, B', C: (2B', B, C, 2B, B', BB'/C)
            out.images = {param(3, 1) * two, param(3, 0), param(3, 2), param(3, 0) * two, param(3, 1),
                          param(3, 0) * param(3, 1) * param(3, 2, -1)};
            out.nonzero = {2};
            break;
        }
    }
    return out;
}

namespace {

QuadraticParams evaluate(const Parametrization& par, const std::vector<Rational>& t) {
    std::array<Rational, 6> v;
    for (std::size_t k = 0; k < 6; ++k) v[k] = par.images[k].evaluate(t);
    return QuadraticParams::from(v);
}

std::vector<Rational> sample_parameters(const Parametrization& par, Rng& rng) {
    std::vector<Rational> t;
    for (std::size_t k = 0; k < par.parameters; ++k) {
        const bool nz = std::find(par.nonzero.begin(), par.nonzero.end(), k) != par.nonzero.end();
        t.push_back(nz ? rng.nonzero_rational(12, 7) : rng.rational(12, 7));
    }
    return t;
}

}  // namespace

QuadraticParams sample_component(Component c, Rng& rng) {
    const auto par = component_parametrization(c);
    return evaluate(par, sample_parameters(par, rng));
}

bool ContainmentReport::ok() const {
    for (const auto& c : components)
        if (!c.ok()) return false;
    return degrees_ok && witness_nonzero;
}

ContainmentReport verify_component_containments(std::uint64_t seed, std::size_t samples) {
    Rng rng(seed);
    ContainmentReport report;
    const auto g = bautin_polynomials();
    for (std::size_t k = 0; k < 3; ++k) report.degrees[k] = g[k].total_degree();
    report.degrees_ok = report.degrees == std::array<int, 3>{2, 4, 6} && g[0].is_homogeneous() &&
                        g[1].is_homogeneous() && g[2].is_homogeneous();

    for (Component c : kComponents) {
        ComponentCheck check;
        check.component = c;
        const auto par = component_parametrization(c);
        const auto equations = component_equations(c);
        check.symbolic_zero = true;
        for (const auto& gk : g) check.symbolic_zero = check.symbolic_zero && gk.substitute(par.images).is_zero();
        for (std::size_t s = 0; s < samples; ++s) {
            const auto p = evaluate(par, sample_parameters(par, rng));
            ++check.samples;
            if (bautin_generators(p).all_zero()) ++check.vanishing;
            if (satisfies(equations, p)) ++check.satisfying;
        }
        report.components.push_back(check);
    }

    report.witness = {1, 1, 1, 0, 0, 0};
    report.witness_values = bautin_generators(report.witness);
    report.witness_nonzero = !report.witness_values.all_zero();

    // Literal reading: A = 2B', A' = 2B', C' = BB'/C.
    for (std::size_t s = 0; s < samples; ++s) {
        const Rational B = rng.rational(12, 7), Bp = rng.rational(12, 7), C = rng.nonzero_rational(12, 7);
        const QuadraticParams p{2 * Bp, B, C, 2 * Bp, Bp, B * Bp / C};
        ++report.literal_samples;
        if (!bautin_generators(p).all_zero()) ++report.literal_nonvanishing;
    }
    return report;
}

std::pair<LogParams, LogParams> tau_collision_fixture() {
    const std::vector<Rational> lambda{1, -1, -1};
    LogParams p1{lambda, {{-1, 1, -1}, {1, 0, 0}, {0, 1, 0}}};
    LogParams p2{lambda, {{-1, 1, -1}, {1, 0, 1}, {0, 1, -1}}};
    return {p1, p2};
}

SingularLocusReport singular_locus_checks() {
    SingularLocusReport r;
    // A = A' = B = B' = 0 with C, C' free.
    const RationalPolynomial zero(2);
    const std::vector<RationalPolynomial> locus{zero, zero, param(2, 0), zero, zero, param(2, 1)};
    auto identically = [&](Component c) {
        for (const auto& eq : component_equations(c))
            if (!eq.substitute(locus).is_zero()) return false;
        return true;
    };
    r.reversible_identically = identically(Component::Reversible);
    r.hamiltonian_identically = identically(Component::Hamiltonian);
    r.lotka_volterra_identically = identically(Component::LotkaVolterra);

    const auto [p1, p2] = tau_collision_fixture();
    r.tau_collision = tau_collision_check(p1, p2);

    using Q3 = QuadraticNumber<3>;
    using Poly3 = Polynomial<Q3>;
    const Q3 s = Q3::root();
    const Q3 inv = Q3(1) / s;
    const LogParamsT<Q3> fixture{{Q3(1), Q3(1), Q3(1)},
                                 {{Q3(-1), Q3(0), Q3(Rational(1, 2))}, {Q3(0) - inv, Q3(1), Q3(0) - inv}, {inv, Q3(1), inv}}};
    Poly3 product = Poly3::constant(2, Q3(1));
    for (const auto& l : fixture.lines) product *= l.polynomial();
    const Poly3 x = Poly3::variable(2, 0), y = Poly3::variable(2, 1), one = Poly3::constant(2, Q3(1));
    const Poly3 f = (one * Q3(Rational(1, 2)) - x) * (y * y - (x + one) * (x + one) * Q3(Rational(1, 3)));
    r.fixture_factors = product == f;
    const auto df = FoliationFormT<Q3>::from_dx_dy(2, f.derivative(0), f.derivative(1));
    r.fixture_proportional = proportional(tau(fixture).coefficients, df.coefficients);
    return r;
}

}  // namespace centerkit
