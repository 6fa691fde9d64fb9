#pragma once

// Quadratic centers in the normal form
//   x' = -i x + A x^2 + B x y + C y^2,   y' = i y + C' y^2 + B' x y + A' x^2,
// the Bautin generators g2, g3, g4, and the four components of their zero set.

#include "centerkit/polynomial.hpp"
#include "centerkit/random.hpp"
#include "centerkit/rational.hpp"
#include "centerkit/tangent.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace centerkit {

template <class K>
struct QuadraticParamsT {
    K A{0}, B{0}, C{0}, Ap{0}, Bp{0}, Cp{0};

    std::array<K, 6> values() const { return {A, B, C, Ap, Bp, Cp}; }
    static QuadraticParamsT from(const std::array<K, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
};
using QuadraticParams = QuadraticParamsT<Rational>;

template <class K>
struct BautinValues {
    K g2{0}, g3{0}, g4{0};
    bool all_zero() const { return is_zero(g2) && is_zero(g3) && is_zero(g4); }
};

template <class K>
BautinValues<K> bautin_generators(const QuadraticParamsT<K>& p) {
    const K& A = p.A;
    const K& B = p.B;
    const K& C = p.C;
    const K& Ap = p.Ap;
    const K& Bp = p.Bp;
    const K& Cp = p.Cp;
    BautinValues<K> g;
    g.g2 = A * B - Ap * Bp;
    g.g3 = (A + A + Bp) * (A - Bp - Bp) * C * Bp - (Ap + Ap + B) * (Ap - B - B) * Cp * B;
    g.g4 = (B * Bp - C * Cp) * ((A + A + Bp) * Bp * Bp * C - (Ap + Ap + B) * B * B * Cp);
    return g;
}

enum class Component { LotkaVolterra, Hamiltonian, Reversible, Exceptional };
inline constexpr std::array<Component, 4> kComponents{Component::LotkaVolterra, Component::Hamiltonian,
                                                      Component::Reversible, Component::Exceptional};
std::string to_string(Component c);

/// Variables of the symbolic forms: (A, B, C, A', B', C').
using BautinPolynomial = RationalPolynomial;
std::array<BautinPolynomial, 3> bautin_polynomials();
/// Defining equations; Exceptional uses A - 2B', A' - 2B, CC' - BB'.
std::vector<BautinPolynomial> component_equations(Component c);
/// Literal alternative A - 2B', A' - 2B', CC' - BB'.
std::vector<BautinPolynomial> exceptional_literal_equations();

template <class K>
bool satisfies(const std::vector<BautinPolynomial>& equations, const QuadraticParamsT<K>& p) {
    const auto v = p.values();
    const std::vector<K> point(v.begin(), v.end());
    for (const auto& eq : equations) {
        K value(0);
        for (const auto& [e, c] : eq.terms()) {
            K term(c);
            for (std::size_t i = 0; i < 6; ++i)
                for (int k = 0; k < e[i]; ++k) term *= point[i];
            value += term;
        }
        if (!is_zero(value)) return false;
    }
    return true;
}

struct ComponentMembership {
    bool lotka_volterra = false;
    bool hamiltonian = false;
    bool reversible = false;
    bool exceptional = false;
    bool exceptional_literal = false;
    bool singular_locus = false;  // A = A' = B = B' = 0
};

template <class K>
ComponentMembership component_membership(const QuadraticParamsT<K>& p) {
    ComponentMembership m;
    m.lotka_volterra = satisfies(component_equations(Component::LotkaVolterra), p);
    m.hamiltonian = satisfies(component_equations(Component::Hamiltonian), p);
    m.reversible = satisfies(component_equations(Component::Reversible), p);
    m.exceptional = satisfies(component_equations(Component::Exceptional), p);
    m.exceptional_literal = satisfies(exceptional_literal_equations(), p);
    m.singular_locus = is_zero(p.A) && is_zero(p.Ap) && is_zero(p.B) && is_zero(p.Bp);
    return m;
}

/// Rational (Laurent) parametrization of each component: images of (A, B, C, A', B', C').
struct Parametrization {
    std::size_t parameters = 0;
    std::vector<RationalPolynomial> images;  // six Laurent polynomials in the parameters
    std::vector<std::size_t> nonzero;         // parameters that must be nonzero
};
Parametrization component_parametrization(Component c);
QuadraticParams sample_component(Component c, Rng& rng);

struct ComponentCheck {
    Component component = Component::LotkaVolterra;
    std::size_t samples = 0;
    std::size_t vanishing = 0;           // samples with g2 = g3 = g4 = 0
    std::size_t satisfying = 0;          // samples satisfying the defining equations
    bool symbolic_zero = false;          // g_k composed with the parametrization is the zero polynomial
    bool ok() const { return vanishing == samples && satisfying == samples && symbolic_zero; }
};

struct ContainmentReport {
    std::vector<ComponentCheck> components;
    std::array<int, 3> degrees{0, 0, 0};
    bool degrees_ok = false;
    QuadraticParams witness;
    BautinValues<Rational> witness_values;
    bool witness_nonzero = false;
    // Literal exceptional reading: samples with A = 2B', A' = 2B', CC' = BB' where some g_k != 0.
    std::size_t literal_samples = 0;
    std::size_t literal_nonvanishing = 0;

    bool ok() const;
};

ContainmentReport verify_component_containments(std::uint64_t seed, std::size_t samples = 100);

struct SingularLocusReport {
    bool reversible_identically = false;   // five equations vanish with C, C' free
    bool hamiltonian_identically = false;
    bool lotka_volterra_identically = false;
    bool tau_collision = false;
    bool fixture_factors = false;          // (1/2 - x)(y^2 - (x+1)^2/3) = l1 l2 l3 over Q(sqrt 3)
    bool fixture_proportional = false;     // tau(1,1,1; l) proportional to df
    bool ok() const {
        return reversible_identically && hamiltonian_identically && lotka_volterra_identically && tau_collision &&
               fixture_factors && fixture_proportional;
    }
};

SingularLocusReport singular_locus_checks();

/// The two parameter points of L(1^3) whose tau images coincide.
std::pair<LogParams, LogParams> tau_collision_fixture();

}  // namespace centerkit
