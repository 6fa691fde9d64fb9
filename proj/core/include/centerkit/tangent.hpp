#pragma once

// The logarithmic map tau(lambda, l) = l_1...l_{d+1} sum lambda_i dl_i / l_i,
// its differential, and exact membership in the image of the differential.
//
// A one-form P dy - Q dx of degree <= d is stored as a coefficient vector of
// length (d+1)(d+2): the coefficients of P, then those of Q, each in graded
// lexicographic order (total degree ascending; inside a degree m the monomials
// x^m, x^{m-1} y, ..., y^m).

#include "centerkit/arrangement.hpp"
#include "centerkit/linalg.hpp"
#include "centerkit/polynomial.hpp"
#include "centerkit/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace centerkit {

class TangentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of monomials of degree <= d in two variables.
inline std::size_t monomial_count(std::size_t d) { return (d + 1) * (d + 2) / 2; }
/// Position of x^i y^j in the graded lexicographic order.
inline std::size_t monomial_index(int i, int j) {
    const auto m = static_cast<std::size_t>(i + j);
    return m * (m + 1) / 2 + static_cast<std::size_t>(j);
}

template <class K>
struct LinearFormT {
    K a{0};
    K b{0};
    K c{0};

    Polynomial<K> polynomial() const {
        Polynomial<K> p(2);
        p.add_term({1, 0}, a);
        p.add_term({0, 1}, b);
        p.add_term({0, 0}, c);
        return p;
    }
    friend bool operator==(const LinearFormT& u, const LinearFormT& v) { return u.a == v.a && u.b == v.b && u.c == v.c; }
};

/// A point (lambda, l) of the parameter space, or a tangent direction (lambda-dot, p) of the same shape.
template <class K>
struct LogParamsT {
    std::vector<K> lambda;
    std::vector<LinearFormT<K>> lines;

    std::size_t size() const { return lambda.size(); }
    std::size_t d() const { return lambda.empty() ? 0 : lambda.size() - 1; }

    /// (lambda_1..lambda_{d+1}, a_1, b_1, c_1, ..., a_{d+1}, b_{d+1}, c_{d+1}).
    std::vector<K> flatten() const {
        std::vector<K> v(lambda);
        for (const auto& l : lines) {
            v.push_back(l.a);
            v.push_back(l.b);
            v.push_back(l.c);
        }
        return v;
    }
    static LogParamsT unflatten(const std::vector<K>& v) {
        if (v.size() % 4 != 0) throw TangentError("parameter vector length must be 4(d+1)");
        const std::size_t n = v.size() / 4;
        LogParamsT p;
        p.lambda.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
        for (std::size_t i = 0; i < n; ++i) p.lines.push_back({v[n + 3 * i], v[n + 3 * i + 1], v[n + 3 * i + 2]});
        return p;
    }
};

template <class K>
struct FoliationFormT {
    std::size_t degree = 0;
    std::vector<K> coefficients;  // P then Q, (degree+1)(degree+2) entries

    static FoliationFormT zero(std::size_t d) { return {d, std::vector<K>(2 * monomial_count(d), K(0))}; }

    /// From dx and dy coefficients: A dx + B dy = P dy - Q dx with P = B, Q = -A.
    static FoliationFormT from_dx_dy(std::size_t d, const Polynomial<K>& A, const Polynomial<K>& B) {
        auto form = zero(d);
        const std::size_t m = monomial_count(d);
        auto put = [&](const Polynomial<K>& poly, std::size_t offset, bool negate) {
            for (const auto& [e, c] : poly.terms()) {
                if (e[0] < 0 || e[1] < 0 || static_cast<std::size_t>(e[0] + e[1]) > d)
                    throw TangentError("one-form exceeds the degree bound");
                form.coefficients[offset + monomial_index(e[0], e[1])] = negate ? K(0) - c : c;
            }
        };
        put(B, 0, false);
        put(A, m, true);
        return form;
    }

    Polynomial<K> P() const { return part(0); }
    Polynomial<K> Q() const { return part(monomial_count(degree)); }
    bool is_zero() const {
        for (const auto& c : coefficients)
            if (!centerkit::is_zero(c)) return false;
        return true;
    }
    friend bool operator==(const FoliationFormT& u, const FoliationFormT& v) {
        return u.degree == v.degree && u.coefficients == v.coefficients;
    }

private:
    Polynomial<K> part(std::size_t offset) const {
        Polynomial<K> p(2);
        for (int m = 0; m <= static_cast<int>(degree); ++m)
            for (int j = 0; j <= m; ++j) p.add_term({m - j, j}, coefficients[offset + monomial_index(m - j, j)]);
        return p;
    }
};

using LinearForm = LinearFormT<Rational>;
using LogParams = LogParamsT<Rational>;
using FoliationForm = FoliationFormT<Rational>;

namespace detail {
template <class K>
Polynomial<K> product_except(const std::vector<Polynomial<K>>& ls, std::size_t skip1, std::size_t skip2) {
    auto r = Polynomial<K>::constant(2, K(1));
    for (std::size_t k = 0; k < ls.size(); ++k)
        if (k != skip1 && k != skip2) r *= ls[k];
    return r;
}
}  // namespace detail

/// tau(lambda, l) = sum_i lambda_i (prod_{j != i} l_j) dl_i.
template <class K>
FoliationFormT<K> tau(const LogParamsT<K>& params) {
    const std::size_t n = params.size();
    if (n < 2 || params.lines.size() != n) throw TangentError("tau: need matching residues and lines");
    std::vector<Polynomial<K>> ls;
    for (const auto& l : params.lines) ls.push_back(l.polynomial());
    Polynomial<K> A(2), B(2);
    for (std::size_t i = 0; i < n; ++i) {
        const auto rest = detail::product_except(ls, i, n);
        A += rest * (params.lambda[i] * params.lines[i].a);
        B += rest * (params.lambda[i] * params.lines[i].b);
    }
    return FoliationFormT<K>::from_dx_dy(n - 1, A, B);
}

/// Differential of tau at `base` applied to `dir` = (lambda-dot, p).
template <class K>
FoliationFormT<K> dtau(const LogParamsT<K>& base, const LogParamsT<K>& dir) {
    const std::size_t n = base.size();
    if (dir.size() != n || dir.lines.size() != n || base.lines.size() != n)
        throw TangentError("dtau: direction does not match the base point");
    std::vector<Polynomial<K>> ls, ps;
    for (const auto& l : base.lines) ls.push_back(l.polynomial());
    for (const auto& p : dir.lines) ps.push_back(p.polynomial());
    Polynomial<K> A(2), B(2);
    for (std::size_t i = 0; i < n; ++i) {
        const auto rest = detail::product_except(ls, i, n);
        // lambda-dot_i prod_{j != i} l_j dl_i + lambda_i prod_{j != i} l_j dp_i
        A += rest * (dir.lambda[i] * base.lines[i].a + base.lambda[i] * dir.lines[i].a);
        B += rest * (dir.lambda[i] * base.lines[i].b + base.lambda[i] * dir.lines[i].b);
        // lambda_i sum_{k != i} p_k prod_{j != i,k} l_j dl_i
        Polynomial<K> varied(2);
        for (std::size_t k = 0; k < n; ++k)
            if (k != i) varied += ps[k] * detail::product_except(ls, i, k);
        A += varied * (base.lambda[i] * base.lines[i].a);
        B += varied * (base.lambda[i] * base.lines[i].b);
    }
    return FoliationFormT<K>::from_dx_dy(n - 1, A, B);
}

/// (A f_y - B f_x) for the form A dx + B dy and f = prod l_i^{n_i}: zero iff the form annihilates df.
template <class K>
Polynomial<K> wedge_with_differential(const FoliationFormT<K>& form, const Polynomial<K>& f) {
    const auto A = -form.Q();
    const auto B = form.P();
    return A * f.derivative(1) - B * f.derivative(0);
}

/// True iff u = c v for some nonzero c (both nonzero), or both are zero.
template <class K>
bool proportional(const std::vector<K>& u, const std::vector<K>& v) {
    if (u.size() != v.size()) return false;
    std::size_t pivot = u.size();
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!centerkit::is_zero(u[k])) {
            pivot = k;
            break;
        }
    if (pivot == u.size()) {
        for (const auto& x : v)
            if (!centerkit::is_zero(x)) return false;
        return true;
    }
    if (centerkit::is_zero(v[pivot])) return false;
    const K ratio = v[pivot] / u[pivot];
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!(v[k] == ratio * u[k])) return false;
    return true;
}

template <class K>
bool tau_collision_check(const LogParamsT<K>& p1, const LogParamsT<K>& p2) {
    const auto t1 = tau(p1), t2 = tau(p2);
    return t1.degree == t2.degree && proportional(t1.coefficients, t2.coefficients);
}

/// (n_i; l_i) read off an arrangement.
LogParams log_params(const LineArrangement& arr);
/// f = prod l_i^{n_i} as an exact polynomial.
RationalPolynomial arrangement_polynomial(const LineArrangement& arr);

/// Columns: dtau(base, e_k) for the 4(d+1) unit directions in flatten() order.
Matrix<Rational> dtau_matrix(const LogParams& base);

struct TangentDimensions {
    std::size_t d = 0;
    std::size_t parameter_dim = 0;  // 4(d+1)
    std::size_t form_dim = 0;       // (d+1)(d+2)
    std::size_t kernel_dim = 0;
    std::size_t image_dim = 0;
    std::vector<std::vector<Rational>> kernel_basis;

    bool expected() const { return kernel_dim == d + 1 && image_dim == 3 * (d + 1); }
};

TangentDimensions tangent_dimensions(const LogParams& base);

/// Directions p_i = c l_i, lambda-dot_i = -lambda_i c, one per line: the expected kernel.
std::vector<std::vector<Rational>> colinear_kernel_family(const LogParams& base);

struct MembershipResult {
    bool member = false;
    std::optional<LogParams> certificate;  // direction with dtau(base, certificate) = omega
    std::vector<Rational> residual;        // omega reduced against the image; zero iff member
};

MembershipResult tangent_membership(const LogParams& base, const FoliationForm& omega);

}  // namespace centerkit
