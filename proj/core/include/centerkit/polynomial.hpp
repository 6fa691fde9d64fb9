#pragma once

// Sparse multivariate Laurent polynomials over an exact field.
// Exponents may be negative so that rational parametrizations with monomial
// denominators (e.g. B/r) can be expanded without clearing denominators.

#include "centerkit/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace centerkit {

template <class K>
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const K& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }
    static Polynomial variable(std::size_t nvars, std::size_t index, int power = 1) {
        if (index >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
        Exponents e(nvars, 0);
        e[index] = power;
        Polynomial p(nvars);
        p.add_term(e, K(1));
        return p;
    }
    static Polynomial monomial(const Exponents& e, const K& c) {
        Polynomial p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t variables() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, K>& terms() const { return terms_; }

    K coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    void add_term(const Exponents& e, const K& c) {
        if (e.size() != nvars_) throw std::invalid_argument("Polynomial: exponent arity mismatch");
        if (centerkit::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (centerkit::is_zero(it->second)) terms_.erase(it);
        }
    }

    /// Largest total degree of a term; -1 for the zero polynomial.
    int total_degree() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
        return deg;
    }
    /// True when every term has the same total degree.
    bool is_homogeneous() const {
        int deg = -1;
        for (const auto& [e, c] : terms_) {
            const int d = std::accumulate(e.begin(), e.end(), 0);
            if (deg != -1 && d != deg) return false;
            deg = d;
        }
        return true;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        adopt_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        adopt_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const K& s) {
        if (centerkit::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r(std::max(a.nvars_, b.nvars_));
        if (!a.terms_.empty() && !b.terms_.empty() && a.nvars_ != b.nvars_)
            throw std::invalid_argument("Polynomial: arity mismatch in product");
        Exponents e(r.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < r.nvars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
    friend Polynomial operator*(const K& s, Polynomial a) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return (a - b).is_zero(); }

    Polynomial pow(unsigned k) const {
        Polynomial result = constant(nvars_, K(1));
        Polynomial base = *this;
        while (k) {
            if (k & 1U) result *= base;
            k >>= 1U;
            if (k) base *= base;
        }
        return result;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponents f = e;
            f[var] -= 1;
            r.add_term(f, c * K(e[var]));
        }
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != nvars_) throw std::invalid_argument("Polynomial::evaluate: arity mismatch");
        K sum(0);
        for (const auto& [e, c] : terms_) {
            K term = c;
            for (std::size_t i = 0; i < nvars_; ++i) term *= power(point[i], e[i]);
            sum += term;
        }
        return sum;
    }

    /// Composes with polynomials: variable i is replaced by images[i].
    /// Requires nonnegative exponents in *this; the images may be Laurent.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_) throw std::invalid_argument("Polynomial::substitute: arity mismatch");
        const std::size_t target = images.empty() ? 0 : images.front().nvars_;
        Polynomial r(target);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(target, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] < 0) throw std::domain_error("Polynomial::substitute: negative exponent");
                if (e[i] > 0) term *= images[i].pow(static_cast<unsigned>(e[i]));
            }
            r += term;
        }
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.terms_.empty()) return os << '0';
        bool first = true;
        for (const auto& [e, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << '(' << c << ')';
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) os << "*v" << i << '^' << e[i];
        }
        return os;
    }

private:
    static K power(const K& base, int k) {
        K r(1);
        K b = k < 0 ? K(1) / base : base;
        for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= b;
        return r;
    }
    void adopt_arity(const Polynomial& o) {
        if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
        if (!o.terms_.empty() && o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
    }

    std::size_t nvars_ = 0;
    std::map<Exponents, K> terms_;
};

using RationalPolynomial = Polynomial<Rational>;

}  // namespace centerkit
