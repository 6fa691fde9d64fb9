#include "centerkit/tangent.hpp"

namespace centerkit {

LogParams log_params(const LineArrangement& arr) {
    LogParams p;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        p.lambda.emplace_back(arr.multiplicity(i));
        const auto& l = arr.line(i);
        p.lines.push_back({l.a, l.b, l.c});
    }
    return p;
}

RationalPolynomial arrangement_polynomial(const LineArrangement& arr) {
    auto f = RationalPolynomial::constant(2, Rational(1));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& l = arr.line(i);
        f *= LinearForm{l.a, l.b, l.c}.polynomial().pow(static_cast<unsigned>(arr.multiplicity(i)));
    }
    return f;
}

Matrix<Rational> dtau_matrix(const LogParams& base) {
    const std::size_t params = 4 * base.size();
    std::vector<std::vector<Rational>> columns;
    columns.reserve(params);
    for (std::size_t k = 0; k < params; ++k) {
        std::vector<Rational> unit(params, Rational(0));
        unit[k] = 1;
        columns.push_back(dtau(base, LogParams::unflatten(unit)).coefficients);
    }
    return Matrix<Rational>::from_columns(columns, 2 * monomial_count(base.d()));
}

TangentDimensions tangent_dimensions(const LogParams& base) {
    TangentDimensions t;
    t.d = base.d();
    t.parameter_dim = 4 * base.size();
    t.form_dim = 2 * monomial_count(t.d);
    const auto M = dtau_matrix(base);
    t.kernel_basis = nullspace(M);
    t.kernel_dim = t.kernel_basis.size();
    t.image_dim = t.parameter_dim - t.kernel_dim;
    return t;
}

std::vector<std::vector<Rational>> colinear_kernel_family(const LogParams& base) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < base.size(); ++i) {
        LogParams dir;
        dir.lambda.assign(base.size(), Rational(0));
        dir.lines.assign(base.size(), LinearForm{});
        dir.lines[i] = base.lines[i];
        for (std::size_t k = 0; k < base.size(); ++k) dir.lambda[k] = -base.lambda[k];
        out.push_back(dir.flatten());
    }
    return out;
}

MembershipResult tangent_membership(const LogParams& base, const FoliationForm& omega) {
    if (omega.degree != base.d()) throw TangentError("one-form degree does not match the base point");
    const auto M = dtau_matrix(base);
    MembershipResult r;
    if (const auto x = solve(M, omega.coefficients)) {
        r.member = true;
        r.certificate = LogParams::unflatten(*x);
        r.residual.assign(omega.coefficients.size(), Rational(0));
        return r;
    }
    std::vector<std::vector<Rational>> columns;
    for (std::size_t c = 0; c < M.cols(); ++c) {
        std::vector<Rational> col(M.rows());
        for (std::size_t k = 0; k < M.rows(); ++k) col[k] = M(k, c);
        columns.push_back(std::move(col));
    }
    r.residual = Subspace<Rational>::span(M.rows(), columns).reduce(omega.coefficients);
    return r;
}

}  // namespace centerkit
