#ifndef JETCERT_TESTS_SERIES_ORACLE_HPP
#define JETCERT_TESTS_SERIES_ORACLE_HPP

#include "jetcert/jet.hpp"

namespace jetcert::oracle {

// Independent code path for jet equations: truncated power series with
// polynomial coefficients, multiplied by direct convolution mod t^{m+1}.
// Deliberately avoids Polynomial::substitute and the t-variable route used
// by the library.
struct TruncSeries {
    std::vector<Polynomial> c; // c[j] is the coefficient of t^j; size m+1

    static TruncSeries zero(const ContextPtr &ctx, int m) {
        return {std::vector<Polynomial>((std::size_t)m + 1, Polynomial(ctx))};
    }
    static TruncSeries constant(const ContextPtr &ctx, int m, const Rational &v) {
        auto s = zero(ctx, m);
        s.c[0] = Polynomial::constant(ctx, v);
        return s;
    }

    TruncSeries operator+(const TruncSeries &o) const {
        TruncSeries r = *this;
        for (std::size_t j = 0; j < r.c.size(); ++j) r.c[j] += o.c[j];
        return r;
    }
    TruncSeries operator*(const TruncSeries &o) const {
        TruncSeries r = *this;
        for (auto &p : r.c) p = Polynomial(p.context());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; i + j < c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }
    TruncSeries scale(const Rational &v) const {
        TruncSeries r = *this;
        for (auto &p : r.c) p *= v;
        return r;
    }
};

// Coefficients of f(series per base variable) mod t^{m+1}, computed term by
// term over the jet context.
inline std::vector<Polynomial> jet_strata_reference(const Presentation &variety, int m) {
    ContextPtr jctx = jet_context(variety, m);
    std::size_t n = variety.ctx->size();

    std::vector<TruncSeries> vars;
    for (std::size_t i = 0; i < n; ++i) {
        TruncSeries s = TruncSeries::zero(jctx, m);
        for (int j = 0; j <= m; ++j)
            s.c[(std::size_t)j] =
                Polynomial::variable(jctx, Variable(variety.ctx->var(i).name, j));
        vars.push_back(std::move(s));
    }

    std::vector<Polynomial> out;
    for (const auto &f : variety.generators) {
        TruncSeries acc = TruncSeries::zero(jctx, m);
        for (const auto &[mono, coeff] : f.terms()) {
            TruncSeries term = TruncSeries::constant(jctx, m, coeff);
            for (std::size_t i = 0; i < n; ++i)
                for (int e = 0; e < mono.exps[i]; ++e) term = term * vars[i];
            acc = acc + term;
        }
        for (auto &p : acc.c) out.push_back(std::move(p));
    }
    return out;
}

// Rational series evaluation of one generator at a truncated series point.
inline std::vector<Rational> evaluate_series_reference(const Polynomial &f,
                                                       const Presentation &variety,
                                                       const TruncatedSeriesPoint &gamma,
                                                       int m) {
    std::size_t len = (std::size_t)m + 1;
    auto mul = [&](const std::vector<Rational> &a, const std::vector<Rational> &b) {
        std::vector<Rational> r(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; i + j < len; ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::vector<Rational> acc(len, Rational(0));
    for (const auto &[mono, coeff] : f.terms()) {
        std::vector<Rational> term(len, Rational(0));
        term[0] = coeff;
        for (std::size_t i = 0; i < variety.ctx->size(); ++i)
            for (int e = 0; e < mono.exps[i]; ++e) term = mul(term, gamma.coeffs[i]);
        for (std::size_t j = 0; j < len; ++j) acc[j] += term[j];
    }
    return acc;
}

} // namespace jetcert::oracle

#endif
