#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetcert/parser.hpp"
#include "jetcert/polynomial.hpp"
#include "support/gen.hpp"

using namespace jetcert;

namespace {
ContextPtr xyz() { return make_context({"x", "y", "z"}); }
Polynomial P(const std::string &s, const ContextPtr &ctx) { return parse_polynomial(s, ctx); }
} // namespace

TEST_CASE("addition: cancellation, identity, hand sum") {
    auto ctx = xyz();
    CHECK(P("x + 1", ctx) + P("-x", ctx) == P("1", ctx));
    auto p = P("x*z - y^2 + 1", ctx);
    CHECK(p + Polynomial::zero(ctx) == p);
    CHECK(p + P("y^2", ctx) == P("x*z + 1", ctx));
}

TEST_CASE("multiplication: difference of squares, identity, binomial") {
    auto ctx = make_context({"x", "y", "t"});
    CHECK(P("(y + x*t)*(y - x*t)", ctx) == P("y^2 - x^2*t^2", ctx));
    auto p = P("x^2*y - 7*t", ctx);
    CHECK(p * P("1", ctx) == p);
    CHECK(P("(x + y)^2", ctx) == P("x^2 + 2*x*y + y^2", ctx));
    CHECK(P("(y + x*t)^2", ctx) == P("y^2 + 2*x*y*t + x^2*t^2", ctx));
}

TEST_CASE("degree of product adds for nonzero factors") {
    auto ctx = xyz();
    testgen::Gen g(42);
    for (int i = 0; i < 100; ++i) {
        auto p = g.nonzero_polynomial(ctx, 4, 3);
        auto q = g.nonzero_polynomial(ctx, 4, 3);
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("ring axioms on random triples") {
    auto ctx = xyz();
    testgen::Gen g(7);
    for (int i = 0; i < 120; ++i) {
        auto p = g.polynomial(ctx, 5, 4);
        auto q = g.polynomial(ctx, 5, 4);
        auto r = g.polynomial(ctx, 5, 4);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p + q == q + p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + Polynomial::zero(ctx) == p);
        CHECK(p * Polynomial::constant(ctx, 1) == p);
        CHECK(p - p == Polynomial::zero(ctx));
    }
}

TEST_CASE("canonical form: arithmetic results never store zero coefficients") {
    auto ctx = xyz();
    testgen::Gen g(99);
    for (int i = 0; i < 100; ++i) {
        auto p = g.polynomial(ctx, 6, 4);
        auto q = g.polynomial(ctx, 6, 4);
        for (const auto &r : {p + q, p - q, p * q}) {
            for (const auto &[m, c] : r.terms()) CHECK(c != 0);
        }
    }
}

TEST_CASE("context mismatch raises") {
    auto a = make_context({"x", "y"});
    auto b = make_context({"x", "z"});
    CHECK_THROWS_AS(P("x", a) + P("x", b), ContextMismatchError);
    CHECK_THROWS_AS(P("x", a) * P("x", b), ContextMismatchError);
}

TEST_CASE("substitution: examples") {
    auto ctx = make_context({"x"});
    auto img_ctx = make_context({"x"});
    auto x2 = P("x^2", ctx);
    auto sub = x2.substitute({{Variable("x"), P("x + 1", img_ctx)}});
    CHECK(sub == P("x^2 + 2*x + 1", img_ctx));

    // identity substitution
    auto cxyz = xyz();
    auto p = P("x*z - y^2 + 1", cxyz);
    std::vector<std::pair<Variable, Polynomial>> id;
    for (const auto &v : cxyz->vars()) id.emplace_back(v, Polynomial::variable(cxyz, v));
    CHECK(p.substitute(id) == p);
}

TEST_CASE("substitution: the hyperbolic-surface translation leaves its equation fixed") {
    auto ctx = xyz();
    auto ext = make_context({"x", "y", "z", "t"});
    auto f = P("x*z - y^2 + 1", ctx);
    auto img = f.substitute({{Variable("x"), P("x", ext)},
                             {Variable("y"), P("y + x*t", ext)},
                             {Variable("z"), P("z + 2*y*t + x*t^2", ext)}});
    CHECK(img == f.in_context(ext));
}

TEST_CASE("substitution is a ring homomorphism on random inputs") {
    auto ctx = make_context({"x", "y"});
    auto tgt = xyz();
    testgen::Gen g(2024);
    for (int i = 0; i < 60; ++i) {
        auto p = g.polynomial(ctx, 4, 3);
        auto q = g.polynomial(ctx, 4, 3);
        std::vector<std::pair<Variable, Polynomial>> images = {
            {Variable("x"), g.polynomial(tgt, 3, 2)},
            {Variable("y"), g.polynomial(tgt, 3, 2)},
        };
        CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
        CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
    }
}

TEST_CASE("substitution: missing image for an occurring variable raises") {
    auto ctx = make_context({"x", "y"});
    auto p = P("x + y", ctx);
    CHECK_THROWS_AS(p.substitute({{Variable("x"), P("x", ctx)}}), Error);
    // ...but variables absent from p need no image
    auto q = P("x^2", ctx);
    CHECK(q.substitute({{Variable("x"), P("x", ctx)}}) == q);
}

TEST_CASE("partial derivatives") {
    auto ctx = xyz();
    CHECK(P("x*z - y^2 + 1", ctx).derivative(Variable("y")) == P("-2*y", ctx));
    CHECK(P("5/3", ctx).derivative(Variable("x")).is_zero());
    CHECK(P("x^2*z", ctx).derivative(Variable("x")) == P("2*x*z", ctx));
}

TEST_CASE("Leibniz rule on random pairs") {
    auto ctx = xyz();
    testgen::Gen g(13);
    Variable y("y");
    for (int i = 0; i < 80; ++i) {
        auto p = g.polynomial(ctx, 5, 4);
        auto q = g.polynomial(ctx, 5, 4);
        CHECK((p * q).derivative(y) == p * q.derivative(y) + q * p.derivative(y));
        // linearity
        CHECK((p + q).derivative(y) == p.derivative(y) + q.derivative(y));
    }
}

TEST_CASE("weights and homogeneity") {
    auto base = make_context({"x", "y"});
    auto ctx = make_context(std::vector<Variable>{
        Variable("x", 1), Variable("y", 1), Variable("x", 0), Variable("y", 0)});
    auto p = parse_polynomial("x#0*y#1 + y#0*x#1", ctx);
    CHECK(p.is_weight_homogeneous(1));
    CHECK(!p.is_weight_homogeneous(0));
    auto q = parse_polynomial("x#0 + x#1", ctx);
    CHECK(!q.is_weight_homogeneous(0));
    CHECK(q.weight_component(1) == parse_polynomial("x#1", ctx));
    CHECK(Polynomial::zero(ctx).is_weight_homogeneous(3));
    (void)base;
}

TEST_CASE("evaluation") {
    auto ctx = xyz();
    auto f = P("x*z - y^2 + 1", ctx);
    CHECK(f.evaluate({Rational(1), Rational(1), Rational(0)}) == 0);
    CHECK(f.evaluate({Rational(0), Rational(0), Rational(0)}) == 1);
    CHECK(f.evaluate({Rational(2), Rational(3), Rational(4)}) == 0);
}
