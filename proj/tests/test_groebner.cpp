#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetcert/corpus.hpp"
#include "jetcert/groebner.hpp"
#include "jetcert/jet.hpp"
#include "jetcert/parser.hpp"
#include "support/gen.hpp"

#include <algorithm>

using namespace jetcert;

namespace {
Polynomial P(const std::string &s, const ContextPtr &ctx) { return parse_polynomial(s, ctx); }
} // namespace

TEST_CASE("single generator is its own basis") {
    auto ctx = make_context({"x"});
    auto gb = buchberger({P("x", ctx)}, MonomialOrder::grevlex(ctx));
    REQUIRE(gb.basis.size() == 1);
    CHECK(gb.basis[0] == P("x", ctx));
}

TEST_CASE("lex reduction of a linear system") {
    auto ctx = make_context({"x", "y"});
    auto gb = buchberger({P("x - y", ctx), P("y - 1", ctx)}, MonomialOrder::lex(ctx));
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == P("x - 1", ctx));
    CHECK(gb.basis[1] == P("y - 1", ctx));
}

TEST_CASE("unit ideal from the smooth-surface Jacobian data") {
    auto ctx = make_context({"x", "y", "z"});
    auto gb = buchberger({P("x*z - y^2 + 1", ctx), P("z", ctx), P("-2*y", ctx), P("x", ctx)},
                         MonomialOrder::grevlex(ctx));
    CHECK(gb.is_unit_ideal());
}

TEST_CASE("empty input yields the zero ideal") {
    auto ctx = make_context({"x"});
    auto gb = buchberger({Polynomial::zero(ctx)}, MonomialOrder::grevlex(ctx));
    CHECK(gb.is_zero_ideal());
    CHECK(normal_form(P("x^2 - 1", ctx), gb) == P("x^2 - 1", ctx));
}

TEST_CASE("normal form examples") {
    auto ctx = make_context({"x"});
    auto gb = buchberger({P("x - 1", ctx)}, MonomialOrder::grevlex(ctx));
    CHECK(normal_form(P("x^2", ctx), gb) == P("1", ctx));

    auto c2 = make_context({"x", "y", "z"});
    std::vector<Polynomial> gens = {P("x*z - y^2 + 1", c2), P("x^2 - y", c2)};
    auto gb2 = buchberger(gens, MonomialOrder::grevlex(c2));
    for (const auto &g : gens) CHECK(normal_form(g, gb2).is_zero());
}

TEST_CASE("normal form is idempotent and linear") {
    auto ctx = make_context({"x", "y", "z"});
    auto gb = buchberger({P("x*z - y^2 + 1", ctx), P("x*y - z", ctx)},
                         MonomialOrder::grevlex(ctx));
    testgen::Gen g(5);
    for (int i = 0; i < 40; ++i) {
        auto p = g.polynomial(ctx, 6, 4);
        auto q = g.polynomial(ctx, 6, 4);
        auto np = normal_form(p, gb);
        CHECK(normal_form(np, gb) == np);
        auto c = g.rational();
        CHECK(normal_form(p * c + q, gb) == np * c + normal_form(q, gb));
    }
}

TEST_CASE("membership soundness: random ideal combinations reduce to zero") {
    auto ctx = make_context({"x", "y", "z"});
    testgen::Gen g(17);
    for (int round = 0; round < 10; ++round) {
        std::vector<Polynomial> gens = {g.nonzero_polynomial(ctx, 4, 3),
                                        g.nonzero_polynomial(ctx, 4, 3)};
        auto gb = buchberger(gens, MonomialOrder::grevlex(ctx));
        for (int i = 0; i < 5; ++i) {
            Polynomial combo(ctx);
            for (const auto &gen : gens) combo += g.polynomial(ctx, 3, 2) * gen;
            CHECK(normal_form(combo, gb).is_zero());
        }
    }
}

TEST_CASE("reduced basis is unique under generator shuffling and unit scaling") {
    auto ctx = make_context({"x", "y", "z"});
    std::vector<std::vector<Polynomial>> ideals = {
        {P("x*z - y^2 + 1", ctx), P("x^2 - y", ctx)},
        {P("x^2 + y^2 + z^2 - 1", ctx), P("x*y - z", ctx)},
        {P("x^3 - y", ctx), P("y^3 - z", ctx)},
        {P("x*y*z - 1", ctx), P("x + y + z", ctx)},
        {P("y^2 - x^3", ctx), P("z - x*y", ctx)},
    };
    testgen::Gen g(23);
    auto order = MonomialOrder::grevlex(ctx);
    for (const auto &gens : ideals) {
        auto ref = buchberger(gens, order);
        for (int s = 0; s < 20; ++s) {
            auto shuffled = gens;
            for (std::size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[(std::size_t)g.uniform(0, (int)i - 1)]);
            for (auto &p : shuffled) {
                Rational c(0);
                while (c == 0) c = g.rational();
                p = p * c;
            }
            auto gb = buchberger(shuffled, order);
            REQUIRE(gb.basis.size() == ref.basis.size());
            for (std::size_t i = 0; i < gb.basis.size(); ++i) CHECK(gb.basis[i] == ref.basis[i]);
        }
    }
}

TEST_CASE("buchberger criterion holds on random ideals") {
    auto ctx = make_context({"x", "y"});
    testgen::Gen g(101);
    auto order = MonomialOrder::grevlex(ctx);
    for (int round = 0; round < 15; ++round) {
        std::vector<Polynomial> gens = {g.nonzero_polynomial(ctx, 3, 3),
                                        g.nonzero_polynomial(ctx, 3, 3)};
        auto gb = buchberger(gens, order);
        if (gb.basis.empty()) continue;
        // all S-polynomials of basis pairs reduce to zero
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
                auto spoly = [&] {
                    auto lt = [&](const Polynomial &p) {
                        auto it = p.terms().begin();
                        auto best = it;
                        for (++it; it != p.terms().end(); ++it)
                            if (order.greater(it->first, best->first)) best = it;
                        return *best;
                    };
                    auto [mi, ci] = lt(gb.basis[i]);
                    auto [mj, cj] = lt(gb.basis[j]);
                    Monomial l = lcm(mi, mj);
                    return Polynomial::monomial(ctx, l / mi, Rational(1) / ci) * gb.basis[i] -
                           Polynomial::monomial(ctx, l / mj, Rational(1) / cj) * gb.basis[j];
                }();
                CHECK(normal_form(spoly, gb).is_zero());
            }
    }
}

TEST_CASE("ideal equality") {
    auto ctx = make_context({"x", "y"});
    auto order = MonomialOrder::grevlex(ctx);
    CHECK(ideal_equal({P("x", ctx)}, {P("2*x", ctx)}, order));
    CHECK(!ideal_equal({P("x", ctx)}, {P("x^2", ctx)}, order));
}

TEST_CASE("level-1 jet ideal equals the base-plus-pairing ideal") {
    for (const auto &v : corpus::standard()) {
        if (v.generators.empty()) continue;
        auto jp = jet_equations(v, 1);
        auto order = MonomialOrder::grevlex(jp.pres.ctx);
        std::vector<Polynomial> alt;
        for (std::size_t a = 0; a < v.generators.size(); ++a) {
            alt.push_back(jp.stratum(a, 0));
            alt.push_back(jacobian_pairing(jp, a));
        }
        CHECK(ideal_equal(jp.pres.generators, alt, order));
    }
}

TEST_CASE("block elimination recovers the twisted-cusp relation") {
    // eliminate t from { y - t^2, x - t^3 }: the ideal must contain x^2 - y^3
    auto ctx = make_context({"t", "x", "y"});
    auto order = MonomialOrder::block_elimination({0, 1, 2}, 1);
    auto gb = buchberger({P("y - t^2", ctx), P("x - t^3", ctx)}, order);
    CHECK(normal_form(P("x^2 - y^3", ctx), gb).is_zero());
    // and an element free of t must appear in the reduced basis
    bool has_t_free = false;
    for (const auto &b : gb.basis)
        if (!b.depends_on(Variable("t"))) has_t_free = true;
    CHECK(has_t_free);
}

TEST_CASE("smoothness by the Jacobian criterion") {
    CHECK(is_smooth(corpus::danielewski_x()));
    CHECK(is_smooth(corpus::danielewski_y()));
    CHECK(is_smooth(corpus::circle()));
    CHECK(is_smooth(corpus::parabola()));
    CHECK(is_smooth(corpus::affine_space(3)));
    CHECK(!is_smooth(corpus::cusp()));
    CHECK(!is_smooth(corpus::node()));
}

TEST_CASE("the pair guard aborts runaway computations") {
    auto ctx = make_context({"x", "y", "z"});
    GroebnerLimits limits;
    limits.max_pairs = 1;
    std::vector<Polynomial> gens = {P("x^2 + y^2 + z^2 - 1", ctx), P("x*y - z", ctx),
                                    P("x*z - y", ctx)};
    CHECK_THROWS_AS(buchberger(gens, MonomialOrder::grevlex(ctx), limits), GroebnerLimitError);
}
