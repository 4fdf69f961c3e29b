#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetcert/corpus.hpp"
#include "jetcert/jet.hpp"
#include "jetcert/parser.hpp"
#include "support/gen.hpp"
#include "support/series_oracle.hpp"

using namespace jetcert;

TEST_CASE("jets of affine space have no equations") {
    for (int m : {0, 2, 5}) {
        auto jp = jet_equations(corpus::affine_space(3), m);
        CHECK(jp.pres.ctx->size() == 3u * (std::size_t)(m + 1));
        CHECK(jp.pres.generators.empty());
    }
}

TEST_CASE("level-0 jets rename the base variables") {
    auto v = corpus::danielewski_x();
    auto jp = jet_equations(v, 0);
    REQUIRE(jp.strata.size() == 1);
    auto expected = parse_polynomial("x#0*z#0 - y#0^2 + 1", jp.pres.ctx);
    CHECK(jp.stratum(0, 0) == expected);
}

TEST_CASE("hyperbolic surface strata at levels 1 and 2 match the frozen oracle values") {
    auto v = corpus::danielewski_x();

    auto j1 = jet_equations(v, 1);
    CHECK(j1.stratum(0, 0) == parse_polynomial("x#0*z#0 - y#0^2 + 1", j1.pres.ctx));
    CHECK(j1.stratum(0, 1) ==
          parse_polynomial("x#0*z#1 + x#1*z#0 - 2*y#0*y#1", j1.pres.ctx));

    auto j2 = jet_equations(v, 2);
    CHECK(j2.stratum(0, 2) ==
          parse_polynomial("x#0*z#2 + x#1*z#1 + x#2*z#0 - 2*y#0*y#2 - y#1^2", j2.pres.ctx));
}

TEST_CASE("jet equations agree with the independent series oracle on the corpus") {
    for (const auto &v : corpus::standard()) {
        for (int m = 1; m <= 4; ++m) {
            auto jp = jet_equations(v, m);
            auto ref = oracle::jet_strata_reference(v, m);
            REQUIRE(jp.pres.generators.size() == ref.size());
            for (std::size_t i = 0; i < ref.size(); ++i) {
                CAPTURE(v.name);
                CHECK(jp.pres.generators[i] == ref[i]);
            }
        }
    }
}

TEST_CASE("grading: homogeneity, stratification and the scaling identity hold") {
    for (const auto &v : corpus::standard()) {
        for (int m = 0; m <= 3; ++m) {
            auto rep = check_grading(jet_equations(v, m));
            CAPTURE(v.name);
            CHECK(rep.all_pass());
        }
    }
}

TEST_CASE("grading flags a hand-built inhomogeneous stratum") {
    auto v = corpus::parabola();
    auto jp = jet_equations(v, 1);
    jp.strata[0][1] = parse_polynomial("x#0 + x#1", jp.pres.ctx); // weight mix 0/1
    auto rep = check_grading(jp);
    CHECK(!rep.all_pass());
    CHECK(rep.first_failure()->name.find("F[0][1]") != std::string::npos);
}

TEST_CASE("negative level is rejected") {
    CHECK_THROWS_AS(jet_equations(corpus::circle(), -1), Error);
}

TEST_CASE("evaluate_on_jet: constant jets and the origin") {
    auto v = corpus::danielewski_x();
    auto jp = jet_equations(v, 1);

    TruncatedSeriesPoint on_surface{{{Rational(1), Rational(0)},
                                     {Rational(1), Rational(0)},
                                     {Rational(0), Rational(0)}}};
    auto vals = evaluate_on_jet(jp, on_surface);
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == 0);
    CHECK(vals[1] == 0);

    TruncatedSeriesPoint origin{{{Rational(0), Rational(0)},
                                 {Rational(0), Rational(0)},
                                 {Rational(0), Rational(0)}}};
    auto vals2 = evaluate_on_jet(jp, origin);
    CHECK(vals2[0] == 1); // the origin is not on the surface

    TruncatedSeriesPoint wrong_shape{{{Rational(1)}, {Rational(1)}, {Rational(0)}}};
    CHECK_THROWS_AS(evaluate_on_jet(jp, wrong_shape), Error);
}

TEST_CASE("evaluate_on_jet agrees with direct series evaluation on random points") {
    testgen::Gen g(424242);
    for (const auto &v : corpus::standard()) {
        if (v.generators.empty()) continue;
        for (int m : {1, 2, 3}) {
            auto jp = jet_equations(v, m);
            for (int round = 0; round < 17; ++round) {
                TruncatedSeriesPoint gamma;
                for (std::size_t i = 0; i < v.ctx->size(); ++i) {
                    std::vector<Rational> row;
                    for (int j = 0; j <= m; ++j) row.push_back(g.rational(5, 3));
                    gamma.coeffs.push_back(std::move(row));
                }
                auto vals = evaluate_on_jet(jp, gamma);
                std::size_t vi = 0;
                for (std::size_t a = 0; a < v.generators.size(); ++a) {
                    auto ref =
                        oracle::evaluate_series_reference(v.generators[a], v, gamma, m);
                    for (int k = 0; k <= m; ++k) CHECK(vals[vi++] == ref[(std::size_t)k]);
                }
            }
        }
    }
}

TEST_CASE("truncation maps share strata and include the base projection") {
    auto v = corpus::danielewski_x();
    auto j2 = jet_equations(v, 2);

    auto id = truncation_map(j2, 2);
    for (std::size_t i = 0; i < id.images.size(); ++i)
        CHECK(id.images[i] == Polynomial::variable(j2.pres.ctx, id.source.ctx->var(i)));

    auto tr = truncation_map(j2, 1);
    CHECK(tr.source.generators.size() == 2);
    auto pi = truncation_map(j2, 0);
    CHECK(pi.source.generators.size() == 1);
    CHECK_THROWS_AS(truncation_map(j2, 3), Error);
}

TEST_CASE("truncation compatibility: lower-level equations are literally shared") {
    for (const auto &v : corpus::standard()) {
        auto j3 = jet_equations(v, 3);
        for (int mp = 0; mp <= 3; ++mp) {
            auto jl = jet_equations(v, mp);
            for (std::size_t a = 0; a < jl.strata.size(); ++a)
                for (int k = 0; k <= mp; ++k)
                    CHECK(jl.stratum(a, k).in_context(j3.pres.ctx) == j3.stratum(a, k));
        }
    }
}

TEST_CASE("zero section: sigma after the base inclusion is the identity") {
    auto v = corpus::danielewski_x();
    auto jp = jet_equations(v, 2);
    auto sigma = zero_section(jp);

    // sigma(F[0][0]) = f, sigma(F[0][k >= 1]) = 0
    CHECK(sigma.apply(jp.stratum(0, 0)) == v.generators[0]);
    CHECK(sigma.apply(jp.stratum(0, 1)).is_zero());
    CHECK(sigma.apply(jp.stratum(0, 2)).is_zero());

    // pi* then sigma*: x -> x#0 -> x
    auto pi = truncation_map(jp, 0);
    for (std::size_t i = 0; i < v.ctx->size(); ++i) {
        auto through = sigma.apply(pi.images[i].in_context(jp.pres.ctx));
        CHECK(through == Polynomial::variable(v.ctx, i));
    }
}

TEST_CASE("fiber over the zero section linearizes the top stratum") {
    for (const auto &v : corpus::standard()) {
        if (v.generators.empty()) continue;
        for (int m : {2, 3, 4}) {
            auto res = fiber_over_zero_section(v, m);
            CAPTURE(v.name);
            CHECK(res.checks.all_pass());
        }
    }
    CHECK_THROWS_AS(fiber_over_zero_section(corpus::circle(), 0), Error);
}

TEST_CASE("fiber example: hyperbolic surface at level 2") {
    auto res = fiber_over_zero_section(corpus::danielewski_x(), 2);
    REQUIRE(res.fiber.generators.size() == 2);
    CHECK(res.fiber.generators[1] ==
          parse_polynomial("z#0*x#2 - 2*y#0*y#2 + x#0*z#2", res.fiber.ctx));
}

TEST_CASE("fiber example: cusp at level 2 (the lemma holds for singular varieties)") {
    auto res = fiber_over_zero_section(corpus::cusp(), 2);
    CHECK(res.checks.all_pass());
    REQUIRE(res.fiber.generators.size() == 2);
    CHECK(res.fiber.generators[1] ==
          parse_polynomial("-3*x#0^2*x#2 + 2*y#0*y#2", res.fiber.ctx));
}

TEST_CASE("at level 1 the top stratum already equals the Jacobian pairing") {
    for (const auto &v : corpus::standard()) {
        if (v.generators.empty()) continue;
        auto jp = jet_equations(v, 1);
        for (std::size_t a = 0; a < v.generators.size(); ++a)
            CHECK(jp.stratum(a, 1) == jacobian_pairing(jp, a));
    }
}
