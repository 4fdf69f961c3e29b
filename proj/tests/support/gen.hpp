#ifndef JETCERT_TESTS_GEN_HPP
#define JETCERT_TESTS_GEN_HPP

#include "jetcert/polynomial.hpp"

#include <random>

namespace jetcert::testgen {

// Deterministic random polynomials for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    Rational rational(int num_range = 9, int den_range = 4) {
        int num = uniform(-num_range, num_range);
        int den = uniform(1, den_range);
        return Rational(num, den);
    }

    Monomial monomial(const ContextPtr &ctx, int max_deg) {
        Monomial m(ctx->size());
        int budget = uniform(0, max_deg);
        for (int b = 0; b < budget; ++b) {
            std::size_t i = (std::size_t)uniform(0, (int)ctx->size() - 1);
            m.exps[i] += 1;
        }
        return m;
    }

    Polynomial polynomial(const ContextPtr &ctx, int max_terms, int max_deg) {
        Polynomial p(ctx);
        int terms = uniform(0, max_terms);
        for (int t = 0; t < terms; ++t) p.add_term(monomial(ctx, max_deg), rational());
        return p;
    }

    Polynomial nonzero_polynomial(const ContextPtr &ctx, int max_terms, int max_deg) {
        for (;;) {
            Polynomial p = polynomial(ctx, max_terms, max_deg);
            if (!p.is_zero()) return p;
        }
    }

private:
    std::mt19937_64 rng_;
};

} // namespace jetcert::testgen

#endif
