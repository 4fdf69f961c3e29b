#ifndef JETCERT_MONOMIAL_HPP
#define JETCERT_MONOMIAL_HPP

#include "jetcert/context.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace jetcert {

// Dense exponent vector over a declared context; exps.size() equals the
// context size. The all-zero vector is the monomial 1.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    int weight(const VariableContext &ctx) const {
        int w = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i]) w += exps[i] * ctx.var(i).weight();
        return w;
    }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    bool divides(const Monomial &other) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > other.exps[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial &o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    // Exact quotient; caller must ensure o.divides(*this).
    Monomial operator/(const Monomial &o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= o.exps[i];
        return r;
    }

    friend Monomial lcm(const Monomial &a, const Monomial &b) {
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps.size(); ++i)
            r.exps[i] = std::max(a.exps[i], b.exps[i]);
        return r;
    }

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.exps == b.exps; }
};

// Graded reverse lexicographic comparison with the declaration order as
// priority: higher total degree wins; on ties the monomial with the
// smaller exponent at the last differing position wins.
inline bool grevlex_less(const Monomial &a, const Monomial &b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = a.exps.size(); i-- > 0;) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i];
    }
    return false;
}

// Map comparator placing the leading monomial first.
struct MonomialGreater {
    bool operator()(const Monomial &a, const Monomial &b) const {
        return grevlex_less(b, a);
    }
};

} // namespace jetcert

#endif
