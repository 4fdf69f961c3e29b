#include "jetcert/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace jetcert {

namespace {

struct LeadTerm {
    Monomial mono;
    Rational coeff;
};

LeadTerm leading_term(const Polynomial &p, const MonomialOrder &order) {
    auto it = p.terms().begin();
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial monic(const Polynomial &p, const MonomialOrder &order) {
    if (p.is_zero()) return p;
    Rational lc = leading_term(p, order).coeff;
    return p * (Rational(1) / lc);
}

bool coprime(const Monomial &a, const Monomial &b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] && b.exps[i]) return false;
    return true;
}

} // namespace

Polynomial reduce_by(const Polynomial &p, const std::vector<Polynomial> &divisors,
                     const MonomialOrder &order) {
    std::vector<LeadTerm> lts;
    lts.reserve(divisors.size());
    for (const auto &d : divisors) lts.push_back(leading_term(d, order));

    Polynomial rem(p.context());
    Polynomial work = p;
    while (!work.is_zero()) {
        LeadTerm lt = leading_term(work, order);
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!lts[i].mono.divides(lt.mono)) continue;
            Monomial q = lt.mono / lts[i].mono;
            Rational c = lt.coeff / lts[i].coeff;
            work -= Polynomial::monomial(work.context(), q, c) * divisors[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lt.mono, lt.coeff);
            work.add_term(lt.mono, -lt.coeff);
        }
    }
    return rem;
}

Polynomial normal_form(const Polynomial &p, const GroebnerBasis &gb) {
    require_same_context(p.context(), gb.ctx);
    if (gb.basis.empty()) return p;
    return reduce_by(p, gb.basis, gb.order);
}

GroebnerBasis buchberger(const std::vector<Polynomial> &gens, const MonomialOrder &order,
                         const GroebnerLimits &limits) {
    ContextPtr ctx;
    std::vector<Polynomial> basis;
    for (const auto &g : gens) {
        if (!ctx)
            ctx = g.context();
        else
            require_same_context(ctx, g.context());
        if (!g.is_zero()) basis.push_back(monic(g, order));
    }
    if (!ctx) throw Error("buchberger: empty generator list with no context");
    GroebnerBasis result{order, {}, ctx};
    if (basis.empty()) return result;

    std::vector<Monomial> lead;
    for (const auto &b : basis) lead.push_back(leading_term(b, order).mono);

    // Pair queue ordered by the normal strategy: lcm degree first, then
    // indices for determinism.
    struct Pair {
        int deg;
        std::size_t i, j;
        bool operator<(const Pair &o) const {
            if (deg != o.deg) return deg < o.deg;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<Pair> pairs;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pairs.insert(Pair{lcm(lead[i], lead[j]).degree(), i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > limits.max_pairs)
            throw GroebnerLimitError("buchberger: pair limit exceeded (" +
                                     std::to_string(limits.max_pairs) + ")");
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto &fi = basis[pr.i];
        const auto &fj = basis[pr.j];
        const Monomial &li = lead[pr.i];
        const Monomial &lj = lead[pr.j];

        // Buchberger's first criterion.
        if (coprime(li, lj)) continue;
        Monomial l = lcm(li, lj);
        // Second (chain) criterion: some k with lead[k] | lcm and both
        // (i,k), (j,k) already handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lead[k].divides(l)) continue;
            auto a = std::minmax(pr.i, k);
            auto b = std::minmax(pr.j, k);
            bool pending_a = pairs.count(Pair{lcm(lead[a.first], lead[a.second]).degree(),
                                              a.first, a.second}) != 0;
            bool pending_b = pairs.count(Pair{lcm(lead[b.first], lead[b.second]).degree(),
                                              b.first, b.second}) != 0;
            if (!pending_a && !pending_b) chained = true;
        }
        if (chained) continue;

        Polynomial spoly = Polynomial::monomial(ctx, l / li, Rational(1)) * fi -
                           Polynomial::monomial(ctx, l / lj, Rational(1)) * fj;
        Polynomial r = reduce_by(spoly, basis, order);
        if (r.is_zero()) continue;
        basis.push_back(monic(r, order));
        lead.push_back(leading_term(basis.back(), order).mono);
        if (basis.size() > limits.max_basis)
            throw GroebnerLimitError("buchberger: basis size limit exceeded (" +
                                     std::to_string(limits.max_basis) + ")");
        push_pairs_for(basis.size() - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<Polynomial> minimal;
    std::vector<Monomial> minlead;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lead[j].divides(lead[i])) {
                // Break ties (equal leads) by keeping the earlier one.
                if (lead[i].divides(lead[j]) && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) {
            minimal.push_back(basis[i]);
            minlead.push_back(lead[i]);
        }
    }

    // Inter-reduce to the reduced basis.
    std::vector<Polynomial> reduced(minimal.size(), Polynomial(ctx));
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced[i] = others.empty() ? minimal[i] : monic(reduce_by(minimal[i], others, order), order);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial &a, const Polynomial &b) {
        return order.greater(leading_term(a, order).mono, leading_term(b, order).mono);
    });
    result.basis = std::move(reduced);
    return result;
}

bool ideal_equal(const std::vector<Polynomial> &a, const std::vector<Polynomial> &b,
                 const MonomialOrder &order, const GroebnerLimits &limits) {
    GroebnerBasis ga = buchberger(a, order, limits);
    GroebnerBasis gb = buchberger(b, order, limits);
    if (ga.basis.size() != gb.basis.size()) return false;
    for (std::size_t i = 0; i < ga.basis.size(); ++i)
        if (!(ga.basis[i] == gb.basis[i])) return false;
    return true;
}

namespace {

Polynomial det_recursive(const std::vector<std::vector<const Polynomial *>> &m,
                         const ContextPtr &ctx) {
    std::size_t n = m.size();
    if (n == 1) return *m[0][0];
    Polynomial d(ctx);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j]->is_zero()) continue;
        std::vector<std::vector<const Polynomial *>> sub;
        sub.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<const Polynomial *> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Polynomial cof = *m[0][j] * det_recursive(sub, ctx);
        if (j % 2)
            d -= cof;
        else
            d += cof;
    }
    return d;
}

void enumerate_subsets(std::size_t n, std::size_t k,
                       const std::function<void(const std::vector<std::size_t> &)> &fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

} // namespace

bool is_smooth(const Presentation &v, std::optional<std::size_t> codim,
               const GroebnerLimits &limits) {
    std::size_t c = codim.value_or(v.generators.size());
    if (c == 0 || v.generators.empty()) return true; // affine space
    if (c > v.generators.size() || c > v.ctx->size())
        throw Error("is_smooth: codimension exceeds matrix size");

    auto jac = jacobian(v);
    std::vector<Polynomial> gens = v.generators;
    enumerate_subsets(v.generators.size(), c, [&](const std::vector<std::size_t> &rows) {
        enumerate_subsets(v.ctx->size(), c, [&](const std::vector<std::size_t> &cols) {
            std::vector<std::vector<const Polynomial *>> m(c, std::vector<const Polynomial *>(c));
            for (std::size_t i = 0; i < c; ++i)
                for (std::size_t j = 0; j < c; ++j) m[i][j] = &jac[rows[i]][cols[j]];
            Polynomial minor = det_recursive(m, v.ctx);
            if (!minor.is_zero()) gens.push_back(std::move(minor));
        });
    });

    GroebnerBasis gb = buchberger(gens, MonomialOrder::grevlex(v.ctx), limits);
    return gb.is_unit_ideal();
}

} // namespace jetcert
