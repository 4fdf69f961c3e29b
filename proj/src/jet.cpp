#include "jetcert/jet.hpp"

namespace jetcert {

namespace {

Variable fresh_plain(const ContextPtr &ctx, std::string name) {
    Variable v(std::move(name));
    while (ctx->contains(v)) v.name += "_";
    return v;
}

// Split a polynomial over ctx+t by the exponent of t, dropping exponents
// above m and stripping t from the kept parts (re-expressed over ctx).
std::vector<Polynomial> collect_by_symbol(const Polynomial &p, const ContextPtr &ext,
                                          const Variable &t, const ContextPtr &ctx, int m) {
    std::size_t ti = ext->index_of(t);
    std::vector<Polynomial> out((std::size_t)m + 1, Polynomial(ext));
    for (const auto &[mono, c] : p.terms()) {
        int e = mono.exps[ti];
        if (e > m) continue;
        Monomial stripped = mono;
        stripped.exps[ti] = 0;
        out[(std::size_t)e].add_term(stripped, c);
    }
    std::vector<Polynomial> res;
    res.reserve(out.size());
    for (auto &q : out) res.push_back(q.in_context(ctx));
    return res;
}

} // namespace

ContextPtr jet_context(const Presentation &base, int m) {
    std::vector<Variable> vars;
    vars.reserve(base.ctx->size() * (std::size_t)(m + 1));
    for (int j = m; j >= 0; --j)
        for (std::size_t i = 0; i < base.ctx->size(); ++i)
            vars.emplace_back(base.ctx->var(i).name, j);
    return make_context(std::move(vars));
}

JetPresentation jet_equations(const Presentation &variety, int m) {
    if (m < 0) throw Error("jet_equations: level must be non-negative (finite truncations only)");
    variety.validate();

    JetPresentation jp;
    jp.base = variety;
    jp.level = m;
    ContextPtr jctx = jet_context(variety, m);

    // Substitute x_i -> sum_j x_i#j t^j in the ring extended by t, then read
    // off the coefficient of each t^k.
    Variable t = fresh_plain(jctx, "t");
    ContextPtr ext = extend_context(jctx, {t});
    Polynomial tpoly = Polynomial::variable(ext, t);

    std::vector<std::pair<Variable, Polynomial>> series;
    for (std::size_t i = 0; i < variety.ctx->size(); ++i) {
        Polynomial s(ext);
        Polynomial tpow = Polynomial::constant(ext, 1);
        for (int j = 0; j <= m; ++j) {
            s += Polynomial::variable(ext, Variable(variety.ctx->var(i).name, j)) * tpow;
            tpow = tpow * tpoly;
        }
        series.emplace_back(variety.ctx->var(i), std::move(s));
    }

    jp.strata.reserve(variety.generators.size());
    for (const auto &f : variety.generators)
        jp.strata.push_back(collect_by_symbol(f.substitute(series), ext, t, jctx, m));

    jp.pres.name = variety.name + ".jets" + std::to_string(m);
    jp.pres.ctx = jctx;
    for (const auto &row : jp.strata)
        for (const auto &F : row) jp.pres.generators.push_back(F);
    return jp;
}

std::vector<Rational> evaluate_on_jet(const JetPresentation &jp,
                                      const TruncatedSeriesPoint &gamma) {
    std::size_t n = jp.base.ctx->size();
    if (gamma.coeffs.size() != n)
        throw Error("evaluate_on_jet: expected " + std::to_string(n) + " coefficient rows");
    for (const auto &row : gamma.coeffs)
        if ((int)row.size() != jp.level + 1)
            throw Error("evaluate_on_jet: each row needs exactly " +
                        std::to_string(jp.level + 1) + " coefficients");

    std::vector<Rational> point(jp.pres.ctx->size(), Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j <= jp.level; ++j)
            point[jp.pres.ctx->index_of(jp.jet_var(i, j))] = gamma.coeffs[i][(std::size_t)j];

    std::vector<Rational> values;
    for (const auto &row : jp.strata)
        for (const auto &F : row) values.push_back(F.evaluate(point));
    return values;
}

Report check_grading(const JetPresentation &jp) {
    Report rep;
    for (std::size_t a = 0; a < jp.strata.size(); ++a)
        for (int k = 0; k <= jp.level; ++k) {
            const Polynomial &F = jp.stratum(a, k);
            bool homog = F.is_weight_homogeneous(k);
            std::string witness;
            if (!homog) {
                for (const auto &[mono, c] : F.terms())
                    if (mono.weight(*jp.pres.ctx) != k) {
                        witness = "term of weight " + std::to_string(mono.weight(*jp.pres.ctx)) +
                                  " in " + Polynomial::monomial(jp.pres.ctx, mono, c).str();
                        break;
                    }
            }
            rep.check("F[" + std::to_string(a) + "][" + std::to_string(k) +
                          "] weight-homogeneous of weight " + std::to_string(k),
                      homog, witness);

            bool stratified = true;
            for (const auto &v : F.variables())
                if (v.level > k) stratified = false;
            rep.check("F[" + std::to_string(a) + "][" + std::to_string(k) +
                          "] uses levels <= " + std::to_string(k),
                      stratified);
        }

    // Scaling identity with a fresh symbol s: level-j variables scale by s^j.
    Variable s("s");
    while (jp.pres.ctx->contains(s)) s.name += "_";
    ContextPtr ext = extend_context(jp.pres.ctx, {s});
    Polynomial spoly = Polynomial::variable(ext, s);
    std::vector<std::pair<Variable, Polynomial>> scale;
    for (const auto &v : jp.pres.ctx->vars())
        scale.emplace_back(v, Polynomial::variable(ext, v) * spoly.pow((unsigned)v.weight()));
    for (std::size_t a = 0; a < jp.strata.size(); ++a)
        for (int k = 0; k <= jp.level; ++k) {
            const Polynomial &F = jp.stratum(a, k);
            Polynomial lhs = F.substitute(scale);
            Polynomial rhs = F.in_context(ext) * spoly.pow((unsigned)k);
            rep.check("F[" + std::to_string(a) + "][" + std::to_string(k) + "](s.gamma) == s^" +
                          std::to_string(k) + " F(gamma)",
                      lhs == rhs);
        }
    return rep;
}

RingMap truncation_map(const JetPresentation &jm, int m_lower) {
    if (m_lower > jm.level)
        throw Error("truncation_map: target level exceeds source level");
    if (m_lower < 0) throw Error("truncation_map: negative level");

    JetPresentation jl = jet_equations(jm.base, m_lower);
    RingMap map{jl.pres, jm.pres, {}};
    for (const auto &v : jl.pres.ctx->vars())
        map.images.push_back(Polynomial::variable(jm.pres.ctx, v));

    // Strata up to the lower level are literally shared.
    for (std::size_t a = 0; a < jl.strata.size(); ++a)
        for (int k = 0; k <= m_lower; ++k)
            if (!(jl.stratum(a, k).in_context(jm.pres.ctx) == jm.stratum(a, k)))
                throw Error("truncation_map: stratum F[" + std::to_string(a) + "][" +
                            std::to_string(k) + "] not shared between levels");
    return map;
}

RingMap zero_section(const JetPresentation &jp) {
    RingMap map{jp.pres, jp.base, {}};
    for (const auto &v : jp.pres.ctx->vars()) {
        if (v.level == 0)
            map.images.push_back(Polynomial::variable(jp.base.ctx, Variable(v.name)));
        else
            map.images.push_back(Polynomial::zero(jp.base.ctx));
    }
    return map;
}

Polynomial jacobian_pairing(const JetPresentation &jp, std::size_t gen_index) {
    // sum_i df_a/dx_i(x#0) * x_i#m  over the full jet context.
    std::vector<std::pair<Variable, Polynomial>> to_level0;
    for (std::size_t i = 0; i < jp.base.ctx->size(); ++i)
        to_level0.emplace_back(jp.base.ctx->var(i),
                               Polynomial::variable(jp.pres.ctx, jp.jet_var(i, 0)));
    Polynomial acc(jp.pres.ctx);
    for (std::size_t i = 0; i < jp.base.ctx->size(); ++i) {
        Polynomial d = jp.base.generators[gen_index].derivative(jp.base.ctx->var(i));
        acc += d.substitute(to_level0) *
               Polynomial::variable(jp.pres.ctx, jp.jet_var(i, jp.level));
    }
    return acc;
}

FiberResult fiber_over_zero_section(const Presentation &variety, int m) {
    if (m < 1) throw Error("fiber_over_zero_section: level must be at least 1");
    JetPresentation jp = jet_equations(variety, m);

    // Fiber context: levels 0 and m only.
    std::vector<Variable> fvars;
    for (std::size_t i = 0; i < variety.ctx->size(); ++i)
        fvars.push_back(jp.jet_var(i, m));
    for (std::size_t i = 0; i < variety.ctx->size(); ++i)
        fvars.push_back(jp.jet_var(i, 0));
    ContextPtr fctx = make_context(std::move(fvars));

    std::vector<std::pair<Variable, Polynomial>> kill_mid;
    for (const auto &v : jp.pres.ctx->vars()) {
        if (v.level >= 1 && v.level <= m - 1)
            kill_mid.emplace_back(v, Polynomial::zero(fctx));
        else
            kill_mid.emplace_back(v, Polynomial::variable(fctx, v));
    }

    FiberResult res;
    res.fiber.name = variety.name + ".fiber" + std::to_string(m);
    res.fiber.ctx = fctx;

    for (std::size_t a = 0; a < jp.strata.size(); ++a) {
        for (int k = 0; k <= m; ++k) {
            Polynomial img = jp.stratum(a, k).substitute(kill_mid);
            if (k == 0) {
                res.fiber.generators.push_back(img);
            } else if (k < m) {
                res.checks.check("F[" + std::to_string(a) + "][" + std::to_string(k) +
                                     "] vanishes on the fiber",
                                 img.is_zero(), img.is_zero() ? "" : img.str());
            } else {
                Polynomial pairing =
                    jacobian_pairing(jp, a).substitute(kill_mid);
                res.checks.check("F[" + std::to_string(a) + "][" + std::to_string(m) +
                                     "] reduces to the Jacobian pairing",
                                 img == pairing,
                                 img == pairing ? "" : (img - pairing).str());
                if (!img.is_zero()) res.fiber.generators.push_back(img);
            }
        }
    }
    return res;
}

RingMap induce_jet_map(const RingMap &base_map, int m) {
    JetPresentation src = jet_equations(base_map.source, m);
    JetPresentation tgt = jet_equations(base_map.target, m);

    // Evaluate each image polynomial on the truncated series of the target
    // jet variables and read off coefficients.
    Variable t("t");
    while (tgt.pres.ctx->contains(t)) t.name += "_";
    ContextPtr ext = extend_context(tgt.pres.ctx, {t});
    Polynomial tpoly = Polynomial::variable(ext, t);

    std::vector<std::pair<Variable, Polynomial>> series;
    for (std::size_t i = 0; i < base_map.target.ctx->size(); ++i) {
        Polynomial s(ext);
        Polynomial tpow = Polynomial::constant(ext, 1);
        for (int j = 0; j <= m; ++j) {
            s += Polynomial::variable(ext, tgt.jet_var(i, j)) * tpow;
            tpow = tpow * tpoly;
        }
        series.emplace_back(base_map.target.ctx->var(i), std::move(s));
    }

    RingMap jet_map{src.pres, tgt.pres, std::vector<Polynomial>(src.pres.ctx->size(),
                                                                Polynomial(tgt.pres.ctx))};
    std::size_t ti = ext->index_of(t);
    for (std::size_t i = 0; i < base_map.source.ctx->size(); ++i) {
        Polynomial expanded = base_map.images[i].substitute(series);
        std::vector<Polynomial> by_level((std::size_t)m + 1, Polynomial(ext));
        for (const auto &[mono, c] : expanded.terms()) {
            int e = mono.exps[ti];
            if (e > m) continue;
            Monomial stripped = mono;
            stripped.exps[ti] = 0;
            by_level[(std::size_t)e].add_term(stripped, c);
        }
        for (int j = 0; j <= m; ++j) {
            std::size_t idx = src.pres.ctx->index_of(src.jet_var(i, j));
            jet_map.images[idx] = by_level[(std::size_t)j].in_context(tgt.pres.ctx);
        }
    }
    return jet_map;
}

} // namespace jetcert
