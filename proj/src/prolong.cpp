#include "jetcert/prolong.hpp"

#include "jetcert/linalg.hpp"

#include <functional>
#include <map>

namespace jetcert {

namespace {

std::vector<Polynomial> gens_or_zero(const Presentation &p) {
    if (!p.generators.empty()) return p.generators;
    return {Polynomial::zero(p.ctx)};
}

// Base-variable -> level-0 jet variable substitution targets.
std::vector<std::pair<Variable, Polynomial>> to_level0(const Presentation &base,
                                                       const ContextPtr &jctx) {
    std::vector<std::pair<Variable, Polynomial>> s;
    for (std::size_t i = 0; i < base.ctx->size(); ++i)
        s.emplace_back(base.ctx->var(i),
                       Polynomial::variable(jctx, Variable(base.ctx->var(i).name, 0)));
    return s;
}

// Monomials over ctx of total degree <= d using only the given variable
// indices; deterministic, low degree first.
std::vector<Monomial> bounded_monomials(const ContextPtr &ctx,
                                        const std::vector<std::size_t> &idx, int d) {
    std::vector<Monomial> out;
    Monomial cur(ctx->size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
        if (pos == idx.size()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur.exps[idx[pos]] = e;
            rec(pos + 1, rem - e);
            cur.exps[idx[pos]] = 0;
        }
    };
    rec(0, d);
    std::stable_sort(out.begin(), out.end(),
                     [](const Monomial &a, const Monomial &b) { return a.degree() < b.degree(); });
    return out;
}

// Monomials of exact jet weight w in the variables of levels 1..maxlevel.
std::vector<Monomial> weight_monomials(const ContextPtr &ctx, int w, int maxlevel) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        int lvl = ctx->var(i).level;
        if (lvl >= 1 && lvl <= maxlevel) idx.push_back(i);
    }
    std::vector<Monomial> out;
    Monomial cur(ctx->size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
        if (pos == idx.size()) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        int lvl = ctx->var(idx[pos]).level;
        for (int e = 0; e * lvl <= rem; ++e) {
            cur.exps[idx[pos]] = e;
            rec(pos + 1, rem - e * lvl);
            cur.exps[idx[pos]] = 0;
        }
    };
    rec(0, w);
    return out;
}

// Solve  sum_i jac0[a][i] * h_i + G_a == 0  (mod gb) for weight-m
// corrections h_i over the jet context; entries are weight-m monomials in
// levels 1..m-1 times base monomials of degree <= d.
std::optional<std::vector<Polynomial>> solve_corrections(
    const ContextPtr &jctx, const std::vector<std::vector<Polynomial>> &jac0,
    const std::vector<Polynomial> &G, const GroebnerBasis &gb, int m, int d) {
    std::size_t N = jac0.empty() ? 0 : jac0[0].size();
    std::vector<std::size_t> base_idx;
    for (std::size_t i = 0; i < jctx->size(); ++i)
        if (jctx->var(i).level == 0) base_idx.push_back(i);

    auto wmonos = weight_monomials(jctx, m, m - 1);
    auto bmonos = bounded_monomials(jctx, base_idx, d);
    std::size_t stride = wmonos.size() * bmonos.size();
    if (stride == 0) return std::nullopt;

    // Unknown (i, w, b) -> column i*stride + w*bmonos.size() + b.
    std::size_t cols = N * stride;
    std::map<std::pair<std::size_t, std::vector<int>>, std::map<std::size_t, Rational>> rows;
    std::map<std::pair<std::size_t, std::vector<int>>, Rational> rhs;

    for (std::size_t a = 0; a < G.size(); ++a) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t w = 0; w < wmonos.size(); ++w)
                for (std::size_t b = 0; b < bmonos.size(); ++b) {
                    Polynomial col = normal_form(
                        jac0[a][i] * Polynomial::monomial(jctx, wmonos[w] * bmonos[b],
                                                          Rational(1)),
                        gb);
                    std::size_t cidx = i * stride + w * bmonos.size() + b;
                    for (const auto &[mono, c] : col.terms())
                        rows[{a, mono.exps}][cidx] += c;
                }
        }
        Polynomial g = normal_form(G[a], gb);
        for (const auto &[mono, c] : g.terms()) rhs[{a, mono.exps}] -= c;
    }

    LinearSystem sys;
    sys.num_cols = cols;
    for (auto &[key, entries] : rows) {
        SparseRow row;
        for (auto &[c, v] : entries)
            if (v != 0) row.emplace_back(c, v);
        Rational b(0);
        if (auto it = rhs.find(key); it != rhs.end()) {
            b = -it->second;
            rhs.erase(it);
        }
        if (!row.empty() || b != 0) sys.add_row(std::move(row), std::move(b));
    }
    for (auto &[key, b] : rhs)
        if (b != 0) sys.add_row({}, -b);

    auto sol = solve_linear(std::move(sys));
    if (!sol) return std::nullopt;

    std::vector<Polynomial> h(N, Polynomial(jctx));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t w = 0; w < wmonos.size(); ++w)
            for (std::size_t b = 0; b < bmonos.size(); ++b)
                h[i].add_term(wmonos[w] * bmonos[b],
                              (*sol)[i * stride + w * bmonos.size() + b]);
    return h;
}

} // namespace

std::vector<Variable> prolongation_thetas(std::size_t n, int j) {
    std::vector<Variable> vs;
    for (std::size_t k = 1; k <= n; ++k)
        vs.emplace_back("th" + std::to_string(j) + "_" + std::to_string(k));
    return vs;
}

IsoCertificate build_prolongation_iso(const Presentation &variety, const CotangentFrame &frame,
                                      int m, const ProlongationOptions &opts) {
    if (m < 1) throw Error("build_prolongation_iso: level must be at least 1");
    std::size_t n = frame.rank();
    std::size_t N = variety.ctx->size();

    JetPresentation jm = jet_equations(variety, m);
    JetPresentation jprev = jet_equations(variety, m - 1);

    Presentation src = product_with_affine_space(jprev.pres, n,
                                                 "th" + std::to_string(m) + "_");
    src.name = jprev.pres.name + "xA" + std::to_string(n);

    auto lift = to_level0(variety, jm.pres.ctx);
    auto lift_prev = to_level0(variety, src.ctx);

    // forward: lower jet variables map to themselves, thetas to the frame
    // pairing in the level-m variables.
    RingMap fwd{src, jm.pres, {}};
    for (const auto &v : jprev.pres.ctx->vars())
        fwd.images.push_back(Polynomial::variable(jm.pres.ctx, v));
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial img(jm.pres.ctx);
        for (std::size_t i = 0; i < N; ++i)
            img += frame.A[k][i].substitute(lift) *
                   Polynomial::variable(jm.pres.ctx, jm.jet_var(i, m));
        fwd.images.push_back(std::move(img));
    }

    // Non-top parts of the level-m strata, over the previous-level ring.
    std::vector<Polynomial> G;
    for (std::size_t a = 0; a < variety.generators.size(); ++a)
        G.push_back((jm.stratum(a, m) - jacobian_pairing(jm, a)).in_context(src.ctx));

    std::vector<std::vector<Polynomial>> jac0(variety.generators.size());
    {
        auto jac = jacobian(variety);
        for (std::size_t a = 0; a < jac.size(); ++a)
            for (std::size_t i = 0; i < N; ++i)
                jac0[a].push_back(jac[a][i].substitute(lift_prev));
    }

    GroebnerBasis gb_prev =
        buchberger(gens_or_zero(src), MonomialOrder::grevlex(src.ctx), opts.limits);

    auto corrections_ok = [&](const std::vector<Polynomial> &h) {
        for (std::size_t a = 0; a < G.size(); ++a) {
            Polynomial acc = G[a];
            for (std::size_t i = 0; i < N; ++i) acc += jac0[a][i] * h[i];
            if (!normal_form(acc, gb_prev).is_zero()) return false;
        }
        return true;
    };

    // Candidates: zero (always right for m == 1), then the closed form
    // h_i = sum_a C[i][a](x#0) G_a that the frame data suggests, then the
    // bounded-degree linear solve.
    std::vector<Polynomial> h(N, Polynomial(src.ctx));
    bool solved = corrections_ok(h);
    if (!solved && !variety.generators.empty()) {
        std::vector<Polynomial> cand(N, Polynomial(src.ctx));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t a = 0; a < variety.generators.size(); ++a)
                cand[i] += frame.C[i][a].substitute(lift_prev) * G[a];
        if (corrections_ok(cand)) {
            h = std::move(cand);
            solved = true;
        }
    }
    if (!solved) {
        for (int d = opts.correction_degree_bound; d <= opts.correction_degree_bound + 1 && !solved;
             ++d) {
            auto sol = solve_corrections(src.ctx, jac0, G, gb_prev, m, d);
            if (sol && corrections_ok(*sol)) {
                h = std::move(*sol);
                solved = true;
            }
        }
    }
    if (!solved)
        throw CorrectionSolveError(
            "build_prolongation_iso: no correction terms within degree bound " +
            std::to_string(opts.correction_degree_bound + 1));

    // backward: lower jet variables to themselves, level-m variables to the
    // frame expansion plus corrections.
    RingMap bwd{jm.pres, src, {}};
    for (const auto &v : jm.pres.ctx->vars()) {
        if (v.level < m) {
            bwd.images.push_back(Polynomial::variable(src.ctx, v));
            continue;
        }
        std::size_t i = variety.ctx->index_of(Variable(v.name));
        Polynomial img = h[i];
        for (std::size_t k = 0; k < n; ++k)
            img += frame.B[i][k].substitute(lift_prev) *
                   Polynomial::variable(src.ctx, jprev.pres.ctx->size() + k);
        bwd.images.push_back(std::move(img));
    }

    IsoCertificate cert = verify_iso(fwd, bwd, opts.limits);
    if (!cert.verified())
        throw Error("build_prolongation_iso: certificate failed verification; first failure: " +
                    cert.transcript.first_failure()->name);
    return cert;
}

namespace {

// Extend a ring map by identity on extra unconstrained variables appended
// to both sides.
RingMap extend_map(const RingMap &f, const std::vector<Variable> &extra) {
    Presentation src = f.source;
    src.ctx = extend_context(f.source.ctx, extra);
    std::vector<Polynomial> sgens;
    for (const auto &g : f.source.generators) sgens.push_back(g.in_context(src.ctx));
    src.generators = std::move(sgens);

    Presentation tgt = f.target;
    tgt.ctx = extend_context(f.target.ctx, extra);
    std::vector<Polynomial> tgens;
    for (const auto &g : f.target.generators) tgens.push_back(g.in_context(tgt.ctx));
    tgt.generators = std::move(tgens);

    RingMap out{std::move(src), std::move(tgt), {}};
    for (const auto &img : f.images) out.images.push_back(img.in_context(out.target.ctx));
    for (const auto &v : extra) out.images.push_back(Polynomial::variable(out.target.ctx, v));
    return out;
}

} // namespace

IsoCertificate trivialize_jets(const Presentation &variety, const CotangentFrame &frame, int m,
                               const ProlongationOptions &opts) {
    if (m < 1) throw Error("trivialize_jets: level must be at least 1");
    std::size_t n = frame.rank();
    std::size_t N = variety.ctx->size();

    std::vector<IsoCertificate> levels;
    for (int j = 1; j <= m; ++j)
        levels.push_back(build_prolongation_iso(variety, frame, j, opts));

    JetPresentation jm = jet_equations(variety, m);

    // Final flat presentation: base variables then thetas by level.
    std::vector<Variable> thetas;
    for (int j = 1; j <= m; ++j)
        for (const auto &v : prolongation_thetas(n, j)) thetas.push_back(v);
    Presentation flat;
    flat.name = variety.name + "xA" + std::to_string(n * (std::size_t)m);
    flat.ctx = extend_context(variety.ctx, thetas);
    for (const auto &g : variety.generators) flat.generators.push_back(g.in_context(flat.ctx));

    // forward: base variables to level 0, each theta to its frame pairing.
    auto lift = to_level0(variety, jm.pres.ctx);
    RingMap fwd{flat, jm.pres, {}};
    for (std::size_t i = 0; i < N; ++i)
        fwd.images.push_back(Polynomial::variable(jm.pres.ctx, jm.jet_var(i, 0)));
    for (int j = 1; j <= m; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial img(jm.pres.ctx);
            for (std::size_t i = 0; i < N; ++i)
                img += frame.A[k][i].substitute(lift) *
                       Polynomial::variable(jm.pres.ctx, jm.jet_var(i, j));
            fwd.images.push_back(std::move(img));
        }

    // backward: chain the per-level backward maps, extending each by the
    // thetas already introduced above it (ascending level, matching the
    // order in which products append them).
    RingMap chain = levels[(std::size_t)m - 1].backward;
    for (int j = m - 1; j >= 1; --j) {
        std::vector<Variable> carried;
        for (int lv = j + 1; lv <= m; ++lv)
            for (const auto &v : prolongation_thetas(n, lv)) carried.push_back(v);
        RingMap step = extend_map(levels[(std::size_t)j - 1].backward, carried);
        chain = compose(chain, step);
    }

    // Relabel the remaining level-0 variables to the plain base variables.
    RingMap relabel{chain.target, flat, {}};
    for (const auto &v : chain.target.ctx->vars()) {
        if (v.level == 0)
            relabel.images.push_back(Polynomial::variable(flat.ctx, Variable(v.name)));
        else
            relabel.images.push_back(Polynomial::variable(flat.ctx, v));
    }
    RingMap bwd = compose(chain, relabel);
    bwd.source = jm.pres;
    bwd.target = flat;

    IsoCertificate cert = verify_iso(fwd, bwd, opts.limits);
    if (!cert.verified())
        throw Error("trivialize_jets: composite certificate failed verification; first failure: " +
                    cert.transcript.first_failure()->name);
    return cert;
}

} // namespace jetcert
