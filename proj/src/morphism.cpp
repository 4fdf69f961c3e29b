#include "jetcert/morphism.hpp"

#include <sstream>

namespace jetcert {

Polynomial RingMap::apply(const Polynomial &p) const {
    require_same_context(p.context(), source.ctx);
    std::vector<std::pair<Variable, Polynomial>> pairs;
    pairs.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        pairs.emplace_back(source.ctx->var(i), images[i]);
    return p.substitute(pairs);
}

RingMap identity_map(const Presentation &p) {
    RingMap m{p, p, {}};
    for (std::size_t i = 0; i < p.ctx->size(); ++i)
        m.images.push_back(Polynomial::variable(p.ctx, i));
    return m;
}

RingMap compose(const RingMap &f, const RingMap &g) {
    require_same_context(f.target.ctx, g.source.ctx);
    RingMap h{f.source, g.target, {}};
    h.images.reserve(f.images.size());
    for (const auto &img : f.images) h.images.push_back(g.apply(img));
    return h;
}

RingMap retarget(const RingMap &f, const Presentation &new_target,
                 const std::map<Variable, Variable> &renaming) {
    RingMap h{f.source, new_target, {}};
    h.images.reserve(f.images.size());
    std::vector<std::pair<Variable, Polynomial>> subst;
    for (std::size_t i = 0; i < f.target.ctx->size(); ++i) {
        const Variable &v = f.target.ctx->var(i);
        auto it = renaming.find(v);
        const Variable &w = it == renaming.end() ? v : it->second;
        subst.emplace_back(v, Polynomial::variable(new_target.ctx, w));
    }
    for (const auto &img : f.images) h.images.push_back(img.substitute(subst));
    return h;
}

Report verify_ring_map(const RingMap &phi, const GroebnerLimits &limits) {
    if (phi.images.size() != phi.source.ctx->size())
        throw Error("ring map has " + std::to_string(phi.images.size()) + " images for " +
                    std::to_string(phi.source.ctx->size()) + " variables");
    for (const auto &img : phi.images) require_same_context(img.context(), phi.target.ctx);

    Report rep;
    GroebnerBasis gb = buchberger(phi.target.generators.empty()
                                      ? std::vector<Polynomial>{Polynomial::zero(phi.target.ctx)}
                                      : phi.target.generators,
                                  MonomialOrder::grevlex(phi.target.ctx), limits);
    for (std::size_t a = 0; a < phi.source.generators.size(); ++a) {
        Polynomial nf = normal_form(phi.apply(phi.source.generators[a]), gb);
        rep.check("gen[" + std::to_string(a) + "] of " + phi.source.name + " maps into ideal",
                  nf.is_zero(), nf.is_zero() ? "" : "remainder " + nf.str());
    }
    return rep;
}

IsoCertificate verify_iso(const RingMap &forward, const RingMap &backward,
                          const GroebnerLimits &limits) {
    require_same_context(forward.source.ctx, backward.target.ctx);
    require_same_context(forward.target.ctx, backward.source.ctx);

    IsoCertificate cert{forward, backward, {}};
    cert.transcript.append_prefixed("forward: ", verify_ring_map(forward, limits));
    cert.transcript.append_prefixed("backward: ", verify_ring_map(backward, limits));

    auto src_gens = forward.source.generators;
    if (src_gens.empty()) src_gens.push_back(Polynomial::zero(forward.source.ctx));
    auto tgt_gens = forward.target.generators;
    if (tgt_gens.empty()) tgt_gens.push_back(Polynomial::zero(forward.target.ctx));
    GroebnerBasis gb_src = buchberger(src_gens, MonomialOrder::grevlex(forward.source.ctx), limits);
    GroebnerBasis gb_tgt = buchberger(tgt_gens, MonomialOrder::grevlex(forward.target.ctx), limits);

    for (std::size_t i = 0; i < forward.source.ctx->size(); ++i) {
        Polynomial roundtrip = backward.apply(forward.images[i]);
        Polynomial diff = roundtrip - Polynomial::variable(forward.source.ctx, i);
        Polynomial nf = normal_form(diff, gb_src);
        cert.transcript.check(
            "backward(forward(" + forward.source.ctx->var(i).str() + ")) == id mod source ideal",
            nf.is_zero(), nf.is_zero() ? "" : "remainder " + nf.str());
    }
    for (std::size_t i = 0; i < forward.target.ctx->size(); ++i) {
        Polynomial roundtrip = forward.apply(backward.images[i]);
        Polynomial diff = roundtrip - Polynomial::variable(forward.target.ctx, i);
        Polynomial nf = normal_form(diff, gb_tgt);
        cert.transcript.check(
            "forward(backward(" + forward.target.ctx->var(i).str() + ")) == id mod target ideal",
            nf.is_zero(), nf.is_zero() ? "" : "remainder " + nf.str());
    }
    return cert;
}

std::map<Variable, Variable> positional_renaming(const ContextPtr &from, const ContextPtr &to) {
    if (from->size() != to->size())
        throw Error("positional_renaming: context sizes differ");
    std::map<Variable, Variable> m;
    for (std::size_t i = 0; i < from->size(); ++i) m.emplace(from->var(i), to->var(i));
    return m;
}

IsoCertificate compose_certificates(const IsoCertificate &c1, const IsoCertificate &c2,
                                    const std::map<Variable, Variable> &renaming,
                                    const GroebnerLimits &limits) {
    // Middle presentations must agree up to the renaming.
    const Presentation &mid1 = c1.forward.target;
    const Presentation &mid2 = c2.forward.source;
    if (mid1.ctx->size() != mid2.ctx->size())
        throw Error("compose_certificates: middle contexts differ in size");
    std::vector<std::pair<Variable, Polynomial>> subst;
    for (std::size_t i = 0; i < mid1.ctx->size(); ++i) {
        const Variable &v = mid1.ctx->var(i);
        auto it = renaming.find(v);
        const Variable &w = it == renaming.end() ? v : it->second;
        if (!mid2.ctx->contains(w))
            throw Error("compose_certificates: renamed variable " + w.str() +
                        " missing from middle presentation");
        subst.emplace_back(v, Polynomial::variable(mid2.ctx, w));
    }
    {
        std::vector<Polynomial> renamed;
        for (const auto &g : mid1.generators) renamed.push_back(g.substitute(subst));
        if (!ideal_equal(renamed.empty() ? std::vector<Polynomial>{Polynomial::zero(mid2.ctx)}
                                         : renamed,
                         mid2.generators.empty()
                             ? std::vector<Polynomial>{Polynomial::zero(mid2.ctx)}
                             : mid2.generators,
                         MonomialOrder::grevlex(mid2.ctx), limits))
            throw Error("compose_certificates: middle presentations define different ideals");
    }

    RingMap fwd{c1.forward.source, c2.forward.target, {}};
    for (const auto &img : c1.forward.images)
        fwd.images.push_back(c2.forward.apply(img.substitute(subst)));

    std::map<Variable, Variable> inverse_renaming;
    for (std::size_t i = 0; i < mid1.ctx->size(); ++i) {
        const Variable &v = mid1.ctx->var(i);
        auto it = renaming.find(v);
        inverse_renaming.emplace(it == renaming.end() ? v : it->second, v);
    }
    std::vector<std::pair<Variable, Polynomial>> subst_back;
    for (std::size_t i = 0; i < mid2.ctx->size(); ++i) {
        const Variable &v = mid2.ctx->var(i);
        auto it = inverse_renaming.find(v);
        const Variable &w = it == inverse_renaming.end() ? v : it->second;
        subst_back.emplace_back(v, Polynomial::variable(mid1.ctx, w));
    }
    RingMap bwd{c2.backward.source, c1.backward.target, {}};
    for (const auto &img : c2.backward.images)
        bwd.images.push_back(c1.backward.apply(img.substitute(subst_back)));

    return verify_iso(fwd, bwd, limits);
}

IsoCertificate extend_certificate(const IsoCertificate &c, std::size_t r,
                                  const std::string &src_prefix, const std::string &tgt_prefix,
                                  const GroebnerLimits &limits) {
    Presentation src = product_with_affine_space(c.forward.source, r, src_prefix);
    Presentation tgt = product_with_affine_space(c.forward.target, r, tgt_prefix);

    RingMap fwd{src, tgt, {}};
    for (const auto &img : c.forward.images) fwd.images.push_back(img.in_context(tgt.ctx));
    for (std::size_t k = 0; k < r; ++k)
        fwd.images.push_back(
            Polynomial::variable(tgt.ctx, c.forward.target.ctx->size() + k));

    RingMap bwd{tgt, src, {}};
    for (const auto &img : c.backward.images) bwd.images.push_back(img.in_context(src.ctx));
    for (std::size_t k = 0; k < r; ++k)
        bwd.images.push_back(Polynomial::variable(src.ctx, c.forward.source.ctx->size() + k));

    return verify_iso(fwd, bwd, limits);
}

Report verify_additive_action(const Presentation &v, const RingMap &action,
                              const Variable &time_symbol, const GroebnerLimits &limits) {
    Report rep;
    const ContextPtr &ext = action.target.ctx; // base variables + time symbol
    if (!ext->contains(time_symbol))
        throw Error("verify_additive_action: target lacks the time symbol");

    // (1) ideal preservation.
    rep.append_prefixed("ideal preservation: ", verify_ring_map(action, limits));

    // Generators of the base ideal inside the extended ring, for reductions.
    std::vector<Polynomial> ext_gens;
    for (const auto &g : v.generators) ext_gens.push_back(g.in_context(ext));
    if (ext_gens.empty()) ext_gens.push_back(Polynomial::zero(ext));
    GroebnerBasis gb_ext = buchberger(ext_gens, MonomialOrder::grevlex(ext), limits);

    // (2) identity law at time 0.
    {
        std::vector<std::pair<Variable, Polynomial>> at_zero;
        for (std::size_t i = 0; i < ext->size(); ++i) {
            const Variable &w = ext->var(i);
            at_zero.emplace_back(w, w == time_symbol ? Polynomial::zero(ext)
                                                     : Polynomial::variable(ext, w));
        }
        for (std::size_t i = 0; i < v.ctx->size(); ++i) {
            Polynomial img0 = action.images[i].substitute(at_zero);
            Polynomial diff = img0 - Polynomial::variable(ext, v.ctx->var(i));
            Polynomial nf = normal_form(diff, gb_ext);
            rep.check("identity at " + time_symbol.str() + "=0 on " + v.ctx->var(i).str(),
                      nf.is_zero(), nf.is_zero() ? "" : "remainder " + nf.str());
        }
    }

    // (3) composition law in the ring extended by two symbols.
    {
        Variable s("act_s");
        while (ext->contains(s)) s.name += "_";
        ContextPtr ext2 = extend_context(ext, {s});

        std::vector<Polynomial> ext2_gens;
        for (const auto &g : v.generators) ext2_gens.push_back(g.in_context(ext2));
        if (ext2_gens.empty()) ext2_gens.push_back(Polynomial::zero(ext2));
        GroebnerBasis gb2 = buchberger(ext2_gens, MonomialOrder::grevlex(ext2), limits);

        // phi_s: x -> image with time := s.
        std::vector<std::pair<Variable, Polynomial>> to_s;
        for (std::size_t i = 0; i < ext->size(); ++i) {
            const Variable &w = ext->var(i);
            to_s.emplace_back(w, w == time_symbol ? Polynomial::variable(ext2, s)
                                                  : Polynomial::variable(ext2, w));
        }
        // phi_{s+t}: x -> image with time := s + t.
        std::vector<std::pair<Variable, Polynomial>> to_sum;
        for (std::size_t i = 0; i < ext->size(); ++i) {
            const Variable &w = ext->var(i);
            to_sum.emplace_back(w, w == time_symbol
                                       ? Polynomial::variable(ext2, s) +
                                             Polynomial::variable(ext2, time_symbol)
                                       : Polynomial::variable(ext2, w));
        }
        // Acting with s then t: substitute base variables of phi_s-images by
        // phi_t-images (time symbol stays itself).
        std::vector<std::pair<Variable, Polynomial>> act_t;
        for (std::size_t i = 0; i < ext2->size(); ++i) {
            const Variable &w = ext2->var(i);
            if (auto bi = v.ctx->find(w))
                act_t.emplace_back(w, action.images[*bi].in_context(ext2));
            else
                act_t.emplace_back(w, Polynomial::variable(ext2, w));
        }
        for (std::size_t i = 0; i < v.ctx->size(); ++i) {
            Polynomial after_s = action.images[i].substitute(to_s);
            Polynomial then_t = after_s.substitute(act_t);
            Polynomial direct = action.images[i].substitute(to_sum);
            Polynomial nf = normal_form(then_t - direct, gb2);
            rep.check("composition law on " + v.ctx->var(i).str(), nf.is_zero(),
                      nf.is_zero() ? "" : "remainder " + nf.str());
        }
    }
    return rep;
}

Presentation base_of_jet_presentation(const Presentation &jetpres) {
    std::vector<Variable> base_vars;
    for (const auto &v : jetpres.ctx->vars())
        if (v.level == 0) base_vars.emplace_back(v.name);
    if (base_vars.empty()) throw Error("presentation has no weight-0 jet variables");
    ContextPtr bctx = make_context(std::move(base_vars));

    std::vector<std::pair<Variable, Polynomial>> strip;
    for (const auto &v : jetpres.ctx->vars())
        if (v.level == 0) strip.emplace_back(v, Polynomial::variable(bctx, Variable(v.name)));

    Presentation base;
    base.name = jetpres.name + ".base";
    base.ctx = bctx;
    for (const auto &g : jetpres.generators)
        if (g.is_weight_homogeneous(0) && !g.is_zero()) base.generators.push_back(g.substitute(strip));
    return base;
}

DescentResult descend_equivariant_iso(const IsoCertificate &c, const GroebnerLimits &limits) {
    DescentResult res;

    auto check_side = [&](const RingMap &m) -> std::string {
        for (std::size_t i = 0; i < m.source.ctx->size(); ++i) {
            const Variable &v = m.source.ctx->var(i);
            if (!m.images[i].is_weight_homogeneous(v.weight()))
                return v.str();
        }
        return {};
    };
    std::string bad = check_side(c.forward);
    if (bad.empty()) bad = check_side(c.backward);
    if (!bad.empty()) {
        res.weight_preserving = false;
        res.offending_variable = bad;
        return res;
    }
    res.weight_preserving = true;

    Presentation src_base = base_of_jet_presentation(c.forward.source);
    Presentation tgt_base = base_of_jet_presentation(c.forward.target);

    auto restrict_map = [&](const RingMap &m, const Presentation &from,
                            const Presentation &to) -> RingMap {
        std::vector<std::pair<Variable, Polynomial>> strip;
        for (const auto &v : m.target.ctx->vars())
            if (v.level == 0)
                strip.emplace_back(v, Polynomial::variable(to.ctx, Variable(v.name)));
        RingMap r{from, to, {}};
        for (std::size_t i = 0; i < from.ctx->size(); ++i) {
            Variable jet_var(from.ctx->var(i).name, 0);
            // Weight-0 images only involve weight-0 variables.
            r.images.push_back(m.image_of(jet_var).substitute(strip));
        }
        return r;
    };

    RingMap fwd0 = restrict_map(c.forward, src_base, tgt_base);
    RingMap bwd0 = restrict_map(c.backward, tgt_base, src_base);
    res.base_certificate = verify_iso(fwd0, bwd0, limits);
    if (!res.base_certificate.verified())
        throw Error("descend_equivariant_iso: restricted maps failed verification "
                    "(internal error: precondition held)");
    return res;
}

} // namespace jetcert
