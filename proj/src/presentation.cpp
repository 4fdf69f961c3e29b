#include "jetcert/presentation.hpp"

namespace jetcert {

Presentation product_with_affine_space(const Presentation &p, std::size_t r,
                                       const std::string &prefix) {
    std::vector<Variable> extra;
    extra.reserve(r);
    for (std::size_t k = 1; k <= r; ++k) {
        Variable v(prefix + std::to_string(k));
        if (p.ctx->contains(v))
            throw Error("product_with_affine_space: name collision on " + v.str());
        extra.push_back(std::move(v));
    }
    ContextPtr ctx = extend_context(p.ctx, extra);
    Presentation out;
    out.name = r == 0 ? p.name : p.name + "xA" + std::to_string(r);
    out.ctx = ctx;
    for (const auto &g : p.generators) out.generators.push_back(g.in_context(ctx));
    return out;
}

std::vector<std::vector<Polynomial>> jacobian(const Presentation &p) {
    std::vector<std::vector<Polynomial>> rows;
    rows.reserve(p.generators.size());
    for (const auto &g : p.generators) {
        std::vector<Polynomial> row;
        row.reserve(p.ctx->size());
        for (std::size_t i = 0; i < p.ctx->size(); ++i)
            row.push_back(g.derivative(p.ctx->var(i)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace jetcert
