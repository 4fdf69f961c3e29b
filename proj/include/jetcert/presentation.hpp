#ifndef JETCERT_PRESENTATION_HPP
#define JETCERT_PRESENTATION_HPP

#include "jetcert/polynomial.hpp"

#include <string>
#include <vector>

namespace jetcert {

// A finitely presented ring: ambient polynomial ring given by a variable
// context plus a list of ideal generators. Affine varieties are the case
// where every variable is plain.
struct Presentation {
    std::string name;
    ContextPtr ctx;
    std::vector<Polynomial> generators;

    std::size_t num_vars() const { return ctx->size(); }

    void validate() const {
        for (const auto &g : generators) {
            require_same_context(ctx, g.context());
            if (g.is_zero()) throw Error("presentation '" + name + "' has a zero generator");
        }
    }
};

using VarietyPresentation = Presentation;

// Same ideal generators, r new unconstrained variables named
// prefix1..prefixr appended to the context.
Presentation product_with_affine_space(const Presentation &p, std::size_t r,
                                       const std::string &prefix);

// The Jacobian matrix row a, column i holds d(gen_a)/d(var_i).
std::vector<std::vector<Polynomial>> jacobian(const Presentation &p);

} // namespace jetcert

#endif
