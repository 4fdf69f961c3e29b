#ifndef JETCERT_GROEBNER_HPP
#define JETCERT_GROEBNER_HPP

#include "jetcert/order.hpp"
#include "jetcert/polynomial.hpp"
#include "jetcert/presentation.hpp"

#include <optional>
#include <vector>

namespace jetcert {

// Buchberger worst cases are doubly exponential; these caps turn runaway
// computations into a diagnostic instead.
struct GroebnerLimits {
    std::size_t max_pairs = 200000;
    std::size_t max_basis = 2000;
};

class GroebnerLimitError : public Error {
public:
    explicit GroebnerLimitError(const std::string &msg) : Error(msg) {}
};

// Reduced Groebner basis: monic elements, no term of any element divisible
// by the leading term of another, sorted by descending leading monomial.
// Unique for a fixed ideal and order.
struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Polynomial> basis;
    ContextPtr ctx;

    bool is_zero_ideal() const { return basis.empty(); }
    bool is_unit_ideal() const {
        return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
    }
};

GroebnerBasis buchberger(const std::vector<Polynomial> &gens, const MonomialOrder &order,
                         const GroebnerLimits &limits = {});

// Unique remainder of p modulo the basis: no term of the result is
// divisible by any leading term. Linear in p for a fixed basis;
// normal_form(p) == 0 iff p lies in the ideal.
Polynomial normal_form(const Polynomial &p, const GroebnerBasis &gb);

// Remainder on division by an arbitrary (not necessarily Groebner) list.
Polynomial reduce_by(const Polynomial &p, const std::vector<Polynomial> &divisors,
                     const MonomialOrder &order);

bool ideal_equal(const std::vector<Polynomial> &a, const std::vector<Polynomial> &b,
                 const MonomialOrder &order, const GroebnerLimits &limits = {});

// Jacobian criterion: smooth iff the generators together with all
// codim x codim minors of the Jacobian generate the unit ideal. The
// expected codimension defaults to the number of generators.
bool is_smooth(const Presentation &v, std::optional<std::size_t> codim = std::nullopt,
               const GroebnerLimits &limits = {});

} // namespace jetcert

#endif
