#ifndef JETCERT_POLYNOMIAL_HPP
#define JETCERT_POLYNOMIAL_HPP

#include "jetcert/monomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jetcert {

// Exact multivariate polynomial over the rationals in a fixed variable
// context. Canonical form is maintained by construction: no zero
// coefficients are ever stored, so equality is term-map equality.
// Terms iterate leading-first under the default grevlex order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGreater>;

    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, const Rational &c);
    static Polynomial variable(const ContextPtr &ctx, const Variable &v);
    static Polynomial variable(const ContextPtr &ctx, std::size_t index);
    static Polynomial monomial(ContextPtr ctx, Monomial m, const Rational &c);

    const ContextPtr &context() const { return ctx_; }
    const TermMap &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (0 if absent).
    Rational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    // Largest jet weight among terms; 0 for the zero polynomial.
    int weight() const;
    // True iff every term has jet weight w (vacuously true for 0).
    bool is_weight_homogeneous(int w) const;
    // Weight-w part.
    Polynomial weight_component(int w) const;

    bool depends_on(const Variable &v) const;
    std::vector<Variable> variables() const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
    Polynomial &operator*=(const Rational &c);
    friend Polynomial operator*(Polynomial p, const Rational &c) { return p *= c; }
    friend Polynomial operator*(const Rational &c, Polynomial p) { return p *= c; }
    Polynomial pow(unsigned int e) const;

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        require_same_context(a.ctx_, b.ctx_);
        return a.terms_ == b.terms_;
    }

    // Ring homomorphism determined by images of this polynomial's variables.
    // Every variable occurring here must have an image; all images must share
    // one target context.
    Polynomial substitute(const std::vector<std::pair<Variable, Polynomial>> &images) const;

    Polynomial derivative(const Variable &v) const;

    // Evaluation at a rational point given by context index.
    Rational evaluate(const std::vector<Rational> &point) const;

    // Re-express over another context containing all occurring variables.
    Polynomial in_context(const ContextPtr &target) const;

    std::string str() const;

    // Internal: add c * m keeping canonical form.
    void add_term(const Monomial &m, const Rational &c);

private:
    ContextPtr ctx_;
    TermMap terms_;
};

inline Polynomial operator+(Polynomial p, const Rational &c) {
    return p += Polynomial::constant(p.context(), c);
}
inline Polynomial operator-(Polynomial p, const Rational &c) {
    return p -= Polynomial::constant(p.context(), c);
}

} // namespace jetcert

#endif
