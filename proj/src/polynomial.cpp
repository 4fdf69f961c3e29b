#include "jetcert/polynomial.hpp"

#include <sstream>

namespace jetcert {

Polynomial Polynomial::constant(ContextPtr ctx, const Rational &c) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.emplace(Monomial(p.ctx_->size()), c);
    return p;
}

Polynomial Polynomial::variable(const ContextPtr &ctx, const Variable &v) {
    return variable(ctx, ctx->index_of(v));
}

Polynomial Polynomial::variable(const ContextPtr &ctx, std::size_t index) {
    Polynomial p(ctx);
    Monomial m(ctx->size());
    m.exps.at(index) = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const Rational &c) {
    Polynomial p(std::move(ctx));
    if (c != 0) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
    for (const auto &[m, c] : terms_)
        if (m.is_one()) return c;
    return Rational(0);
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto &[m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::weight() const {
    int w = 0;
    for (const auto &[m, c] : terms_) w = std::max(w, m.weight(*ctx_));
    return w;
}

bool Polynomial::is_weight_homogeneous(int w) const {
    for (const auto &[m, c] : terms_)
        if (m.weight(*ctx_) != w) return false;
    return true;
}

Polynomial Polynomial::weight_component(int w) const {
    Polynomial r(ctx_);
    for (const auto &[m, c] : terms_)
        if (m.weight(*ctx_) == w) r.terms_.emplace(m, c);
    return r;
}

bool Polynomial::depends_on(const Variable &v) const {
    auto i = ctx_->find(v);
    if (!i) return false;
    for (const auto &[m, c] : terms_)
        if (m.exps[*i] != 0) return true;
    return false;
}

std::vector<Variable> Polynomial::variables() const {
    std::vector<bool> used(ctx_->size(), false);
    for (const auto &[m, c] : terms_)
        for (std::size_t i = 0; i < used.size(); ++i)
            if (m.exps[i]) used[i] = true;
    std::vector<Variable> vs;
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) vs.push_back(ctx_->var(i));
    return vs;
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
    require_same_context(ctx_, o.ctx_);
    for (const auto &[m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
    require_same_context(ctx_, o.ctx_);
    for (const auto &[m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    require_same_context(a.ctx_, b.ctx_);
    Polynomial r(a.ctx_);
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial &Polynomial::operator*=(const Rational &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(unsigned int e) const {
    Polynomial r = Polynomial::constant(ctx_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

Polynomial Polynomial::substitute(
    const std::vector<std::pair<Variable, Polynomial>> &images) const {
    ContextPtr target;
    std::vector<const Polynomial *> image_by_index(ctx_->size(), nullptr);
    for (const auto &[v, img] : images) {
        if (!target)
            target = img.context();
        else
            require_same_context(target, img.context());
        if (auto i = ctx_->find(v)) image_by_index[*i] = &img;
    }
    if (!target) {
        if (!is_constant()) throw Error("substitute: no images supplied");
        target = ctx_;
    }

    // Power cache per variable, built incrementally.
    std::vector<std::vector<Polynomial>> powers(ctx_->size());
    auto power_of = [&](std::size_t i, int e) -> const Polynomial & {
        auto &cache = powers[i];
        if (cache.empty()) {
            if (!image_by_index[i])
                throw Error("substitute: missing image for variable " + ctx_->var(i).str());
            cache.push_back(Polynomial::constant(target, 1));
        }
        while ((int)cache.size() <= e) cache.push_back(cache.back() * (*image_by_index[i]));
        return cache[e];
    };

    Polynomial result(target);
    for (const auto &[m, c] : terms_) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            if (m.exps[i]) term = term * power_of(i, m.exps[i]);
        result += term;
    }
    return result;
}

Polynomial Polynomial::derivative(const Variable &v) const {
    Polynomial r(ctx_);
    auto idx = ctx_->find(v);
    if (!idx) return r;
    for (const auto &[m, c] : terms_) {
        int e = m.exps[*idx];
        if (e == 0) continue;
        Monomial dm(m);
        dm.exps[*idx] -= 1;
        r.add_term(dm, c * e);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational> &point) const {
    if (point.size() != ctx_->size()) throw Error("evaluate: wrong point dimension");
    Rational total(0);
    for (const auto &[m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < m.exps.size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

Polynomial Polynomial::in_context(const ContextPtr &target) const {
    std::vector<std::optional<std::size_t>> remap(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) remap[i] = target->find(ctx_->var(i));
    Polynomial r(target);
    for (const auto &[m, c] : terms_) {
        Monomial nm(target->size());
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (!m.exps[i]) continue;
            if (!remap[i])
                throw Error("in_context: variable " + ctx_->var(i).str() +
                            " absent from target context");
            nm.exps[*remap[i]] = m.exps[i];
        }
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

namespace {

void print_monomial(std::ostream &os, const Monomial &m, const VariableContext &ctx) {
    bool first = true;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i]) continue;
        if (!first) os << "*";
        os << ctx.var(i).str();
        if (m.exps[i] > 1) os << "^" << m.exps[i];
        first = false;
    }
}

// First exponent of the monomial in declaration order, used to decide
// whether "-mono" is safe to print (a leading "-x^2" would parse as
// (-x)^2 under the expression grammar).
int first_exponent(const Monomial &m) {
    for (int e : m.exps)
        if (e) return e;
    return 0;
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        Rational mag = c;
        bool neg = c < 0;
        if (neg) mag = -mag;
        bool leading_unary_minus = first && neg;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (m.is_one()) {
            os << mag;
        } else if (mag == 1) {
            // A leading "-x^2" would parse as (-x)^2; spell the coefficient.
            if (leading_unary_minus && first_exponent(m) > 1) os << "1*";
            print_monomial(os, m, *ctx_);
        } else {
            os << mag << "*";
            print_monomial(os, m, *ctx_);
        }
    }
    return os.str();
}

} // namespace jetcert
