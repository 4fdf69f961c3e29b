#ifndef JETCERT_CONTEXT_HPP
#define JETCERT_CONTEXT_HPP

#include "jetcert/rational.hpp"
#include "jetcert/variable.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jetcert {

// An ordered list of distinct variables. The declaration order doubles as
// the priority order of the default monomial order, so constructors are
// expected to declare variables highest-priority first (for jet rings:
// descending level, ascending base index within a level).
class VariableContext {
public:
    explicit VariableContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto [it, fresh] = index_.emplace(vars_[i], i);
            if (!fresh)
                throw Error("duplicate variable in context: " + vars_[i].str());
        }
    }

    std::size_t size() const { return vars_.size(); }
    const Variable &var(std::size_t i) const { return vars_[i]; }
    const std::vector<Variable> &vars() const { return vars_; }

    std::optional<std::size_t> find(const Variable &v) const {
        auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t index_of(const Variable &v) const {
        auto i = find(v);
        if (!i) throw Error("variable not in context: " + v.str());
        return *i;
    }

    bool contains(const Variable &v) const { return index_.count(v) != 0; }

    bool same_vars(const VariableContext &other) const { return vars_ == other.vars_; }

private:
    std::vector<Variable> vars_;
    std::map<Variable, std::size_t> index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline ContextPtr make_context(std::vector<Variable> vars) {
    return std::make_shared<VariableContext>(std::move(vars));
}

inline ContextPtr make_context(const std::vector<std::string> &names) {
    std::vector<Variable> vs;
    vs.reserve(names.size());
    for (const auto &n : names) vs.emplace_back(n);
    return make_context(std::move(vs));
}

inline ContextPtr make_context(std::initializer_list<const char *> names) {
    std::vector<Variable> vs;
    vs.reserve(names.size());
    for (const char *n : names) vs.emplace_back(std::string(n));
    return make_context(std::move(vs));
}

// Context extended by extra variables appended at the end (lowest priority).
inline ContextPtr extend_context(const ContextPtr &ctx, const std::vector<Variable> &extra) {
    std::vector<Variable> vs = ctx->vars();
    vs.insert(vs.end(), extra.begin(), extra.end());
    return make_context(std::move(vs));
}

// Two polynomials may interoperate only when their contexts agree.
inline void require_same_context(const ContextPtr &a, const ContextPtr &b) {
    if (a == b) return;
    if (!a || !b || !a->same_vars(*b))
        throw ContextMismatchError("variable-context mismatch");
}

} // namespace jetcert

#endif
