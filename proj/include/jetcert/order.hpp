#ifndef JETCERT_ORDER_HPP
#define JETCERT_ORDER_HPP

#include "jetcert/monomial.hpp"

#include <numeric>
#include <vector>

namespace jetcert {

// Total, multiplicative well-order on monomials of a fixed context.
// The priority list is a permutation of context indices, most significant
// variable first. Block elimination orders put the first `front` entries
// of the priority list in the eliminated block.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Block };

    static MonomialOrder grevlex(const ContextPtr &ctx) {
        return MonomialOrder(Kind::Grevlex, identity(ctx->size()), 0);
    }
    static MonomialOrder lex(const ContextPtr &ctx) {
        return MonomialOrder(Kind::Lex, identity(ctx->size()), 0);
    }
    static MonomialOrder grevlex(std::vector<std::size_t> priority) {
        return MonomialOrder(Kind::Grevlex, std::move(priority), 0);
    }
    static MonomialOrder lex(std::vector<std::size_t> priority) {
        return MonomialOrder(Kind::Lex, std::move(priority), 0);
    }
    // Eliminates the variables listed first in `priority` (the `front` of them).
    static MonomialOrder block_elimination(std::vector<std::size_t> priority,
                                           std::size_t front) {
        return MonomialOrder(Kind::Block, std::move(priority), front);
    }

    Kind kind() const { return kind_; }
    const std::vector<std::size_t> &priority() const { return priority_; }
    std::size_t front_size() const { return front_; }

    // Strict a < b.
    bool less(const Monomial &a, const Monomial &b) const {
        switch (kind_) {
        case Kind::Lex: {
            for (std::size_t p : priority_) {
                if (a.exps[p] != b.exps[p]) return a.exps[p] < b.exps[p];
            }
            return false;
        }
        case Kind::Grevlex:
            return grevlex_segment(a, b, 0, priority_.size());
        case Kind::Block: {
            int da = segment_degree(a, 0, front_), db = segment_degree(b, 0, front_);
            if (da != db) return da < db;
            if (grevlex_segment(a, b, 0, front_)) return true;
            if (grevlex_segment(b, a, 0, front_)) return false;
            return grevlex_segment(a, b, front_, priority_.size());
        }
        }
        return false;
    }

    bool greater(const Monomial &a, const Monomial &b) const { return less(b, a); }

    bool operator==(const MonomialOrder &o) const {
        return kind_ == o.kind_ && priority_ == o.priority_ && front_ == o.front_;
    }

private:
    MonomialOrder(Kind k, std::vector<std::size_t> pr, std::size_t front)
        : kind_(k), priority_(std::move(pr)), front_(front) {}

    static std::vector<std::size_t> identity(std::size_t n) {
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        return p;
    }

    int segment_degree(const Monomial &m, std::size_t lo, std::size_t hi) const {
        int d = 0;
        for (std::size_t i = lo; i < hi; ++i) d += m.exps[priority_[i]];
        return d;
    }

    bool grevlex_segment(const Monomial &a, const Monomial &b, std::size_t lo,
                         std::size_t hi) const {
        int da = segment_degree(a, lo, hi), db = segment_degree(b, lo, hi);
        if (da != db) return da < db;
        for (std::size_t i = hi; i-- > lo;) {
            std::size_t p = priority_[i];
            if (a.exps[p] != b.exps[p]) return a.exps[p] > b.exps[p];
        }
        return false;
    }

    Kind kind_;
    std::vector<std::size_t> priority_;
    std::size_t front_;
};

} // namespace jetcert

#endif
