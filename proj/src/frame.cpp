#include "jetcert/frame.hpp"

#include "jetcert/linalg.hpp"

#include <functional>
#include <map>
#include <optional>

namespace jetcert {

namespace {

std::vector<Polynomial> ideal_gens_or_zero(const Presentation &v) {
    if (!v.generators.empty()) return v.generators;
    return {Polynomial::zero(v.ctx)};
}

// Monomials of total degree <= d over the context, low degree first,
// deterministic within a degree.
std::vector<Monomial> monomials_up_to(const ContextPtr &ctx, int d) {
    std::vector<Monomial> out;
    std::vector<int> exps(ctx->size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
        if (pos == exps.size()) {
            Monomial m;
            m.exps = exps;
            out.push_back(std::move(m));
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            exps[pos] = e;
            rec(pos + 1, rem - e);
            exps[pos] = 0;
        }
    };
    rec(0, d);
    std::stable_sort(out.begin(), out.end(),
                     [](const Monomial &a, const Monomial &b) { return a.degree() < b.degree(); });
    return out;
}

// Builds sparse linear systems whose unknowns are coefficients of ansatz
// polynomials and whose equations say that certain polynomial expressions
// vanish coefficientwise after normal-form reduction.
class PolySystem {
public:
    explicit PolySystem(std::size_t num_unknowns) { sys_.num_cols = num_unknowns; }

    // expr contributes coeff-of-monomial rows in the given block.
    void add_column(std::size_t block, std::size_t unknown, const Polynomial &column) {
        for (const auto &[mono, c] : column.terms())
            cell(block, mono).emplace_back(unknown, c);
    }

    void add_constant(std::size_t block, const Polynomial &value) {
        for (const auto &[mono, c] : value.terms()) rhs_of(block, mono) -= c;
    }

    LinearSystem build() {
        LinearSystem sys = std::move(sys_);
        for (auto &[key, entries] : cells_) {
            std::map<std::size_t, Rational> merged;
            for (auto &[col, c] : entries) merged[col] += c;
            SparseRow row;
            for (auto &[col, c] : merged)
                if (c != 0) row.emplace_back(col, std::move(c));
            Rational b(0);
            if (auto it = rhs_.find(key); it != rhs_.end()) b = -it->second;
            if (row.empty() && b == 0) continue;
            sys.add_row(std::move(row), std::move(b));
        }
        return sys;
    }

private:
    using Key = std::pair<std::size_t, std::vector<int>>;
    std::vector<std::pair<std::size_t, Rational>> &cell(std::size_t block, const Monomial &m) {
        return cells_[Key{block, m.exps}];
    }
    Rational &rhs_of(std::size_t block, const Monomial &m) { return rhs_[Key{block, m.exps}]; }

    LinearSystem sys_;
    std::map<Key, std::vector<std::pair<std::size_t, Rational>>> cells_;
    std::map<Key, Rational> rhs_;
};

Polynomial det_of(const std::vector<std::vector<Polynomial>> &cols, const ContextPtr &ctx) {
    // cols[j][i]: column j, row i; square.
    std::size_t n = cols.size();
    std::function<Polynomial(std::vector<std::size_t>, std::size_t)> rec =
        [&](std::vector<std::size_t> rows, std::size_t col) -> Polynomial {
        if (rows.size() == 1) return cols[col][rows[0]];
        Polynomial d(ctx);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Polynomial &entry = cols[col][rows[k]];
            if (entry.is_zero()) continue;
            std::vector<std::size_t> sub;
            for (std::size_t l = 0; l < rows.size(); ++l)
                if (l != k) sub.push_back(rows[l]);
            Polynomial cof = entry * rec(sub, col + 1);
            if (k % 2)
                d -= cof;
            else
                d += cof;
        }
        return d;
    };
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    return rec(rows, 0);
}

// Adjugate of a square matrix given as columns; returns rows.
std::vector<std::vector<Polynomial>> adjugate_rows(
    const std::vector<std::vector<Polynomial>> &cols, const ContextPtr &ctx) {
    std::size_t n = cols.size();
    std::vector<std::vector<Polynomial>> adj(n, std::vector<Polynomial>(n, Polynomial(ctx)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // adj[j][i] = (-1)^{i+j} * minor(i, j)  (minor deletes row i, col j)
            std::vector<std::vector<Polynomial>> sub;
            for (std::size_t cj = 0; cj < n; ++cj) {
                if (cj == j) continue;
                std::vector<Polynomial> col;
                for (std::size_t ri = 0; ri < n; ++ri)
                    if (ri != i) col.push_back(cols[cj][ri]);
                sub.push_back(std::move(col));
            }
            Polynomial m = det_of(sub, ctx);
            adj[j][i] = ((i + j) % 2) ? -m : m;
        }
    }
    return adj;
}

} // namespace

Report verify_frame(const Presentation &v, const CotangentFrame &f,
                    const GroebnerLimits &limits) {
    Report rep;
    std::size_t N = v.ctx->size();
    std::size_t r = v.generators.size();
    std::size_t n = f.A.size();
    if (f.B.size() != N || (n && f.A[0].size() != N))
        throw Error("verify_frame: matrix shapes do not match the presentation");
    for (const auto &row : f.B)
        if (row.size() != n) throw Error("verify_frame: B must be N x n");
    if (f.C.size() != N && !(r == 0 && f.C.empty()))
        throw Error("verify_frame: C must be N x r");

    GroebnerBasis gb =
        buchberger(ideal_gens_or_zero(v), MonomialOrder::grevlex(v.ctx), limits);
    auto jac = jacobian(v);

    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial acc(v.ctx);
            for (std::size_t i = 0; i < N; ++i) acc += jac[a][i] * f.B[i][k];
            Polynomial nf = normal_form(acc, gb);
            rep.check("relation compatibility (a=" + std::to_string(a) +
                          ", k=" + std::to_string(k) + ")",
                      nf.is_zero(), nf.is_zero() ? "" : "remainder " + nf.str());
        }

    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t i2 = 0; i2 < N; ++i2) {
            Polynomial acc(v.ctx);
            for (std::size_t k = 0; k < n; ++k) acc += f.B[i][k] * f.A[k][i2];
            if (i == i2) acc -= Polynomial::constant(v.ctx, 1);
            for (std::size_t a = 0; a < r; ++a) acc -= f.C[i][a] * jac[a][i2];
            Polynomial nf = normal_form(acc, gb);
            rep.check("unimodularity (i=" + std::to_string(i) + ", i'=" + std::to_string(i2) + ")",
                      nf.is_zero(), nf.is_zero() ? "" : "remainder " + nf.str());
        }
    return rep;
}

CotangentFrame search_frame(const Presentation &v, std::size_t n, int degree_bound,
                            const GroebnerLimits &limits) {
    std::size_t N = v.ctx->size();
    std::size_t r = v.generators.size();

    if (r == 0) {
        if (n != N) throw Error("search_frame: affine space has rank = ambient dimension");
        CotangentFrame f;
        f.A.assign(n, std::vector<Polynomial>(N, Polynomial::zero(v.ctx)));
        f.B.assign(N, std::vector<Polynomial>(n, Polynomial::zero(v.ctx)));
        for (std::size_t i = 0; i < N; ++i) {
            f.A[i][i] = Polynomial::constant(v.ctx, 1);
            f.B[i][i] = Polynomial::constant(v.ctx, 1);
        }
        f.C.assign(N, std::vector<Polynomial>{});
        return f;
    }
    if (n + r != N)
        throw Error("search_frame: rank + number of generators must equal the ambient "
                    "dimension for this search");
    if (!is_smooth(v, r, limits))
        throw FrameSearchError("search_frame: variety is not smooth, no frame exists");

    GroebnerBasis gb =
        buchberger(ideal_gens_or_zero(v), MonomialOrder::grevlex(v.ctx), limits);
    auto jac = jacobian(v);
    auto nf = [&](const Polynomial &p) { return normal_form(p, gb); };

    // Ansatz polynomial from a coefficient slice.
    auto assemble = [&](const std::vector<Rational> &x, const std::vector<Monomial> &monos,
                        std::size_t entry, std::size_t stride) {
        Polynomial p(v.ctx);
        for (std::size_t m = 0; m < monos.size(); ++m)
            p.add_term(monos[m], x[entry * stride + m]);
        return p;
    };

    // Step 1: columns S with J * S == I_r modulo the ideal.
    std::vector<std::vector<Polynomial>> S; // S[a] = column a (size N)
    for (int ds = 0; ds <= degree_bound && S.empty(); ++ds) {
        auto monos = monomials_up_to(v.ctx, ds);
        std::size_t stride = monos.size();
        PolySystem ps(N * r * stride);
        for (std::size_t a = 0; a < r; ++a) {     // column index of S
            for (std::size_t b = 0; b < r; ++b) { // generator row
                std::size_t block = a * r + b;
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t m = 0; m < stride; ++m)
                        ps.add_column(block, (a * N + i) * stride + m,
                                      nf(jac[b][i] *
                                         Polynomial::monomial(v.ctx, monos[m], Rational(1))));
                ps.add_constant(block, Polynomial::constant(
                                           v.ctx, a == b ? Rational(-1) : Rational(0)));
            }
        }
        if (auto sol = solve_linear(ps.build())) {
            S.resize(r);
            for (std::size_t a = 0; a < r; ++a) {
                S[a].clear();
                for (std::size_t i = 0; i < N; ++i)
                    S[a].push_back(assemble(*sol, monos, a * N + i, stride));
            }
        }
    }
    if (S.empty())
        throw FrameSearchError("search_frame: no splitting of the Jacobian within degree bound " +
                               std::to_string(degree_bound) + " (suggest raising it)");

    for (int d = 0; d <= degree_bound; ++d) {
        auto monos = monomials_up_to(v.ctx, d);
        std::size_t stride = monos.size();

        // Pool: basis of tangent columns of entry degree <= d.
        PolySystem tang(N * stride);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t m = 0; m < stride; ++m)
                    tang.add_column(a, i * stride + m,
                                    nf(jac[a][i] *
                                       Polynomial::monomial(v.ctx, monos[m], Rational(1))));
        auto kernel = nullspace(tang.build());

        std::vector<std::vector<Polynomial>> pool;
        for (const auto &vec : kernel) {
            std::vector<Polynomial> col;
            bool zero = true;
            for (std::size_t i = 0; i < N; ++i) {
                col.push_back(assemble(vec, monos, i, stride));
                zero = zero && col.back().is_zero();
            }
            if (!zero) pool.push_back(std::move(col));
        }
        // Secondary candidates: pairwise sums, deterministic order.
        std::size_t primary = pool.size();
        for (std::size_t i = 0; i < primary; ++i)
            for (std::size_t j = i + 1; j < primary; ++j) {
                std::vector<Polynomial> col;
                for (std::size_t e = 0; e < N; ++e) col.push_back(pool[i][e] + pool[j][e]);
                pool.push_back(std::move(col));
            }

        // Choose n-1 columns from the pool, solve the last one linearly with
        // the completed determinant normalized to 1.
        std::optional<CotangentFrame> found;
        std::vector<std::size_t> pick(n >= 1 ? n - 1 : 0);
        std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t start,
                                                                   std::size_t depth) -> bool {
            if (depth == pick.size()) {
                std::vector<std::vector<Polynomial>> chosen;
                for (std::size_t p : pick) chosen.push_back(pool[p]);

                // Cofactors of the free column: det with the column replaced
                // by each standard basis vector.
                std::vector<Polynomial> cof(N, Polynomial(v.ctx));
                for (std::size_t i = 0; i < N; ++i) {
                    std::vector<std::vector<Polynomial>> cols = chosen;
                    std::vector<Polynomial> e(N, Polynomial::zero(v.ctx));
                    e[i] = Polynomial::constant(v.ctx, 1);
                    cols.push_back(std::move(e));
                    for (const auto &s : S) cols.push_back(s);
                    cof[i] = nf(det_of(cols, v.ctx));
                }

                PolySystem ps(N * stride);
                for (std::size_t a = 0; a < r; ++a)
                    for (std::size_t i = 0; i < N; ++i)
                        for (std::size_t m = 0; m < stride; ++m)
                            ps.add_column(a, i * stride + m,
                                          nf(jac[a][i] * Polynomial::monomial(v.ctx, monos[m],
                                                                              Rational(1))));
                std::size_t det_block = r;
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t m = 0; m < stride; ++m)
                        ps.add_column(det_block, i * stride + m,
                                      nf(cof[i] *
                                         Polynomial::monomial(v.ctx, monos[m], Rational(1))));
                ps.add_constant(det_block, Polynomial::constant(v.ctx, Rational(-1)));

                auto sol = solve_linear(ps.build());
                if (!sol) return false;
                std::vector<Polynomial> last;
                for (std::size_t i = 0; i < N; ++i)
                    last.push_back(assemble(*sol, monos, i, stride));
                chosen.push_back(std::move(last));

                // Assemble the frame from the completed square matrix.
                std::vector<std::vector<Polynomial>> cols = chosen;
                for (const auto &s : S) cols.push_back(s);
                auto adj = adjugate_rows(cols, v.ctx);
                CotangentFrame f;
                f.A.assign(n, std::vector<Polynomial>(N, Polynomial(v.ctx)));
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t i = 0; i < N; ++i) f.A[k][i] = nf(adj[k][i]);
                f.B.assign(N, std::vector<Polynomial>(n, Polynomial(v.ctx)));
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t k = 0; k < n; ++k) f.B[i][k] = chosen[k][i];
                f.C.assign(N, std::vector<Polynomial>(r, Polynomial(v.ctx)));
                for (std::size_t i = 0; i < N; ++i)
                    for (std::size_t a = 0; a < r; ++a) f.C[i][a] = -S[a][i];

                if (!verify_frame(v, f, limits).all_pass())
                    throw Error("search_frame: constructed frame failed verification "
                                "(internal error)");
                found = std::move(f);
                return true;
            }
            for (std::size_t p = start; p < pool.size(); ++p) {
                pick[depth] = p;
                if (choose(p + 1, depth + 1)) return true;
            }
            return false;
        };

        if (choose(0, 0) && found) return std::move(*found);
    }
    throw FrameSearchError("search_frame: no frame within degree bound " +
                           std::to_string(degree_bound) + " (suggest raising it)");
}

} // namespace jetcert
