#include "jetcert/linalg.hpp"

#include <algorithm>
#include <map>

namespace jetcert {

namespace {

// row -= factor * other  (sparse merge)
SparseRow axpy(const SparseRow &row, const Rational &factor, const SparseRow &other) {
    SparseRow out;
    out.reserve(row.size() + other.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < other.size()) {
        if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || other[j].first < row[i].first) {
            out.emplace_back(other[j].first, -factor * other[j].second);
            ++j;
        } else {
            Rational c = row[i].second - factor * other[j].second;
            if (c != 0) out.emplace_back(row[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    return out;
}

struct Echelon {
    std::size_t num_cols;
    std::vector<SparseRow> rows;      // echelon rows, each with distinct pivot col
    std::vector<Rational> rhs;
    std::vector<std::size_t> pivots;  // pivot column of each row
    bool inconsistent = false;
};

Echelon eliminate(LinearSystem sys) {
    Echelon e;
    e.num_cols = sys.num_cols;
    // Process rows sorted by (sparsity, original index) for stability and speed.
    std::vector<std::size_t> order(sys.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return sys.rows[a].size() < sys.rows[b].size();
    });

    std::map<std::size_t, std::size_t> pivot_row; // col -> index into e.rows
    for (std::size_t oi : order) {
        SparseRow row = std::move(sys.rows[oi]);
        Rational b = std::move(sys.rhs[oi]);
        while (!row.empty()) {
            auto it = pivot_row.find(row.front().first);
            if (it == pivot_row.end()) break;
            const Rational factor = row.front().second; // pivot rows are monic
            b -= factor * e.rhs[it->second];
            row = axpy(row, factor, e.rows[it->second]);
        }
        if (row.empty()) {
            if (b != 0) e.inconsistent = true;
            continue;
        }
        Rational lead = row.front().second;
        for (auto &[c, v] : row) v /= lead;
        b /= lead;
        pivot_row.emplace(row.front().first, e.rows.size());
        e.pivots.push_back(row.front().first);
        e.rows.push_back(std::move(row));
        e.rhs.push_back(std::move(b));
    }
    return e;
}

} // namespace

std::optional<std::vector<Rational>> solve_linear(LinearSystem sys) {
    std::size_t n = sys.num_cols;
    Echelon e = eliminate(std::move(sys));
    if (e.inconsistent) return std::nullopt;

    // Back-substitute in decreasing pivot order; free variables are 0.
    std::vector<std::size_t> order(e.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return e.pivots[a] > e.pivots[b]; });

    std::vector<Rational> x(n, Rational(0));
    for (std::size_t ri : order) {
        Rational v = e.rhs[ri];
        const SparseRow &row = e.rows[ri];
        for (std::size_t k = 1; k < row.size(); ++k) v -= row[k].second * x[row[k].first];
        x[e.pivots[ri]] = std::move(v);
    }
    return x;
}

std::vector<std::vector<Rational>> nullspace(LinearSystem sys) {
    std::size_t n = sys.num_cols;
    for (auto &b : sys.rhs) b = 0;
    Echelon e = eliminate(std::move(sys));

    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;

    std::vector<std::size_t> order(e.rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return e.pivots[a] > e.pivots[b]; });

    std::vector<std::vector<Rational>> basis;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> x(n, Rational(0));
        x[fc] = 1;
        for (std::size_t ri : order) {
            Rational v(0);
            const SparseRow &row = e.rows[ri];
            for (std::size_t k = 1; k < row.size(); ++k) v -= row[k].second * x[row[k].first];
            x[e.pivots[ri]] = std::move(v);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace jetcert
