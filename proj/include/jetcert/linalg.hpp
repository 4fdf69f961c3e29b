#ifndef JETCERT_LINALG_HPP
#define JETCERT_LINALG_HPP

#include "jetcert/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace jetcert {

// Sparse row: sorted (column, coefficient) pairs, coefficients nonzero.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct LinearSystem {
    std::size_t num_cols = 0;
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs; // one entry per row

    void add_row(SparseRow row, Rational b) {
        rows.push_back(std::move(row));
        rhs.push_back(std::move(b));
    }
};

// One exact solution of A x = b (free variables set to 0), or nullopt when
// inconsistent. Deterministic pivoting.
std::optional<std::vector<Rational>> solve_linear(LinearSystem sys);

// Basis of the nullspace of A (rhs ignored), in reduced row echelon
// back-substitution order; deterministic.
std::vector<std::vector<Rational>> nullspace(LinearSystem sys);

} // namespace jetcert

#endif
