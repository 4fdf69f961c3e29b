#ifndef JETCERT_FRAME_HPP
#define JETCERT_FRAME_HPP

#include "jetcert/groebner.hpp"
#include "jetcert/report.hpp"

namespace jetcert {

// Certificate that the Kaehler differentials of a presented variety are
// free of rank n with basis omega_k = sum_i A[k][i] dx_i:
//   A (n x N): the frame forms;
//   B (N x n): dx_i = sum_k B[i][k] omega_k in the differentials module;
//   C (N x r): correction coefficients witnessing B*A == I modulo the
//              Jacobian rows and the ideal.
// Invariants checked by verify_frame:
//   (R1)  sum_i df_a/dx_i * B[i][k] == 0            (mod ideal)  for all a, k
//   (R2)  sum_k B[i][k] A[k][i'] - delta_{ii'}
//            - sum_a C[i][a] df_a/dx_{i'} == 0      (mod ideal)  for all i, i'
struct CotangentFrame {
    std::vector<std::vector<Polynomial>> A;
    std::vector<std::vector<Polynomial>> B;
    std::vector<std::vector<Polynomial>> C;

    std::size_t rank() const { return A.size(); }
};

Report verify_frame(const Presentation &v, const CotangentFrame &f,
                    const GroebnerLimits &limits = {});

class FrameSearchError : public Error {
public:
    explicit FrameSearchError(const std::string &msg) : Error(msg) {}
};

// Bounded-degree search for a frame of rank n = dim V: columns of B are
// found among low-degree solutions of the tangency equations, the final
// column by a linear solve normalizing the completed determinant to 1, and
// A, C are recovered exactly from the adjugate of the completed matrix.
// Deterministic; smallest degree first. Throws FrameSearchError when no
// frame exists within the bound.
CotangentFrame search_frame(const Presentation &v, std::size_t n, int degree_bound,
                            const GroebnerLimits &limits = {});

} // namespace jetcert

#endif
