#ifndef JETCERT_PROLONG_HPP
#define JETCERT_PROLONG_HPP

#include "jetcert/frame.hpp"
#include "jetcert/jet.hpp"

namespace jetcert {

struct ProlongationOptions {
    // Base-ring degree bound of the correction-term ansatz; raised once
    // internally before giving up.
    int correction_degree_bound = 4;
    GroebnerLimits limits;
};

class CorrectionSolveError : public Error {
public:
    explicit CorrectionSolveError(const std::string &msg) : Error(msg) {}
};

// Certificate for  R^(m) ~ R^(m-1)[th<m>_1 .. th<m>_n]  built from a
// verified cotangent frame:
//   forward  (jets(m-1) x A^n -> jets(m)):  th<m>_k -> sum_i A[k][i](x#0) x_i#m
//   backward (jets(m) -> jets(m-1) x A^n):  x_i#m  -> sum_k B[i][k](x#0) th<m>_k + h_i
// where the corrections h_i are weight-m polynomials in levels <= m-1 with
//   sum_i df_a/dx_i(x#0) h_i + G_a == 0  modulo the level-(m-1) ideal,
//   G_a = F[a][m] - (Jacobian pairing).
IsoCertificate build_prolongation_iso(const Presentation &variety, const CotangentFrame &frame,
                                      int m, const ProlongationOptions &opts = {});

// Composite certificate  R^(m) ~ (base ring)[th1_* .. thm_*], re-verified
// end to end.
IsoCertificate trivialize_jets(const Presentation &variety, const CotangentFrame &frame, int m,
                               const ProlongationOptions &opts = {});

// The theta variables introduced for prolongation level j.
std::vector<Variable> prolongation_thetas(std::size_t n, int j);

} // namespace jetcert

#endif
