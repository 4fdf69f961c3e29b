#ifndef JETCERT_JET_HPP
#define JETCERT_JET_HPP

#include "jetcert/morphism.hpp"

namespace jetcert {

// Presentation of the m-jet ring of an affine variety: one variable x#j per
// base variable x and level 0 <= j <= m (declared descending by level), and
// one stratum F[a][k] per generator a and level k, where
//   f_a(sum_j x#j t^j)  ==  sum_k F[a][k] t^k   (mod t^{m+1}).
// F[a][k] is weight-homogeneous of weight k and uses levels <= k only.
struct JetPresentation {
    Presentation base;
    int level = 0;
    Presentation pres;                            // generators = strata flattened (a, k)
    std::vector<std::vector<Polynomial>> strata;  // [a][k], k = 0..level

    const Polynomial &stratum(std::size_t a, int k) const { return strata.at(a).at(k); }
    Variable jet_var(std::size_t base_index, int j) const {
        return Variable(base.ctx->var(base_index).name, j);
    }
};

// Context of jet variables for the given base, declared descending by
// level, ascending base index within a level.
ContextPtr jet_context(const Presentation &base, int m);

JetPresentation jet_equations(const Presentation &variety, int m);

// Coefficients gamma_i^(0..m) of a truncated series point, one row per base
// variable, each of length m+1.
struct TruncatedSeriesPoint {
    std::vector<std::vector<Rational>> coeffs;
};

// All stratum values F[a][k](gamma), flattened (a-major). The point is an
// m-jet of the base variety iff every value vanishes.
std::vector<Rational> evaluate_on_jet(const JetPresentation &jp,
                                      const TruncatedSeriesPoint &gamma);

// Weight homogeneity of every stratum plus the symbolic scaling identity
// F[a][k](s.gamma) == s^k F[a][k](gamma) with a fresh symbol s scaling
// level-j variables by s^j.
Report check_grading(const JetPresentation &jp);

// Generator-image map realizing the truncation of jets above level m':
// x#j -> x#j for j <= m'. Verifies that strata of level <= m' are shared
// verbatim between the two presentations.
RingMap truncation_map(const JetPresentation &jm, int m_lower);

// x#0 -> x, x#j -> 0 (j >= 1); composing with the base inclusion is the
// identity on the base presentation.
RingMap zero_section(const JetPresentation &jp);

struct FiberResult {
    Presentation fiber; // over levels 0 and m only
    Report checks;
};

// Fiber of the truncation X_m -> X_{m-1} over the zero section: substitutes
// x#j = 0 for 1 <= j <= m-1 and checks that strata 1..m-1 die while stratum
// m collapses to the Jacobian pairing  sum_i  df_a/dx_i(x#0) * x_i#m.
FiberResult fiber_over_zero_section(const Presentation &variety, int m);

// The Jacobian pairing evaluated in the level-m jet variables.
Polynomial jacobian_pairing(const JetPresentation &jp, std::size_t gen_index);

// Jet functoriality: a base ring map induces a map of jet presentations by
// acting coefficientwise on truncated series.
RingMap induce_jet_map(const RingMap &base_map, int m);

} // namespace jetcert

#endif
