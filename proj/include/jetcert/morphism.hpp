#ifndef JETCERT_MORPHISM_HPP
#define JETCERT_MORPHISM_HPP

#include "jetcert/groebner.hpp"
#include "jetcert/report.hpp"

#include <map>

namespace jetcert {

// Generator-image map between presented rings: images[i] is the image of
// source variable i as a polynomial over the target ring. Well-defined
// when every source ideal generator maps into the target ideal.
struct RingMap {
    Presentation source;
    Presentation target;
    std::vector<Polynomial> images;

    Polynomial apply(const Polynomial &p) const;
    const Polynomial &image_of(const Variable &v) const {
        return images.at(source.ctx->index_of(v));
    }
};

RingMap identity_map(const Presentation &p);

// Composition g(f(.)): f.target and g.source must present the same ring
// (same variables; generators are not compared here).
RingMap compose(const RingMap &f, const RingMap &g);

// Rename variables of a map's target presentation (bijective, positional
// with the supplied presentation's context).
RingMap retarget(const RingMap &f, const Presentation &new_target,
                 const std::map<Variable, Variable> &renaming);

// Normal-form transcript of phi(g) for every source ideal generator g.
Report verify_ring_map(const RingMap &phi, const GroebnerLimits &limits = {});

// A pair of mutually inverse generator-image maps plus the verification
// transcript: both maps well-defined, backward(forward(v)) == v modulo the
// source ideal and forward(backward(w)) == w modulo the target ideal.
struct IsoCertificate {
    RingMap forward;  // source presentation -> target presentation
    RingMap backward; // target presentation -> source presentation
    Report transcript;

    bool verified() const { return transcript.all_pass(); }
    IsoCertificate inverse() const { return {backward, forward, transcript}; }
};

IsoCertificate verify_iso(const RingMap &forward, const RingMap &backward,
                          const GroebnerLimits &limits = {});

// Chain two certificates whose middle presentations agree up to the given
// variable renaming (c1 target -> c2 source). The result is re-verified
// from scratch.
IsoCertificate compose_certificates(const IsoCertificate &c1, const IsoCertificate &c2,
                                    const std::map<Variable, Variable> &renaming,
                                    const GroebnerLimits &limits = {});

// Positional renaming between two contexts of equal size.
std::map<Variable, Variable> positional_renaming(const ContextPtr &from, const ContextPtr &to);

// Extend a certificate by r fresh unconstrained variables on both sides,
// mapped identically onto each other (positionally).
IsoCertificate extend_certificate(const IsoCertificate &c, std::size_t r,
                                  const std::string &src_prefix, const std::string &tgt_prefix,
                                  const GroebnerLimits &limits = {});

// Ring-side additive group action check for images over the base ring
// extended by one free symbol: (1) ideal preservation, (2) identity at 0,
// (3) the two-parameter composition law.
Report verify_additive_action(const Presentation &v, const RingMap &action,
                              const Variable &time_symbol, const GroebnerLimits &limits = {});

struct DescentResult {
    bool weight_preserving = false;
    std::string offending_variable; // set when not weight-preserving
    IsoCertificate base_certificate; // valid when weight_preserving
};

// Restriction of a weight-preserving certificate between jet presentations
// to the weight-0 variables, yielding a verified certificate between the
// base presentations. Fails (without descending) when some generator image
// is not weight-homogeneous of its variable's weight.
DescentResult descend_equivariant_iso(const IsoCertificate &c, const GroebnerLimits &limits = {});

// Base presentation of a jet presentation: weight-0 variables renamed to
// plain ones, weight-0 generators carried over.
Presentation base_of_jet_presentation(const Presentation &jetpres);

} // namespace jetcert

#endif
