#pragma once

#include "zartan/parser.hpp"
#include "zartan/tangent.hpp"

namespace zartan {

// Everything the reporters need: dimensions, the three comparison maps,
// the extension classification and the verified identities.
struct ComparisonReport {
    size_t dim_zariski = 0;
    size_t dim_grothendieck = 0;
    size_t dim_zariski_relative = 0;
    size_t dim_fiber_tangent = 0;

    PhiReport phi;
    ThetaReport theta;
    UpsilonReport upsilon;
    ExtensionReport extension;
    ConormalReport conormal;
    Lemma2Report lemma2;
    bool lemma1_ok = false;

    bool hypothesis = false;  // kappa(x)/kappa(s) algebraic and separable
    bool conclusion = false;  // Phi is an isomorphism onto T^(Zar)
    bool consistent = false;

    // Context kept for the human-readable reports.
    std::string kappa_x_name;
    std::string kappa_s_name;
    std::vector<std::string> x_vars;
    std::vector<std::string> cotangent_basis;        // representatives of M_x/M_x^2
    std::vector<std::vector<FElem>> derivation_basis;  // T^(Gro) vectors over kappa(x)
    std::vector<std::vector<FElem>> relative_basis;    // T^(Zar) in dual coordinates
};

// Runs the full pipeline.  The guaranteed identities (the two lemmas, the
// conormal sequence dimensions, the main-lemma and main-theorem
// implications) are asserted and raise InvariantViolation on failure, so a
// returned report is internally consistent.
ComparisonReport analyze(const Problem& prob);

}  // namespace zartan
