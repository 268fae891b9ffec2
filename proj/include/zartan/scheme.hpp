#pragma once

#include <random>
#include <vector>

#include "zartan/groebner.hpp"
#include "zartan/poly.hpp"

namespace zartan {

struct Options {
    MonomialOrder::Kind order = MonomialOrder::Kind::Grevlex;
    bool trust_point = false;   // skip irreducibility certification of towers
    unsigned long long seed = 0;
};

// A finitely presented affine scheme Spec R/I with a fixed generating set.
struct AffinePresentation {
    RingPtr ring;
    std::vector<Polynomial> ideal;  // generators as given
    GbPtr gb;                       // reduced basis of I

    // Throws UnitIdeal when the scheme is empty.
    static AffinePresentation make(RingPtr ring, std::vector<Polynomial> ideal,
                                   MonomialOrder::Kind order);
};

// A closed point is given by a triangular system (one polynomial per
// variable, the i-th monic in the i-th variable and involving no later
// ones); the generic point by the scheme's own prime ideal.
struct PointSpec {
    bool generic = false;
    std::vector<Polynomial> tower;
};

// A point together with its residue field and the coordinates of the
// scheme variables inside it.
struct ResolvedPoint {
    AffinePresentation scheme;
    PointSpec spec;
    GbPtr point_gb;              // closed: the maximal ideal; generic: scheme.gb
    FieldPtr kappa;
    bool kappa_trivial = false;  // kappa coincides with the coefficient field
    std::vector<FElem> coords;   // variable images in kappa
    CoeffMap embed;              // scheme coefficient field -> kappa

    FElem eval(const Polynomial& p) const { return p.evaluate(coords, embed); }
};

// Validates the triangular structure, checks the point lies on the scheme
// and (unless trusted) certifies each tower step irreducible where an
// algorithm is available.  Reducibility yields a ReducibleTowerStep.
ResolvedPoint resolve_point(const AffinePresentation& scheme, const PointSpec& spec,
                            const Options& opts, std::mt19937_64& rng);

// One-level lift of a coefficient-field element into its extension; the
// identity when the fields coincide.
FElem coeff_to_ext(const FieldPtr& ext, const FElem& c);
// Embedding of a prime-field scalar through an arbitrary extension chain.
FElem embed_into(const FieldPtr& cod, const FElem& base_scalar);

// f : X -> S presented by the pullbacks of the S coordinates.
struct MorphismPresentation {
    AffinePresentation X;
    AffinePresentation S;
    std::vector<Polynomial> pullbacks;  // in X.ring, one per S variable

    // Verifies every relation of S pulls back into the ideal of X.
    static MorphismPresentation make(AffinePresentation X, AffinePresentation S,
                                     std::vector<Polynomial> pullbacks);
};

// Field homomorphism determined by variable images; dom is a base field or
// a quotient / fraction field presented over a base field (or over cod's
// own coefficient field, for fiber residue fields).
struct EmbeddingMap {
    FieldPtr dom;
    FieldPtr cod;
    std::vector<FElem> var_images;  // in cod, per dom presentation variable

    FElem apply(const FElem& e) const;
    CoeffMap as_coeff_map() const;
};

// kappa(s) -> kappa(x) along f; checks (for a closed s) that f(x) = s and
// throws PointImageMismatch otherwise.
EmbeddingMap verify_image(const MorphismPresentation& f, const ResolvedPoint& x,
                          const ResolvedPoint& s);

// The fiber X_s = X x_S s as a scheme over kappa(s), with x re-resolved on
// it.  The tower of x is lifted coefficient-wise; no containment check is
// made (the fiber equations can be finer than the tower alone).
struct Fiber {
    AffinePresentation pres;  // over kappa(s)
    ResolvedPoint point;      // x viewed on the fiber
};

Fiber build_fiber(const MorphismPresentation& f, const ResolvedPoint& x,
                  const ResolvedPoint& s, const Options& opts);

}  // namespace zartan
