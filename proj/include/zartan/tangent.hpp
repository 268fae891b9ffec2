#pragma once

#include <optional>

#include "zartan/linalg.hpp"
#include "zartan/scheme.hpp"

namespace zartan {

// M_x/M_x^2 with an explicit kappa(x)-basis of coset representatives.  The
// closed case works in the ambient polynomial ring: the base-field dimension
// of m/(m^2+I) is a staircase difference, and the kappa(x)-structure acts
// through multiplication by the staircase monomials of kappa(x).
struct CotangentSpace {
    RingPtr ring;
    GbPtr point_gb;
    FieldPtr kappa;
    bool kappa_trivial = false;
    size_t d = 1;               // [kappa : coefficient field]
    GbPtr gb2;                  // basis of m^2 + I
    std::vector<Monomial> st2;  // staircase of gb2
    std::vector<Monomial> tau;  // staircase of the point ideal
    std::vector<Polynomial> reps;
    size_t dim = 0;             // over kappa
    Matrix solver;              // |st2| x (dim*d) coordinate matrix over the base

    // kappa-coordinates of the class of p (requires p in the maximal ideal).
    std::vector<FElem> coords(const Polynomial& p) const;
};

CotangentSpace cotangent_space(const ResolvedPoint& x);

// Der_{O_{S,s}}(O_{X,x}, kappa(x)) as the kernel of the stacked Jacobian of
// the scheme ideal and the pullbacks, evaluated at x.
struct DerivationSpace {
    Matrix jac;
    std::vector<std::vector<FElem>> basis;  // vectors d with D(x_i) = d_i
    size_t dim = 0;
};

DerivationSpace grothendieck_tangent(const ResolvedPoint& x,
                                     const std::vector<Polynomial>& pullbacks);

// T^(Zar) as the annihilator of the j_x-image classes inside T_x X, in the
// coordinates dual to the cotangent basis.
struct RelativeTangent {
    std::vector<std::vector<FElem>> j_rows;  // classes of pulled-back M_s generators
    size_t j_rank = 0;
    std::vector<std::vector<FElem>> basis;   // dual-coordinate basis of the annihilator
    size_t dim = 0;
};

RelativeTangent zariski_relative_tangent(const MorphismPresentation& f, const ResolvedPoint& x,
                                         const ResolvedPoint& s, const CotangentSpace& C);

// A~ = kappa(x) (x)_{kappa(s)} O_fiber presented over kappa(x), with the
// evaluation-kernel ideal M~ at the now-rational point and its cotangent.
struct BaseChange {
    AffinePresentation pres;
    ResolvedPoint point;
    CotangentSpace cot;
};

BaseChange base_change(const ResolvedPoint& x, const EmbeddingMap& ix, const Fiber& fib,
                       const Options& opts);

struct ThetaReport {
    Matrix m;  // B-cotangent coordinates of the C-basis images
    size_t rank = 0;
    bool injective = false;
    bool surjective = false;
    bool iso = false;
};

ThetaReport theta_map(const CotangentSpace& C, const BaseChange& B);

struct PhiReport {
    Matrix columns;      // C-coordinates, one column per derivation basis vector
    Matrix in_relative;  // same columns in the T^(Zar) basis
    size_t rank = 0;
    bool injective = false;
    bool surjective_onto_relative = false;
    bool iso = false;
};

PhiReport phi_map(const DerivationSpace& D, const CotangentSpace& C, const RelativeTangent& R,
                  const ResolvedPoint& x);

struct UpsilonReport {
    bool defined = false;
    bool identities_hold = false;
    std::vector<std::vector<FElem>> d_vectors;  // one derivation per T^(Zar) basis vector
    Matrix matrix;                              // in the T^(Gro) basis
};

// Requires theta invertible; verifies the derivation constraints and both
// composition identities, throwing InvariantViolation on failure.
UpsilonReport upsilon_map(const BaseChange& B, const ThetaReport& th, const CotangentSpace& C,
                          const RelativeTangent& R, const DerivationSpace& D,
                          const ResolvedPoint& x);

// dim of Omega_{kappa(x)/kappa(s)}: corank of the Jacobian of the fiber
// point ideal at the point.
size_t omega_residue_dim(const Fiber& fib);
// dim of Omega_{fiber/kappa(s)} (x) kappa(x): corank of the fiber-ideal
// Jacobian at the point.
size_t omega_fiber_dim(const Fiber& fib);

struct ExtensionReport {
    bool algebraic = false;
    std::optional<bool> separable;  // undefined for non-algebraic extensions
    size_t omega_dim = 0;
};

// Transcendence degree over the prime field.
long transcendence_degree(const FieldPtr& k);

// Omega-criterion with a gcd-of-minimal-polynomials cross-check where a
// finite kappa(s)-presentation of kappa(x) is available.
ExtensionReport classify_extension(const ResolvedPoint& x, const ResolvedPoint& s,
                                   const Fiber& fib);

struct ConormalReport {
    size_t delta_rank = 0;
    bool seq5_ok = false;
    bool seq6_ok = false;
};

ConormalReport conormal_sequence_check(const Fiber& fib, const CotangentSpace& fiberC,
                                       const BaseChange& B, size_t omega_fib, size_t omega_res);

struct Lemma2Report {
    size_t dim_relative = 0;
    size_t dim_fiber_absolute = 0;
    bool ok = false;
};

Lemma2Report grothendieck_base_change_check(const DerivationSpace& D, const ResolvedPoint& x,
                                            const Fiber& fib);

}  // namespace zartan
