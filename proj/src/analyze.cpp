#include "zartan/analyze.hpp"

namespace zartan {

ComparisonReport analyze(const Problem& prob) {
    std::mt19937_64 rng(prob.opts.seed);

    AffinePresentation X = AffinePresentation::make(prob.x_ring, prob.x_ideal, prob.opts.order);
    // Absolute problems run through the same path with S = Spec(base).
    AffinePresentation S = AffinePresentation::make(prob.s_ring, prob.s_ideal, prob.opts.order);
    MorphismPresentation f = MorphismPresentation::make(X, S, prob.pullbacks);

    ResolvedPoint s = resolve_point(S, prob.ps, prob.opts, rng);
    ResolvedPoint x = resolve_point(X, prob.px, prob.opts, rng);
    EmbeddingMap ix = verify_image(f, x, s);

    CotangentSpace C = cotangent_space(x);
    DerivationSpace D = grothendieck_tangent(x, f.pullbacks);
    RelativeTangent R = zariski_relative_tangent(f, x, s, C);

    Fiber fib = build_fiber(f, x, s, prob.opts);
    CotangentSpace Cf = cotangent_space(fib.point);

    BaseChange B = base_change(x, ix, fib, prob.opts);
    ThetaReport th = theta_map(C, B);
    PhiReport phi = phi_map(D, C, R, x);
    UpsilonReport up = upsilon_map(B, th, C, R, D, x);
    if (up.defined) {
        up.identities_hold = is_identity(mat_mul(phi.in_relative, up.matrix)) &&
                             is_identity(mat_mul(up.matrix, phi.in_relative));
        if (!up.identities_hold)
            throw InvariantViolation("Upsilon is not a two-sided inverse of Phi");
    }

    ComparisonReport rep;
    rep.dim_zariski = C.dim;
    rep.dim_grothendieck = D.dim;
    rep.dim_zariski_relative = R.dim;
    rep.dim_fiber_tangent = Cf.dim;
    rep.phi = phi;
    rep.theta = th;
    rep.upsilon = up;

    rep.extension = classify_extension(x, s, fib);
    rep.conormal =
        conormal_sequence_check(fib, Cf, B, omega_fiber_dim(fib), rep.extension.omega_dim);
    rep.lemma2 = grothendieck_base_change_check(D, x, fib);
    rep.lemma1_ok = (R.dim == Cf.dim);

    if (!rep.lemma1_ok)
        throw InvariantViolation("T^(Zar) and the fiber tangent space have different dimensions");
    if (!rep.lemma2.ok)
        throw InvariantViolation("relative and fiber derivation spaces do not agree");
    if (!rep.conormal.seq5_ok || !rep.conormal.seq6_ok)
        throw InvariantViolation("a conormal sequence dimension identity failed");
    if (th.iso && !phi.iso)
        throw InvariantViolation("theta is an isomorphism but Phi is not");

    rep.hypothesis = rep.extension.algebraic && rep.extension.separable == true;
    rep.conclusion = phi.iso;
    rep.consistent = !rep.hypothesis || rep.conclusion;
    if (!rep.consistent)
        throw InvariantViolation(
            "the extension is algebraic and separable but Phi is not an isomorphism");

    rep.kappa_x_name = x.kappa->name();
    rep.kappa_s_name = s.kappa->name();
    rep.x_vars = prob.x_ring->vars;
    for (const Polynomial& g : C.reps) rep.cotangent_basis.push_back(g.str());
    rep.derivation_basis = D.basis;
    rep.relative_basis = R.basis;
    return rep;
}

}  // namespace zartan
