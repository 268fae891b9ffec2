#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zartan/analyze.hpp"

using namespace zartan;

namespace {

// The full pipeline with every intermediate exposed.
struct Pipe {
    ResolvedPoint s, x;
    EmbeddingMap ix;
    CotangentSpace C, Cf;
    DerivationSpace D;
    RelativeTangent R;
    Fiber fib;
    BaseChange B;
    ThetaReport th;
    PhiReport phi;
    UpsilonReport up;
};

Pipe pipe(const std::string& text) {
    Problem prob = parse_problem(text);
    std::mt19937_64 rng(prob.opts.seed);
    auto X = AffinePresentation::make(prob.x_ring, prob.x_ideal, prob.opts.order);
    auto S = AffinePresentation::make(prob.s_ring, prob.s_ideal, prob.opts.order);
    auto f = MorphismPresentation::make(X, S, prob.pullbacks);
    Pipe p;
    p.s = resolve_point(S, prob.ps, prob.opts, rng);
    p.x = resolve_point(X, prob.px, prob.opts, rng);
    p.ix = verify_image(f, p.x, p.s);
    p.C = cotangent_space(p.x);
    p.D = grothendieck_tangent(p.x, f.pullbacks);
    p.R = zariski_relative_tangent(f, p.x, p.s, p.C);
    p.fib = build_fiber(f, p.x, p.s, prob.opts);
    p.Cf = cotangent_space(p.fib.point);
    p.B = base_change(p.x, p.ix, p.fib, prob.opts);
    p.th = theta_map(p.C, p.B);
    p.phi = phi_map(p.D, p.C, p.R, p.x);
    p.up = upsilon_map(p.B, p.th, p.C, p.R, p.D, p.x);
    return p;
}

const char* kGaussian =
    "base = Q\n[X]\nvars = x\n[point.x]\nkind = closed\ntower = x^2 + 1\n";
const char* kNode =
    "base = Q\n[X]\nvars = x, y\nideal = y^2 - x^3 - x^2\n"
    "[point.x]\nkind = closed\ntower = x; y\n";
const char* kCounter = "base = Q\n[X]\nvars = t\n[point.x]\nkind = generic\n";
const char* kRelPlane =
    "base = Q\n[S]\nvars = y\n[X]\nvars = x, y\n[map]\ny = y\n"
    "[point.x]\nkind = closed\ntower = x; y\n[point.s]\nkind = closed\ntower = y\n";
const char* kChar2 =
    "base = Fp 2\n[S]\nvars = u\n[X]\nvars = u, v\nideal = v^2 - u\n[map]\nu = u\n"
    "[point.x]\nkind = generic\n[point.s]\nkind = generic\n";

}  // namespace

TEST_CASE("cotangent space at the Gaussian point of the line") {
    Pipe p = pipe(kGaussian);
    // m/(m^2+I) has Q-dimension 2 = [Q(i):Q] * 1.
    CHECK(p.C.tau.size() == 2);
    CHECK(p.C.st2.size() == 4);
    CHECK(p.C.dim == 1);
    CHECK(p.C.reps.size() == 1);
    // The class of (x^2+1)^2 is zero, the class of x^2+1 is the basis itself.
    std::vector<FElem> c = p.C.coords(p.C.reps[0] * p.C.reps[0]);
    CHECK(is_zero(c[0]));
    CHECK(equal(p.C.coords(p.C.reps[0])[0], p.x.kappa->one()));
}

TEST_CASE("theta and phi at the Gaussian point are multiplication by 2i") {
    Pipe p = pipe(kGaussian);
    FElem two_i = mul(p.x.kappa->from_int(2), p.x.coords[0]);
    // theta([x^2+1]) = [(x-i)(x+i)] = 2i [x-i] modulo (x-i)^2.
    REQUIRE(p.th.m.rows == 1);
    CHECK(equal(p.th.m.at(0, 0), two_i));
    CHECK(p.th.iso);
    // phi(D)([x^2+1]) = 2x|_i * D(x) with D(x) = 1.
    REQUIRE(p.phi.columns.rows == 1);
    REQUIRE(p.phi.columns.cols == 1);
    CHECK(equal(p.phi.columns.at(0, 0), mul(two_i, p.D.basis[0][0])));
    CHECK(p.phi.iso);
    // Upsilon is the inverse 1x1 matrix.
    REQUIRE(p.up.defined);
    CHECK(is_identity(mat_mul(p.phi.in_relative, p.up.matrix)));
    CHECK(is_identity(mat_mul(p.up.matrix, p.phi.in_relative)));
}

TEST_CASE("node at the origin: everything is the identity") {
    Pipe p = pipe(kNode);
    CHECK(p.C.dim == 2);
    CHECK(p.D.dim == 2);
    CHECK(p.R.dim == 2);
    CHECK(is_identity(p.phi.columns));
    CHECK(is_identity(p.th.m));
    REQUIRE(p.up.defined);
    CHECK(is_identity(p.up.matrix));
}

TEST_CASE("function-field point of the line") {
    Pipe p = pipe(kCounter);
    CHECK(p.C.dim == 0);
    CHECK(p.D.dim == 1);
    // The derivation basis vector is nonzero although T_x X = 0.
    CHECK_FALSE(is_zero(p.D.basis[0][0]));
    CHECK(p.R.dim == 0);
    CHECK_FALSE(p.phi.injective);
    // theta maps a 0-dim space into the 1-dim cotangent of A~ = k(t)[t].
    CHECK(p.B.cot.dim == 1);
    CHECK_FALSE(p.th.iso);
    CHECK_FALSE(p.up.defined);
}

TEST_CASE("projection of the plane to a line at the origin") {
    Pipe p = pipe(kRelPlane);
    CHECK(p.C.dim == 2);
    CHECK(p.D.dim == 1);
    CHECK(p.R.dim == 1);
    CHECK(p.Cf.dim == 1);
    // j_x image is the class of y; the annihilator is spanned by [x]^*.
    CHECK(p.R.j_rank == 1);
    CHECK(p.phi.iso);
    // theta: [x] survives in the fiber, [y] dies.
    REQUIRE(p.th.m.rows == 1);
    REQUIRE(p.th.m.cols == 2);
    bool x_then_y = equal(p.th.m.at(0, 0), p.x.kappa->one()) && is_zero(p.th.m.at(0, 1));
    CHECK(x_then_y);
    // Lemma 2: relative kernel equals the fiber's absolute kernel.
    Lemma2Report l2 = grothendieck_base_change_check(p.D, p.x, p.fib);
    CHECK(l2.ok);
    CHECK(l2.dim_relative == 1);
}

TEST_CASE("inseparable family in characteristic 2") {
    Pipe p = pipe(kChar2);
    CHECK(p.D.dim == 1);
    CHECK(p.C.dim == 0);
    CHECK(omega_residue_dim(p.fib) == 1);
    CHECK(omega_fiber_dim(p.fib) == 1);
    ConormalReport con = conormal_sequence_check(p.fib, p.Cf, p.B, 1, 1);
    CHECK(con.delta_rank == 0);
    CHECK(con.seq5_ok);
    CHECK(con.seq6_ok);
    ExtensionReport ext = classify_extension(p.x, p.s, p.fib);
    CHECK(ext.algebraic);
    CHECK(ext.separable == false);
}

TEST_CASE("extension classification across the corpus anchors") {
    ExtensionReport qi = classify_extension(pipe(kGaussian).x, pipe(kGaussian).s,
                                            pipe(kGaussian).fib);
    CHECK(qi.algebraic);
    CHECK(qi.separable == true);
    CHECK(qi.omega_dim == 0);
    Pipe c = pipe(kCounter);
    ExtensionReport tr = classify_extension(c.x, c.s, c.fib);
    CHECK_FALSE(tr.algebraic);
    CHECK_FALSE(tr.separable.has_value());
    CHECK(tr.omega_dim == 1);
}

TEST_CASE("transcendence degrees of residue fields") {
    CHECK(transcendence_degree(Field::rationals()) == 0);
    CHECK(transcendence_degree(pipe(kGaussian).x.kappa) == 0);
    CHECK(transcendence_degree(pipe(kCounter).x.kappa) == 1);
    Pipe p2 = pipe(kChar2);
    CHECK(transcendence_degree(p2.x.kappa) == 1);
    CHECK(transcendence_degree(p2.s.kappa) == 1);
}

TEST_CASE("cotangent coordinates reject classes outside the maximal ideal") {
    Pipe p = pipe(kGaussian);
    Polynomial one = Polynomial::constant(p.x.scheme.ring, Field::rationals()->one());
    CHECK_THROWS_AS((void)p.C.coords(one), InvariantViolation);
}

TEST_CASE("analyze asserts the guaranteed identities") {
    ComparisonReport rep = analyze(parse_problem(kRelPlane));
    CHECK(rep.lemma1_ok);
    CHECK(rep.lemma2.ok);
    CHECK(rep.conormal.seq5_ok);
    CHECK(rep.conormal.seq6_ok);
    CHECK(rep.consistent);
    CHECK(rep.hypothesis);
    CHECK(rep.conclusion);
    CHECK(rep.cotangent_basis.size() == 2);
    CHECK(rep.derivation_basis.size() == 1);
}
