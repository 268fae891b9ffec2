#include "zartan/tangent.hpp"

#include "zartan/univar.hpp"

namespace zartan {

namespace {

std::vector<FElem> staircase_coords(const Polynomial& nf, const std::vector<Monomial>& st,
                                    const FieldPtr& base) {
    std::vector<FElem> out(st.size(), base->zero());
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < st.size(); ++i) index[st[i]] = i;
    for (const auto& [m, c] : nf.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw InvariantViolation("normal form leaves the staircase span");
        out[it->second] = c;
    }
    return out;
}

}  // namespace

std::vector<FElem> CotangentSpace::coords(const Polynomial& p) const {
    if (!normal_form(p, *point_gb).is_zero())
        throw InvariantViolation("class representative does not lie in the maximal ideal: " +
                                 p.str());
    if (dim == 0) return {};
    FieldPtr base = ring->coeff;
    Polynomial nf2 = normal_form(p, *gb2);
    std::vector<FElem> b = staircase_coords(nf2, st2, base);
    auto sol = solve(solver, b);
    if (!sol) throw InvariantViolation("cotangent class outside the representative span");
    std::vector<FElem> out;
    out.reserve(dim);
    for (size_t k = 0; k < dim; ++k) {
        if (kappa_trivial) {
            out.push_back((*sol)[k * d]);
            continue;
        }
        Polynomial combo(ring);
        for (size_t j = 0; j < d; ++j) combo.set_coeff(tau[j], (*sol)[k * d + j]);
        out.push_back(kappa->from_nf(combo));
    }
    return out;
}

CotangentSpace cotangent_space(const ResolvedPoint& x) {
    CotangentSpace C;
    C.ring = x.scheme.ring;
    C.point_gb = x.point_gb;
    C.kappa = x.kappa;
    C.kappa_trivial = x.kappa_trivial;
    if (x.spec.generic) {
        // The local ring at the generic point is kappa(x) itself: M_x = 0.
        C.gb2 = x.point_gb;
        C.dim = 0;
        return C;
    }
    FieldPtr base = C.ring->coeff;
    C.tau = quotient_staircase(*x.point_gb);
    C.d = C.tau.size();

    std::vector<Polynomial> gens =
        ideal_sum(ideal_product(x.point_gb->polys, x.point_gb->polys), x.scheme.ideal);
    GroebnerBasis gb2 = buchberger(C.ring, gens, x.point_gb->order);
    C.st2 = quotient_staircase(gb2);
    C.gb2 = std::make_shared<GroebnerBasis>(std::move(gb2));

    size_t base_dim = C.st2.size() - C.tau.size();
    if (base_dim % C.d != 0)
        throw InvariantViolation("cotangent base dimension is not a multiple of the residue degree");
    C.dim = base_dim / C.d;

    // Greedy kappa-basis extraction: a candidate class is independent iff
    // its tau-orbit adds a full block of base-field dimensions.
    std::vector<std::vector<FElem>> collected;
    auto orbit = [&](const Polynomial& g) {
        std::vector<std::vector<FElem>> rows;
        for (const Monomial& t : C.tau) {
            Polynomial prod = normal_form(Polynomial::term(C.ring, t, base->one()) * g, *C.gb2);
            rows.push_back(staircase_coords(prod, C.st2, base));
        }
        return rows;
    };
    for (const Polynomial& g : x.point_gb->polys) {
        if (collected.size() == base_dim) break;
        std::vector<std::vector<FElem>> rows = orbit(g);
        std::vector<std::vector<FElem>> tentative = collected;
        tentative.insert(tentative.end(), rows.begin(), rows.end());
        if (span_rank(base, tentative) == collected.size() + C.d) {
            C.reps.push_back(g);
            collected.insert(collected.end(), rows.begin(), rows.end());
        }
    }
    if (collected.size() != base_dim || span_rank(base, collected) != base_dim)
        throw InvariantViolation("cotangent basis extraction did not reach the full dimension");

    C.solver = Matrix(base, C.st2.size(), C.dim * C.d);
    for (size_t k = 0; k < C.dim; ++k) {
        std::vector<std::vector<FElem>> rows = orbit(C.reps[k]);
        for (size_t j = 0; j < C.d; ++j)
            for (size_t i = 0; i < C.st2.size(); ++i) C.solver.at(i, k * C.d + j) = rows[j][i];
    }
    return C;
}

DerivationSpace grothendieck_tangent(const ResolvedPoint& x,
                                     const std::vector<Polynomial>& pullbacks) {
    const RingPtr& ring = x.scheme.ring;
    size_t n = ring->nvars();
    DerivationSpace D;
    D.jac = Matrix(x.kappa, 0, n);
    auto add_row = [&](const Polynomial& p) {
        std::vector<FElem> row;
        row.reserve(n);
        for (size_t i = 0; i < n; ++i) row.push_back(x.eval(p.derivative(i)));
        D.jac.append_row(std::move(row));
    };
    for (const Polynomial& p : x.scheme.gb->polys) add_row(p);
    for (const Polynomial& g : pullbacks) add_row(g);
    D.basis = kernel_basis(D.jac);
    D.dim = D.basis.size();
    return D;
}

RelativeTangent zariski_relative_tangent(const MorphismPresentation& f, const ResolvedPoint& x,
                                         const ResolvedPoint& s, const CotangentSpace& C) {
    RelativeTangent R;
    if (!s.spec.generic) {
        CoeffMap id = [](const FElem& c) { return c; };
        for (const Polynomial& q : s.point_gb->polys) {
            Polynomial pulled = q.substitute(x.scheme.ring, f.pullbacks, id);
            R.j_rows.push_back(C.coords(pulled));
        }
    }
    R.j_rank = span_rank(x.kappa, R.j_rows);
    Matrix jm(x.kappa, R.j_rows.size(), C.dim);
    for (size_t i = 0; i < R.j_rows.size(); ++i) jm.a[i] = R.j_rows[i];
    R.basis = kernel_basis(jm);
    R.dim = R.basis.size();
    if (R.dim != C.dim - R.j_rank)
        throw InvariantViolation("annihilator dimension mismatch in the relative tangent");
    return R;
}

BaseChange base_change(const ResolvedPoint& x, const EmbeddingMap& ix, const Fiber& fib,
                       const Options& opts) {
    FieldPtr kx = x.kappa;
    RingPtr rt = Ring::make(kx, fib.pres.ring->vars);
    CoeffMap lift = ix.as_coeff_map();
    std::vector<Polynomial> ideal_t;
    for (const Polynomial& g : fib.pres.ideal) ideal_t.push_back(g.map_coeffs(rt, lift));

    BaseChange B;
    B.pres = AffinePresentation::make(rt, std::move(ideal_t), opts.order);
    PointSpec ps;
    for (size_t i = 0; i < rt->nvars(); ++i)
        ps.tower.push_back(Polynomial::variable(rt, i) -
                           Polynomial::constant(rt, x.coords[i]));
    Options o2 = opts;
    o2.trust_point = true;  // linear steps need no certification
    std::mt19937_64 rng(opts.seed);
    B.point = resolve_point(B.pres, ps, o2, rng);
    if (!B.point.kappa_trivial)
        throw InvariantViolation("the base-changed point is not rational over kappa(x)");
    B.cot = cotangent_space(B.point);
    return B;
}

ThetaReport theta_map(const CotangentSpace& C, const BaseChange& B) {
    FieldPtr kx = B.point.kappa;
    const RingPtr& rt = B.pres.ring;
    CoeffMap lift = [kx](const FElem& c) { return embed_into(kx, c); };
    ThetaReport th;
    th.m = Matrix(kx, B.cot.dim, C.dim);
    for (size_t k = 0; k < C.reps.size(); ++k) {
        std::vector<FElem> col = B.cot.coords(C.reps[k].map_coeffs(rt, lift));
        for (size_t i = 0; i < B.cot.dim; ++i) th.m.at(i, k) = col[i];
    }
    th.rank = rank(th.m);
    th.injective = th.rank == C.dim;
    th.surjective = th.rank == B.cot.dim;
    th.iso = th.injective && th.surjective;
    return th;
}

PhiReport phi_map(const DerivationSpace& D, const CotangentSpace& C, const RelativeTangent& R,
                  const ResolvedPoint& x) {
    size_t n = x.scheme.ring->nvars();
    PhiReport phi;
    phi.columns = Matrix(x.kappa, C.dim, D.dim);
    for (size_t l = 0; l < D.dim; ++l) {
        for (size_t k = 0; k < C.dim; ++k) {
            FElem v = x.kappa->zero();
            for (size_t i = 0; i < n; ++i)
                v = add(v, mul(x.eval(C.reps[k].derivative(i)), D.basis[l][i]));
            phi.columns.at(k, l) = v;
        }
        // Section 3 well-definedness: the column must annihilate every
        // j_x-image class.
        for (const auto& row : R.j_rows) {
            FElem v = x.kappa->zero();
            for (size_t k = 0; k < C.dim; ++k) v = add(v, mul(row[k], phi.columns.at(k, l)));
            if (!is_zero(v))
                throw InvariantViolation("a Phi column escapes the relative tangent space");
        }
    }
    // Express the columns in the chosen T^(Zar) basis.
    Matrix basis_m(x.kappa, C.dim, R.dim);
    for (size_t j = 0; j < R.dim; ++j)
        for (size_t k = 0; k < C.dim; ++k) basis_m.at(k, j) = R.basis[j][k];
    phi.in_relative = Matrix(x.kappa, R.dim, D.dim);
    for (size_t l = 0; l < D.dim; ++l) {
        std::vector<FElem> col(C.dim, x.kappa->zero());
        for (size_t k = 0; k < C.dim; ++k) col[k] = phi.columns.at(k, l);
        auto sol = solve(basis_m, col);
        if (!sol) throw InvariantViolation("a Phi column escapes the relative tangent space");
        for (size_t j = 0; j < R.dim; ++j) phi.in_relative.at(j, l) = (*sol)[j];
    }
    phi.rank = rank(phi.columns);
    phi.injective = phi.rank == D.dim;
    phi.surjective_onto_relative = phi.rank == R.dim;
    phi.iso = phi.injective && phi.surjective_onto_relative;
    return phi;
}

UpsilonReport upsilon_map(const BaseChange& B, const ThetaReport& th, const CotangentSpace& C,
                          const RelativeTangent& R, const DerivationSpace& D,
                          const ResolvedPoint& x) {
    UpsilonReport up;
    up.defined = th.iso;
    if (!up.defined) return up;
    FieldPtr kx = x.kappa;
    size_t n = x.scheme.ring->nvars();

    auto inv = inverse(th.m);
    if (!inv) throw InvariantViolation("theta reported iso but is not invertible");

    // theta^{-1} [x_i - x_i(x)] in C-coordinates, per variable.
    std::vector<std::vector<FElem>> pre(n);
    for (size_t i = 0; i < n; ++i) {
        Polynomial lin = Polynomial::variable(B.pres.ring, i) -
                         Polynomial::constant(B.pres.ring, x.coords[i]);
        pre[i] = mat_vec(*inv, B.cot.coords(lin));
    }

    for (const auto& v : R.basis) {
        std::vector<FElem> dvec(n, kx->zero());
        for (size_t i = 0; i < n; ++i) {
            FElem acc = kx->zero();
            for (size_t k = 0; k < C.dim; ++k) acc = add(acc, mul(pre[i][k], v[k]));
            dvec[i] = acc;
        }
        for (const FElem& r : mat_vec(D.jac, dvec))
            if (!is_zero(r))
                throw InvariantViolation("an Upsilon image violates the derivation constraints");
        up.d_vectors.push_back(std::move(dvec));
    }

    // Upsilon in the T^(Gro) basis.
    Matrix dm(kx, n, D.dim);
    for (size_t j = 0; j < D.dim; ++j)
        for (size_t i = 0; i < n; ++i) dm.at(i, j) = D.basis[j][i];
    up.matrix = Matrix(kx, D.dim, R.dim);
    for (size_t l = 0; l < up.d_vectors.size(); ++l) {
        auto sol = solve(dm, up.d_vectors[l]);
        if (!sol) throw InvariantViolation("an Upsilon image escapes the derivation space");
        for (size_t j = 0; j < D.dim; ++j) up.matrix.at(j, l) = (*sol)[j];
    }
    return up;
}

namespace {

Matrix point_jacobian(const std::vector<Polynomial>& polys, const ResolvedPoint& pt) {
    size_t n = pt.scheme.ring->nvars();
    Matrix m(pt.kappa, 0, n);
    for (const Polynomial& p : polys) {
        std::vector<FElem> row;
        row.reserve(n);
        for (size_t i = 0; i < n; ++i) row.push_back(pt.eval(p.derivative(i)));
        m.append_row(std::move(row));
    }
    return m;
}

}  // namespace

size_t omega_residue_dim(const Fiber& fib) {
    size_t n = fib.pres.ring->nvars();
    return n - rank(point_jacobian(fib.point.point_gb->polys, fib.point));
}

size_t omega_fiber_dim(const Fiber& fib) {
    size_t n = fib.pres.ring->nvars();
    return n - rank(point_jacobian(fib.pres.gb->polys, fib.point));
}

long transcendence_degree(const FieldPtr& k) {
    switch (k->kind) {
        case Field::Kind::Rationals:
        case Field::Kind::PrimeField:
            return 0;
        case Field::Kind::Quotient:
            return transcendence_degree(k->coeff_field());
        case Field::Kind::Fraction:
            return transcendence_degree(k->coeff_field()) + krull_dimension(*k->gb);
    }
    return 0;
}

ExtensionReport classify_extension(const ResolvedPoint& x, const ResolvedPoint& s,
                                   const Fiber& fib) {
    ExtensionReport e;
    e.algebraic = transcendence_degree(x.kappa) == transcendence_degree(s.kappa);
    e.omega_dim = omega_residue_dim(fib);
    long long p = x.kappa->characteristic();
    if (e.algebraic) e.separable = (p == 0) ? true : (e.omega_dim == 0);

    // gcd cross-check over a finite kappa(s)-presentation, when available.
    const FieldPtr& kf = fib.point.kappa;
    bool finite_pres = !fib.point.kappa_trivial &&
                       (kf->kind == Field::Kind::Quotient ||
                        (kf->kind == Field::Kind::Fraction && zero_dimensional(*kf->gb)));
    if (finite_pres) {
        bool gcd_separable = true;
        for (const FElem& gen : fib.point.coords) {
            UPoly mu = minimal_polynomial(gen);
            if (upoly_gcd(mu, mu.derivative()).deg() != 0) gcd_separable = false;
        }
        if (e.separable.has_value() && *e.separable != gcd_separable)
            throw InvariantViolation(
                "the Omega separability criterion disagrees with the gcd criterion");
    }
    return e;
}

ConormalReport conormal_sequence_check(const Fiber& fib, const CotangentSpace& fiberC,
                                       const BaseChange& B, size_t omega_fib, size_t omega_res) {
    ConormalReport r;
    Matrix j = point_jacobian(fib.pres.gb->polys, fib.point);
    size_t base_rank = rank(j);
    Matrix jg = j;
    for (const Polynomial& m : fiberC.reps) {
        std::vector<FElem> row;
        for (size_t i = 0; i < fib.pres.ring->nvars(); ++i)
            row.push_back(fib.point.eval(m.derivative(i)));
        jg.append_row(std::move(row));
    }
    r.delta_rank = rank(jg) - base_rank;
    r.seq5_ok = (r.delta_rank == omega_fib - omega_res);

    size_t n = B.pres.ring->nvars();
    size_t omega_tilde = n - rank(point_jacobian(B.pres.gb->polys, B.point));
    r.seq6_ok = (B.cot.dim == omega_tilde);
    return r;
}

Lemma2Report grothendieck_base_change_check(const DerivationSpace& D, const ResolvedPoint& x,
                                            const Fiber& fib) {
    Lemma2Report r;
    r.dim_relative = D.dim;
    Matrix jf = point_jacobian(fib.pres.gb->polys, fib.point);
    auto absolute = kernel_basis(jf);
    r.dim_fiber_absolute = absolute.size();
    if (r.dim_relative != r.dim_fiber_absolute) return r;

    // Identify the kernels coordinatewise through kappa(x) -> kappa on the
    // fiber (the variables map to the fiber coordinates of the point).
    EmbeddingMap h{x.kappa, fib.point.kappa, fib.point.coords};
    std::vector<std::vector<FElem>> mapped;
    for (const auto& v : D.basis) {
        std::vector<FElem> w;
        w.reserve(v.size());
        for (const FElem& c : v) w.push_back(h.apply(c));
        mapped.push_back(std::move(w));
    }
    r.ok = same_span(fib.point.kappa, mapped, absolute);
    return r;
}

}  // namespace zartan
