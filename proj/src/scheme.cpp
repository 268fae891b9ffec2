#include "zartan/scheme.hpp"

#include "zartan/linalg.hpp"
#include "zartan/univar.hpp"

namespace zartan {

AffinePresentation AffinePresentation::make(RingPtr ring, std::vector<Polynomial> ideal,
                                            MonomialOrder::Kind order) {
    for (const Polynomial& p : ideal)
        if (!p.is_zero() && !p.ring()->same(*ring))
            throw SemanticError("ideal generator from a different ring");
    GroebnerBasis gb = buchberger(ring, ideal, MonomialOrder::make(order, ring->nvars()));
    if (is_unit_ideal(gb)) throw UnitIdeal("the presented scheme is empty (unit ideal)");
    return AffinePresentation{std::move(ring), std::move(ideal),
                              std::make_shared<GroebnerBasis>(std::move(gb))};
}

FElem coeff_to_ext(const FieldPtr& ext, const FElem& c) {
    if (same_field(c.field(), ext)) return c;
    switch (ext->kind) {
        case Field::Kind::Quotient:
            return ext->from_nf(Polynomial::constant(ext->ring(), c));
        case Field::Kind::Fraction:
            return ext->from_frac(Polynomial::constant(ext->ring(), c),
                                  Polynomial::constant(ext->ring(), ext->ring()->coeff->from_int(1)));
        default:
            throw SemanticError("cannot lift a coefficient into " + ext->name());
    }
}

FElem embed_into(const FieldPtr& cod, const FElem& e) {
    if (same_field(e.field(), cod)) return e;
    switch (cod->kind) {
        case Field::Kind::Quotient:
        case Field::Kind::Fraction:
            return coeff_to_ext(cod, embed_into(cod->coeff_field(), e));
        default:
            return embed_scalar(cod, e);
    }
}

namespace {

// Validates step i of a triangular system: only the first i+1 variables
// occur and the polynomial is monic in variable i with a pure top term.
void validate_tower_step(const RingPtr& ring, const Polynomial& p, size_t i) {
    const std::string& vn = ring->vars[i];
    for (size_t k = i + 1; k < ring->nvars(); ++k)
        if (p.degree_in(k) != 0)
            throw SemanticError("tower step for " + vn + " involves the later variable " +
                                ring->vars[k]);
    unsigned d = p.degree_in(i);
    if (d == 0)
        throw SemanticError("tower step for " + vn + " does not involve " + vn);
    size_t top_terms = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m[i] != d) continue;
        ++top_terms;
        for (size_t k = 0; k < ring->nvars(); ++k)
            if (k != i && m[k] != 0)
                throw SemanticError("tower step for " + vn + " is not monic in " + vn);
        if (!equal(c, ring->coeff->one()))
            throw SemanticError("tower step for " + vn + " is not monic in " + vn);
    }
    if (top_terms != 1)
        throw SemanticError("tower step for " + vn + " is not monic in " + vn);
}

// Certifies each tower step irreducible over the field generated by the
// previous steps, where a decision procedure exists.  A reducible step is
// refuted with an explicit factor.
void certify_tower(const RingPtr& ring, const std::vector<Polynomial>& tower,
                   std::mt19937_64& rng) {
    FieldPtr coeff = ring->coeff;
    for (size_t i = 0; i < tower.size(); ++i) {
        FieldPtr K = coeff;
        std::vector<FElem> alpha;  // images of the first i variables in K
        if (i > 0) {
            std::vector<std::string> pv(ring->vars.begin(), ring->vars.begin() + i);
            RingPtr rp = Ring::make(coeff, pv);
            std::vector<Polynomial> images;
            for (size_t k = 0; k < ring->nvars(); ++k)
                images.push_back(k < i ? Polynomial::variable(rp, k) : Polynomial::zero(rp));
            CoeffMap id = [](const FElem& c) { return c; };
            std::vector<Polynomial> prefix;
            for (size_t j = 0; j < i; ++j) prefix.push_back(tower[j].substitute(rp, images, id));
            GroebnerBasis gbp = buchberger(rp, prefix, MonomialOrder::lex(i));
            auto st = quotient_staircase(gbp);
            if (st.size() == 1) {
                for (size_t k = 0; k < i; ++k)
                    alpha.push_back(
                        normal_form(Polynomial::variable(rp, k), gbp).constant_value());
            } else {
                K = Field::quotient(std::make_shared<GroebnerBasis>(std::move(gbp)));
                for (size_t k = 0; k < i; ++k) alpha.push_back(K->generator(k));
            }
        }
        unsigned d = tower[i].degree_in(i);
        std::vector<FElem> uc(d + 1, K->zero());
        for (const auto& [m, c] : tower[i].terms()) {
            FElem val = coeff_to_ext(K, c);
            for (size_t k = 0; k < i; ++k)
                if (m[k] != 0) val = mul(val, pow_el(alpha[k], mpz_class(m[k])));
            uc[m[i]] = add(uc[m[i]], val);
        }
        IrredResult res = irreducibility_check(UPoly(K, std::move(uc)), rng, false);
        if (res.status == IrredStatus::Reducible) {
            std::string w = res.factor.str(ring->vars[i]);
            throw ReducibleTowerStep("tower step " + tower[i].str() + " is reducible over " +
                                         K->name() + "; the proper factor " + w +
                                         " is a zero divisor in the alleged residue field",
                                     w);
        }
    }
}

ResolvedPoint finish_closed(AffinePresentation scheme, PointSpec spec, GroebnerBasis pgb) {
    ResolvedPoint r;
    r.scheme = std::move(scheme);
    r.spec = std::move(spec);
    const RingPtr& ring = r.scheme.ring;
    auto st = quotient_staircase(pgb);  // throws NotZeroDimensional
    r.point_gb = std::make_shared<GroebnerBasis>(std::move(pgb));
    if (st.size() == 1) {
        r.kappa = ring->coeff;
        r.kappa_trivial = true;
        for (size_t i = 0; i < ring->nvars(); ++i)
            r.coords.push_back(
                normal_form(Polynomial::variable(ring, i), *r.point_gb).constant_value());
        r.embed = [](const FElem& c) { return c; };
    } else {
        r.kappa = Field::quotient(r.point_gb);
        for (size_t i = 0; i < ring->nvars(); ++i)
            r.coords.push_back(r.kappa->from_nf(normal_form(Polynomial::variable(ring, i),
                                                            *r.point_gb)));
        FieldPtr kappa = r.kappa;
        r.embed = [kappa](const FElem& c) { return coeff_to_ext(kappa, c); };
    }
    return r;
}

ResolvedPoint finish_generic(AffinePresentation scheme) {
    ResolvedPoint r;
    r.scheme = std::move(scheme);
    r.spec.generic = true;
    r.point_gb = r.scheme.gb;
    const RingPtr& ring = r.scheme.ring;
    if (ring->nvars() == 0) {
        r.kappa = ring->coeff;
        r.kappa_trivial = true;
        r.embed = [](const FElem& c) { return c; };
    } else {
        r.kappa = Field::fraction(r.scheme.gb);
        for (size_t i = 0; i < ring->nvars(); ++i) r.coords.push_back(r.kappa->generator(i));
        FieldPtr kappa = r.kappa;
        r.embed = [kappa](const FElem& c) { return coeff_to_ext(kappa, c); };
    }
    return r;
}

}  // namespace

ResolvedPoint resolve_point(const AffinePresentation& scheme, const PointSpec& spec,
                            const Options& opts, std::mt19937_64& rng) {
    if (spec.generic) return finish_generic(scheme);

    const RingPtr& ring = scheme.ring;
    size_t n = ring->nvars();
    if (spec.tower.size() != n)
        throw SemanticError("a closed point needs one tower polynomial per variable (" +
                            std::to_string(n) + " expected, " +
                            std::to_string(spec.tower.size()) + " given)");
    for (size_t i = 0; i < n; ++i) validate_tower_step(ring, spec.tower[i], i);

    GroebnerBasis pgb = buchberger(ring, spec.tower, MonomialOrder::lex(n));
    if (is_unit_ideal(pgb))
        throw SemanticError("the tower generates the unit ideal");
    for (const Polynomial& g : scheme.ideal)
        if (!normal_form(g, pgb).is_zero())
            throw PointNotOnScheme("the point does not lie on the scheme: " + g.str() +
                                   " does not vanish at it");
    if (!opts.trust_point) certify_tower(ring, spec.tower, rng);
    return finish_closed(scheme, spec, std::move(pgb));
}

MorphismPresentation MorphismPresentation::make(AffinePresentation X, AffinePresentation S,
                                                std::vector<Polynomial> pullbacks) {
    if (pullbacks.size() != S.ring->nvars())
        throw SemanticError("the morphism needs one pullback per base variable");
    CoeffMap id = [](const FElem& c) { return c; };
    for (const Polynomial& h : S.ideal) {
        Polynomial img = h.substitute(X.ring, pullbacks, id);
        if (!normal_form(img, *X.gb).is_zero())
            throw SemanticError("the pullbacks do not define a morphism: " + h.str() +
                                " does not map into the ideal of the source");
    }
    return MorphismPresentation{std::move(X), std::move(S), std::move(pullbacks)};
}

FElem EmbeddingMap::apply(const FElem& e) const {
    switch (e.field()->kind) {
        case Field::Kind::Rationals:
        case Field::Kind::PrimeField:
            return embed_into(cod, e);
        case Field::Kind::Quotient: {
            const Polynomial& nf = *std::get<QuotRep>(e.v_).nf;
            FieldPtr c = cod;
            return nf.evaluate(var_images, [c](const FElem& a) { return embed_into(c, a); });
        }
        case Field::Kind::Fraction: {
            const FracRep& fr = std::get<FracRep>(e.v_);
            FieldPtr c = cod;
            CoeffMap em = [c](const FElem& a) { return embed_into(c, a); };
            FElem num = fr.num->evaluate(var_images, em);
            FElem den = fr.den->evaluate(var_images, em);
            if (is_zero(den))
                throw PointImageMismatch("the point does not dominate the base point: " +
                                         fr.den->str() + " maps to zero");
            return divide(num, den);
        }
    }
    throw InvariantViolation("unreachable field kind");
}

CoeffMap EmbeddingMap::as_coeff_map() const {
    EmbeddingMap copy = *this;
    return [copy](const FElem& e) { return copy.apply(e); };
}

EmbeddingMap verify_image(const MorphismPresentation& f, const ResolvedPoint& x,
                          const ResolvedPoint& s) {
    std::vector<FElem> images;
    for (const Polynomial& g : f.pullbacks) images.push_back(x.eval(g));
    EmbeddingMap em{s.kappa, x.kappa, images};
    if (!s.spec.generic) {
        FieldPtr kx = x.kappa;
        CoeffMap base = [kx](const FElem& c) { return embed_into(kx, c); };
        for (const Polynomial& p : s.point_gb->polys) {
            if (!is_zero(p.evaluate(images, base)))
                throw PointImageMismatch("the point does not map to the given base point: " +
                                         p.str() + " does not vanish on its image");
        }
    }
    return em;
}

Fiber build_fiber(const MorphismPresentation& f, const ResolvedPoint& x,
                  const ResolvedPoint& s, const Options& opts) {
    FieldPtr ks = s.kappa;
    RingPtr rf = Ring::make(ks, f.X.ring->vars);
    CoeffMap lift = [ks](const FElem& c) { return embed_into(ks, c); };

    std::vector<Polynomial> gens;
    for (const Polynomial& g : f.X.ideal) gens.push_back(g.map_coeffs(rf, lift));
    for (size_t j = 0; j < f.pullbacks.size(); ++j)
        gens.push_back(f.pullbacks[j].map_coeffs(rf, lift) -
                       Polynomial::constant(rf, s.coords[j]));

    Fiber fib;
    try {
        fib.pres = AffinePresentation::make(rf, std::move(gens), opts.order);
    } catch (const UnitIdeal&) {
        throw PointImageMismatch("the fiber over the base point is empty");
    }

    if (x.spec.generic) {
        fib.point = finish_generic(fib.pres);
        return fib;
    }
    std::vector<Polynomial> tower;
    for (const Polynomial& t : x.spec.tower) tower.push_back(t.map_coeffs(rf, lift));
    std::vector<Polynomial> pg = fib.pres.gb->polys;
    pg.insert(pg.end(), tower.begin(), tower.end());
    GroebnerBasis pgb = buchberger(rf, pg, MonomialOrder::lex(rf->nvars()));
    if (is_unit_ideal(pgb))
        throw PointImageMismatch("the point does not lie on the fiber over the base point");
    fib.point = finish_closed(fib.pres, x.spec, std::move(pgb));
    return fib;
}

}  // namespace zartan
