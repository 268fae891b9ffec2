#include "zartan/field.hpp"

#include <sstream>

#include "zartan/groebner.hpp"
#include "zartan/linalg.hpp"
#include "zartan/poly.hpp"

namespace zartan {

Field::~Field() = default;

FieldPtr Field::rationals() {
    static FieldPtr q = [] {
        auto f = std::make_shared<Field>();
        f->kind = Kind::Rationals;
        return f;
    }();
    return q;
}

FieldPtr Field::prime_field(long long p) {
    if (p < 2) throw SemanticError("characteristic must be a prime");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw SemanticError("characteristic " + std::to_string(p) + " is not prime");
    auto f = std::make_shared<Field>();
    f->kind = Kind::PrimeField;
    f->p = p;
    return f;
}

FieldPtr Field::quotient(GbPtr gb) {
    auto f = std::make_shared<Field>();
    f->kind = Kind::Quotient;
    f->gb = std::move(gb);
    f->staircase = quotient_staircase(*f->gb);
    if (f->staircase.empty())
        throw SemanticError("quotient by the unit ideal is not a field");
    return f;
}

FieldPtr Field::fraction(GbPtr gb) {
    if (is_unit_ideal(*gb))
        throw SemanticError("fraction field of the zero ring is not defined");
    auto f = std::make_shared<Field>();
    f->kind = Kind::Fraction;
    f->gb = std::move(gb);
    return f;
}

const RingPtr& Field::ring() const {
    if (kind != Kind::Quotient && kind != Kind::Fraction)
        throw SemanticError("base fields have no presentation ring");
    return gb->ring;
}

FieldPtr Field::coeff_field() const { return ring()->coeff; }

long long Field::characteristic() const {
    switch (kind) {
        case Kind::Rationals: return 0;
        case Kind::PrimeField: return p;
        default: return ring()->coeff->characteristic();
    }
}

bool Field::finite() const { return cardinality().has_value(); }

std::optional<mpz_class> Field::cardinality() const {
    switch (kind) {
        case Kind::Rationals:
            return std::nullopt;
        case Kind::PrimeField:
            return mpz_class(static_cast<long>(p));
        case Kind::Quotient: {
            auto base = ring()->coeff->cardinality();
            if (!base) return std::nullopt;
            mpz_class card = 1;
            for (size_t i = 0; i < staircase.size(); ++i) card *= *base;
            return card;
        }
        case Kind::Fraction: {
            if (!zero_dimensional(*gb)) return std::nullopt;
            auto base = ring()->coeff->cardinality();
            if (!base) return std::nullopt;
            size_t d = quotient_staircase(*gb).size();
            mpz_class card = 1;
            for (size_t i = 0; i < d; ++i) card *= *base;
            return card;
        }
    }
    return std::nullopt;
}

size_t Field::degree_over_coeff() const {
    if (kind != Kind::Quotient) throw SemanticError("degree_over_coeff: not a quotient field");
    return staircase.size();
}

FElem Field::zero() const { return from_int(0); }
FElem Field::one() const { return from_int(1); }

FElem Field::from_int(long long n) const {
    FElem e;
    e.fld_ = shared_from_this();
    switch (kind) {
        case Kind::Rationals:
            e.v_ = mpq_class(static_cast<long>(n));
            break;
        case Kind::PrimeField: {
            long long v = n % p;
            if (v < 0) v += p;
            e.v_ = v;
            break;
        }
        case Kind::Quotient:
            e.v_ = QuotRep{std::make_shared<Polynomial>(
                Polynomial::constant(ring(), ring()->coeff->from_int(n)))};
            break;
        case Kind::Fraction:
            e.v_ = FracRep{std::make_shared<Polynomial>(
                               Polynomial::constant(ring(), ring()->coeff->from_int(n))),
                           std::make_shared<Polynomial>(
                               Polynomial::constant(ring(), ring()->coeff->from_int(1)))};
            break;
    }
    return e;
}

FElem Field::from_mpq(const mpq_class& q) const {
    FElem e;
    e.fld_ = shared_from_this();
    switch (kind) {
        case Kind::Rationals:
            e.v_ = q;
            break;
        case Kind::PrimeField: {
            mpz_class pz(static_cast<long>(p));
            mpz_class num = q.get_num() % pz;
            mpz_class den = q.get_den() % pz;
            if (den == 0)
                throw SemanticError("rational coefficient with denominator divisible by " +
                                    std::to_string(p));
            long long n = num.get_si();
            if (n < 0) n += p;
            FElem nn = from_int(n);
            FElem dd = from_int(den.get_si());
            return divide(nn, dd);
        }
        default: {
            FElem c = ring()->coeff->from_mpq(q);
            if (kind == Kind::Quotient) {
                e.v_ = QuotRep{std::make_shared<Polynomial>(Polynomial::constant(ring(), c))};
            } else {
                e.v_ = FracRep{std::make_shared<Polynomial>(Polynomial::constant(ring(), c)),
                               std::make_shared<Polynomial>(
                                   Polynomial::constant(ring(), ring()->coeff->from_int(1)))};
            }
            break;
        }
    }
    return e;
}

FElem Field::generator(size_t var) const {
    Polynomial v = Polynomial::variable(ring(), var);
    if (kind == Kind::Quotient) return from_nf(normal_form(v, *gb));
    return from_frac(normal_form(v, *gb), Polynomial::constant(ring(), ring()->coeff->from_int(1)));
}

FElem Field::from_nf(const Polynomial& nf) const {
    if (kind != Kind::Quotient) throw SemanticError("from_nf: not a quotient field");
    FElem e;
    e.fld_ = shared_from_this();
    e.v_ = QuotRep{std::make_shared<Polynomial>(nf)};
    return e;
}

FElem Field::from_frac(const Polynomial& num, const Polynomial& den) const {
    if (kind != Kind::Fraction) throw SemanticError("from_frac: not a fraction field");
    if (den.is_zero())
        throw SemanticError("fraction with zero denominator");
    FElem e;
    e.fld_ = shared_from_this();
    e.v_ = FracRep{std::make_shared<Polynomial>(num), std::make_shared<Polynomial>(den)};
    return e;
}

bool Field::same(const Field& o) const {
    if (this == &o) return true;
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Rationals: return true;
        case Kind::PrimeField: return p == o.p;
        default:
            return ring()->same(*o.ring()) && gb->polys == o.gb->polys;
    }
}

std::string Field::name() const {
    switch (kind) {
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "F" + std::to_string(p);
        case Kind::Quotient: {
            std::string s = ring()->coeff->name() + "[";
            for (size_t i = 0; i < ring()->vars.size(); ++i)
                s += (i ? "," : "") + ring()->vars[i];
            s += "]/(";
            for (size_t i = 0; i < gb->polys.size(); ++i)
                s += (i ? ", " : "") + gb->polys[i].str();
            return s + ")";
        }
        case Kind::Fraction: {
            std::string s = "Frac(" + ring()->coeff->name() + "[";
            for (size_t i = 0; i < ring()->vars.size(); ++i)
                s += (i ? "," : "") + ring()->vars[i];
            s += "]";
            if (!gb->polys.empty()) {
                s += "/(";
                for (size_t i = 0; i < gb->polys.size(); ++i)
                    s += (i ? ", " : "") + gb->polys[i].str();
                s += ")";
            }
            return s + ")";
        }
    }
    return "?";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same(*b);
}

namespace {

void check_compatible(const FElem& a, const FElem& b) {
    if (!a.valid() || !b.valid()) throw SemanticError("arithmetic on uninitialized field element");
    if (!same_field(a.field(), b.field()))
        throw SemanticError("arithmetic mixes elements of distinct fields (" +
                            a.field()->name() + " vs " + b.field()->name() + ")");
}

long long mod_inv(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw SemanticError("element not invertible modulo " + std::to_string(p));
    if (t < 0) t += p;
    return t;
}

const Polynomial& quot_nf(const FElem& e) { return *std::get<QuotRep>(e.v_).nf; }
const FracRep& frac_rep(const FElem& e) { return std::get<FracRep>(e.v_); }

FElem wrap_quot(const FieldPtr& f, Polynomial nf) {
    FElem e;
    e.fld_ = f;
    e.v_ = QuotRep{std::make_shared<Polynomial>(std::move(nf))};
    return e;
}

FElem wrap_frac(const FieldPtr& f, Polynomial num, Polynomial den) {
    if (den.is_zero()) {
        // Two nonzero denominators multiplied to zero modulo the defining
        // ideal: a certificate that the asserted prime is not prime.
        throw ZeroDivisorWitness("zero divisor encountered in fraction field " + f->name() +
                                     "; the defining ideal is not prime",
                                 "0 denominator product");
    }
    FElem e;
    e.fld_ = f;
    e.v_ = FracRep{std::make_shared<Polynomial>(std::move(num)),
                   std::make_shared<Polynomial>(std::move(den))};
    return e;
}

}  // namespace

FElem add(const FElem& a, const FElem& b) {
    check_compatible(a, b);
    const Field& f = *a.field();
    FElem r;
    r.fld_ = a.field();
    switch (f.kind) {
        case Field::Kind::Rationals:
            r.v_ = mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_));
            return r;
        case Field::Kind::PrimeField:
            r.v_ = (std::get<long long>(a.v_) + std::get<long long>(b.v_)) % f.p;
            return r;
        case Field::Kind::Quotient:
            return wrap_quot(a.field(), quot_nf(a) + quot_nf(b));
        case Field::Kind::Fraction: {
            const auto& x = frac_rep(a);
            const auto& y = frac_rep(b);
            Polynomial num = normal_form(*x.num * *y.den + *y.num * *x.den, *f.gb);
            Polynomial den = normal_form(*x.den * *y.den, *f.gb);
            return wrap_frac(a.field(), std::move(num), std::move(den));
        }
    }
    throw InvariantViolation("unreachable field kind");
}

FElem neg(const FElem& a) {
    if (!a.valid()) throw SemanticError("neg of uninitialized element");
    const Field& f = *a.field();
    FElem r;
    r.fld_ = a.field();
    switch (f.kind) {
        case Field::Kind::Rationals:
            r.v_ = mpq_class(-std::get<mpq_class>(a.v_));
            return r;
        case Field::Kind::PrimeField: {
            long long v = std::get<long long>(a.v_);
            r.v_ = v == 0 ? 0 : f.p - v;
            return r;
        }
        case Field::Kind::Quotient:
            return wrap_quot(a.field(), -quot_nf(a));
        case Field::Kind::Fraction: {
            const auto& x = frac_rep(a);
            return wrap_frac(a.field(), -*x.num, *x.den);
        }
    }
    throw InvariantViolation("unreachable field kind");
}

FElem sub(const FElem& a, const FElem& b) { return add(a, neg(b)); }

FElem mul(const FElem& a, const FElem& b) {
    check_compatible(a, b);
    const Field& f = *a.field();
    FElem r;
    r.fld_ = a.field();
    switch (f.kind) {
        case Field::Kind::Rationals:
            r.v_ = mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_));
            return r;
        case Field::Kind::PrimeField:
            r.v_ = (std::get<long long>(a.v_) * std::get<long long>(b.v_)) % f.p;
            return r;
        case Field::Kind::Quotient:
            return wrap_quot(a.field(), normal_form(quot_nf(a) * quot_nf(b), *f.gb));
        case Field::Kind::Fraction: {
            const auto& x = frac_rep(a);
            const auto& y = frac_rep(b);
            Polynomial num = normal_form(*x.num * *y.num, *f.gb);
            Polynomial den = normal_form(*x.den * *y.den, *f.gb);
            if (den.is_zero() && !x.den->is_zero() && !y.den->is_zero())
                throw ZeroDivisorWitness(
                    "zero divisor in " + f.name() + ": (" + x.den->str() + ")*(" + y.den->str() +
                        ") = 0; the defining ideal is not prime",
                    x.den->str());
            return wrap_frac(a.field(), std::move(num), std::move(den));
        }
    }
    throw InvariantViolation("unreachable field kind");
}

bool is_zero(const FElem& a) {
    if (!a.valid()) throw SemanticError("is_zero of uninitialized element");
    switch (a.field()->kind) {
        case Field::Kind::Rationals: return std::get<mpq_class>(a.v_) == 0;
        case Field::Kind::PrimeField: return std::get<long long>(a.v_) == 0;
        case Field::Kind::Quotient: return quot_nf(a).is_zero();
        case Field::Kind::Fraction: return frac_rep(a).num->is_zero();
    }
    return false;
}

bool equal(const FElem& a, const FElem& b) {
    check_compatible(a, b);
    const Field& f = *a.field();
    switch (f.kind) {
        case Field::Kind::Rationals:
            return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
        case Field::Kind::PrimeField:
            return std::get<long long>(a.v_) == std::get<long long>(b.v_);
        case Field::Kind::Quotient:
            return quot_nf(a) == quot_nf(b);
        case Field::Kind::Fraction: {
            // a/b = c/d iff ad - bc lies in the defining ideal.
            const auto& x = frac_rep(a);
            const auto& y = frac_rep(b);
            return normal_form(*x.num * *y.den - *y.num * *x.den, *f.gb).is_zero();
        }
    }
    return false;
}

FElem invert(const FElem& a) {
    if (!a.valid()) throw SemanticError("invert of uninitialized element");
    const Field& f = *a.field();
    if (is_zero(a)) throw SemanticError("division by zero in " + f.name());
    FElem r;
    r.fld_ = a.field();
    switch (f.kind) {
        case Field::Kind::Rationals:
            r.v_ = mpq_class(1 / std::get<mpq_class>(a.v_));
            return r;
        case Field::Kind::PrimeField:
            r.v_ = mod_inv(std::get<long long>(a.v_), f.p);
            return r;
        case Field::Kind::Quotient: {
            // Inversion by linear solve over the coefficient field, so a
            // failure yields a zero-divisor certificate for the point ideal.
            const auto& st = f.staircase;
            const RingPtr& rg = f.ring();
            FieldPtr base = rg->coeff;
            std::map<Monomial, size_t> index;
            for (size_t i = 0; i < st.size(); ++i) index[st[i]] = i;
            Matrix m(base, st.size(), st.size());
            for (size_t j = 0; j < st.size(); ++j) {
                Polynomial prod =
                    normal_form(quot_nf(a) * Polynomial::term(rg, st[j], base->one()), *f.gb);
                for (const auto& [mono, c] : prod.terms()) m.at(index.at(mono), j) = c;
            }
            auto ker = kernel_basis(m);
            if (!ker.empty()) {
                Polynomial w(rg);
                for (size_t j = 0; j < st.size(); ++j) w.set_coeff(st[j], ker[0][j]);
                throw ZeroDivisorWitness(
                    "zero divisor in " + f.name() + ": (" + quot_nf(a).str() + ")*(" + w.str() +
                        ") = 0; the point ideal is not maximal",
                    w.str());
            }
            std::vector<FElem> rhs(st.size(), base->zero());
            rhs[index.at(Monomial(rg->nvars(), 0))] = base->one();
            auto sol = solve(m, rhs);
            if (!sol) throw InvariantViolation("inversion solve failed with trivial kernel");
            Polynomial inv(rg);
            for (size_t j = 0; j < st.size(); ++j) inv.set_coeff(st[j], (*sol)[j]);
            return wrap_quot(a.field(), std::move(inv));
        }
        case Field::Kind::Fraction: {
            const auto& x = frac_rep(a);
            return wrap_frac(a.field(), *x.den, *x.num);
        }
    }
    throw InvariantViolation("unreachable field kind");
}

FElem divide(const FElem& a, const FElem& b) { return mul(a, invert(b)); }

FElem pow_el(const FElem& a, const mpz_class& e) {
    if (e < 0) return pow_el(invert(a), -e);
    FElem acc = a.field()->one();
    FElem base = a;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = mul(acc, base);
        k >>= 1;
        if (k > 0) base = mul(base, base);
    }
    return acc;
}

std::string elem_str(const FElem& a) {
    if (!a.valid()) return "<invalid>";
    switch (a.field()->kind) {
        case Field::Kind::Rationals:
            return std::get<mpq_class>(a.v_).get_str();
        case Field::Kind::PrimeField:
            return std::to_string(std::get<long long>(a.v_));
        case Field::Kind::Quotient:
            return quot_nf(a).str();
        case Field::Kind::Fraction: {
            const auto& x = frac_rep(a);
            Polynomial one_p =
                Polynomial::constant(a.field()->ring(), a.field()->ring()->coeff->from_int(1));
            if (*x.den == one_p) return x.num->str();
            return "(" + x.num->str() + ")/(" + x.den->str() + ")";
        }
    }
    return "?";
}

FElem embed_scalar(const FieldPtr& target, const FElem& base_scalar) {
    if (!base_scalar.valid()) throw SemanticError("embed of uninitialized element");
    if (same_field(base_scalar.field(), target)) return base_scalar;
    switch (base_scalar.field()->kind) {
        case Field::Kind::Rationals:
            if (target->characteristic() != 0)
                throw SemanticError("cannot embed a rational into characteristic " +
                                    std::to_string(target->characteristic()));
            return target->from_mpq(std::get<mpq_class>(base_scalar.v_));
        case Field::Kind::PrimeField:
            if (target->characteristic() != base_scalar.field()->p)
                throw SemanticError("characteristic mismatch in scalar embedding");
            return target->from_int(std::get<long long>(base_scalar.v_));
        default:
            throw SemanticError("embed_scalar expects a prime-field scalar");
    }
}

std::vector<FElem> quotient_coords(const FElem& e) {
    const Field& f = *e.field();
    if (f.kind != Field::Kind::Quotient)
        throw SemanticError("quotient_coords: not a quotient element");
    std::vector<FElem> out(f.staircase.size(), f.ring()->coeff->zero());
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < f.staircase.size(); ++i) index[f.staircase[i]] = i;
    for (const auto& [m, c] : quot_nf(e).terms()) out[index.at(m)] = c;
    return out;
}

Polynomial fraction_to_nf(const FElem& e) {
    const Field& f = *e.field();
    if (f.kind != Field::Kind::Fraction)
        throw SemanticError("fraction_to_nf: not a fraction element");
    if (!zero_dimensional(*f.gb))
        throw NotFiniteOverBase("fraction field is not finite over its coefficient field");
    const auto& x = frac_rep(e);
    FieldPtr quot = Field::quotient(f.gb);
    FElem den_inv = invert(quot->from_nf(*x.den));
    Polynomial num_nf = normal_form(*x.num, *f.gb);
    return normal_form(num_nf * quot_nf(den_inv), *f.gb);
}

}  // namespace zartan
