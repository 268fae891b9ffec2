#include "zartan/univar.hpp"

#include <sstream>

#include "zartan/groebner.hpp"
#include "zartan/linalg.hpp"
#include "zartan/poly.hpp"

namespace zartan {

UPoly::UPoly(FieldPtr field, std::vector<FElem> coeffs) : k(std::move(field)), c(std::move(coeffs)) {
    trim();
}

void UPoly::trim() {
    while (!c.empty() && zartan::is_zero(c.back())) c.pop_back();
}

FElem UPoly::lc() const {
    if (is_zero()) throw SemanticError("leading coefficient of the zero polynomial");
    return c.back();
}

UPoly UPoly::one(const FieldPtr& k) { return UPoly(k, {k->one()}); }
UPoly UPoly::x(const FieldPtr& k) { return UPoly(k, {k->zero(), k->one()}); }
UPoly UPoly::constant(const FieldPtr& k, const FElem& a) { return UPoly(k, {a}); }

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<FElem> r(std::max(c.size(), o.c.size()), k->zero());
    for (size_t i = 0; i < c.size(); ++i) r[i] = c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] = add(r[i], o.c[i]);
    return UPoly(k, std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(neg(k->one())); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(k);
    std::vector<FElem> r(c.size() + o.c.size() - 1, k->zero());
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] = add(r[i + j], mul(c[i], o.c[j]));
    return UPoly(k, std::move(r));
}

UPoly UPoly::scaled(const FElem& a) const {
    std::vector<FElem> r;
    r.reserve(c.size());
    for (const FElem& e : c) r.push_back(mul(e, a));
    return UPoly(k, std::move(r));
}

bool UPoly::operator==(const UPoly& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
        if (!equal(c[i], o.c[i])) return false;
    return true;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(invert(lc()));
}

UPoly UPoly::derivative() const {
    if (c.size() <= 1) return zero(k);
    std::vector<FElem> r;
    r.reserve(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.push_back(mul(c[i], k->from_int(static_cast<long long>(i))));
    return UPoly(k, std::move(r));
}

FElem UPoly::eval(const FElem& at) const {
    FElem v = k->zero();
    for (size_t i = c.size(); i-- > 0;) v = add(mul(v, at), c[i]);
    return v;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (zartan::is_zero(c[i])) continue;
        std::string cs = elem_str(c[i]);
        bool negated = false;
        if (!first && !cs.empty() && cs[0] == '-' && cs.find_first_of("+ ") == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (!first) out << (negated ? " - " : " + ");
        first = false;
        if (i == 0) {
            out << cs;
            continue;
        }
        if (cs != "1") {
            bool composite = cs.find_first_of("+-*/ ") != std::string::npos;
            if (composite)
                out << "(" << cs << ")*";
            else
                out << cs << "*";
        }
        out << var;
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw SemanticError("univariate division by zero");
    UPoly q = UPoly::zero(a.k);
    UPoly r = a;
    FElem lcinv = invert(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        long d = r.deg() - b.deg();
        FElem f = mul(r.lc(), lcinv);
        std::vector<FElem> tc(static_cast<size_t>(d) + 1, a.k->zero());
        tc.back() = f;
        UPoly t(a.k, std::move(tc));
        q = q + t;
        r = r - t * b;
    }
    return {q, r};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& mod) {
    UPoly acc = UPoly::one(base.k);
    UPoly b = divmod(base, mod).second;
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = divmod(acc * b, mod).second;
        n >>= 1;
        if (n > 0) b = divmod(b * b, mod).second;
    }
    return acc;
}

UPoly minimal_polynomial(const FElem& e) {
    if (!e.valid()) throw SemanticError("minimal polynomial of uninitialized element");
    const Field& f = *e.field();
    switch (f.kind) {
        case Field::Kind::Rationals:
        case Field::Kind::PrimeField: {
            // The element lies in the prime field itself: t - e.
            return UPoly(e.field(), {neg(e), e.field()->one()});
        }
        case Field::Kind::Fraction: {
            Polynomial nf = fraction_to_nf(e);
            FieldPtr quot = Field::quotient(f.gb);
            return minimal_polynomial(quot->from_nf(nf));
        }
        case Field::Kind::Quotient:
            break;
    }
    FieldPtr base = f.coeff_field();
    size_t d = f.degree_over_coeff();
    // Coordinates of successive powers until the first linear dependency.
    std::vector<std::vector<FElem>> cols;
    FElem pw = f.one();
    cols.push_back(quotient_coords(pw));
    for (size_t m = 1; m <= d; ++m) {
        pw = mul(pw, e);
        std::vector<FElem> vm = quotient_coords(pw);
        Matrix mtx(base, d, m);
        for (size_t j = 0; j < m; ++j)
            for (size_t i = 0; i < d; ++i) mtx.at(i, j) = cols[j][i];
        auto sol = solve(mtx, vm);
        if (sol) {
            std::vector<FElem> coeffs(m + 1, base->zero());
            for (size_t j = 0; j < m; ++j) coeffs[j] = neg((*sol)[j]);
            coeffs[m] = base->one();
            return UPoly(base, std::move(coeffs));
        }
        cols.push_back(std::move(vm));
    }
    throw InvariantViolation("no linear dependency among powers within the field degree");
}

FElem sample_element(const FieldPtr& k, std::mt19937_64& rng) {
    switch (k->kind) {
        case Field::Kind::PrimeField: {
            std::uniform_int_distribution<long long> dist(0, k->p - 1);
            return k->from_int(dist(rng));
        }
        case Field::Kind::Quotient: {
            if (!k->finite()) break;
            Polynomial nf(k->ring());
            FieldPtr base = k->coeff_field();
            for (const Monomial& m : k->staircase) {
                FElem c = sample_element(base, rng);
                if (!zartan::is_zero(c)) nf.set_coeff(m, c);
            }
            return k->from_nf(nf);
        }
        default:
            break;
    }
    throw SemanticError("random sampling requires a finite field");
}

namespace {

IrredResult irreducible() {
    IrredResult r;
    r.status = IrredStatus::Irreducible;
    return r;
}

IrredResult reducible(UPoly factor) {
    IrredResult r;
    r.status = IrredStatus::Reducible;
    r.factor = std::move(factor);
    return r;
}

IrredResult skipped() { return IrredResult(); }

// Equal-degree splitting (Cantor-Zassenhaus) for a squarefree product of
// irreducible factors, all of degree d.  Deterministic given the rng state.
UPoly edf_factor(const UPoly& f, long d, const mpz_class& q, long long ch, std::mt19937_64& rng) {
    UPoly cur = f.monic();
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::vector<FElem> ac(static_cast<size_t>(cur.deg()), cur.k->zero());
        for (auto& e : ac) e = sample_element(cur.k, rng);
        UPoly a(cur.k, std::move(ac));
        if (a.is_zero()) continue;
        UPoly g = upoly_gcd(a, cur);
        if (g.deg() > 0 && g.deg() < cur.deg()) return g;
        UPoly b(cur.k);
        if (ch == 2) {
            // Trace map over F_2^m: a + a^2 + ... + a^(2^(d*m-1)).
            mpz_class steps_z = q;
            long m = 0;
            while (steps_z > 1) {
                steps_z >>= 1;
                ++m;
            }
            UPoly t = divmod(a, cur).second;
            UPoly s = t;
            for (long i = 1; i < d * m; ++i) {
                t = divmod(t * t, cur).second;
                s = s + t;
            }
            b = s;
        } else {
            mpz_class e = q;
            mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            b = powmod(a, e, cur) - UPoly::one(cur.k);
        }
        UPoly g2 = upoly_gcd(b, cur);
        if (g2.deg() > 0 && g2.deg() < cur.deg()) return g2;
    }
    throw InvariantViolation("equal-degree splitting did not converge");
}

IrredResult finite_field_check(const UPoly& p, std::mt19937_64& rng) {
    const FieldPtr& k = p.k;
    mpz_class q = *k->cardinality();
    long long ch = k->characteristic();
    UPoly f = p.monic();
    long n = f.deg();
    if (n == 1) return irreducible();

    UPoly fp = f.derivative();
    if (fp.is_zero()) {
        // f is a ch-th power: f = r(t)^ch with r obtained by a Frobenius
        // descent on the coefficients.
        mpz_class root_exp = q / mpz_class(static_cast<long>(ch));
        std::vector<FElem> rc(static_cast<size_t>(n / ch) + 1, k->zero());
        for (long i = 0; i <= n; i += ch)
            rc[static_cast<size_t>(i / ch)] = pow_el(f.c[static_cast<size_t>(i)], root_exp);
        return reducible(UPoly(k, std::move(rc)));
    }
    UPoly g = upoly_gcd(f, fp);
    if (g.deg() > 0) return reducible(g);

    UPoly t = UPoly::x(k);
    for (long d = 1; 2 * d <= n; ++d) {
        mpz_class qd = q;
        mpz_pow_ui(qd.get_mpz_t(), qd.get_mpz_t(), static_cast<unsigned long>(d));
        UPoly h = powmod(t, qd, f) - t;
        UPoly gd = upoly_gcd(h, f);
        if (gd.deg() == 0) continue;
        if (gd.deg() < n) return reducible(gd);
        // All irreducible factors have degree exactly d < n.
        return reducible(edf_factor(f, d, q, ch, rng));
    }
    return irreducible();
}

// Integer content cleared version of a rational polynomial.
std::vector<mpz_class> to_integer_coeffs(const UPoly& p) {
    mpz_class den = 1;
    for (const FElem& e : p.c) {
        mpq_class v = std::get<mpq_class>(e.v_);
        mpz_class d = v.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<mpz_class> out;
    out.reserve(p.c.size());
    for (const FElem& e : p.c) {
        mpq_class v = std::get<mpq_class>(e.v_) * den;
        out.push_back(v.get_num());
    }
    return out;
}

std::vector<mpz_class> small_divisors(const mpz_class& n0) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n && d < 2000000; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            out.push_back(n / d);
        }
    }
    return out;
}

IrredResult rational_check(const UPoly& p, std::mt19937_64& rng) {
    long n = p.deg();
    if (n == 1) return irreducible();
    std::vector<mpz_class> c = to_integer_coeffs(p);

    // Rational root test.
    if (c.front() == 0) {
        return reducible(UPoly::x(p.k));
    }
    mpz_class a0 = c.front(), an = c.back();
    bool root_test_complete = abs(a0) < mpz_class("1000000000000") && abs(an) < mpz_class("1000000000000");
    if (root_test_complete) {
        for (const mpz_class& r : small_divisors(a0)) {
            for (const mpz_class& s : small_divisors(an)) {
                for (int sign = 0; sign < 2; ++sign) {
                    mpq_class cand(sign ? -r : r, s);
                    cand.canonicalize();
                    FElem at = p.k->from_mpq(cand);
                    if (zartan::is_zero(p.eval(at)))
                        return reducible(UPoly(p.k, {neg(at), p.k->one()}));
                }
            }
        }
        // Degrees 2 and 3 are reducible iff they have a rational root.
        if (n <= 3) return irreducible();
    }

    // Certification by reduction modulo a small prime.
    static const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (long long q : primes) {
        mpz_class qz(static_cast<long>(q));
        if (c.back() % qz == 0) continue;
        FieldPtr fq = Field::prime_field(q);
        std::vector<FElem> mc;
        mc.reserve(c.size());
        for (const mpz_class& v : c) {
            mpz_class m = v % qz;
            long long mi = m.get_si();
            if (mi < 0) mi += q;
            mc.push_back(fq->from_int(mi));
        }
        UPoly pm(fq, std::move(mc));
        if (pm.deg() != n) continue;
        UPoly pmp = pm.derivative();
        if (pmp.is_zero() || upoly_gcd(pm, pmp).deg() > 0) continue;  // not squarefree mod q
        IrredResult r = finite_field_check(pm, rng);
        if (r.status == IrredStatus::Irreducible) return irreducible();
    }
    return skipped();
}

}  // namespace

IrredResult irreducibility_check(const UPoly& p, std::mt19937_64& rng, bool trust_point) {
    if (trust_point) return skipped();
    if (p.is_zero() || p.deg() == 0)
        throw SemanticError("irreducibility is undefined for constants");
    if (p.k->finite()) return finite_field_check(p, rng);
    if (p.k->kind == Field::Kind::Rationals) return rational_check(p, rng);
    if (p.deg() == 1) return irreducible();
    return skipped();
}

}  // namespace zartan
