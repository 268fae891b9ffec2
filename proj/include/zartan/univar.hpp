#pragma once

#include <random>
#include <string>
#include <vector>

#include "zartan/field.hpp"

namespace zartan {

// Dense univariate polynomial over an arbitrary exact field.
struct UPoly {
    FieldPtr k;
    std::vector<FElem> c;  // c[i] is the coefficient of t^i; trimmed

    explicit UPoly(FieldPtr field) : k(std::move(field)) {}
    UPoly(FieldPtr field, std::vector<FElem> coeffs);

    long deg() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    void trim();
    FElem lc() const;

    static UPoly zero(const FieldPtr& k) { return UPoly(k); }
    static UPoly one(const FieldPtr& k);
    static UPoly x(const FieldPtr& k);
    static UPoly constant(const FieldPtr& k, const FElem& a);

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const FElem& a) const;
    bool operator==(const UPoly& o) const;

    UPoly monic() const;
    UPoly derivative() const;
    FElem eval(const FElem& at) const;
    std::string str(const std::string& var = "t") const;
};

// Euclidean division by a polynomial with invertible leading coefficient.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);  // monic gcd
UPoly powmod(const UPoly& base, const mpz_class& e, const UPoly& mod);

// Monic generator of the kernel of evaluation at e, over the coefficient
// field of e's field.  Supported for Quotient elements and for Fraction
// elements over a zero-dimensional ideal; otherwise throws NotFiniteOverBase.
UPoly minimal_polynomial(const FElem& e);

enum class IrredStatus { Irreducible, Reducible, Skipped };

struct IrredResult {
    IrredStatus status = IrredStatus::Skipped;
    UPoly factor;  // nontrivial factor when Reducible

    IrredResult() : factor(FieldPtr()) {}
};

// Over finite fields: squarefree test, distinct-degree splitting and seeded
// equal-degree factorization; always decides.  In characteristic zero:
// rational root test, degree <= 3 shortcut and small-prime reduction, which
// may return Skipped (always Skipped when trust_point is set).
IrredResult irreducibility_check(const UPoly& p, std::mt19937_64& rng, bool trust_point);

// Uniform random element of a finite field (used by equal-degree splitting).
FElem sample_element(const FieldPtr& k, std::mt19937_64& rng);

}  // namespace zartan
