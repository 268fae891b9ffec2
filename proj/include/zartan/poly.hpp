#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zartan/field.hpp"

namespace zartan {

// Ring context: a coefficient field and an ordered variable list.
struct Ring {
    FieldPtr coeff;
    std::vector<std::string> vars;

    size_t nvars() const { return vars.size(); }
    // Throws SemanticError (UnknownVariable) when absent.
    size_t index_of(const std::string& name) const;
    bool same(const Ring& o) const;

    static RingPtr make(FieldPtr coeff, std::vector<std::string> vars);
};

unsigned total_degree(const Monomial& m);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // b | a required
Monomial mono_lcm(const Monomial& a, const Monomial& b);

// Total order compatible with multiplication, 1 minimal.  `prec` lists
// variable indices from most to least significant; the default makes the
// last listed variable most significant, so that triangular point systems
// (each step monic in its own last variable) are Groebner bases under lex.
struct MonomialOrder {
    enum class Kind { Lex, Grevlex };
    Kind kind = Kind::Grevlex;
    std::vector<size_t> prec;

    static MonomialOrder lex(size_t nvars);
    static MonomialOrder grevlex(size_t nvars);
    static MonomialOrder make(Kind k, size_t nvars);

    bool less(const Monomial& a, const Monomial& b) const;
};

using CoeffMap = std::function<FElem(const FElem&)>;

// Sparse multivariate polynomial; no zero coefficients stored, terms keyed
// by exponent vector in a fixed canonical order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(const RingPtr& ring, const FElem& c);
    static Polynomial variable(const RingPtr& ring, size_t var);
    static Polynomial term(const RingPtr& ring, Monomial m, const FElem& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, FElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FElem constant_value() const;  // coefficient of 1 (zero elem if absent)
    unsigned degree() const;       // total degree, 0 for the zero polynomial
    unsigned degree_in(size_t var) const;

    void set_coeff(const Monomial& m, const FElem& c);
    FElem coeff(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FElem& c) const;
    bool operator==(const Polynomial& o) const;

    const Monomial* leading_monomial(const MonomialOrder& ord) const;
    FElem leading_coeff(const MonomialOrder& ord) const;

    Polynomial derivative(size_t var) const;

    // Ring map determined by variable images and a coefficient map.
    Polynomial substitute(const RingPtr& target,
                          const std::vector<Polynomial>& images,
                          const CoeffMap& embed) const;
    FElem evaluate(const std::vector<FElem>& at, const CoeffMap& embed) const;
    Polynomial map_coeffs(const RingPtr& target, const CoeffMap& embed) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::map<Monomial, FElem> terms_;
};

// Text syntax shared with the CLI grammar: identifiers, `^` exponent,
// optional `*`, integer or `a/b` rational coefficients.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

}  // namespace zartan
