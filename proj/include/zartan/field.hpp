#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zartan/errors.hpp"

namespace zartan {

class Polynomial;
struct Ring;
struct GroebnerBasis;
using RingPtr = std::shared_ptr<const Ring>;
using PolyPtr = std::shared_ptr<const Polynomial>;
using GbPtr = std::shared_ptr<const GroebnerBasis>;

// Exponent vector over a fixed variable list.
using Monomial = std::vector<unsigned>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Normal form of a quotient-ring element (reduced modulo the field's basis).
struct QuotRep {
    PolyPtr nf;
};

// Numerator / denominator pair, both in normal form, denominator nonzero.
struct FracRep {
    PolyPtr num;
    PolyPtr den;
};

// A value in exactly one field; arithmetic never mixes distinct fields.
class FElem {
public:
    FElem() = default;

    bool valid() const { return fld_ != nullptr; }
    const FieldPtr& field() const { return fld_; }

    FieldPtr fld_;
    std::variant<std::monostate, mpq_class, long long, QuotRep, FracRep> v_;
};

// Exact coefficient fields: the rationals, prime fields F_p, quotient
// fields F[x..]/m (residue fields of closed points, extension towers) and
// fraction fields Frac(F[x..]/p) (residue fields of generic points).
//
// Quotient and Fraction fields carry the reduced Groebner basis of their
// defining ideal.  Maximality / primality of that ideal is asserted by the
// caller and refuted lazily: a failed inversion produces an explicit
// ZeroDivisorWitness.
class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Rationals, PrimeField, Quotient, Fraction };

    Kind kind = Kind::Rationals;
    long long p = 0;          // PrimeField characteristic
    GbPtr gb;                 // Quotient / Fraction defining ideal
    std::vector<Monomial> staircase;  // Quotient: basis over the coefficient field

    ~Field();

    static FieldPtr rationals();
    static FieldPtr prime_field(long long p);
    // Throws NotZeroDimensional when the staircase is infinite.
    static FieldPtr quotient(GbPtr gb);
    static FieldPtr fraction(GbPtr gb);

    const RingPtr& ring() const;          // Quotient / Fraction only
    FieldPtr coeff_field() const;         // Quotient / Fraction only
    long long characteristic() const;
    bool finite() const;
    std::optional<mpz_class> cardinality() const;
    // Staircase size (Quotient), i.e. the dimension over the coefficient field.
    size_t degree_over_coeff() const;

    FElem zero() const;
    FElem one() const;
    FElem from_int(long long n) const;
    FElem from_mpq(const mpq_class& q) const;
    FElem generator(size_t var) const;    // class of the var-th variable
    FElem from_nf(const Polynomial& nf) const;
    FElem from_frac(const Polynomial& num, const Polynomial& den) const;

    bool same(const Field& o) const;
    std::string name() const;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

FElem add(const FElem& a, const FElem& b);
FElem sub(const FElem& a, const FElem& b);
FElem neg(const FElem& a);
FElem mul(const FElem& a, const FElem& b);
// Throws ZeroDivisorWitness when a nonzero annihilator is found.
FElem invert(const FElem& a);
FElem divide(const FElem& a, const FElem& b);
bool is_zero(const FElem& a);
bool equal(const FElem& a, const FElem& b);
FElem pow_el(const FElem& a, const mpz_class& e);
std::string elem_str(const FElem& a);

// Canonical embedding of a prime-field scalar (Rationals or F_p value) into
// an extension of the same characteristic; identity when fields coincide.
FElem embed_scalar(const FieldPtr& target, const FElem& base_scalar);

// Coordinates of a Quotient element w.r.t. the staircase basis, as elements
// of the coefficient field.
std::vector<FElem> quotient_coords(const FElem& e);
// Convert a Fraction element over a zero-dimensional ideal to its normal
// form in the underlying quotient ring (clears the denominator).
Polynomial fraction_to_nf(const FElem& e);

}  // namespace zartan
