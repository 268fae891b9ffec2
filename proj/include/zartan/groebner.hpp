#pragma once

#include <vector>

#include "zartan/poly.hpp"

namespace zartan {

// Reduced Groebner basis: monic, auto-reduced, deterministically sorted.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> polys;
};

// Buchberger with the product and chain criteria; deterministic for a fixed
// generator order.  The unit ideal yields the basis {1}.
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

// Unique remainder; zero iff the polynomial lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool is_unit_ideal(const GroebnerBasis& gb);
bool zero_dimensional(const GroebnerBasis& gb);

// Monomials outside the leading-term ideal; a coefficient-field basis of the
// quotient.  Throws NotZeroDimensional when infinite.
std::vector<Monomial> quotient_staircase(const GroebnerBasis& gb);

std::vector<Polynomial> ideal_sum(const std::vector<Polynomial>& a,
                                  const std::vector<Polynomial>& b);
std::vector<Polynomial> ideal_product(const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& b);

// Dimension of the leading-term ideal (maximal independent variable set),
// which equals the Krull dimension of the quotient.  Throws UnitIdeal.
long krull_dimension(const GroebnerBasis& gb);

}  // namespace zartan
