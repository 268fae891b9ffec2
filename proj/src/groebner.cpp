#include "zartan/groebner.hpp"

#include <algorithm>
#include <functional>

namespace zartan {

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    Polynomial rem(gb.ring);
    Polynomial cur = p;
    while (!cur.is_zero()) {
        const Monomial* lm = cur.leading_monomial(gb.order);
        bool reduced = false;
        for (const Polynomial& g : gb.polys) {
            const Monomial* glm = g.leading_monomial(gb.order);
            if (!glm || !mono_divides(*glm, *lm)) continue;
            FElem c = divide(cur.coeff(*lm), g.leading_coeff(gb.order));
            cur = cur - Polynomial::term(gb.ring, mono_div(*lm, *glm), c) * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            FElem c = cur.coeff(*lm);
            rem.set_coeff(*lm, c);
            cur.set_coeff(*lm, gb.ring->coeff->zero());
        }
    }
    return rem;
}

namespace {

// Reduce p modulo a working (not necessarily reduced) basis.
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& basis,
                     const RingPtr& ring, const MonomialOrder& ord) {
    GroebnerBasis tmp{ring, ord, basis};
    return normal_form(p, tmp);
}

Polynomial spoly(const Polynomial& f, const Polynomial& g, const RingPtr& ring,
                 const MonomialOrder& ord) {
    const Monomial& lf = *f.leading_monomial(ord);
    const Monomial& lg = *g.leading_monomial(ord);
    Monomial l = mono_lcm(lf, lg);
    Polynomial tf = Polynomial::term(ring, mono_div(l, lf), invert(f.leading_coeff(ord)));
    Polynomial tg = Polynomial::term(ring, mono_div(l, lg), invert(g.leading_coeff(ord)));
    return tf * f - tg * g;
}

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(g);

    struct Pair {
        size_t i, j;
        Monomial lcm;
        unsigned deg;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return order.less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> pending;
    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Monomial l = mono_lcm(*basis[i].leading_monomial(order),
                                  *basis[j].leading_monomial(order));
            pending.push_back(Pair{i, j, l, total_degree(l)});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pr = *it;
        pending.erase(it);

        const Monomial& li = *basis[pr.i].leading_monomial(order);
        const Monomial& lj = *basis[pr.j].leading_monomial(order);
        // Product criterion: coprime leading terms give a zero reduction.
        if (mono_mul(li, lj) == pr.lcm) continue;
        // Chain criterion: a third element dividing the lcm, whose pairs with
        // both ends are already processed, makes this pair redundant.
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!mono_divides(*basis[k].leading_monomial(order), pr.lcm)) continue;
            auto open = [&](size_t a, size_t b) {
                if (a > b) std::swap(a, b);
                for (const Pair& q : pending)
                    if (q.i == a && q.j == b) return true;
                return false;
            };
            if (!open(pr.i, k) && !open(k, pr.j)) chained = true;
        }
        if (chained) continue;

        Polynomial s = spoly(basis[pr.i], basis[pr.j], ring, order);
        Polynomial r = reduce_by(s, basis, ring, order);
        if (r.is_zero()) continue;
        basis.push_back(r);
        add_pairs_for(basis.size() - 1);
    }

    // Minimize: drop elements whose leading term is divisible by another's.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& li = *basis[i].leading_monomial(order);
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const Monomial& lj = *basis[j].leading_monomial(order);
            if (mono_divides(lj, li) && (lj != li || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Auto-reduce and normalize to monic.
    std::vector<Polynomial> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = reduce_by(reduced[i], others, ring, order);
        reduced[i] = reduced[i].scaled(invert(reduced[i].leading_coeff(order)));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.less(*a.leading_monomial(order), *b.leading_monomial(order));
    });
    return GroebnerBasis{ring, order, std::move(reduced)};
}

bool is_unit_ideal(const GroebnerBasis& gb) {
    return gb.polys.size() == 1 && gb.polys[0].is_constant() && !gb.polys[0].is_zero();
}

bool zero_dimensional(const GroebnerBasis& gb) {
    size_t n = gb.ring->nvars();
    if (n == 0) return !is_unit_ideal(gb);
    if (is_unit_ideal(gb)) return false;
    // Zero-dimensional iff every variable has a pure power among the leading
    // terms.
    std::vector<bool> covered(n, false);
    for (const Polynomial& g : gb.polys) {
        const Monomial& lm = *g.leading_monomial(gb.order);
        size_t nz = 0, which = 0;
        for (size_t i = 0; i < n; ++i)
            if (lm[i] != 0) {
                ++nz;
                which = i;
            }
        if (nz == 1) covered[which] = true;
    }
    for (bool c : covered)
        if (!c) return false;
    return true;
}

std::vector<Monomial> quotient_staircase(const GroebnerBasis& gb) {
    size_t n = gb.ring->nvars();
    if (is_unit_ideal(gb)) return {};
    if (!zero_dimensional(gb))
        throw NotZeroDimensional("quotient has an infinite basis; ideal is not zero-dimensional");
    std::vector<unsigned> bound(n, 0);
    for (const Polynomial& g : gb.polys) {
        const Monomial& lm = *g.leading_monomial(gb.order);
        size_t nz = 0, which = 0;
        for (size_t i = 0; i < n; ++i)
            if (lm[i] != 0) {
                ++nz;
                which = i;
            }
        if (nz == 1 && (bound[which] == 0 || lm[which] < bound[which])) bound[which] = lm[which];
    }
    std::vector<Monomial> leading;
    for (const Polynomial& g : gb.polys) leading.push_back(*g.leading_monomial(gb.order));

    std::vector<Monomial> out;
    Monomial cur(n, 0);
    // Enumerate the box under the pure-power bounds, keep monomials outside
    // the leading-term ideal.  Ordered ascending in the basis order.
    std::vector<Monomial> box;
    size_t total = 1;
    for (size_t i = 0; i < n; ++i) total *= bound[i];
    box.reserve(total);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == n) {
            box.push_back(cur);
            return;
        }
        for (unsigned e = 0; e < bound[i]; ++e) {
            cur[i] = e;
            rec(i + 1);
        }
        cur[i] = 0;
    };
    rec(0);
    for (const Monomial& m : box) {
        bool in_lt = false;
        for (const Monomial& l : leading)
            if (mono_divides(l, m)) {
                in_lt = true;
                break;
            }
        if (!in_lt) out.push_back(m);
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order.less(a, b); });
    return out;
}

std::vector<Polynomial> ideal_sum(const std::vector<Polynomial>& a,
                                  const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<Polynomial> ideal_product(const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& b) {
    std::vector<Polynomial> out;
    for (const Polynomial& f : a)
        for (const Polynomial& g : b) out.push_back(f * g);
    return out;
}

long krull_dimension(const GroebnerBasis& gb) {
    if (is_unit_ideal(gb)) throw UnitIdeal("the unit ideal has no Krull dimension");
    size_t n = gb.ring->nvars();
    std::vector<Monomial> leading;
    for (const Polynomial& g : gb.polys) leading.push_back(*g.leading_monomial(gb.order));
    // dim = size of a maximal subset S of variables such that no leading
    // monomial is supported inside S.  n is small here; enumerate subsets.
    long best = 0;
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        bool ok = true;
        for (const Monomial& l : leading) {
            bool inside = true;
            for (size_t i = 0; i < n; ++i)
                if (l[i] != 0 && !(mask >> i & 1)) {
                    inside = false;
                    break;
                }
            if (inside) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, static_cast<long>(__builtin_popcountll(mask)));
    }
    return best;
}

}  // namespace zartan
