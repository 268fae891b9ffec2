#include "zartan/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zartan {

size_t Ring::index_of(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw SemanticError("unknown variable '" + name + "'");
}

bool Ring::same(const Ring& o) const {
    if (this == &o) return true;
    return vars == o.vars && same_field(coeff, o.coeff);
}

RingPtr Ring::make(FieldPtr coeff, std::vector<std::string> vars) {
    auto r = std::make_shared<Ring>();
    r->coeff = std::move(coeff);
    r->vars = std::move(vars);
    return r;
}

unsigned total_degree(const Monomial& m) {
    unsigned t = 0;
    for (unsigned e : m) t += e;
    return t;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

MonomialOrder MonomialOrder::lex(size_t nvars) { return make(Kind::Lex, nvars); }
MonomialOrder MonomialOrder::grevlex(size_t nvars) { return make(Kind::Grevlex, nvars); }

MonomialOrder MonomialOrder::make(Kind k, size_t nvars) {
    MonomialOrder o;
    o.kind = k;
    o.prec.resize(nvars);
    for (size_t i = 0; i < nvars; ++i) o.prec[i] = nvars - 1 - i;
    return o;
}

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::Lex) {
        for (size_t idx : prec)
            if (a[idx] != b[idx]) return a[idx] < b[idx];
        return false;
    }
    unsigned ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta < tb;
    for (auto it = prec.rbegin(); it != prec.rend(); ++it)
        if (a[*it] != b[*it]) return a[*it] > b[*it];
    return false;
}

Polynomial Polynomial::constant(const RingPtr& ring, const FElem& c) {
    Polynomial p(ring);
    if (!zartan::is_zero(c)) p.terms_.emplace(Monomial(ring->nvars(), 0), c);
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, size_t var) {
    Monomial m(ring->nvars(), 0);
    m[var] = 1;
    return term(ring, m, ring->coeff->one());
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, const FElem& c) {
    Polynomial p(ring);
    if (!zartan::is_zero(c)) p.terms_.emplace(std::move(m), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

FElem Polynomial::constant_value() const {
    Monomial unit(ring_->nvars(), 0);
    auto it = terms_.find(unit);
    return it == terms_.end() ? ring_->coeff->zero() : it->second;
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

unsigned Polynomial::degree_in(size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

void Polynomial::set_coeff(const Monomial& m, const FElem& c) {
    if (zartan::is_zero(c))
        terms_.erase(m);
    else
        terms_[m] = c;
}

FElem Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? ring_->coeff->zero() : it->second;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (!ring_->same(*o.ring_)) throw SemanticError("incompatible ring contexts in +");
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end()) {
            r.terms_.emplace(m, c);
        } else {
            FElem s = add(it->second, c);
            if (zartan::is_zero(s))
                r.terms_.erase(it);
            else
                it->second = s;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, neg(c));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (!ring_->same(*o.ring_)) throw SemanticError("incompatible ring contexts in *");
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = mono_mul(ma, mb);
            FElem c = mul(ca, cb);
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                if (!zartan::is_zero(c)) r.terms_.emplace(std::move(m), c);
            } else {
                FElem s = add(it->second, c);
                if (zartan::is_zero(s))
                    r.terms_.erase(it);
                else
                    it->second = s;
            }
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const FElem& c) const {
    Polynomial r(ring_);
    if (zartan::is_zero(c)) return r;
    for (const auto& [m, a] : terms_) {
        FElem p = mul(a, c);
        if (!zartan::is_zero(p)) r.terms_.emplace(m, p);
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (m != it->first || !equal(c, it->second)) return false;
        ++it;
    }
    return true;
}

const Monomial* Polynomial::leading_monomial(const MonomialOrder& ord) const {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || ord.less(*best, m)) best = &m;
    return best;
}

FElem Polynomial::leading_coeff(const MonomialOrder& ord) const {
    const Monomial* lm = leading_monomial(ord);
    return lm ? terms_.at(*lm) : ring_->coeff->zero();
}

Polynomial Polynomial::derivative(size_t var) const {
    if (var >= ring_->nvars()) throw SemanticError("unknown variable index in derivative");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        FElem nc = mul(c, ring_->coeff->from_int(static_cast<long long>(m[var])));
        if (zartan::is_zero(nc)) continue;  // exponent multiples of p vanish
        Monomial nm = m;
        nm[var] -= 1;
        auto it = r.terms_.find(nm);
        if (it == r.terms_.end())
            r.terms_.emplace(std::move(nm), nc);
        else
            it->second = add(it->second, nc);
    }
    return r;
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::vector<Polynomial>& images,
                                  const CoeffMap& embed) const {
    if (images.size() != ring_->nvars())
        throw SemanticError("substitute: wrong number of variable images");
    Polynomial r = Polynomial::zero(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, embed(c));
        for (size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * images[i];
        r = r + t;
    }
    return r;
}

FElem Polynomial::evaluate(const std::vector<FElem>& at, const CoeffMap& embed) const {
    if (at.size() != ring_->nvars())
        throw SemanticError("evaluate: wrong number of values");
    FElem acc;
    for (const auto& [m, c] : terms_) {
        FElem t = embed(c);
        for (size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = mul(t, at[i]);
        acc = acc.valid() ? add(acc, t) : t;
    }
    if (!acc.valid()) {
        if (at.empty()) return embed(ring_->coeff->zero());
        return sub(at[0], at[0]);  // zero of the value field
    }
    return acc;
}

Polynomial Polynomial::map_coeffs(const RingPtr& target, const CoeffMap& embed) const {
    if (target->nvars() != ring_->nvars())
        throw SemanticError("map_coeffs: variable count mismatch");
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        FElem nc = embed(c);
        if (!zartan::is_zero(nc)) r.terms_.emplace(m, nc);
    }
    return r;
}

namespace {

bool needs_parens(const std::string& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i] == '+' || s[i] == '-' || s[i] == ' ') return true;
    return false;
}

}  // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        std::string cs = elem_str(it->second);
        bool negative = cs.size() > 1 && cs[0] == '-' && !needs_parens(cs);
        if (first) {
            if (negative) {
                out << "-";
                cs = cs.substr(1);
            }
        } else {
            if (negative) {
                out << " - ";
                cs = cs.substr(1);
            } else {
                out << " + ";
            }
        }
        first = false;
        if (needs_parens(cs)) cs = "(" + cs + ")";
        std::string ms;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!ms.empty()) ms += "*";
            ms += ring_->vars[i];
            if (m[i] > 1) ms += "^" + std::to_string(m[i]);
        }
        if (ms.empty()) {
            out << cs;
        } else if (cs == "1") {
            out << ms;
        } else {
            out << cs << "*" << ms;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Polynomial text parsing (recursive descent).

namespace {

struct PolyParser {
    const RingPtr& ring;
    const std::string& s;
    size_t i = 0;

    PolyParser(const RingPtr& r, const std::string& text) : ring(r), s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " in polynomial '" + s + "'", 1, static_cast<int>(i) + 1);
    }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }

    bool eat(char c) {
        if (peek(c)) {
            ++i;
            return true;
        }
        return false;
    }

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return p;
    }

    Polynomial expr() {
        bool negate = false;
        skip_ws();
        if (eat('-'))
            negate = true;
        else
            eat('+');
        Polynomial acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc = acc * factor();
                continue;
            }
            if (i < s.size() &&
                (std::isalpha(static_cast<unsigned char>(s[i])) ||
                 std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '(' ||
                 s[i] == '_')) {
                acc = acc * factor();
                continue;
            }
            break;
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) fail("expected exponent");
            unsigned long e = std::stoul(s.substr(start, i - start));
            Polynomial acc = Polynomial::constant(ring, ring->coeff->one());
            for (unsigned long k = 0; k < e; ++k) acc = acc * b;
            return acc;
        }
        return b;
    }

    Polynomial atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (eat('/')) {
                skip_ws();
                std::string den = digits();
                mpq_class q(num + "/" + den);
                q.canonicalize();
                return Polynomial::constant(ring, ring->coeff->from_mpq(q));
            }
            return Polynomial::constant(ring, ring->coeff->from_mpq(mpq_class(num)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            std::string name = s.substr(start, i - start);
            return Polynomial::variable(ring, ring->index_of(name));
        }
        fail("unexpected character");
    }

    std::string digits() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail("expected number");
        return s.substr(start, i - start);
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    PolyParser p(ring, text);
    return p.parse();
}

}  // namespace zartan
