#include "cspace/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cspace {

namespace {

bool term_before(const Term& a, const Term& b) {
    return b.mono < a.mono;  // descending structural order
}

}  // namespace

void check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) throw ring_error("polynomial ring mismatch");
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::map<Monomial, Rat> acc) {
    Polynomial p(ring);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
        if (!cspace::is_zero(c)) p.terms_.push_back(Term{m, std::move(c)});
    }
    std::sort(p.terms_.begin(), p.terms_.end(), term_before);
    return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rat& c) {
    Polynomial p(ring);
    if (!cspace::is_zero(c)) p.terms_.push_back(Term{Monomial(ring->size()), c});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
    if (var < 0 || static_cast<std::size_t>(var) >= ring->size())
        throw std::out_of_range("variable index out of range");
    Monomial m(ring->size());
    m.set(static_cast<std::size_t>(var), 1);
    Polynomial p(ring);
    p.terms_.push_back(Term{std::move(m), Rat(1)});
    return p;
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, const Rat& c) {
    if (m.size() != ring->size()) throw ring_error("monomial size mismatch");
    Polynomial p(ring);
    if (!cspace::is_zero(c)) p.terms_.push_back(Term{std::move(m), c});
    return p;
}

Rat Polynomial::constant_value() const {
    if (terms_.empty()) return Rat(0);
    return terms_[0].coef;
}

std::int32_t Polynomial::total_degree() const {
    std::int32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

std::int32_t Polynomial::degree_in(int var) const {
    std::int32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[static_cast<std::size_t>(var)]);
    return d;
}

bool Polynomial::uses_var(int var) const {
    for (const auto& t : terms_)
        if (t.mono[static_cast<std::size_t>(var)] > 0) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, -t.coef});
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(*this, o);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            Rat c = terms_[i].coef + o.terms_[j].coef;
            if (!cspace::is_zero(c)) p.terms_.push_back(Term{terms_[i].mono, std::move(c)});
            ++i, ++j;
        } else if (term_before(terms_[i], o.terms_[j])) {
            p.terms_.push_back(terms_[i++]);
        } else {
            p.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) p.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) p.terms_.push_back(o.terms_[j++]);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(*this, o);
    std::map<Monomial, Rat> acc;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = mono_mul(a.mono, b.mono);
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), a.coef * b.coef);
            else
                it->second += a.coef * b.coef;
        }
    }
    return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(const Rat& c) const {
    if (cspace::is_zero(c)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, t.coef * c});
    return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
    if (cspace::is_zero(c)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{mono_mul(t.mono, m), t.coef * c});
    // multiplying by a fixed monomial preserves the structural order
    return p;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = Polynomial::constant(ring_, Rat(1));
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e > 0) b = b * b;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

bool Polynomial::operator<(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].mono != o.terms_[i].mono) return terms_[i].mono < o.terms_[i].mono;
        if (terms_[i].coef != o.terms_[i].coef) return terms_[i].coef < o.terms_[i].coef;
    }
    return false;
}

Polynomial Polynomial::derivative(int var) const {
    const auto v = static_cast<std::size_t>(var);
    std::map<Monomial, Rat> acc;
    for (const auto& t : terms_) {
        if (t.mono[v] == 0) continue;
        Monomial m = t.mono;
        Rat c = t.coef * m[v];
        m.bump(v, -1);
        acc[std::move(m)] = std::move(c);
    }
    return from_terms(ring_, std::move(acc));
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
    if (point.size() != ring_->size()) throw std::invalid_argument("evaluation point size mismatch");
    Rat sum(0);
    for (const auto& t : terms_) {
        Rat v = t.coef;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (t.mono[i] != 0) v *= rat_pow(point[i], static_cast<unsigned long>(t.mono[i]));
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::substitute(const std::vector<std::pair<int, Rat>>& assignments) const {
    std::map<Monomial, Rat> acc;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        Rat c = t.coef;
        for (const auto& [var, val] : assignments) {
            const auto v = static_cast<std::size_t>(var);
            if (m[v] != 0) {
                c *= rat_pow(val, static_cast<unsigned long>(m[v]));
                m.set(v, 0);
            }
        }
        if (cspace::is_zero(c)) continue;
        auto it = acc.find(m);
        if (it == acc.end())
            acc.emplace(std::move(m), std::move(c));
        else
            it->second += c;
    }
    return from_terms(ring_, std::move(acc));
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (ord.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
}

Rat Polynomial::content_signed() const {
    if (terms_.empty()) return Rat(1);
    // gcd of numerators over lcm of denominators
    Int num_gcd(0), den_lcm(1);
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
    }
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(terms_[0].coef) < 0) c = -c;
    return c;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    Rat c = content_signed();
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back(Term{t.mono, t.coef / c});
    return p;
}

std::string Polynomial::str(const MonomialOrder& ord) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [&ord](const Term* a, const Term* b) { return ord.greater(a->mono, b->mono); });
    std::ostringstream out;
    bool first = true;
    for (const Term* t : sorted) {
        Rat c = t->coef;
        if (first) {
            if (sgn(c) < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        bool printed_coef = false;
        if (!is_one(c) || t->mono.is_one()) {
            out << rat_str(c);
            printed_coef = true;
        }
        bool first_var = !printed_coef;
        for (std::size_t i = 0; i < t->mono.size(); ++i) {
            if (t->mono[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << ring_->vars[i];
            if (t->mono[i] > 1) out << "^" << t->mono[i];
        }
    }
    return out.str();
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
    if (same_ring(ring_, target)) return *this;
    std::vector<int> map(ring_->size(), -1);
    for (std::size_t i = 0; i < ring_->size(); ++i) map[i] = target->index_of(ring_->vars[i]);
    std::map<Monomial, Rat> acc;
    for (const auto& t : terms_) {
        Monomial m(target->size());
        for (std::size_t i = 0; i < ring_->size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (map[i] < 0) throw ring_error("variable " + ring_->vars[i] + " not present in target ring");
            m.set(static_cast<std::size_t>(map[i]), t.mono[i]);
        }
        acc[std::move(m)] = t.coef;
    }
    return from_terms(target, std::move(acc));
}

// --- parsing -----------------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
};

std::string lex_number(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    if (lx.pos < lx.s.size() && lx.s[lx.pos] == '/') {
        ++lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos]))) ++lx.pos;
    }
    return lx.s.substr(start, lx.pos - start);
}

std::string lex_name(Lexer& lx) {
    lx.skip_ws();
    std::size_t start = lx.pos;
    while (lx.pos < lx.s.size() &&
           (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_' ||
            lx.s[lx.pos] == '$'))
        ++lx.pos;
    return lx.s.substr(start, lx.pos - start);
}

}  // namespace

Polynomial parse_poly(const RingPtr& ring, const std::string& text) {
    Lexer lx{text};
    std::map<Monomial, Rat> acc;
    bool any = false;
    while (!lx.done()) {
        int sign = 1;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.take() == '-') sign = -sign;
        }
        if (lx.done()) throw std::invalid_argument("dangling sign in polynomial: " + text);
        Rat coef(sign);
        Monomial mono(ring->size());
        bool expect_factor = true;
        while (expect_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_rat(lex_number(lx));
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lex_name(lx);
                int var = ring->index_of(name);
                if (var < 0) throw std::invalid_argument("unknown variable '" + name + "' in: " + text);
                int e = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    std::string n = lex_number(lx);
                    if (n.empty()) throw std::invalid_argument("missing exponent in: " + text);
                    e = std::stoi(n);
                    if (e < 0) throw std::invalid_argument("negative exponent in: " + text);
                }
                mono.bump(static_cast<std::size_t>(var), e);
            } else {
                throw std::invalid_argument("unexpected character '" + std::string(1, c) + "' in: " + text);
            }
            if (lx.peek() == '*') {
                lx.take();
            } else {
                expect_factor = false;
            }
        }
        auto it = acc.find(mono);
        if (it == acc.end())
            acc.emplace(std::move(mono), std::move(coef));
        else
            it->second += coef;
        any = true;
        char nxt = lx.peek();
        if (nxt != '\0' && nxt != '+' && nxt != '-')
            throw std::invalid_argument("expected '+' or '-' in: " + text);
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    // "0" parses via the digit branch into a zero constant term, dropped here
    return Polynomial::from_terms(ring, std::move(acc));
}

}  // namespace cspace
