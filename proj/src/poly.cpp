#include "oos/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace oos {

bool MonoDescending::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    return a > b; // lex on exponent vectors, alphabetically first variable most significant
}

PolyRing::PolyRing(Field field, std::vector<std::string> params)
    : field_(field), params_(std::move(params)) {}

static bool valid_ident(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

RingPtr PolyRing::make(Field field, std::vector<std::string> params) {
    std::sort(params.begin(), params.end());
    for (std::size_t i = 0; i < params.size(); ++i) {
        require(valid_ident(params[i]), "bad parameter name: \"" + params[i] + "\"");
        require(i == 0 || params[i] != params[i - 1], "duplicate parameter: " + params[i]);
    }
    return RingPtr(new PolyRing(field, std::move(params)));
}

int PolyRing::param_index(const std::string& name) const {
    auto it = std::lower_bound(params_.begin(), params_.end(), name);
    if (it == params_.end() || *it != name) return -1;
    return static_cast<int>(it - params_.begin());
}

void Poly::check_same_ring(const Poly& a, const Poly& b) {
    require(a.ring_ == b.ring_ || *a.ring_ == *b.ring_,
            "polynomial ring mismatch: " + a.ring_->field().name() + "[...] vs " +
                b.ring_->field().name() + "[...]");
}

Poly Poly::zero(RingPtr ring) { return Poly(std::move(ring)); }

Poly Poly::constant(RingPtr ring, const Rat& value) {
    Poly p(std::move(ring));
    p.insert_term(Exponents(p.ring_->arity(), 0), value);
    return p;
}

Poly Poly::parameter(RingPtr ring, const std::string& name) {
    Poly p(std::move(ring));
    int i = p.ring_->param_index(name);
    require(i >= 0, "unknown variable: " + name);
    Exponents e(p.ring_->arity(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.insert_term(e, Rat(1));
    return p;
}

void Poly::insert_term(const Exponents& e, const Rat& c) {
    Rat v = ring_->field().normalize(c);
    if (v.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, v);
        return;
    }
    Rat s = ring_->field().add(it->second, v);
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat Poly::constant_value() const {
    Exponents z(ring_->arity(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::uint32_t Poly::total_degree() const {
    std::uint32_t best = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t d = 0;
        for (auto x : e) d += x;
        best = std::max(best, d);
    }
    return best;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(*this, o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_ring(*this, o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, c] : terms_) r.insert_term(e, -c);
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(ring_);
    for (const auto& [e, v] : terms_) r.insert_term(e, v * c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(*this, o);
    Poly r(ring_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                std::uint64_t s = std::uint64_t(ea[i]) + eb[i];
                require(s <= std::numeric_limits<std::uint32_t>::max(), "exponent overflow");
                e[i] = static_cast<std::uint32_t>(s);
            }
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_same_ring(*this, o);
    return terms_ == o.terms_;
}

int Poly::compare(const Poly& a, const Poly& b) {
    check_same_ring(a, b);
    MonoDescending lt;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (lt(ia->first, ib->first)) return 1;  // a's monomial larger
        if (lt(ib->first, ia->first)) return -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

Poly Poly::sign_normalized() const {
    if (terms_.empty() || ring_->field().is_prime_field()) return *this;
    if (!terms_.begin()->second.is_negative()) return *this;
    return -*this;
}

Rat Poly::eval(const std::map<std::string, Rat>& assignment) const {
    const auto& names = ring_->params();
    std::vector<Rat> point;
    point.reserve(names.size());
    for (const auto& n : names) {
        auto it = assignment.find(n);
        require(it != assignment.end(), "missing parameter in assignment: " + n);
        point.push_back(ring_->field().normalize(it->second));
    }
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t = ring_->field().mul(t, point[i]);
        acc = ring_->field().add(acc, t);
    }
    return acc;
}

// ------------------------------------------------------------------ printing

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    const auto& names = ring_->params();
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat coeff = c;
        if (first) {
            if (coeff.is_negative()) {
                out << "-";
                coeff = -coeff;
            }
        } else {
            if (coeff.is_negative()) {
                out << " - ";
                coeff = -coeff;
            } else {
                out << " + ";
            }
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            vars << names[i];
            if (e[i] > 1) vars << "^" << e[i];
        }
        if (!any_var) {
            out << coeff.str();
        } else if (coeff.is_one()) {
            out << vars.str();
        } else {
            out << coeff.str() << "*" << vars.str();
        }
    }
    return out.str();
}

// ------------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void error(const std::string& msg) const {
        fail("poly parse error at position " + std::to_string(pos + 1) + ": " + msg);
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    BigInt digits() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            error("expected digits");
        BigInt v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }
    std::string ident() {
        skip_ws();
        if (pos >= text.size() ||
            (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_'))
            error("expected identifier");
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

} // namespace

Poly Poly::parse(RingPtr ring, const std::string& text) {
    Lexer lx(text);
    Poly result = Poly::zero(ring);
    if (lx.eof()) lx.error("empty polynomial");

    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (lx.accept('-')) sign = -1;
        } else {
            if (lx.accept('+'))
                sign = 1;
            else if (lx.accept('-'))
                sign = -1;
            else
                lx.error("expected '+' or '-'");
        }
        first = false;

        // one term: coeff-led or factor-led, '*'-separated factors
        Rat coeff(sign);
        Exponents expo(ring->arity(), 0);
        char c = lx.peek();
        bool had_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = lx.digits();
            if (lx.accept('/')) {
                std::size_t at = lx.pos;
                BigInt den = lx.digits();
                if (den == 0) {
                    lx.pos = at;
                    lx.error("zero denominator");
                }
                coeff = coeff * Rat(num, den);
            } else {
                coeff = coeff * Rat(num);
            }
            had_coeff = true;
        }
        auto read_factor = [&] {
            std::string name = lx.ident();
            int idx = ring->param_index(name);
            if (idx < 0) lx.error("unknown variable: " + name);
            std::uint32_t e = 1;
            if (lx.accept('^')) {
                BigInt v = lx.digits();
                if (v > 1000000) lx.error("exponent too large");
                e = static_cast<std::uint32_t>(v);
            }
            std::uint64_t s = std::uint64_t(expo[static_cast<std::size_t>(idx)]) + e;
            expo[static_cast<std::size_t>(idx)] = static_cast<std::uint32_t>(s);
        };
        if (!had_coeff) read_factor();
        while (true) {
            std::size_t at = lx.pos;
            lx.skip_ws();
            if (lx.pos < lx.text.size() && lx.text[lx.pos] == '/') {
                lx.error("'/' outside a rational literal");
            }
            lx.pos = at;
            if (!lx.accept('*')) break;
            read_factor();
        }
        result.insert_term(expo, coeff);

        if (lx.eof()) break;
        char next = lx.peek();
        if (next != '+' && next != '-') lx.error("unexpected character");
    }
    return result;
}

} // namespace oos
