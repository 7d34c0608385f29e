#include "mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace expsum {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t j = 0; j < a.size(); j++) {
        uint64_t e = (uint64_t)a[j] + b[j];
        if (e > 0xffffffffu) throw ArgumentError("exponent overflows 32 bits");
        r[j] = (uint32_t)e;
    }
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t j = 0; j < a.size(); j++)
        if (a[j] > b[j]) return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t j = 0; j < a.size(); j++) {
        if (b[j] > a[j]) throw InternalError("mono_div: not divisible");
        r[j] = a[j] - b[j];
    }
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t j = 0; j < a.size(); j++) r[j] = std::max(a[j], b[j]);
    return r;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
    size_t n = a.size();
    auto at = [&](const Monomial& m, size_t j) -> uint32_t {
        return perm.empty() ? m[j] : m[perm[j]];
    };
    if (kind != OrderKind::Lex) {
        uint32_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
    }
    if (kind == OrderKind::Grevlex) {
        // equal degree: the last position where they differ decides,
        // with the larger exponent there being the *smaller* monomial
        for (size_t j = n; j-- > 0;) {
            uint32_t ea = at(a, j), eb = at(b, j);
            if (ea != eb) return ea > eb;
        }
        return false;
    }
    for (size_t j = 0; j < n; j++) {
        uint32_t ea = at(a, j), eb = at(b, j);
        if (ea != eb) return ea < eb;
    }
    return false;
}

namespace {
const TermOrder kCanonical{};  // grevlex, identity permutation
}

MultiPoly MultiPoly::constant(FieldRef field, int n, const FieldElement& c) {
    MultiPoly f(std::move(field), n);
    if (!c.is_zero()) f.terms_.emplace_back(Monomial(n, 0), c);
    return f;
}

MultiPoly MultiPoly::monomial(FieldRef field, int n, Monomial m, const FieldElement& c) {
    MultiPoly f(std::move(field), n);
    if (!c.is_zero()) f.terms_.emplace_back(std::move(m), c);
    return f;
}

MultiPoly MultiPoly::variable(FieldRef field, int n, int i) {
    if (i < 0 || i >= n) throw ArgumentError("variable index out of range");
    Monomial m(n, 0);
    m[i] = 1;
    FieldElement one = field->one();
    return monomial(std::move(field), n, std::move(m), one);
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return kCanonical.greater(a.first, b.first); });
    std::vector<std::pair<Monomial, FieldElement>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second = out.back().second + t.second;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& t) { return t.second.is_zero(); }),
              out.end());
    terms_ = std::move(out);
}

void MultiPoly::add_term(const Monomial& m, const FieldElement& c) {
    if (c.is_zero()) return;
    terms_.emplace_back(m, c);
    normalize();
}

int MultiPoly::degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, (int)total_degree(t.first));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = total_degree(terms_[0].first);
    for (auto& t : terms_)
        if (total_degree(t.first) != d) return false;
    return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(field_, n_);
    r.terms_ = terms_;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, n_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.emplace_back(t.first, -t.second);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(field_, n_);
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (auto& s : terms_)
        for (auto& t : o.terms_)
            r.terms_.emplace_back(mono_mul(s.first, t.first), s.second * t.second);
    r.normalize();
    return r;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
    MultiPoly r(field_, n_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
    return r;
}

MultiPoly MultiPoly::derivative(int i) const {
    if (i < 0 || i >= n_) throw ArgumentError("variable index out of range");
    MultiPoly r(field_, n_);
    for (auto& t : terms_) {
        uint32_t e = t.first[i];
        if (e == 0) continue;
        FieldElement c = t.second * field_->from_int((int64_t)e);
        if (c.is_zero()) continue;  // exponent divisible by p
        Monomial m = t.first;
        m[i] = e - 1;
        r.terms_.emplace_back(std::move(m), c);
    }
    r.normalize();
    return r;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point,
                                 const ExtensionSpec* ext) const {
    if ((int)point.size() != n_) throw ArgumentError("point has wrong dimension");
    const FieldSpec* big = ext ? ext->big().get() : field_.get();
    FieldElement acc = big->zero();
    for (auto& t : terms_) {
        FieldElement v = ext ? ext->embed(t.second) : t.second;
        for (int j = 0; j < n_; j++)
            if (t.first[j] != 0) v = v * point[j].pow(t.first[j]);
        acc = acc + v;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int i, const FieldElement& value) const {
    MultiPoly r(field_, n_);
    // group by exponent of x_i to share powers
    std::vector<FieldElement> powers = {field_->one()};
    for (auto& t : terms_) {
        uint32_t e = t.first[i];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Monomial m = t.first;
        m[i] = 0;
        r.terms_.emplace_back(std::move(m), t.second * powers[e]);
    }
    r.normalize();
    return r;
}

MultiPoly MultiPoly::homogeneous_component(int j) const {
    MultiPoly r(field_, n_);
    for (auto& t : terms_)
        if ((int)total_degree(t.first) == j) r.terms_.push_back(t);
    return r;
}

const std::pair<Monomial, FieldElement>& MultiPoly::leading_term(const TermOrder& o) const {
    if (terms_.empty()) throw ArgumentError("zero polynomial has no leading term");
    size_t best = 0;
    for (size_t j = 1; j < terms_.size(); j++)
        if (o.greater(terms_[j].first, terms_[best].first)) best = j;
    return terms_[best];
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = t.second.is_one();
        bool constant = total_degree(t.first) == 0;
        if (!unit || constant) os << t.second.str();
        bool wrote = !unit || constant;
        for (int j = 0; j < n_; j++) {
            if (t.first[j] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (j + 1);
            if (t.first[j] > 1) os << "^" << t.first[j];
            wrote = true;
        }
    }
    return os.str();
}

HomogDecomp homogeneous_parts(const MultiPoly& f) {
    if (f.is_zero()) throw ArgumentError("homogeneous decomposition of the zero polynomial");
    HomogDecomp d;
    d.delta = f.degree();
    d.parts.resize(d.delta + 1);
    for (int j = 0; j <= d.delta; j++)
        d.parts[j] = MultiPoly::zero(f.field(), f.nvars());
    for (auto& t : f.terms()) {
        int j = (int)total_degree(t.first);
        d.parts[j].add_term(t.first, t.second);
    }
    for (int j = d.delta - 1; j >= 1; j--) {
        if (!d.parts[j].is_zero()) {
            d.delta_prime = j;
            break;
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int n;
    FieldRef field;

    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) pos++;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos));
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) { pos++; return true; }
        return false;
    }

    uint64_t integer() {
        skip();
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected integer");
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            v = v * 10 + (uint64_t)(s[pos] - '0');
            if (v > 0xffffffffull) fail("integer literal too large");
            pos++;
        }
        return v;
    }

    MultiPoly atom() {
        skip();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            pos++;
            MultiPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'x') {
            pos++;
            if (pos >= s.size() || !std::isdigit((unsigned char)s[pos]))
                fail("expected variable index after 'x'");
            uint64_t idx = integer();
            if (idx < 1 || (int)idx > n)
                fail("variable index out of range (have n = " + std::to_string(n) + ")");
            return MultiPoly::variable(field, n, (int)idx - 1);
        }
        if (std::isdigit((unsigned char)c)) {
            uint64_t v = integer();
            return MultiPoly::constant(field, n, field->from_int((int64_t)(v % (uint64_t)field->p())));
        }
        fail("unexpected character");
    }

    MultiPoly factor() {
        MultiPoly b = atom();
        if (eat('^')) {
            uint64_t e = integer();
            MultiPoly r = MultiPoly::constant(field, n, field->one());
            MultiPoly base = b;
            while (e) {
                if (e & 1) r = r * base;
                base = base * base;
                e >>= 1;
            }
            return r;
        }
        return b;
    }

    MultiPoly term() {
        MultiPoly f = factor();
        while (eat('*')) f = f * factor();
        return f;
    }

    MultiPoly expr() {
        bool negate = false;
        skip();
        if (eat('-')) negate = true;
        else eat('+');
        MultiPoly acc = term();
        if (negate) acc = -acc;
        for (;;) {
            skip();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else break;
        }
        return acc;
    }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text, int n, FieldRef field) {
    if (n < 1) throw ArgumentError("variable count must be >= 1");
    Parser p{text, 0, n, field};
    MultiPoly f = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

}  // namespace expsum
