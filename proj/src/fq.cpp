#include "fq.hpp"

#include <algorithm>
#include <sstream>

namespace expsum {

namespace {

int64_t mod_pos(int64_t v, int64_t p) {
    int64_t r = v % p;
    return r < 0 ? r + p : r;
}

int64_t inv_mod(int64_t v, int64_t p) {
    // extended Euclid; v nonzero mod p
    int64_t a = mod_pos(v, p), b = p, x0 = 1, x1 = 0;
    while (b != 0) {
        int64_t q = a / b;
        int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (a != 1) throw InternalError("inv_mod: not invertible");
    return mod_pos(x0, p);
}

// dense univariate polynomials over F_p, ascending coefficients
using PP = std::vector<int64_t>;

void pp_trim(PP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PP pp_mul(const PP& a, const PP& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    PP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++)
            r[i + j] = mod_pos(r[i + j] + a[i] * b[j], p);
    }
    pp_trim(r);
    return r;
}

PP pp_mod(PP a, const PP& m, int64_t p) {
    // m monic
    pp_trim(a);
    int dm = (int)m.size() - 1;
    while ((int)a.size() - 1 >= dm) {
        int64_t c = a.back();
        int shift = (int)a.size() - 1 - dm;
        if (c != 0)
            for (int j = 0; j <= dm; j++)
                a[j + shift] = mod_pos(a[j + shift] - c * m[j], p);
        a.pop_back();
        pp_trim(a);
    }
    return a;
}

PP pp_powmod(PP base, uint64_t e, const PP& m, int64_t p) {
    PP r = {1};
    base = pp_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pp_mod(pp_mul(r, base, p), m, p);
        base = pp_mod(pp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

PP pp_gcd(PP a, PP b, int64_t p) {
    pp_trim(a); pp_trim(b);
    while (!b.empty()) {
        // make b monic for pp_mod
        PP bm = b;
        int64_t lc = inv_mod(bm.back(), p);
        for (auto& c : bm) c = mod_pos(c * lc, p);
        PP r = pp_mod(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/* Degree-a monic m over F_p is irreducible iff it has no irreducible factor of
 * degree <= a/2, i.e. gcd(x^{p^j} - x, m) = 1 for j = 1..a/2. */
bool pp_irreducible(const PP& m, int64_t p) {
    int a = (int)m.size() - 1;
    if (a <= 0) return false;
    if (a == 1) return true;
    PP h = {0, 1};  // x
    for (int j = 1; j <= a / 2; j++) {
        h = pp_powmod(h, (uint64_t)p, m, p);  // x^{p^j} mod m
        PP diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = mod_pos(diff[1] - 1, p);
        pp_trim(diff);
        PP g = pp_gcd(m, diff, p);
        if ((int)g.size() - 1 > 0) return false;
    }
    return true;
}

}  // namespace

bool is_prime(int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(int64_t p, int a, std::vector<int64_t> modulus)
    : p_(p), a_(a), modulus_(std::move(modulus)) {
    order_ = 1;
    for (int j = 0; j < a; j++) {
        if (order_ > (uint64_t(1) << 62) / (uint64_t)p)
            throw ArgumentError("field order exceeds 2^62");
        order_ *= (uint64_t)p;
    }
}

FieldRef FieldSpec::make(int64_t p, int a, const std::vector<int64_t>* modulus) {
    if (!is_prime(p)) throw ArgumentError("p = " + std::to_string(p) + " is not prime");
    if (a < 1) throw ArgumentError("extension degree must be >= 1");
    if (a == 1) {
        if (modulus) throw ArgumentError("modulus given for a prime field");
        return FieldRef(new FieldSpec(p, 1, {0, 1}));
    }
    if (modulus) {
        PP m;
        for (int64_t c : *modulus) m.push_back(mod_pos(c, p));
        if ((int)m.size() != a + 1 || m.back() != 1)
            throw ArgumentError("modulus must be monic of degree a");
        if (!pp_irreducible(m, p))
            throw ArgumentError("supplied modulus is reducible over F_p");
        return FieldRef(new FieldSpec(p, a, std::move(m)));
    }
    /* Deterministic search: lexicographically smallest coefficient list
     * (c_0, ..., c_{a-1}) of a monic irreducible of degree a. */
    std::vector<int64_t> c(a, 0);
    for (;;) {
        PP m = c;
        m.push_back(1);
        if (pp_irreducible(m, p))
            return FieldRef(new FieldSpec(p, a, std::move(m)));
        int j = a - 1;
        while (j >= 0 && c[j] == p - 1) c[j--] = 0;
        if (j < 0) throw InternalError("no irreducible polynomial found");
        c[j]++;
    }
}

FieldElement FieldSpec::zero() const { return FieldElement(this, std::vector<int64_t>(a_, 0)); }

FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(int64_t v) const {
    std::vector<int64_t> c(a_, 0);
    c[0] = mod_pos(v, p_);
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::generator() const {
    if (a_ == 1) return one();
    std::vector<int64_t> c(a_, 0);
    c[1] = 1;
    return FieldElement(this, std::move(c));
}

FieldElement FieldSpec::element_at(uint64_t k) const {
    if (k >= order_) throw ArgumentError("element index out of range");
    std::vector<int64_t> c(a_, 0);
    for (int j = 0; j < a_; j++) {
        c[j] = (int64_t)(k % (uint64_t)p_);
        k /= (uint64_t)p_;
    }
    return FieldElement(this, std::move(c));
}

std::vector<int64_t> FieldSpec::add(const std::vector<int64_t>& x,
                                    const std::vector<int64_t>& y) const {
    std::vector<int64_t> r(a_);
    for (int j = 0; j < a_; j++) r[j] = mod_pos(x[j] + y[j], p_);
    return r;
}

std::vector<int64_t> FieldSpec::sub(const std::vector<int64_t>& x,
                                    const std::vector<int64_t>& y) const {
    std::vector<int64_t> r(a_);
    for (int j = 0; j < a_; j++) r[j] = mod_pos(x[j] - y[j], p_);
    return r;
}

std::vector<int64_t> FieldSpec::neg(const std::vector<int64_t>& x) const {
    std::vector<int64_t> r(a_);
    for (int j = 0; j < a_; j++) r[j] = mod_pos(-x[j], p_);
    return r;
}

std::vector<int64_t> FieldSpec::mul(const std::vector<int64_t>& x,
                                    const std::vector<int64_t>& y) const {
    if (a_ == 1) return {mod_pos(x[0] * y[0], p_)};
    std::vector<int64_t> prod(2 * a_ - 1, 0);
    for (int i = 0; i < a_; i++) {
        if (x[i] == 0) continue;
        for (int j = 0; j < a_; j++)
            prod[i + j] = mod_pos(prod[i + j] + x[i] * y[j], p_);
    }
    for (int k = 2 * a_ - 2; k >= a_; k--) {
        int64_t c = prod[k];
        if (c == 0) continue;
        for (int j = 0; j < a_; j++)
            prod[k - a_ + j] = mod_pos(prod[k - a_ + j] - c * modulus_[j], p_);
        prod[k] = 0;
    }
    prod.resize(a_);
    return prod;
}

std::vector<int64_t> FieldSpec::inv(const std::vector<int64_t>& x) const {
    if (a_ == 1) {
        if (x[0] == 0) throw ArgumentError("division by zero in F_p");
        return {inv_mod(x[0], p_)};
    }
    // extended Euclid in F_p[x] between x (as a poly) and the modulus
    PP a = x, b = modulus_, s0 = {1}, s1 = {};
    pp_trim(a);
    if (a.empty()) throw ArgumentError("division by zero in F_q");
    while (!b.empty()) {
        // division a = q*b + r with b made monic
        int64_t lcb = b.back();
        int64_t lcb_inv = inv_mod(lcb, p_);
        PP bm = b;
        for (auto& c : bm) c = mod_pos(c * lcb_inv, p_);
        // compute quotient of a by bm
        PP q;
        PP r = a;
        int db = (int)bm.size() - 1;
        while ((int)r.size() - 1 >= db && !r.empty()) {
            int shift = (int)r.size() - 1 - db;
            int64_t c = r.back();
            if ((int)q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = mod_pos(q[shift] + c, p_);
            for (int j = 0; j <= db; j++)
                r[j + shift] = mod_pos(r[j + shift] - c * bm[j], p_);
            pp_trim(r);
        }
        // a = q*bm + r; with b = lcb*bm: a = (q*lcb_inv)*b + r
        for (auto& c : q) c = mod_pos(c * lcb_inv, p_);
        PP s2 = s0;  // s2 = s0 - q*s1
        PP qs1 = pp_mul(q, s1, p_);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
        for (size_t j = 0; j < qs1.size(); j++) s2[j] = mod_pos(s2[j] - qs1[j], p_);
        pp_trim(s2);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // a = gcd (a nonzero constant since modulus irreducible), s0 its cofactor
    if ((int)a.size() != 1) throw InternalError("inv: gcd not constant");
    int64_t ainv = inv_mod(a[0], p_);
    PP r = s0;
    for (auto& c : r) c = mod_pos(c * ainv, p_);
    r = pp_mod(std::move(r), modulus_, p_);
    r.resize(a_, 0);
    return r;
}

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int64_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](int64_t v) { return v == 0; });
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return FieldElement(fld_, fld_->add(c_, o.c_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    return FieldElement(fld_, fld_->sub(c_, o.c_));
}
FieldElement FieldElement::operator-() const {
    return FieldElement(fld_, fld_->neg(c_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    return FieldElement(fld_, fld_->mul(c_, o.c_));
}
FieldElement FieldElement::inv() const {
    return FieldElement(fld_, fld_->inv(c_));
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement r = fld_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius(int j) const {
    FieldElement r = *this;
    for (int t = 0; t < j; t++) r = r.pow((uint64_t)fld_->p());
    return r;
}

uint64_t FieldElement::enum_index() const {
    uint64_t k = 0;
    for (int j = fld_->a() - 1; j >= 0; j--) k = k * (uint64_t)fld_->p() + (uint64_t)c_[j];
    return k;
}

std::string FieldElement::str() const {
    if (fld_->a() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (size_t j = 0; j < c_.size(); j++) {
        if (j) os << ",";
        os << c_[j];
    }
    os << "]";
    return os.str();
}

int64_t absolute_trace(const FieldElement& x) {
    const FieldSpec& F = x.field();
    FieldElement acc = x, pw = x;
    for (int j = 1; j < F.a(); j++) {
        pw = pw.frobenius();
        acc = acc + pw;
    }
    for (int j = 1; j < F.a(); j++)
        if (acc.coeffs()[j] != 0) throw InternalError("trace not in F_p");
    return acc.coeffs()[0];
}

ExtensionSpec::ExtensionSpec(FieldRef base, int i) : base_(std::move(base)), i_(i) {
    if (i < 1) throw ArgumentError("extension step must be >= 1");
    int a = base_->a();
    if (i == 1) {
        big_ = base_;
    } else if (a == 1) {
        big_ = FieldSpec::make(base_->p(), i);
    } else {
        big_ = FieldSpec::make(base_->p(), a * i);
    }
    // image of the base generator: smallest root of the base modulus in big
    FieldElement root = big_->one();
    if (a > 1 && i > 1) {
        bool found = false;
        for (uint64_t k = 0; k < big_->order(); k++) {
            FieldElement e = big_->element_at(k);
            FieldElement v = big_->zero(), epow = big_->one();
            for (int j = 0; j <= a; j++) {
                v = v + epow * big_->from_int(base_->modulus()[j]);
                epow = epow * e;
            }
            if (v.is_zero()) { root = e; found = true; break; }
        }
        if (!found) throw InternalError("base modulus has no root in the extension");
    }
    basis_images_.push_back(big_->one());
    for (int j = 1; j < a; j++) basis_images_.push_back(basis_images_.back() * root);
}

FieldElement ExtensionSpec::embed(const FieldElement& x) const {
    if (!x.field().same_field(*base_)) throw ArgumentError("element not in the base field");
    if (i_ == 1) return x;
    FieldElement acc = big_->zero();
    for (int j = 0; j < base_->a(); j++)
        if (x.coeffs()[j] != 0)
            acc = acc + basis_images_[j] * big_->from_int(x.coeffs()[j]);
    return acc;
}

FieldElement ExtensionSpec::restrict_to_base(const FieldElement& y) const {
    if (!y.field().same_field(*big_)) throw ArgumentError("element not in the extension");
    if (i_ == 1) return y;
    /* Solve  sum_j c_j * basis_images_[j] = y  by repeating the recorded row
     * reduction on the augmented column. */
    int rows = big_->a(), cols = base_->a();
    int64_t p = base_->p();
    // redo elimination on [columns | y]; columns were already reduced, so just
    // mirror the operations via a fresh Gaussian solve (small sizes).
    std::vector<std::vector<int64_t>> M(rows, std::vector<int64_t>(cols + 1, 0));
    for (int j = 0; j < cols; j++)
        for (int r = 0; r < rows; r++) M[r][j] = basis_images_[j].coeffs()[r];
    for (int r = 0; r < rows; r++) M[r][cols] = y.coeffs()[r];
    int rr = 0;
    std::vector<int> pivot_of_col(cols, -1);
    for (int col = 0; col < cols && rr < rows; col++) {
        int piv = -1;
        for (int r = rr; r < rows; r++)
            if (M[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[piv], M[rr]);
        int64_t s = inv_mod(M[rr][col], p);
        for (int j = 0; j <= cols; j++) M[rr][j] = mod_pos(M[rr][j] * s, p);
        for (int r = 0; r < rows; r++) {
            if (r == rr || M[r][col] == 0) continue;
            int64_t f = M[r][col];
            for (int j = 0; j <= cols; j++) M[r][j] = mod_pos(M[r][j] - f * M[rr][j], p);
        }
        pivot_of_col[col] = rr;
        rr++;
    }
    for (int r = rr; r < rows; r++)
        if (M[r][cols] != 0)
            throw ArgumentError("element does not lie in the embedded base field");
    std::vector<int64_t> c(cols, 0);
    for (int col = 0; col < cols; col++)
        if (pivot_of_col[col] >= 0) c[col] = M[pivot_of_col[col]][cols];
    return FieldElement(base_.get(), std::move(c));
}

FieldElement ExtensionSpec::relative_trace(const FieldElement& y) const {
    if (!y.field().same_field(*big_)) throw ArgumentError("element not in the extension");
    uint64_t q = base_->order();
    FieldElement acc = y, pw = y;
    for (int j = 1; j < i_; j++) {
        pw = pw.pow(q);
        acc = acc + pw;
    }
    return restrict_to_base(acc);
}

}  // namespace expsum
