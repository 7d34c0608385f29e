#include "padic.hpp"

#include <numeric>
#include <sstream>

namespace expsum {

std::string PadicVal::str(int64_t p) const {
    if (infinite) return "inf";
    long den = p - 1;
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    long n2 = num / g, d2 = den / g;
    if (d2 == 1) return std::to_string(n2);
    return std::to_string(n2) + "/" + std::to_string(d2);
}

PadicRing::PadicRing(int64_t p, int N) : p_(p), N_(N) {
    if (p < 2) throw ArgumentError("p must be prime");
    if (N < 1) throw ArgumentError("precision must be >= 1");
    mpz_ui_pow_ui(pN_.get_mpz_t(), (unsigned long)p, (unsigned long)N);
}

PadicElem PadicRing::zero() const {
    return PadicElem(this, std::vector<mpz_class>((size_t)(p_ - 1), 0));
}

PadicElem PadicRing::one() const { return from_int(1); }

PadicElem PadicRing::from_int(const mpz_class& v) const {
    std::vector<mpz_class> c((size_t)(p_ - 1), 0);
    mpz_mod(c[0].get_mpz_t(), v.get_mpz_t(), pN_.get_mpz_t());
    return PadicElem(this, std::move(c));
}

PadicElem PadicRing::pi() const {
    std::vector<mpz_class> c((size_t)(p_ - 1), 0);
    if (p_ == 2)
        c[0] = pN_ - 2;  // pi = -2 when p = 2
    else
        c[1] = 1;
    return PadicElem(this, std::move(c));
}

PadicElem::PadicElem(const PadicRing* ring, std::vector<mpz_class> coords)
    : ring_(ring), c_(std::move(coords)) {
    if ((int64_t)c_.size() != ring_->p() - 1)
        throw InternalError("PadicElem: wrong coordinate count");
    for (auto& x : c_) mpz_mod(x.get_mpz_t(), x.get_mpz_t(), ring_->pN().get_mpz_t());
}

void PadicElem::check(const PadicElem& o) const {
    if (!ring_->same_ring(*o.ring_)) throw InternalError("PadicElem: mixed rings");
}

bool PadicElem::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

PadicElem PadicElem::operator+(const PadicElem& o) const {
    check(o);
    std::vector<mpz_class> c(c_.size());
    for (size_t j = 0; j < c_.size(); j++) c[j] = c_[j] + o.c_[j];
    return PadicElem(ring_, std::move(c));
}

PadicElem PadicElem::operator-(const PadicElem& o) const {
    check(o);
    std::vector<mpz_class> c(c_.size());
    for (size_t j = 0; j < c_.size(); j++) c[j] = c_[j] - o.c_[j];
    return PadicElem(ring_, std::move(c));
}

PadicElem PadicElem::operator-() const {
    std::vector<mpz_class> c(c_.size());
    for (size_t j = 0; j < c_.size(); j++) c[j] = -c_[j];
    return PadicElem(ring_, std::move(c));
}

PadicElem PadicElem::operator*(const PadicElem& o) const {
    check(o);
    size_t d = c_.size();  // p - 1
    std::vector<mpz_class> full(2 * d, 0);
    for (size_t i = 0; i < d; i++) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < d; j++) {
            if (o.c_[j] == 0) continue;
            full[i + j] += c_[i] * o.c_[j];
        }
    }
    // pi^{p-1+k} = -p pi^k
    int64_t p = ring_->p();
    for (size_t k = 2 * d - 1; k >= d; k--) {
        if (full[k] != 0) full[k - d] -= p * full[k];
        if (k == d) break;
    }
    full.resize(d);
    return PadicElem(ring_, std::move(full));
}

PadicElem PadicElem::scaled(const mpz_class& k) const {
    std::vector<mpz_class> c(c_.size());
    for (size_t j = 0; j < c_.size(); j++) c[j] = c_[j] * k;
    return PadicElem(ring_, std::move(c));
}

PadicElem PadicElem::pow(uint64_t e) const {
    PadicElem r = ring_->one(), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

PadicElem PadicElem::inv_unit() const {
    int64_t p = ring_->p();
    mpz_class c0_mod_p;
    mpz_mod_ui(c0_mod_p.get_mpz_t(), c_[0].get_mpz_t(), (unsigned long)p);
    if (c0_mod_p == 0) throw ArgumentError("inv_unit: not a unit");
    mpz_class z0, pz((long)p);
    if (mpz_invert(z0.get_mpz_t(), c_[0].get_mpz_t(), ring_->pN().get_mpz_t()) == 0)
        throw InternalError("inv_unit: integer inversion failed");
    PadicElem z = ring_->from_int(z0);
    PadicElem two = ring_->from_int(2);
    // Newton z <- z(2 - uz): each step squares the pi-adic error
    int steps = 3;
    long bits = (long)(ring_->precision()) * (long)(p - 1);
    while ((1L << steps) < bits + 2) steps++;
    for (int s = 0; s <= steps; s++) z = z * (two - *this * z);
    if (!(*this * z == ring_->one())) throw InternalError("inv_unit: did not converge");
    return z;
}

PadicElem PadicElem::div_exact_p(int k) const {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), (unsigned long)ring_->p(), (unsigned long)k);
    std::vector<mpz_class> c(c_.size());
    for (size_t j = 0; j < c_.size(); j++) {
        if (!mpz_divisible_p(c_[j].get_mpz_t(), pk.get_mpz_t()))
            throw InternalError("div_exact_p: coordinate not divisible (precision bug)");
        mpz_divexact(c[j].get_mpz_t(), c_[j].get_mpz_t(), pk.get_mpz_t());
    }
    return PadicElem(ring_, std::move(c));
}

PadicElem PadicElem::reduce_to(const PadicRing& target) const {
    if (target.p() != ring_->p()) throw InternalError("reduce_to: different primes");
    if (target.precision() > ring_->precision())
        throw InternalError("reduce_to: cannot raise precision");
    return PadicElem(&target, c_);
}

PadicVal PadicElem::val() const {
    PadicVal best;
    best.infinite = true;
    int64_t p = ring_->p();
    for (size_t j = 0; j < c_.size(); j++) {
        if (c_[j] == 0) continue;
        mpz_class t = c_[j];
        long o = 0;
        while (mpz_divisible_ui_p(t.get_mpz_t(), (unsigned long)p)) {
            mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), (unsigned long)p);
            o++;
        }
        long v = o * (long)(p - 1) + (long)j;
        if (best.infinite || v < best.num) {
            best.infinite = false;
            best.num = v;
        }
    }
    return best;
}

std::string PadicElem::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < c_.size(); j++) {
        if (j) os << ",";
        os << c_[j].get_str();
    }
    os << ")";
    return os.str();
}

}  // namespace expsum
