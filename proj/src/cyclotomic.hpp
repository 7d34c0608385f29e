#ifndef EXPSUM_CYCLOTOMIC_HPP
#define EXPSUM_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace expsum {

/* Exact element of Z[zeta_p] in the power basis 1, zeta, ..., zeta^{p-2}.
 * Canonical form eliminates zeta^{p-1} through 1 + zeta + ... + zeta^{p-1} = 0.
 */
class CycInt {
public:
    CycInt() : p_(2), c_(1) {}
    explicit CycInt(int64_t p) : p_(p), c_((size_t)(p - 1)) {}
    CycInt(int64_t p, std::vector<mpz_class> coords);

    static CycInt from_int(int64_t p, const mpz_class& v);
    static CycInt zeta_pow(int64_t p, int64_t j);  // zeta^j, canonicalized

    int64_t p() const { return p_; }
    const std::vector<mpz_class>& coords() const { return c_; }
    bool is_zero() const;

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt scaled(const mpz_class& k) const;
    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    /* Galois automorphism sigma_c : zeta -> zeta^c, gcd(c, p) = 1. */
    CycInt galois(int64_t c) const;

    /* Exact division by an integer; throws MismatchError when not divisible. */
    CycInt div_exact(const mpz_class& k) const;
    bool divisible(const mpz_class& k) const;

    std::string str() const;

private:
    int64_t p_;
    std::vector<mpz_class> c_;
    void check_compat(const CycInt& o) const;
};

/* Element of Q(zeta_p): CycInt numerator over a positive integer denominator,
 * kept reduced (gcd of all numerator coordinates and the denominator is 1). */
class CycRational {
public:
    CycRational() : num_(2), den_(1) {}
    explicit CycRational(CycInt n) : num_(std::move(n)), den_(1) {}
    CycRational(CycInt n, mpz_class d);

    static CycRational from_int(int64_t p, const mpz_class& v) {
        return CycRational(CycInt::from_int(p, v));
    }

    const CycInt& num() const { return num_; }
    const mpz_class& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }
    int64_t p() const { return num_.p(); }

    CycRational operator+(const CycRational& o) const;
    CycRational operator-(const CycRational& o) const;
    CycRational operator-() const;
    CycRational operator*(const CycRational& o) const;
    CycRational inv() const;  // throws ArgumentError on zero
    CycRational operator/(const CycRational& o) const { return *this * o.inv(); }
    bool operator==(const CycRational& o) const {
        return den_ == o.den_ && num_ == o.num_;
    }

    std::string str() const;

private:
    CycInt num_;
    mpz_class den_;
    void reduce();
};

}  // namespace expsum

#endif
