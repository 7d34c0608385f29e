#ifndef EXPSUM_PADIC_HPP
#define EXPSUM_PADIC_HPP

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace expsum {

/* Valuation in units of 1/(p-1): value = num/(p-1), or >= the ring precision
 * when infinite is set (all coordinates vanished mod p^N). */
struct PadicVal {
    bool infinite = false;
    long num = 0;

    bool at_least(long units) const { return infinite || num >= units; }
    std::string str(int64_t p) const;
};

class PadicElem;

/* R_N = O / p^N O for O the ring of integers of Q_p(zeta_p), represented on
 * the basis 1, pi, ..., pi^{p-2} with pi^{p-1} = -p; each coordinate lives in
 * Z/p^N.  val(pi) = 1/(p-1). */
class PadicRing {
public:
    PadicRing(int64_t p, int N);

    int64_t p() const { return p_; }
    int precision() const { return N_; }
    const mpz_class& pN() const { return pN_; }

    PadicElem zero() const;
    PadicElem one() const;
    PadicElem from_int(const mpz_class& v) const;
    PadicElem pi() const;

    bool same_ring(const PadicRing& o) const { return p_ == o.p_ && N_ == o.N_; }

private:
    int64_t p_;
    int N_;
    mpz_class pN_;
};

class PadicElem {
public:
    PadicElem() : ring_(nullptr) {}
    PadicElem(const PadicRing* ring, std::vector<mpz_class> coords);

    const PadicRing& ring() const { return *ring_; }
    const std::vector<mpz_class>& coords() const { return c_; }
    bool is_zero() const;

    PadicElem operator+(const PadicElem& o) const;
    PadicElem operator-(const PadicElem& o) const;
    PadicElem operator-() const;
    PadicElem operator*(const PadicElem& o) const;
    PadicElem scaled(const mpz_class& k) const;
    PadicElem pow(uint64_t e) const;
    bool operator==(const PadicElem& o) const { return c_ == o.c_; }

    /* Inverse of a unit (coordinate 0 prime to p). */
    PadicElem inv_unit() const;

    /* Exact division by p^k on canonical representatives; each coordinate must
     * be divisible, else InternalError (a precision bookkeeping bug).  The
     * result is only trustworthy mod p^{N-k}. */
    PadicElem div_exact_p(int k) const;

    /* Reduce into a lower-precision ring (N' <= N). */
    PadicElem reduce_to(const PadicRing& target) const;

    PadicVal val() const;

    std::string str() const;

private:
    const PadicRing* ring_;
    std::vector<mpz_class> c_;
    void check(const PadicElem& o) const;
};

}  // namespace expsum

#endif
