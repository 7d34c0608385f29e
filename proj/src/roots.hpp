#ifndef EXPSUM_ROOTS_HPP
#define EXPSUM_ROOTS_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace expsum {

using BigFloat = boost::multiprecision::mpfr_float;

struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex operator+(const BigComplex& o) const { return {re + o.re, im + o.im}; }
    BigComplex operator-(const BigComplex& o) const { return {re - o.re, im - o.im}; }
    BigComplex operator*(const BigComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    BigComplex operator/(const BigComplex& o) const {
        BigFloat d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    BigFloat abs() const { return boost::multiprecision::sqrt(re * re + im * im); }
};

/* Sets the working precision (decimal digits) for subsequently constructed
 * BigFloats; affects the calling thread. */
void set_precision_digits(unsigned digits);

/* zeta_p^j under the embedding zeta_p -> exp(2*pi*i*c/p). */
BigComplex embed_root_of_unity(int64_t p, int64_t c, int64_t j);

/* Complex value of a cyclotomic integer under embedding c. */
BigComplex embed_cyc(const CycInt& v, int64_t c);

/* All complex roots of sum_k coeffs[k] t^k (degree = coeffs.size()-1, leading
 * coefficient nonzero) by Durand-Kerner iteration.  Returns false when the
 * iteration fails to settle at the current precision. */
bool polynomial_roots(const std::vector<BigComplex>& coeffs, std::vector<BigComplex>& roots);

std::string to_decimal_string(const BigFloat& v, unsigned digits);

}  // namespace expsum

#endif
