#include "roots.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <sstream>

namespace expsum {

namespace mp = boost::multiprecision;

void set_precision_digits(unsigned digits) {
    BigFloat::default_precision(digits);
}

BigComplex embed_root_of_unity(int64_t p, int64_t c, int64_t j) {
    BigFloat pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    int64_t e = ((c % p) * (j % p)) % p;
    BigFloat angle = 2 * pi * BigFloat(e) / BigFloat(p);
    return {cos(angle), sin(angle)};
}

BigComplex embed_cyc(const CycInt& v, int64_t c) {
    BigComplex acc;
    for (size_t j = 0; j < v.coords().size(); j++) {
        const mpz_class& coord = v.coords()[j];
        if (coord == 0) continue;
        BigFloat w(coord.get_str());
        BigComplex z = embed_root_of_unity(v.p(), c, (int64_t)j);
        acc.re += w * z.re;
        acc.im += w * z.im;
    }
    return acc;
}

bool polynomial_roots(const std::vector<BigComplex>& coeffs, std::vector<BigComplex>& roots) {
    int d = (int)coeffs.size() - 1;
    roots.clear();
    if (d <= 0) return true;

    // monic normalization
    std::vector<BigComplex> a(coeffs);
    for (auto& c : a) c = c / coeffs[(size_t)d];

    auto eval = [&](const BigComplex& z) {
        BigComplex acc = a[(size_t)d];
        for (int k = d - 1; k >= 0; k--) acc = acc * z + a[(size_t)k];
        return acc;
    };

    // standard Durand-Kerner seeds (0.4 + 0.9i)^k
    std::vector<BigComplex> z((size_t)d);
    BigComplex seed(BigFloat("0.4"), BigFloat("0.9"));
    BigComplex cur(BigFloat(1), BigFloat(0));
    for (int k = 0; k < d; k++) {
        cur = cur * seed;
        z[(size_t)k] = cur;
    }

    unsigned digits = BigFloat::default_precision();
    BigFloat eps = pow(BigFloat(10), -(int)(digits > 12 ? digits - 8 : 4));
    int max_iter = 400 + 60 * d;
    for (int it = 0; it < max_iter; it++) {
        BigFloat worst(0);
        for (int k = 0; k < d; k++) {
            BigComplex num = eval(z[(size_t)k]);
            BigComplex den(BigFloat(1), BigFloat(0));
            for (int j = 0; j < d; j++) {
                if (j == k) continue;
                den = den * (z[(size_t)k] - z[(size_t)j]);
            }
            BigComplex delta = num / den;
            z[(size_t)k] = z[(size_t)k] - delta;
            BigFloat step = delta.abs();
            if (step > worst) worst = step;
        }
        if (worst < eps) {
            roots = z;
            return true;
        }
    }
    return false;
}

std::string to_decimal_string(const BigFloat& v, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << v;
    return os.str();
}

}  // namespace expsum
