#include "cyclotomic.hpp"

#include <sstream>

namespace expsum {

CycInt::CycInt(int64_t p, std::vector<mpz_class> coords) : p_(p), c_(std::move(coords)) {
    if ((int64_t)c_.size() != p - 1) throw InternalError("CycInt: wrong coordinate count");
}

CycInt CycInt::from_int(int64_t p, const mpz_class& v) {
    CycInt r(p);
    r.c_[0] = v;
    return r;
}

CycInt CycInt::zeta_pow(int64_t p, int64_t j) {
    j %= p;
    if (j < 0) j += p;
    CycInt r(p);
    if (j < p - 1) {
        r.c_[(size_t)j] = 1;
    } else {
        for (auto& c : r.c_) c = -1;
    }
    return r;
}

void CycInt::check_compat(const CycInt& o) const {
    if (p_ != o.p_) throw InternalError("CycInt: mixed characteristics");
}

bool CycInt::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_compat(o);
    CycInt r(p_);
    for (size_t j = 0; j < c_.size(); j++) r.c_[j] = c_[j] + o.c_[j];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_compat(o);
    CycInt r(p_);
    for (size_t j = 0; j < c_.size(); j++) r.c_[j] = c_[j] - o.c_[j];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (size_t j = 0; j < c_.size(); j++) r.c_[j] = -c_[j];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_compat(o);
    // convolution over exponents mod p, then eliminate zeta^{p-1}
    std::vector<mpz_class> full((size_t)p_);
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); j++) {
            if (o.c_[j] == 0) continue;
            full[(i + j) % (size_t)p_] += c_[i] * o.c_[j];
        }
    }
    CycInt r(p_);
    for (size_t j = 0; j + 1 < (size_t)p_; j++) r.c_[j] = full[j] - full[(size_t)p_ - 1];
    return r;
}

CycInt CycInt::scaled(const mpz_class& k) const {
    CycInt r(p_);
    for (size_t j = 0; j < c_.size(); j++) r.c_[j] = c_[j] * k;
    return r;
}

CycInt CycInt::galois(int64_t c) const {
    c %= p_;
    if (c < 0) c += p_;
    if (c == 0) throw ArgumentError("galois: c must be prime to p");
    std::vector<mpz_class> full((size_t)p_);
    for (size_t j = 0; j < c_.size(); j++)
        full[(size_t)(((int64_t)j * c) % p_)] += c_[j];
    CycInt r(p_);
    for (size_t j = 0; j + 1 < (size_t)p_; j++) r.c_[j] = full[j] - full[(size_t)p_ - 1];
    return r;
}

bool CycInt::divisible(const mpz_class& k) const {
    for (auto& x : c_)
        if (!mpz_divisible_p(x.get_mpz_t(), k.get_mpz_t())) return false;
    return true;
}

CycInt CycInt::div_exact(const mpz_class& k) const {
    CycInt r(p_);
    for (size_t j = 0; j < c_.size(); j++) {
        if (!mpz_divisible_p(c_[j].get_mpz_t(), k.get_mpz_t()))
            throw MismatchError("cyclotomic integer not divisible by " + k.get_str());
        mpz_divexact(r.c_[j].get_mpz_t(), c_[j].get_mpz_t(), k.get_mpz_t());
    }
    return r;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool wrote = false;
    for (size_t j = 0; j < c_.size(); j++) {
        if (c_[j] == 0) continue;
        if (wrote) os << " + ";
        os << c_[j].get_str();
        if (j >= 1) os << "*z" << (j > 1 ? "^" + std::to_string(j) : "");
        wrote = true;
    }
    if (!wrote) return "0";
    return os.str();
}

CycRational::CycRational(CycInt n, mpz_class d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw ArgumentError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    reduce();
}

void CycRational::reduce() {
    mpz_class g = den_;
    for (auto& c : num_.coords()) {
        mpz_class t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = t;
        if (g == 1) break;
    }
    if (g > 1) {
        num_ = num_.div_exact(g);
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

CycRational CycRational::operator+(const CycRational& o) const {
    return CycRational(num_.scaled(o.den_) + o.num_.scaled(den_), den_ * o.den_);
}

CycRational CycRational::operator-(const CycRational& o) const {
    return CycRational(num_.scaled(o.den_) - o.num_.scaled(den_), den_ * o.den_);
}

CycRational CycRational::operator-() const { return CycRational(-num_, den_); }

CycRational CycRational::operator*(const CycRational& o) const {
    return CycRational(num_ * o.num_, den_ * o.den_);
}

CycRational CycRational::inv() const {
    if (is_zero()) throw ArgumentError("division by zero in Q(zeta_p)");
    /* Solve x*y = 1 as a rational linear system: columns of M are the
     * coordinates of num * zeta^j. */
    int64_t p = num_.p();
    size_t d = (size_t)(p - 1);
    std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d + 1));
    for (size_t j = 0; j < d; j++) {
        CycInt col = num_ * CycInt::zeta_pow(p, (int64_t)j);
        for (size_t i = 0; i < d; i++) M[i][j] = col.coords()[i];
    }
    M[0][d] = 1;  // right-hand side e_0
    // Gaussian elimination
    size_t row = 0;
    std::vector<int> piv(d, -1);
    for (size_t col = 0; col < d && row < d; col++) {
        size_t sel = row;
        while (sel < d && M[sel][col] == 0) sel++;
        if (sel == d) continue;
        std::swap(M[sel], M[row]);
        mpq_class s = M[row][col];
        for (size_t j = col; j <= d; j++) M[row][j] /= s;
        for (size_t r = 0; r < d; r++) {
            if (r == row || M[r][col] == 0) continue;
            mpq_class f = M[r][col];
            for (size_t j = col; j <= d; j++) M[r][j] -= f * M[row][j];
        }
        piv[col] = (int)row;
        row++;
    }
    for (size_t r = row; r < d; r++)
        if (M[r][d] != 0) throw InternalError("inverse system inconsistent");
    // assemble y = sum y_j zeta^j over Q, clear denominators
    std::vector<mpq_class> y(d, 0);
    for (size_t col = 0; col < d; col++)
        if (piv[col] >= 0) y[col] = M[(size_t)piv[col]][d];
    mpz_class lcm = 1;
    for (auto& v : y) {
        mpz_class den = v.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> coords(d);
    for (size_t j = 0; j < d; j++) {
        mpq_class scaled = y[j] * mpq_class(lcm);
        coords[j] = scaled.get_num();  // exact by construction
    }
    // (num/den)^{-1} = den * num^{-1}, with num^{-1} = coords / lcm
    return CycRational(CycInt(p, std::move(coords)).scaled(den_), lcm);
}

std::string CycRational::str() const {
    if (den_ == 1) return num_.str();
    return "(" + num_.str() + ")/" + den_.get_str();
}

}  // namespace expsum
