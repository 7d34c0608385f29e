#ifndef EXPSUM_FQ_HPP
#define EXPSUM_FQ_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace expsum {

class FieldSpec;
using FieldRef = std::shared_ptr<const FieldSpec>;

/* Element of F_{p^a} in the polynomial basis 1, g, ..., g^{a-1}, where g is
 * the class of x modulo the field's defining polynomial.  Elements keep a raw
 * pointer to their FieldSpec; the field object must outlive them. */
class FieldElement {
public:
    FieldElement() : fld_(nullptr) {}
    FieldElement(const FieldSpec* fld, std::vector<int64_t> coeffs)
        : fld_(fld), c_(std::move(coeffs)) {}

    const FieldSpec& field() const { return *fld_; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;
    FieldElement frobenius(int j = 1) const;  // x -> x^{p^j}

    bool operator==(const FieldElement& o) const { return c_ == o.c_; }
    bool operator!=(const FieldElement& o) const { return c_ != o.c_; }
    bool operator<(const FieldElement& o) const { return enum_index() < o.enum_index(); }

    // position in the canonical enumeration order
    uint64_t enum_index() const;

    std::string str() const;

private:
    const FieldSpec* fld_;
    std::vector<int64_t> c_;
};

/* Immutable description of F_{p^a}.  For a > 1 the field is F_p[x]/(modulus)
 * with modulus monic irreducible of degree a (ascending coefficient order,
 * length a+1).  Safe to share across threads once constructed. */
class FieldSpec {
public:
    /* Searches for the lexicographically smallest irreducible modulus when
     * none is supplied and a > 1.  Throws ArgumentError on non-prime p or a
     * reducible modulus. */
    static FieldRef make(int64_t p, int a,
                         const std::vector<int64_t>* modulus = nullptr);

    int64_t p() const { return p_; }
    int a() const { return a_; }
    uint64_t order() const { return order_; }
    const std::vector<int64_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(int64_t v) const;
    FieldElement generator() const;  // class of x (for a > 1), or 1

    // k-th element in enumeration order, 0 <= k < p^a
    FieldElement element_at(uint64_t k) const;

    bool same_field(const FieldSpec& o) const {
        return p_ == o.p_ && a_ == o.a_ && modulus_ == o.modulus_;
    }

    // internal arithmetic used by FieldElement
    std::vector<int64_t> add(const std::vector<int64_t>&, const std::vector<int64_t>&) const;
    std::vector<int64_t> sub(const std::vector<int64_t>&, const std::vector<int64_t>&) const;
    std::vector<int64_t> neg(const std::vector<int64_t>&) const;
    std::vector<int64_t> mul(const std::vector<int64_t>&, const std::vector<int64_t>&) const;
    std::vector<int64_t> inv(const std::vector<int64_t>&) const;

private:
    FieldSpec(int64_t p, int a, std::vector<int64_t> modulus);
    int64_t p_;
    int a_;
    uint64_t order_;
    std::vector<int64_t> modulus_;  // length a+1, monic; {0,1} placeholder for a == 1
};

/* Sum x + x^p + ... + x^{p^{m-1}} for x in F_{p^m}; lands in F_p. */
int64_t absolute_trace(const FieldElement& x);

/* F_q inside F_{q^i}, realized as F_{p^{a*i}} together with the embedding that
 * sends the base generator to the smallest root (in enumeration order) of the
 * base modulus in the big field. */
class ExtensionSpec {
public:
    ExtensionSpec(FieldRef base, int i);

    const FieldRef& base() const { return base_; }
    const FieldRef& big() const { return big_; }
    int step() const { return i_; }

    FieldElement embed(const FieldElement& x) const;
    /* Inverse of embed; throws ArgumentError if y is not in the embedded copy
     * of the base field. */
    FieldElement restrict_to_base(const FieldElement& y) const;

    /* Sum_{j<i} y^{q^j}, returned inside the base field. */
    FieldElement relative_trace(const FieldElement& y) const;

private:
    FieldRef base_;
    FieldRef big_;
    int i_;
    std::vector<FieldElement> basis_images_;  // images of 1, g, ..., g^{a-1}
};

bool is_prime(int64_t n);

}  // namespace expsum

#endif
