#ifndef EXPSUM_MPOLY_HPP
#define EXPSUM_MPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fq.hpp"

namespace expsum {

using Monomial = std::vector<uint32_t>;

inline uint32_t total_degree(const Monomial& m) {
    uint64_t d = 0;
    for (uint32_t e : m) d += e;
    if (d > 0xffffffffu) throw ArgumentError("monomial degree overflows 32 bits");
    return (uint32_t)d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& a, const Monomial& b);  // a / b (exact)
Monomial mono_lcm(const Monomial& a, const Monomial& b);

enum class OrderKind { Grevlex, Lex, GradedLex };

/* Multiplicative total order on monomials with 1 minimal.  The permutation
 * reindexes variables before comparison (empty = identity, x1 > x2 > ...). */
struct TermOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<int> perm;  // perm[j] = variable compared at position j

    bool less(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

/* Sparse multivariate polynomial over F_q.  Terms are kept sorted in
 * descending grevlex order with no zero coefficients; all operations are pure.
 */
class MultiPoly {
public:
    MultiPoly() : n_(0) {}
    MultiPoly(FieldRef field, int n) : field_(std::move(field)), n_(n) {}

    static MultiPoly zero(FieldRef field, int n) { return MultiPoly(std::move(field), n); }
    static MultiPoly constant(FieldRef field, int n, const FieldElement& c);
    static MultiPoly monomial(FieldRef field, int n, Monomial m, const FieldElement& c);
    static MultiPoly variable(FieldRef field, int n, int i);  // x_{i+1}

    /* Grammar: integer coefficients, variables x1..xn, operators + - * ^,
     * parentheses.  Coefficients reduce into the prime subfield of `field`. */
    static MultiPoly parse(const std::string& text, int n, FieldRef field);

    const FieldRef& field() const { return field_; }
    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::vector<std::pair<Monomial, FieldElement>>& terms() const { return terms_; }

    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const FieldElement& c) const;
    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

    MultiPoly derivative(int i) const;  // d/dx_{i+1}

    /* Exact evaluation at a point with coordinates in F_{q^step}; pass the
     * ExtensionSpec used to embed the coefficients (nullptr = base field). */
    FieldElement evaluate(const std::vector<FieldElement>& point,
                          const ExtensionSpec* ext = nullptr) const;

    /* Substitute x_{i+1} = value (value in the same field), dropping to a
     * polynomial that no longer mentions that variable. */
    MultiPoly substitute(int i, const FieldElement& value) const;

    MultiPoly homogeneous_component(int j) const;

    const std::pair<Monomial, FieldElement>& leading_term(const TermOrder& o) const;

    std::string str() const;  // canonical: descending grevlex, explicit * and ^

    // building block used by arithmetic and parsing
    void add_term(const Monomial& m, const FieldElement& c);

private:
    FieldRef field_;
    int n_;
    std::vector<std::pair<Monomial, FieldElement>> terms_;  // descending grevlex
    void normalize();
};

/* f = f^{(δ)} + f^{(δ')} + lower parts; delta_prime is absent when f is
 * homogeneous. */
struct HomogDecomp {
    std::vector<MultiPoly> parts;  // index j = degree-j part, j = 0..delta
    int delta = 0;
    std::optional<int> delta_prime;
};

HomogDecomp homogeneous_parts(const MultiPoly& f);

}  // namespace expsum

#endif
