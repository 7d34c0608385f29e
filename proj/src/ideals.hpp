#ifndef EXPSUM_IDEALS_HPP
#define EXPSUM_IDEALS_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "mpoly.hpp"

namespace expsum {

/* Reduced Groebner basis: pairwise normal-form-reduced generators with monic
 * leading coefficients, sorted by leading monomial.  Unique for a fixed order.
 */
struct GroebnerBasis {
    TermOrder order;
    std::vector<MultiPoly> generators;
};

/* Buchberger with the coprime-lead and chain criteria, normal pair selection
 * (minimal lcm degree first).  Deterministic for fixed input and order. */
GroebnerBasis buchberger(std::vector<MultiPoly> gens, const TermOrder& order);

/* Remainder with no term divisible by any leading monomial; idempotent and
 * F_q-linear in f. */
MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& gb);

struct QuotientDim {
    bool finite = false;
    mpz_class dim;  // valid when finite
};

/* Finite iff every variable has a pure power among the leading monomials;
 * the dimension counts the standard monomials under the staircase. */
QuotientDim quotient_dim(const GroebnerBasis& gb);

/* dim F_q[x]/(df/dx_1, ..., df/dx_n); infinite = non-isolated critical locus. */
QuotientDim milnor_sum(const MultiPoly& f);

/* True iff the only common zero of the ideal over the algebraic closure is the
 * origin, tested through nilpotency: normal_form(x_j^D) = 0 for every j, with
 * D the quotient dimension.  Requires quotient_dim finite. */
bool origin_supported(const GroebnerBasis& gb);

/* Coefficients of the Hilbert-series numerator N(t) of R/(leads), where
 * HS = N(t)/(1-t)^n.  leads need not be minimal. */
std::vector<mpz_class> hilbert_numerator(std::vector<Monomial> leads, int n);

struct CICheckResult {
    bool pass = false;
    std::string reason;                       // set on failure
    std::vector<std::string> witness_ideal;   // generators of the failing ideal
};

/* Does f_1 = ... = f_k = 0 define a smooth complete intersection of
 * codimension k in P^{n-1}?  For k >= n the empty scheme counts as one (the
 * projective locus must be empty); for k < n the Hilbert series must equal
 * prod (1-t^{d_j})/(1-t)^n and the ideal augmented by the k x k Jacobian
 * minors must be supported at the origin. */
CICheckResult smooth_ci_check(const std::vector<MultiPoly>& forms);

struct CISubsetResult {
    std::vector<int> subset;   // 1-based factor indices
    bool with_delta_prime = false;
    int codim = 0;             // expected codimension = number of forms
    bool pass = false;
    std::string reason;
    std::vector<std::string> witness_ideal;
};

struct CIReport {
    bool pass = false;
    bool coprime = false;  // gcd(p, delta * delta' * a_1...a_r) = 1
    int delta = 0;
    int delta_prime = 0;
    int e = 0;  // delta - delta' + 1, the page the conclusion predicts
    std::vector<CISubsetResult> subsets;
};

/* Hypothesis check: f^{(delta)} = f_1^{a_1} ... f_r^{a_r}; every nonempty
 * subset of the factors must cut out a smooth complete intersection, the
 * delta'-augmented systems likewise where required, and p must be prime to
 * delta * delta' * a_1 ... a_r.  Throws MismatchError when the factorization
 * does not multiply back to f^{(delta)}. */
CIReport smooth_factorization_check(const std::vector<std::pair<MultiPoly, int>>& factors,
                            const MultiPoly& fdelta_prime, const MultiPoly& f);

}  // namespace expsum

#endif
