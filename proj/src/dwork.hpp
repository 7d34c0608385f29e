#ifndef EXPSUM_DWORK_HPP
#define EXPSUM_DWORK_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "mpoly.hpp"
#include "padic.hpp"

namespace expsum {

/* gamma in Z_p[pi]: root of sum_i t^{p^i}/p^i with val(gamma) = 1/(p-1),
 * found by Newton iteration from pi on the truncation whose tail already has
 * valuation >= N.  Internally computed at a higher precision so the returned
 * value is exact mod p^N. */
PadicElem solve_gamma(const PadicRing& ring);

/* Splitting-function coefficients: theta(t) = E(gamma t) = sum lambda_i t^i,
 * with E the Artin-Hasse exponential.  Asserts val(lambda_i) >= i/(p-1). */
std::vector<PadicElem> theta_coefficients(const PadicRing& ring, const PadicElem& gamma,
                                          int imax);

/* Teichmueller lift of c in F_p: the fixed point of x -> x^p congruent to c
 * mod p (q = p only). */
PadicElem teichmuller(const PadicRing& ring, int64_t c);

/* Coefficients of F_0(x) = prod_u theta(a_u^ x^u) for all |w| <= wmax.
 * Requires a = 1, where F_0 = F. */
std::map<Monomial, PadicElem> f0_coefficients(const MultiPoly& f, const PadicRing& ring,
                                              int wmax);

/* Truncated alpha_k block for one subset S: the matrix of
 * xi -> q^{n-k} x_S^{-1} psi(F_0 x_S xi) on the monomial basis {x^v : |v|<=D}.
 * Traces of powers are correct mod p^G. */
struct DworkOperator {
    uint32_t subset = 0;
    int k = 0;
    int D = 0;
    int guaranteed_precision = 0;  // G = floor((D+1)/delta), capped at N
    std::vector<Monomial> basis;
    std::vector<std::vector<PadicElem>> mat;

    PadicElem trace() const;
};

DworkOperator alpha_k_matrix(const MultiPoly& f, uint32_t subset, int D,
                             const PadicRing& ring,
                             const std::map<Monomial, PadicElem>& f0);

struct TraceRow {
    int i = 0;
    std::string dwork_trace;    // T_i = sum_k (-1)^k Tr(alpha_k^i)
    std::string char_sum;       // S_i mapped into R_N via zeta -> theta(1)
    std::string difference_val; // exact rational, units of ord p
    int guaranteed = 0;         // G_i
    bool congruent = false;     // val(T_i - S_i) >= G_i
};

struct TraceReport {
    bool pass = false;
    int D = 0, N = 0;
    std::string zeta_image;  // theta(1) in R_N
    std::vector<TraceRow> rows;
};

/* Verifies T_i = S_i mod p^{G_i} for i = 1..i_max; a failure flags an
 * implementation bug, since the identity is a theorem. */
TraceReport trace_formula_check(const MultiPoly& f, int i_max, int D, int N,
                                int64_t budget = 100000000);

struct BRange {
    bool empty = false;
    mpq_class lo, hi;  // open interval (lo, hi) when nonempty
};

/* The admissible range delta/((p-1)(delta-e+1)) < b < p delta/((p-1)delta+e-1);
 * requires 1 <= e <= delta. */
BRange b_range(int64_t p, int delta, int e);

/* Equivalent inequality (1 + p/(p-1)^2)(e-1) < delta, exact rationals. */
bool b_range_nonempty(int64_t p, int delta, int e);

}  // namespace expsum

#endif
