#ifndef EXPSUM_CHARSUM_HPP
#define EXPSUM_CHARSUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "mpoly.hpp"

namespace expsum {

constexpr int64_t kDefaultBudget = 100000000;  // point evaluations

/* S(A^n(F_{q^i}), f) = sum over all points of Psi(Trace f), with the fixed
 * character Psi(t) = zeta_p^{absolute_trace(t)}.  Exact in Z[zeta_p].
 * Partitions the point space across `threads` workers; partial sums combine
 * by exact addition, so the result is independent of the partitioning. */
CycInt exponential_sum(const MultiPoly& f, int i, int64_t budget = kDefaultBudget,
                       int threads = 1);

/* Power-series coefficients of L = exp(sum_i S_i t^i / i) up to order m =
 * sums.size().  Throws InternalError if any coefficient fails to be a
 * cyclotomic integer (L always has integral coefficients; a failure is a bug).
 */
std::vector<CycInt> l_series(const std::vector<CycInt>& sums);

/* Assuming Lambda = L^{(-1)^{n+1}} is a polynomial of degree d, recover its
 * coefficients from S_1..S_d by Newton's identities on the power sums
 * P_i = (-1)^n S_i.  Throws MismatchError when the recursion leaves Z[zeta_p]
 * (the degree hypothesis is wrong). */
std::vector<CycInt> lambda_from_newton(const std::vector<CycInt>& sums, int n, int d);

/* Re-expand log(Lambda) and return the sums S_i = (-1)^n P_i it encodes,
 * i = 1..imax.  Inverse consistency check for lambda_from_newton. */
std::vector<CycInt> sums_from_lambda(const std::vector<CycInt>& lambda, int n, int imax);

struct RationalFunction {
    std::vector<CycRational> numerator;    // ascending, constant term first
    std::vector<CycRational> denominator;  // denominator[0] = 1
};

/* Minimal rational function with deg num <= dmax_num, deg den <= dmax_den
 * matching the series to its full length (requires series.size() >=
 * dmax_num + dmax_den + 1).  Throws MismatchError when no pair fits. */
RationalFunction rational_reconstruct(const std::vector<CycRational>& series, int dmax_num,
                                      int dmax_den);

struct WeilEmbeddingReport {
    int64_t c = 1;                     // embedding zeta -> exp(2 pi i c/p)
    std::vector<std::string> moduli;   // reciprocal-root absolute values
    std::string max_deviation;         // max | |rho| - q^{n/2} |
};

struct WeilReport {
    bool pass = true;
    unsigned digits = 50;  // working precision that produced the report
    std::string max_deviation;
    std::vector<WeilEmbeddingReport> embeddings;
};

/* For every embedding c = 1..p-1, finds the complex roots of the embedded
 * Lambda and compares reciprocal-root moduli with q^{n/2}.  Precision starts
 * at `digits` and doubles on root-finder non-convergence (cap 800).
 * Trailing zero coefficients are dropped before rooting. */
WeilReport weil_check(std::vector<CycInt> lambda, int64_t q, int n, double tol,
                      unsigned digits = 50);

struct SumBoundRow {
    int i;
    std::string max_abs;   // max |S_i| over embeddings
    std::string bound;     // M_f q^{ni/2}
    std::string margin;    // bound - max_abs
    bool within = true;
};

/* Empirical comparison |S_i| <= M_f q^{ni/2} for i = 1..i_max; evidence
 * reporting only, never asserted as a theorem. */
std::vector<SumBoundRow> sum_bound_check(const MultiPoly& f, const mpz_class& milnor,
                                         int i_max, int64_t budget = kDefaultBudget,
                                         unsigned digits = 50);

}  // namespace expsum

#endif
