#include "charsum.hpp"

#include <algorithm>
#include <thread>

#include "roots.hpp"

namespace expsum {

namespace {

/* Count points by the value of absolute_trace(f(x)); the sum is then
 * sum_t counts[t] * zeta^t.  Specializes the highest variable first and
 * finishes the innermost variable with a Horner sweep against a precomputed
 * trace table (results are bit-identical to naive evaluation). */
void count_traces(const MultiPoly& f, const FieldSpec& K,
                  const std::vector<int64_t>& trace_table, int var, uint64_t lo,
                  uint64_t hi, std::vector<int64_t>& counts) {
    if (var == 0) {
        int deg = f.degree();
        if (deg < 0) {
            counts[(size_t)trace_table[0]] += (int64_t)(hi - lo);
            return;
        }
        std::vector<FieldElement> coef((size_t)deg + 1, K.zero());
        for (auto& t : f.terms()) coef[t.first[0]] = t.second;
        for (uint64_t k = lo; k < hi; k++) {
            FieldElement e = K.element_at(k);
            FieldElement acc = coef[(size_t)deg];
            for (int j = deg - 1; j >= 0; j--) acc = acc * e + coef[(size_t)j];
            counts[(size_t)trace_table[acc.enum_index()]]++;
        }
        return;
    }
    for (uint64_t k = lo; k < hi; k++) {
        MultiPoly g = f.substitute(var, K.element_at(k));
        count_traces(g, K, trace_table, var - 1, 0, K.order(), counts);
    }
}

}  // namespace

CycInt exponential_sum(const MultiPoly& f, int i, int64_t budget, int threads) {
    if (i < 1) throw ArgumentError("extension step must be >= 1");
    const FieldRef& F = f.field();
    int n = f.nvars();
    int64_t p = F->p();

    // budget check: q^{n*i} evaluations
    mpz_class need;
    mpz_ui_pow_ui(need.get_mpz_t(), (unsigned long)F->order(), (unsigned long)(n * i));
    if (need > budget)
        throw BudgetError("enumeration needs " + need.get_str() + " points, budget is " +
                          std::to_string(budget));

    ExtensionSpec ext(F, i);
    const FieldSpec& K = *ext.big();

    // coefficients embedded once; points then range over the big field
    MultiPoly fe = MultiPoly::zero(ext.big(), n);
    for (auto& t : f.terms()) fe.add_term(t.first, ext.embed(t.second));

    uint64_t q = K.order();
    std::vector<int64_t> trace_table((size_t)q);
    for (uint64_t k = 0; k < q; k++) trace_table[k] = absolute_trace(K.element_at(k));

    int nthreads = std::max(1, threads);
    if ((uint64_t)nthreads > q) nthreads = (int)q;

    std::vector<std::vector<int64_t>> partial((size_t)nthreads,
                                              std::vector<int64_t>((size_t)p, 0));
    if (nthreads == 1) {
        count_traces(fe, K, trace_table, n - 1, 0, q, partial[0]);
    } else {
        std::vector<std::thread> pool;
        uint64_t chunk = (q + (uint64_t)nthreads - 1) / (uint64_t)nthreads;
        for (int t = 0; t < nthreads; t++) {
            uint64_t lo = (uint64_t)t * chunk, hi = std::min(q, lo + chunk);
            pool.emplace_back([&, t, lo, hi] {
                count_traces(fe, K, trace_table, n - 1, lo, hi, partial[(size_t)t]);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<int64_t> counts((size_t)p, 0);
    for (auto& part : partial)
        for (size_t j = 0; j < (size_t)p; j++) counts[j] += part[j];

    std::vector<mpz_class> coords((size_t)(p - 1));
    for (size_t j = 0; j + 1 < (size_t)p; j++) coords[j] = counts[j] - counts[(size_t)p - 1];
    return CycInt(p, std::move(coords));
}

std::vector<CycInt> l_series(const std::vector<CycInt>& sums) {
    if (sums.empty()) throw ArgumentError("need at least one sum");
    int64_t p = sums[0].p();
    size_t m = sums.size();
    /* L' = (sum S_i t^{i-1}) L, so  k l_k = sum_{j=1}^{k} S_j l_{k-j}. */
    std::vector<CycRational> l(m + 1, CycRational{CycInt(p)});
    l[0] = CycRational::from_int(p, 1);
    for (size_t k = 1; k <= m; k++) {
        CycRational acc{CycInt(p)};
        for (size_t j = 1; j <= k; j++)
            acc = acc + CycRational(sums[j - 1]) * l[k - j];
        l[k] = acc * CycRational(CycInt::from_int(p, 1), mpz_class((long)k));
    }
    std::vector<CycInt> out;
    out.reserve(m + 1);
    for (auto& c : l) {
        if (!c.is_integral())
            throw InternalError("L-series coefficient is not a cyclotomic integer: " + c.str());
        out.push_back(c.num());
    }
    return out;
}

std::vector<CycInt> lambda_from_newton(const std::vector<CycInt>& sums, int n, int d) {
    if (d < 0) throw ArgumentError("degree must be >= 0");
    if ((int)sums.size() < d)
        throw ArgumentError("need S_1..S_d to recover a degree-d polynomial");
    int64_t p = sums.empty() ? 2 : sums[0].p();
    // power sums of the reciprocal roots
    std::vector<CycInt> P;
    for (int i = 0; i < d; i++)
        P.push_back(n % 2 == 0 ? sums[(size_t)i] : -sums[(size_t)i]);
    // Newton: k e_k = sum_{j=1}^{k} (-1)^{j-1} P_j e_{k-j}
    std::vector<CycInt> e = {CycInt::from_int(p, 1)};
    for (int k = 1; k <= d; k++) {
        CycInt acc(p);
        for (int j = 1; j <= k; j++) {
            CycInt term = P[(size_t)(j - 1)] * e[(size_t)(k - j)];
            acc = (j % 2 == 1) ? acc + term : acc - term;
        }
        if (!acc.divisible(k))
            throw MismatchError("degree hypothesis d = " + std::to_string(d) +
                                " fails: Newton recursion leaves Z[zeta_p] at k = " +
                                std::to_string(k));
        e.push_back(acc.div_exact(k));
    }
    // Lambda(t) = sum_k (-1)^k e_k t^k
    std::vector<CycInt> lambda;
    for (int k = 0; k <= d; k++)
        lambda.push_back(k % 2 == 0 ? e[(size_t)k] : -e[(size_t)k]);
    return lambda;
}

std::vector<CycInt> sums_from_lambda(const std::vector<CycInt>& lambda, int n, int imax) {
    if (lambda.empty() || !(lambda[0] == CycInt::from_int(lambda[0].p(), 1)))
        throw ArgumentError("Lambda must have constant term 1");
    int64_t p = lambda[0].p();
    int d = (int)lambda.size() - 1;
    // recover e_k, then power sums by the inverse Newton recurrence
    std::vector<CycInt> e;
    for (int k = 0; k <= d; k++)
        e.push_back(k % 2 == 0 ? lambda[(size_t)k] : -lambda[(size_t)k]);
    std::vector<CycInt> P;  // P_1..P_imax
    for (int k = 1; k <= imax; k++) {
        // P_k = (-1)^{k-1} k e_k + sum_{j=1}^{k-1} (-1)^{k-1+j} e_{k-j} P_j
        CycInt acc(p);
        if (k <= d) {
            acc = e[(size_t)k].scaled(k);
            if (k % 2 == 0) acc = -acc;
        }
        for (int j = 1; j < k; j++) {
            if (k - j > d) continue;
            CycInt term = e[(size_t)(k - j)] * P[(size_t)(j - 1)];
            acc = ((k - 1 + j) % 2 == 0) ? acc + term : acc - term;
        }
        P.push_back(acc);
    }
    std::vector<CycInt> sums;
    for (auto& Pi : P) sums.push_back(n % 2 == 0 ? Pi : -Pi);
    return sums;
}

RationalFunction rational_reconstruct(const std::vector<CycRational>& series, int dmax_num,
                                      int dmax_den) {
    if (series.empty()) throw ArgumentError("empty series");
    int m = (int)series.size() - 1;  // matching to order m
    if (m < dmax_num + dmax_den)
        throw ArgumentError("need at least dmax_num + dmax_den + 1 series terms");
    int64_t p = series[0].p();
    CycRational zero{CycInt(p)}; CycRational one = CycRational::from_int(p, 1);

    auto series_at = [&](int k) -> const CycRational& { return series[(size_t)k]; };

    for (int total = 0; total <= dmax_num + dmax_den; total++) {
        for (int dden = std::max(0, total - dmax_num); dden <= std::min(total, dmax_den);
             dden++) {
            int dnum = total - dden;
            /* With D = 1 + D_1 t + ... + D_dden t^dden, the conditions are
             * (D*C)_k = 0 for k = dnum+1..m: dden unknowns. */
            int rows = m - dnum, cols = dden;
            std::vector<std::vector<CycRational>> M(
                (size_t)rows, std::vector<CycRational>((size_t)(cols + 1), zero));
            for (int r = 0; r < rows; r++) {
                int k = dnum + 1 + r;
                for (int j = 1; j <= dden; j++)
                    M[(size_t)r][(size_t)(j - 1)] =
                        (k - j >= 0) ? series_at(k - j) : zero;
                M[(size_t)r][(size_t)cols] = -series_at(k);
            }
            // Gaussian elimination over Q(zeta_p)
            int rank = 0;
            std::vector<int> piv((size_t)cols, -1);
            for (int col = 0; col < cols && rank < rows; col++) {
                int sel = -1;
                for (int r = rank; r < rows; r++)
                    if (!M[(size_t)r][(size_t)col].is_zero()) { sel = r; break; }
                if (sel < 0) continue;
                std::swap(M[(size_t)sel], M[(size_t)rank]);
                CycRational s = M[(size_t)rank][(size_t)col].inv();
                for (int j = col; j <= cols; j++)
                    M[(size_t)rank][(size_t)j] = M[(size_t)rank][(size_t)j] * s;
                for (int r = 0; r < rows; r++) {
                    if (r == rank || M[(size_t)r][(size_t)col].is_zero()) continue;
                    CycRational fct = M[(size_t)r][(size_t)col];
                    for (int j = col; j <= cols; j++)
                        M[(size_t)r][(size_t)j] =
                            M[(size_t)r][(size_t)j] - fct * M[(size_t)rank][(size_t)j];
                }
                piv[(size_t)col] = rank;
                rank++;
            }
            bool consistent = true;
            for (int r = rank; r < rows; r++)
                if (!M[(size_t)r][(size_t)cols].is_zero()) { consistent = false; break; }
            if (!consistent) continue;

            std::vector<CycRational> den(1, one);
            for (int j = 1; j <= dden; j++)
                den.push_back(piv[(size_t)(j - 1)] >= 0
                                  ? M[(size_t)piv[(size_t)(j - 1)]][(size_t)cols]
                                  : zero);
            // numerator = first dnum+1 coefficients of D*C
            std::vector<CycRational> num;
            for (int k = 0; k <= dnum; k++) {
                CycRational acc{CycInt(p)};
                for (int j = 0; j <= std::min(k, dden); j++)
                    acc = acc + den[(size_t)j] * series_at(k - j);
                num.push_back(acc);
            }
            // verify the full series (guards degenerate eliminations)
            bool ok = true;
            for (int k = dnum + 1; k <= m && ok; k++) {
                CycRational acc{CycInt(p)};
                for (int j = 0; j <= std::min(k, dden); j++)
                    acc = acc + den[(size_t)j] * series_at(k - j);
                if (!acc.is_zero()) ok = false;
            }
            if (!ok) continue;
            while (num.size() > 1 && num.back().is_zero()) num.pop_back();
            while (den.size() > 1 && den.back().is_zero()) den.pop_back();
            return RationalFunction{std::move(num), std::move(den)};
        }
    }
    throw MismatchError("no rational function within degree bounds (" +
                        std::to_string(dmax_num) + ", " + std::to_string(dmax_den) +
                        ") matches the series");
}

WeilReport weil_check(std::vector<CycInt> lambda, int64_t q, int n, double tol,
                      unsigned digits) {
    if (lambda.empty()) throw ArgumentError("empty polynomial");
    while (lambda.size() > 1 && lambda.back().is_zero()) lambda.pop_back();
    int64_t p = lambda[0].p();
    int d = (int)lambda.size() - 1;

    for (;;) {
        set_precision_digits(digits);
        WeilReport rep;
        rep.digits = digits;
        rep.pass = true;
        BigFloat target = pow(BigFloat(q), BigFloat(n) / 2);
        BigFloat maxdev(0);
        bool converged = true;
        for (int64_t c = 1; c < p && converged; c++) {
            std::vector<BigComplex> coeffs;
            for (auto& co : lambda) coeffs.push_back(embed_cyc(co, c));
            WeilEmbeddingReport er;
            er.c = c;
            BigFloat emax(0);
            if (d > 0) {
                std::vector<BigComplex> roots;
                if (!polynomial_roots(coeffs, roots)) {
                    converged = false;
                    break;
                }
                for (auto& r : roots) {
                    BigFloat rho = 1 / r.abs();  // reciprocal root modulus
                    BigFloat dev = abs(rho - target);
                    if (dev > emax) emax = dev;
                    if (dev > maxdev) maxdev = dev;
                    er.moduli.push_back(to_decimal_string(rho, digits));
                }
            }
            er.max_deviation = to_decimal_string(emax, digits);
            rep.embeddings.push_back(std::move(er));
        }
        if (converged) {
            rep.max_deviation = to_decimal_string(maxdev, digits);
            rep.pass = maxdev <= BigFloat(tol);
            return rep;
        }
        if (digits >= 800)
            throw InternalError("root finding failed to converge at 800 digits");
        digits = std::min(800u, digits * 2);
    }
}

std::vector<SumBoundRow> sum_bound_check(const MultiPoly& f, const mpz_class& milnor,
                                         int i_max, int64_t budget, unsigned digits) {
    set_precision_digits(digits);
    int64_t p = f.field()->p();
    int64_t q = (int64_t)f.field()->order();
    int n = f.nvars();
    std::vector<SumBoundRow> rows;
    for (int i = 1; i <= i_max; i++) {
        CycInt S = exponential_sum(f, i, budget);
        BigFloat maxabs(0);
        for (int64_t c = 1; c < p; c++) {
            BigFloat v = embed_cyc(S, c).abs();
            if (v > maxabs) maxabs = v;
        }
        BigFloat bound = BigFloat(milnor.get_str()) * pow(BigFloat(q), BigFloat(n * i) / 2);
        SumBoundRow row;
        row.i = i;
        row.max_abs = to_decimal_string(maxabs, 30);
        row.bound = to_decimal_string(bound, 30);
        row.margin = to_decimal_string(bound - maxabs, 30);
        row.within = maxabs <= bound + pow(BigFloat(10), -20);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace expsum
