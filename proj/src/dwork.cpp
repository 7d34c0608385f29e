#include "dwork.hpp"

#include <algorithm>
#include <bit>

#include "charsum.hpp"

namespace expsum {

namespace {

/* Smallest L with p^{L+1}/(p-1) - (L+1) >= N: beyond index L the series terms
 * t^{p^i}/p^i are 0 mod p^N at val(t) = 1/(p-1). */
int truncation_length(int64_t p, int N) {
    int L = 0;
    for (;;) {
        // check p^{L+1} >= (p-1)(N + L + 1)
        mpz_class lhs;
        mpz_ui_pow_ui(lhs.get_mpz_t(), (unsigned long)p, (unsigned long)(L + 1));
        if (lhs >= (p - 1) * (N + L + 1)) return L;
        L++;
    }
}

/* g(t) = sum_{i=0}^{L} t^{p^i}/p^i evaluated in the work ring. */
PadicElem eval_g(const PadicElem& t, int L, int64_t p) {
    PadicElem acc = t;
    for (int i = 1; i <= L; i++) {
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)i);
        acc = acc + t.pow(e.get_ui()).div_exact_p(i);
    }
    return acc;
}

/* g'(t) = sum_{i=0}^{L} t^{p^i - 1}. */
PadicElem eval_gprime(const PadicElem& t, int L, int64_t p) {
    PadicElem acc = t.ring().one();
    for (int i = 1; i <= L; i++) {
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), (unsigned long)p, (unsigned long)i);
        acc = acc + t.pow(e.get_ui() - 1);
    }
    return acc;
}

}  // namespace

PadicElem solve_gamma(const PadicRing& ring) {
    int64_t p = ring.p();
    int N = ring.precision();
    int L = truncation_length(p, N);
    // work at N + L so the exact divisions by p^i keep N good digits
    PadicRing work(p, N + L + 1);
    PadicElem t = work.pi();
    int steps = 4;
    long target_units = (long)(N + L + 2) * (long)(p - 1);
    while ((1L << steps) < target_units) steps++;
    for (int s = 0; s <= steps; s++) {
        PadicElem g = eval_g(t, L, p);
        if (g.is_zero()) break;
        t = t - g * eval_gprime(t, L, p).inv_unit();
    }
    // residual must vanish to precision N, valuation exactly 1/(p-1)
    PadicVal res = eval_g(t, L, p).val();
    if (!res.at_least((long)N * (long)(p - 1)))
        throw InternalError("gamma Newton iteration did not converge");
    PadicVal vt = t.val();
    if (vt.infinite || vt.num != 1)
        throw InternalError("gamma has wrong valuation");
    return t.reduce_to(ring);
}

std::vector<PadicElem> theta_coefficients(const PadicRing& ring, const PadicElem& gamma,
                                          int imax) {
    int64_t p = ring.p();
    /* Artin-Hasse coefficients over Q: k e_k = sum_{p^i <= k} e_{k - p^i}.
     * All e_k are p-integral. */
    std::vector<mpq_class> e((size_t)imax + 1);
    e[0] = 1;
    for (int k = 1; k <= imax; k++) {
        mpq_class acc = 0;
        mpz_class pw = 1;
        while (pw <= k) {
            acc += e[(size_t)(k - pw.get_si())];
            pw *= p;
        }
        e[(size_t)k] = acc / k;
    }
    std::vector<PadicElem> lambda;
    lambda.reserve((size_t)imax + 1);
    PadicElem gpow = ring.one();
    for (int i = 0; i <= imax; i++) {
        if (i > 0) gpow = gpow * gamma;
        mpz_class num = e[(size_t)i].get_num(), den = e[(size_t)i].get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), (unsigned long)p))
            throw InternalError("Artin-Hasse coefficient not p-integral");
        PadicElem v = gpow.scaled(num) * ring.from_int(den).inv_unit();
        if (!v.val().at_least(i))
            throw InternalError("theta coefficient violates val(lambda_i) >= i/(p-1)");
        lambda.push_back(std::move(v));
    }
    return lambda;
}

PadicElem teichmuller(const PadicRing& ring, int64_t c) {
    int64_t p = ring.p();
    mpz_class x = ((c % p) + p) % p;
    for (int s = 0; s < ring.precision() + 2; s++) {
        mpz_class next;
        mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), (unsigned long)p,
                    ring.pN().get_mpz_t());
        if (next == x) break;
        x = next;
    }
    // fixed point: x^p = x mod p^N
    mpz_class check;
    mpz_powm_ui(check.get_mpz_t(), x.get_mpz_t(), (unsigned long)p, ring.pN().get_mpz_t());
    if (check != x) throw InternalError("Teichmueller iteration did not stabilize");
    return ring.from_int(x);
}

std::map<Monomial, PadicElem> f0_coefficients(const MultiPoly& f, const PadicRing& ring,
                                              int wmax) {
    if (f.field()->a() != 1)
        throw UnsupportedError("Dwork operators are implemented for q = p (a = 1)");
    int n = f.nvars();
    int64_t p = ring.p();
    int delta = f.degree();

    int theta_imax = std::max(wmax, (int)((p - 1) * ring.precision()));
    std::vector<PadicElem> lambda = theta_coefficients(ring, solve_gamma(ring), theta_imax);

    std::map<Monomial, PadicElem> acc;
    acc.emplace(Monomial((size_t)n, 0), ring.one());
    for (auto& [u, cu] : f.terms()) {
        PadicElem ahat = teichmuller(ring, cu.coeffs()[0]);
        int du = (int)total_degree(u);
        std::map<Monomial, PadicElem> factor;
        if (du == 0) {
            // scalar factor theta(ahat) = sum lambda_i ahat^i
            PadicElem s = ring.zero(), apow = ring.one();
            for (int i = 0; i <= (int)((p - 1) * ring.precision()); i++) {
                if (i > 0) apow = apow * ahat;
                s = s + lambda[(size_t)i] * apow;
            }
            factor.emplace(Monomial((size_t)n, 0), s);
        } else {
            PadicElem apow = ring.one();
            for (int i = 0; i * du <= wmax; i++) {
                if (i > 0) apow = apow * ahat;
                Monomial m((size_t)n, 0);
                for (int j = 0; j < n; j++) m[(size_t)j] = u[(size_t)j] * (uint32_t)i;
                factor.emplace(std::move(m), lambda[(size_t)i] * apow);
            }
        }
        // truncated product
        std::map<Monomial, PadicElem> next;
        for (auto& [m1, c1] : acc) {
            for (auto& [m2, c2] : factor) {
                Monomial m = mono_mul(m1, m2);
                if ((int)total_degree(m) > wmax) continue;
                PadicElem prod = c1 * c2;
                auto it = next.find(m);
                if (it == next.end())
                    next.emplace(std::move(m), std::move(prod));
                else
                    it->second = it->second + prod;
            }
        }
        acc = std::move(next);
    }
    /* truncation lemma: val(C_w) >= |w|/(delta (p-1)); each theta index i
     * contributes degree <= delta*i and valuation >= i/(p-1) */
    if (delta >= 1) {
        for (auto& [w, c] : acc) {
            long bound = ((long)total_degree(w) + delta - 1) / delta;
            if (!c.val().at_least(bound))
                throw InternalError("F0 coefficient violates the truncation valuation bound");
        }
    }
    return acc;
}

PadicElem DworkOperator::trace() const {
    PadicElem acc = mat.empty() ? PadicElem() : mat[0][0].ring().zero();
    for (size_t i = 0; i < mat.size(); i++) acc = acc + mat[i][i];
    return acc;
}

namespace {

std::vector<Monomial> basis_upto(int n, int D) {
    std::vector<Monomial> out;
    Monomial cur((size_t)n, 0);
    // enumerate all |v| <= D by odometer, then sort by (degree, grevlex)
    for (;;) {
        if ((int)total_degree(cur) <= D) out.push_back(cur);
        int j = 0;
        while (j < n) {
            if ((int)++cur[(size_t)j] <= D) break;
            cur[(size_t)j] = 0;
            j++;
        }
        if (j == n) break;
    }
    TermOrder grevlex{};
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return grevlex.less(a, b); });
    return out;
}

}  // namespace

DworkOperator alpha_k_matrix(const MultiPoly& f, uint32_t subset, int D,
                             const PadicRing& ring,
                             const std::map<Monomial, PadicElem>& f0) {
    int n = f.nvars();
    int64_t p = ring.p();
    DworkOperator op;
    op.subset = subset;
    op.k = std::popcount(subset);
    op.D = D;
    int delta = f.degree();
    op.guaranteed_precision =
        delta >= 1 ? std::min(ring.precision(), (D + 1) / delta) : ring.precision();
    op.basis = basis_upto(n, D);

    mpz_class qpow;
    mpz_ui_pow_ui(qpow.get_mpz_t(), (unsigned long)p, (unsigned long)(n - op.k));

    size_t dim = op.basis.size();
    op.mat.assign(dim, std::vector<PadicElem>(dim, ring.zero()));
    for (size_t vi = 0; vi < dim; vi++) {
        for (size_t ui = 0; ui < dim; ui++) {
            // w = p(v + 1_S) - (u + 1_S), entry 0 unless w >= 0 componentwise
            Monomial w((size_t)n);
            bool ok = true;
            for (int j = 0; j < n && ok; j++) {
                int64_t ind = (subset >> j) & 1;
                int64_t val = p * ((int64_t)op.basis[vi][(size_t)j] + ind) -
                              ((int64_t)op.basis[ui][(size_t)j] + ind);
                if (val < 0)
                    ok = false;
                else
                    w[(size_t)j] = (uint32_t)val;
            }
            if (!ok) continue;
            /* |w| = p|v + 1_S| - |u + 1_S| <= pD + k(p-1), inside the cutoff
             * pD + n(p-1); absent keys are genuine zeros of F_0. */
            auto it = f0.find(w);
            if (it == f0.end()) continue;
            op.mat[vi][ui] = it->second.scaled(qpow);
        }
    }
    return op;
}

TraceReport trace_formula_check(const MultiPoly& f, int i_max, int D, int N,
                                int64_t budget) {
    if (f.field()->a() != 1)
        throw UnsupportedError("trace formula check requires q = p (a = 1)");
    if (i_max < 1) throw ArgumentError("i_max must be >= 1");
    int n = f.nvars();
    int64_t p = f.field()->p();
    PadicRing ring(p, N);

    int delta = f.degree();
    int wmax = D * (int)p + n * ((int)p - 1);
    auto f0 = f0_coefficients(f, ring, wmax);

    // zeta_p -> theta(1), the splitting-function value matched to the operator
    std::vector<PadicElem> lambda =
        theta_coefficients(ring, solve_gamma(ring), (int)((p - 1) * (int64_t)N));
    PadicElem zeta = ring.zero();
    for (auto& l : lambda) zeta = zeta + l;
    // self-check: Phi_p(zeta) = 1 + zeta + ... + zeta^{p-1} = 0 mod p^N
    PadicElem phi = ring.zero(), zp = ring.one();
    for (int64_t j = 0; j < p; j++) {
        phi = phi + zp;
        zp = zp * zeta;
    }
    if (!phi.is_zero())
        throw InternalError("theta(1) is not a primitive p-th root of unity mod p^N");

    std::vector<DworkOperator> blocks;
    for (uint32_t s = 0; s < (1u << n); s++)
        blocks.push_back(alpha_k_matrix(f, s, D, ring, f0));

    int G = delta >= 1 ? std::min(N, (D + 1) / delta) : N;

    TraceReport rep;
    rep.D = D;
    rep.N = N;
    rep.zeta_image = zeta.str();
    rep.pass = true;

    // powers of each block, one multiplication per step
    std::vector<std::vector<std::vector<PadicElem>>> cur;
    for (auto& b : blocks) cur.push_back(b.mat);

    for (int i = 1; i <= i_max; i++) {
        if (i > 1) {
            for (size_t bi = 0; bi < blocks.size(); bi++) {
                auto& A = cur[bi];
                auto& B = blocks[bi].mat;
                size_t dim = A.size();
                std::vector<std::vector<PadicElem>> nxt(
                    dim, std::vector<PadicElem>(dim, ring.zero()));
                for (size_t r = 0; r < dim; r++)
                    for (size_t c = 0; c < dim; c++) {
                        PadicElem acc = ring.zero();
                        for (size_t t = 0; t < dim; t++) acc = acc + A[r][t] * B[t][c];
                        nxt[r][c] = std::move(acc);
                    }
                cur[bi] = std::move(nxt);
            }
        }
        PadicElem T = ring.zero();
        for (size_t bi = 0; bi < blocks.size(); bi++) {
            PadicElem tr = ring.zero();
            for (size_t r = 0; r < cur[bi].size(); r++) tr = tr + cur[bi][r][r];
            T = blocks[bi].k % 2 == 0 ? T + tr : T - tr;
        }

        CycInt S = exponential_sum(f, i, budget);
        PadicElem Simg = ring.zero(), zpow = ring.one();
        for (size_t j = 0; j < S.coords().size(); j++) {
            if (j > 0) zpow = zpow * zeta;
            else zpow = ring.one();
            if (S.coords()[j] != 0) Simg = Simg + zpow.scaled(S.coords()[j]);
        }

        PadicVal dv = (T - Simg).val();
        TraceRow row;
        row.i = i;
        row.dwork_trace = T.str();
        row.char_sum = Simg.str();
        row.difference_val = dv.str(p);
        row.guaranteed = G;
        row.congruent = dv.at_least((long)G * (long)(p - 1));
        rep.pass = rep.pass && row.congruent;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

BRange b_range(int64_t p, int delta, int e) {
    if (!is_prime(p)) throw ArgumentError("p must be prime");
    if (delta < 1) throw ArgumentError("delta must be >= 1");
    if (e < 1 || e > delta)
        throw ArgumentError("page index e must satisfy 1 <= e <= delta");
    BRange r;
    r.lo = mpq_class(delta, (p - 1) * (delta - e + 1));
    r.hi = mpq_class((long)p * delta, (p - 1) * delta + e - 1);
    r.lo.canonicalize();
    r.hi.canonicalize();
    r.empty = r.lo >= r.hi;
    return r;
}

bool b_range_nonempty(int64_t p, int delta, int e) {
    if (!is_prime(p)) throw ArgumentError("p must be prime");
    if (delta < 1) throw ArgumentError("delta must be >= 1");
    if (e < 1 || e > delta)
        throw ArgumentError("page index e must satisfy 1 <= e <= delta");
    // (1 + p/(p-1)^2)(e-1) < delta
    mpq_class lhs = (mpq_class(1) + mpq_class(p, (p - 1) * (p - 1))) * (e - 1);
    lhs.canonicalize();
    return lhs < delta;
}

}  // namespace expsum
