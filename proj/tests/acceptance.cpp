// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "analyze.hpp"
#include "expsum/expsum.h"
#include "roots.hpp"

using namespace expsum;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

void report(const char* name, bool ok, double seconds) {
    std::printf("%s %-12s (%.3fs)", ok ? "PASS" : "FAIL", name, seconds);
    if (!ok) {
        g_failures++;
        for (auto& n : g_notes) std::printf("  [%s]", n.c_str());
    }
    std::printf("\n");
    g_notes.clear();
}

bool require(bool cond, const std::string& what) {
    if (!cond) note(what);
    return cond;
}

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/* Criterion 1: for f = x1^3 + x1 over F_7 the pipeline reports
 * deg Lambda = (delta-1)^n = 2 = M_f and both reciprocal-root moduli equal
 * sqrt(7) within 1e-9 under every embedding, in under a second. */
void criterion_1() {
    auto t0 = Clock::now();
    bool ok = true;
    auto F7 = FieldSpec::make(7, 1);
    AnalysisConfig cfg;
    cfg.p = 7;
    cfg.poly_text = "x1^3 + x1";
    cfg.nvars = 1;
    cfg.tol = 1e-9;
    RunResult res = run_analyze(cfg);
    ok &= require(res.pass, "pipeline verdict");
    ok &= require(res.report["milnor"]["value"] == "2", "M_f = 2");
    ok &= require(res.report["cross_checks"]["deg_lambda"] == 2, "deg Lambda = 2");
    ok &= require(res.report["cross_checks"]["deg_lambda_equals_milnor"] == true,
                  "deg Lambda = M_f");
    auto weil = res.report["lfunction"]["weil"];
    ok &= require(weil["pass"] == true, "Weil check pass");
    ok &= require(weil["embeddings"].size() == 6, "all 6 embeddings checked");
    set_precision_digits(60);
    BigFloat target = sqrt(BigFloat(7));
    for (auto& emb : weil["embeddings"]) {
        ok &= require(emb["moduli"].size() == 2, "two reciprocal roots");
        for (auto& m : emb["moduli"]) {
            BigFloat rho(m.get<std::string>().c_str());
            ok &= require(abs(rho - target) <= BigFloat("1e-9"), "modulus = sqrt(7)");
        }
    }
    double dt = since(t0);
    ok &= require(dt < 1.0, "runtime < 1 s");
    report("criterion-1", ok, dt);
}

/* Criterion 2: f = x1 x2 + x1 + x2 over F_3: smooth_factorization_check passes with
 * e = 2; vanishing at e = 2 verified to r <= 3(delta-1); M_f = 1; Lambda has
 * degree 1 with reciprocal root of modulus exactly 3. */
void criterion_2() {
    auto t0 = Clock::now();
    bool ok = true;
    auto F3 = FieldSpec::make(3, 1);
    auto f = MultiPoly::parse("x1*x2 + x1 + x2", 2, F3);

    std::vector<std::pair<MultiPoly, int>> factors = {
        {MultiPoly::parse("x1", 2, F3), 1}, {MultiPoly::parse("x2", 2, F3), 1}};
    CIReport ci = smooth_factorization_check(factors, MultiPoly::parse("x1 + x2", 2, F3), f);
    ok &= require(ci.pass, "factorization hypothesis check");
    ok &= require(ci.e == 2, "predicted e = 2");

    int delta = f.degree();
    VanishingVerdict v = check_vanishing(f, 2, -1, 3 * (delta - 1));
    ok &= require(v.verified, "E_2 vanishing to bound");

    ok &= require(h_top_dimension(f) == 1, "M_f = 1");

    std::vector<CycInt> sums = {exponential_sum(f, 1)};
    auto lambda = lambda_from_newton(sums, 2, 1);
    ok &= require(lambda.size() == 2 && !lambda[1].is_zero(), "deg Lambda = 1");
    WeilReport wr = weil_check(lambda, 3, 2, 1e-9);
    ok &= require(wr.pass, "reciprocal root modulus 3 = q^{n/2}");
    set_precision_digits(60);
    for (auto& er : wr.embeddings)
        for (auto& m : er.moduli) {
            BigFloat rho(m.c_str());
            ok &= require(abs(rho - 3) <= BigFloat("1e-30"), "modulus exactly 3");
        }
    double dt = since(t0);
    ok &= require(dt < 5.0, "runtime < 5 s");
    report("criterion-2", ok, dt);
}

/* Criterion 3: f = x1^3 - x1 over F_3: M_f = 0, L reconstructs to 1/(1-3t)
 * with a nontrivial denominator, and page-1 vanishing fails with a concrete
 * cell. */
void criterion_3() {
    auto t0 = Clock::now();
    bool ok = true;
    auto F3 = FieldSpec::make(3, 1);
    auto f = MultiPoly::parse("x1^3 - x1", 1, F3);

    auto milnor = milnor_sum(f);
    ok &= require(milnor.finite && milnor.dim == 0, "M_f = 0");

    std::vector<CycInt> sums;
    for (int i = 1; i <= 6; i++) sums.push_back(exponential_sum(f, i));
    auto L = l_series(sums);
    std::vector<CycRational> series;
    for (auto& c : L) series.emplace_back(c);
    RationalFunction rf = rational_reconstruct(series, 2, 2);
    ok &= require(rf.denominator.size() == 2, "denominator degree 1");
    ok &= require(rf.numerator.size() == 1 &&
                      rf.numerator[0] == CycRational::from_int(3, 1),
                  "numerator 1");
    ok &= require(rf.denominator[1] == CycRational::from_int(3, -3),
                  "denominator 1 - 3t");

    VanishingVerdict v = check_vanishing(f, 1, -1, 8);
    ok &= require(!v.verified, "E_1 vanishing fails");
    ok &= require(v.counterexample.has_value(), "concrete failing cell");
    ok &= require(!v.witness.empty(), "witness vector reported");

    double dt = since(t0);
    ok &= require(dt < 1.0, "runtime < 1 s");
    report("criterion-3", ok, dt);
}

/* Criterion 4: regular-sequence and Koszul dimension counts:
 * x1^2 + x2^2 -> 1, x1^3 + x2^3 over F_7 -> 4, x1 x2 -> 1. */
void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;
    struct Case {
        std::string text;
        int64_t p;
        long want;
    };
    for (auto& c : std::vector<Case>{{"x1^2 + x2^2", 3, 1},
                                     {"x1^3 + x2^3", 7, 4},
                                     {"x1*x2", 3, 1}}) {
        auto t1 = Clock::now();
        auto F = FieldSpec::make(c.p, 1);
        auto fd = MultiPoly::parse(c.text, 2, F);
        auto rsc = regular_sequence_check(fd);
        ok &= require(rsc.regular, c.text + ": regular sequence");
        int delta = fd.degree();
        mpz_class total = 0;
        for (int r = 0; r <= 3 * (delta - 1) + 2; r++)
            total += graded_piece_dims(fd, r, 2 - r);
        ok &= require(total == c.want,
                      c.text + ": diagonal E_1 total = " + std::to_string(c.want));
        ok &= require(since(t1) < 2.0, c.text + ": runtime < 2 s");
    }
    report("criterion-4", ok, since(t0));
}

/* Criterion 5: Dwork trace formula for f in {0, x, x^2} over F_3 with D = 9,
 * N = 4: T_1 = S_1 and T_2 = S_2 mod p^{G_i}, G_1 >= 3, zero tolerance. */
void criterion_5() {
    auto t0 = Clock::now();
    bool ok = true;
    auto F3 = FieldSpec::make(3, 1);
    for (auto& text : std::vector<std::string>{"0", "x1", "x1^2"}) {
        MultiPoly f = text == "0" ? MultiPoly::zero(F3, 1) : MultiPoly::parse(text, 1, F3);
        TraceReport rep = trace_formula_check(f, 2, 9, 4);
        ok &= require(rep.pass, "f = " + text + ": congruences hold");
        ok &= require(rep.rows.size() == 2, "two trace rows");
        for (auto& row : rep.rows) {
            ok &= require(row.guaranteed >= 3, "f = " + text + ": G >= 3");
            ok &= require(row.congruent, "f = " + text + ": exact congruence");
        }
    }
    double dt = since(t0);
    ok &= require(dt < 10.0, "runtime < 10 s");
    report("criterion-5", ok, dt);
}

/* Criterion 6: interval emptiness agrees with the inequality for all primes
 * p <= 50, delta <= 12, e <= delta; the e = 2 special cases read delta >= 2
 * for odd p and delta >= 4 for p = 2. */
void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int64_t p = 2; p <= 50; p++) {
        if (!is_prime(p)) continue;
        for (int delta = 1; delta <= 12; delta++)
            for (int e = 1; e <= delta; e++) {
                BRange r = b_range(p, delta, e);
                bool ne = b_range_nonempty(p, delta, e);
                if (ne == r.empty) {
                    ok = require(false, "disagreement at p=" + std::to_string(p) +
                                            " delta=" + std::to_string(delta) +
                                            " e=" + std::to_string(e));
                }
            }
    }
    // stated special cases at e = 2
    for (int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        for (int delta = 2; delta <= 12; delta++)
            ok &= require(b_range_nonempty(p, delta, 2), "odd p: delta >= 2 suffices");
    ok &= require(!b_range_nonempty(2, 2, 2), "p = 2: delta = 2 empty");
    ok &= require(!b_range_nonempty(2, 3, 2), "p = 2: delta = 3 empty");
    for (int delta = 4; delta <= 12; delta++)
        ok &= require(b_range_nonempty(2, delta, 2), "p = 2: delta >= 4 nonempty");

    double dt = since(t0);
    ok &= require(dt < 1.0, "runtime < 1 s");
    report("criterion-6", ok, dt);
}

/* Criterion 7: property suites with zero failures. */
void criterion_7() {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937 rng(20240817);

    // Galois equivariance: S(c f) = sigma_c(S(f)), 50 random cases over c
    {
        auto F5 = FieldSpec::make(5, 1);
        std::uniform_int_distribution<int> coeff(0, 4), expd(0, 3);
        int cases = 0;
        while (cases < 50) {
            MultiPoly f = MultiPoly::zero(F5, 2);
            for (int t = 0; t < 4; t++) {
                Monomial m{(uint32_t)expd(rng), (uint32_t)expd(rng)};
                f = f + MultiPoly::monomial(F5, 2, m, F5->from_int(coeff(rng)));
            }
            if (f.is_zero()) continue;
            CycInt base = exponential_sum(f, 1);
            for (int64_t c = 1; c < 5; c++) {
                cases++;
                if (!(exponential_sum(f.scaled(F5->from_int(c)), 1) == base.galois(c)))
                    ok = require(false, "Galois equivariance");
            }
        }
    }

    // affine invariance: 50 random substitutions
    {
        auto F3 = FieldSpec::make(3, 1);
        auto f = MultiPoly::parse("x1^2*x2 + x1 + 2*x2", 2, F3);
        CycInt base = exponential_sum(f, 1);
        std::uniform_int_distribution<int> d(0, 2);
        int done = 0;
        while (done < 50) {
            int64_t a = d(rng), b = d(rng), cc = d(rng), dd = d(rng);
            if (((a * dd - b * cc) % 3 + 3) % 3 == 0) continue;
            auto X1 = MultiPoly::variable(F3, 2, 0), X2 = MultiPoly::variable(F3, 2, 1);
            auto s1 = X1.scaled(F3->from_int(a)) + X2.scaled(F3->from_int(b)) +
                      MultiPoly::constant(F3, 2, F3->from_int(d(rng)));
            auto s2 = X1.scaled(F3->from_int(cc)) + X2.scaled(F3->from_int(dd)) +
                      MultiPoly::constant(F3, 2, F3->from_int(d(rng)));
            MultiPoly g = MultiPoly::zero(F3, 2);
            for (auto& t : f.terms()) {
                MultiPoly term = MultiPoly::constant(F3, 2, t.second);
                for (uint32_t e = 0; e < t.first[0]; e++) term = term * s1;
                for (uint32_t e = 0; e < t.first[1]; e++) term = term * s2;
                g = g + term;
            }
            if (!(exponential_sum(g, 1) == base)) ok = require(false, "affine invariance");
            done++;
        }
    }

    // Newton <-> sums roundtrips and rational reconstruction roundtrips
    {
        std::uniform_int_distribution<int> d(-4, 4);
        for (int trial = 0; trial < 30; trial++) {
            int deg = 1 + trial % 4;
            std::vector<CycInt> lambda = {CycInt::from_int(5, 1)};
            for (int k = 1; k <= deg; k++) {
                std::vector<mpz_class> c(4);
                for (auto& x : c) x = d(rng);
                lambda.push_back(CycInt(5, std::move(c)));
            }
            for (int n : {1, 2}) {
                auto sums = sums_from_lambda(lambda, n, deg);
                if (!(lambda_from_newton(sums, n, deg) == lambda))
                    ok = require(false, "Newton roundtrip");
            }
            // reconstruction reproduces the series of Lambda itself
            std::vector<CycRational> series;
            std::vector<CycRational> lam_r;
            for (auto& c : lambda) lam_r.emplace_back(c);
            for (int k = 0; k <= 2 * deg + 1; k++)
                series.push_back(k < (int)lam_r.size() ? lam_r[(size_t)k]
                                                       : CycRational{CycInt(5)});
            RationalFunction rf = rational_reconstruct(series, deg, deg);
            bool poly_back = rf.denominator.size() == 1;
            for (size_t k = 0; k < rf.numerator.size(); k++)
                if (!(rf.numerator[k] == series[k])) poly_back = false;
            if (!poly_back) ok = require(false, "rational reconstruction roundtrip");
        }
    }

    // page monotonicity across e
    {
        auto F3 = FieldSpec::make(3, 1);
        for (auto& [text, nv] : std::vector<std::pair<std::string, int>>{
                 {"x1^3 - x1", 1}, {"x1*x2 + x1 + x2", 2}, {"x1^2*x2 + x2", 2}}) {
            auto f = MultiPoly::parse(text, nv, F3);
            for (int t = 1; t <= 3; t++)
                for (int m = 0; m <= nv; m++)
                    for (int r = 0; r <= 6; r++)
                        if (spectral_page(f, t + 1, r, m - r) > spectral_page(f, t, r, m - r))
                            ok = require(false, "page monotonicity");
        }
    }

    // term-order independence of quotient dimensions
    {
        auto F7 = FieldSpec::make(7, 1);
        for (auto& texts : std::vector<std::vector<std::string>>{
                 {"x1^2 - x2", "x2^2 - x1"},
                 {"3*x1^2 + 1", "x2^3 - x1"},
                 {"x1*x2 + 1", "x1^3 + x2"}}) {
            std::vector<MultiPoly> gens;
            for (auto& t : texts) gens.push_back(MultiPoly::parse(t, 2, F7));
            auto d1 = quotient_dim(buchberger(gens, TermOrder{OrderKind::Grevlex, {}}));
            auto d2 = quotient_dim(buchberger(gens, TermOrder{OrderKind::Lex, {}}));
            auto d3 = quotient_dim(buchberger(gens, TermOrder{OrderKind::GradedLex, {}}));
            if (!(d1.finite == d2.finite && d2.finite == d3.finite && d1.dim == d2.dim &&
                  d2.dim == d3.dim))
                ok = require(false, "term-order independence");
        }
    }

    // Teichmueller multiplicativity and the theta valuation bound
    {
        for (int64_t p : {3, 5, 7}) {
            PadicRing R(p, 4);
            for (int64_t c = 1; c < p; c++)
                for (int64_t d2 = 1; d2 < p; d2++)
                    if (!(teichmuller(R, (c * d2) % p) ==
                          teichmuller(R, c) * teichmuller(R, d2)))
                        ok = require(false, "Teichmueller multiplicativity");
            auto lam = theta_coefficients(R, solve_gamma(R), 16);
            for (int i = 0; i <= 16; i++)
                if (!lam[(size_t)i].val().at_least(i))
                    ok = require(false, "val(lambda_i) >= i/(p-1)");
        }
    }

    report("criterion-7", ok, since(t0));
}

}  // namespace

int main() {
    std::printf("acceptance suite: %s %s\n", kToolName, expsum_version());
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    if (g_failures) {
        std::printf("%d criteria FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
