#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ideals.hpp"

using namespace expsum;

namespace {

std::vector<MultiPoly> parse_all(const std::vector<std::string>& texts, int n,
                                 const FieldRef& F) {
    std::vector<MultiPoly> out;
    for (auto& t : texts) out.push_back(MultiPoly::parse(t, n, F));
    return out;
}

/* Brute-force quotient dimension: rank of the span of normal forms is not
 * available without a basis, so count monomials not reachable as leading
 * terms by row-reducing all products m * g up to a degree bound.  Works for
 * the zero-dimensional cases used below. */
mpz_class brute_quotient_dim(const std::vector<MultiPoly>& gens, int degree_bound) {
    // build the linear span of { m * g : deg(m * g) <= degree_bound }
    const FieldRef& F = gens[0].field();
    int n = gens[0].nvars();
    // enumerate monomials of degree <= degree_bound
    std::vector<Monomial> monos;
    Monomial cur((size_t)n, 0);
    for (;;) {
        if ((int)total_degree(cur) <= degree_bound) monos.push_back(cur);
        int j = 0;
        while (j < n) {
            if ((int)++cur[(size_t)j] <= degree_bound) break;
            cur[(size_t)j] = 0;
            j++;
        }
        if (j == n) break;
    }
    std::map<Monomial, size_t> index;
    for (size_t k = 0; k < monos.size(); k++) index[monos[k]] = k;

    std::vector<std::vector<FieldElement>> rows;
    for (auto& g : gens) {
        for (auto& m : monos) {
            if ((int)total_degree(m) + g.degree() > degree_bound) continue;
            std::vector<FieldElement> row(monos.size(), F->zero());
            bool fits = true;
            for (auto& t : g.terms()) {
                Monomial mm = mono_mul(m, t.first);
                auto it = index.find(mm);
                if (it == index.end()) { fits = false; break; }
                row[it->second] = row[it->second] + t.second;
            }
            if (fits) rows.push_back(std::move(row));
        }
    }
    // row reduce, count pivots; dimension = monomials of degree <= bound - rank
    size_t rank = 0;
    size_t cols = monos.size();
    for (size_t col = 0; col < cols && rank < rows.size(); col++) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) sel++;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        FieldElement inv = rows[rank][col].inv();
        for (size_t j = col; j < cols; j++) rows[rank][j] = rows[rank][j] * inv;
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][col].is_zero()) continue;
            FieldElement f = rows[r][col];
            for (size_t j = col; j < cols; j++)
                rows[r][j] = rows[r][j] - f * rows[rank][j];
        }
        rank++;
    }
    return mpz_class((long)(monos.size() - rank));
}

}  // namespace

TEST_CASE("buchberger basics") {
    auto F7 = FieldSpec::make(7, 1);
    TermOrder grevlex{};

    // already a reduced basis
    auto gb1 = buchberger(parse_all({"x1", "x2"}, 2, F7), grevlex);
    CHECK(gb1.generators.size() == 2);

    auto gb2 = buchberger(parse_all({"x2 + 1", "x1 + 1"}, 2, F7), grevlex);
    CHECK(gb2.generators.size() == 2);

    // quotient dim 4, cross-checked against brute-force normal forms
    auto gens = parse_all({"x1^2 - x2", "x2^2 - x1"}, 2, F7);
    auto gb3 = buchberger(gens, grevlex);
    auto qd = quotient_dim(gb3);
    CHECK(qd.finite);
    CHECK(qd.dim == 4);
    CHECK(brute_quotient_dim(gens, 8) == 4);

    // recomputation yields identical generators (order-canonical)
    auto gb3b = buchberger(gens, grevlex);
    REQUIRE(gb3.generators.size() == gb3b.generators.size());
    for (size_t i = 0; i < gb3.generators.size(); i++)
        CHECK(gb3.generators[i] == gb3b.generators[i]);

    // every S-polynomial of the basis reduces to zero
    for (size_t i = 0; i < gb3.generators.size(); i++)
        for (size_t j = i + 1; j < gb3.generators.size(); j++) {
            auto& f = gb3.generators[i];
            auto& g = gb3.generators[j];
            Monomial l = mono_lcm(f.leading_term(grevlex).first,
                                  g.leading_term(grevlex).first);
            auto a = MultiPoly::monomial(F7, 2, mono_div(l, f.leading_term(grevlex).first),
                                         F7->one());
            auto b = MultiPoly::monomial(F7, 2, mono_div(l, g.leading_term(grevlex).first),
                                         F7->one());
            CHECK(normal_form(a * f - b * g, gb3).is_zero());
        }
}

TEST_CASE("normal_form properties") {
    auto F7 = FieldSpec::make(7, 1);
    auto gb = buchberger(parse_all({"x2 + 1", "x1 + 1"}, 2, F7), TermOrder{});

    // member of the ideal reduces to zero
    auto f = MultiPoly::parse("x1*x2 + x1 + x2 + 1", 2, F7);  // (x1+1)(x2+1)
    CHECK(normal_form(f, gb).is_zero());

    // 1 is already reduced for a proper ideal
    CHECK(normal_form(MultiPoly::parse("1", 2, F7), gb) == MultiPoly::parse("1", 2, F7));

    // x1^2 mod (x2+1, x1+1) = 1
    CHECK(normal_form(MultiPoly::parse("x1^2", 2, F7), gb) == MultiPoly::parse("1", 2, F7));

    // idempotent and linear
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 6);
    for (int t = 0; t < 20; t++) {
        Monomial m1{(uint32_t)d(rng), (uint32_t)d(rng)}, m2{(uint32_t)d(rng), (uint32_t)d(rng)};
        auto g = MultiPoly::monomial(F7, 2, m1, F7->from_int(1 + d(rng))) +
                 MultiPoly::monomial(F7, 2, m2, F7->from_int(d(rng)));
        auto h = MultiPoly::monomial(F7, 2, m2, F7->from_int(1 + d(rng)));
        auto nf = [&](const MultiPoly& x) { return normal_form(x, gb); };
        CHECK(nf(nf(g)) == nf(g));
        CHECK(nf(g + h) == nf(g) + nf(h));
        CHECK(nf(g.scaled(F7->from_int(3))) == nf(g).scaled(F7->from_int(3)));
    }
}

TEST_CASE("quotient_dim") {
    auto F7 = FieldSpec::make(7, 1);
    TermOrder grevlex{};

    // unit ideal
    auto gbu = buchberger(parse_all({"x1", "x1 + 1"}, 2, F7), grevlex);
    auto qdu = quotient_dim(gbu);
    CHECK(qdu.finite);
    CHECK(qdu.dim == 0);

    // staircase {1, x1, x2, x1*x2}
    auto gb = buchberger(parse_all({"x1^2", "x2^2"}, 2, F7), grevlex);
    auto qd = quotient_dim(gb);
    CHECK(qd.finite);
    CHECK(qd.dim == 4);

    // (3 x1^2 + 1) over F_7: staircase {1, x1}
    auto gb1 = buchberger(parse_all({"3*x1^2 + 1"}, 1, F7), grevlex);
    auto qd1 = quotient_dim(gb1);
    CHECK(qd1.finite);
    CHECK(qd1.dim == 2);

    // infinite: ideal (x1) in two variables
    auto gbi = buchberger(parse_all({"x1"}, 2, F7), grevlex);
    CHECK(!quotient_dim(gbi).finite);

    // term-order independence on zero-dimensional cases
    for (auto& texts : std::vector<std::vector<std::string>>{
             {"x1^2 - x2", "x2^2 - x1"}, {"x1^2", "x2^2"}, {"x2 + 1", "x1 + 1"},
             {"x1^3 - 1", "x2^2 - x1"}}) {
        auto gens = parse_all(texts, 2, F7);
        auto dims_grevlex = quotient_dim(buchberger(gens, TermOrder{}));
        auto dims_lex = quotient_dim(buchberger(gens, TermOrder{OrderKind::Lex, {}}));
        auto dims_glex = quotient_dim(buchberger(gens, TermOrder{OrderKind::GradedLex, {}}));
        CHECK(dims_grevlex.finite == dims_lex.finite);
        CHECK(dims_grevlex.dim == dims_lex.dim);
        CHECK(dims_grevlex.dim == dims_glex.dim);
    }
}

TEST_CASE("milnor_sum") {
    auto F3 = FieldSpec::make(3, 1);
    auto F7 = FieldSpec::make(7, 1);

    // f = x1: unit Jacobian ideal
    auto m1 = milnor_sum(MultiPoly::parse("x1", 1, F3));
    CHECK(m1.finite);
    CHECK(m1.dim == 0);

    // f = x1^p - x1: derivative is the constant -1
    auto m2 = milnor_sum(MultiPoly::parse("x1^3 - x1", 1, F3));
    CHECK(m2.finite);
    CHECK(m2.dim == 0);

    // smooth leading form: M_f = (delta-1)^n
    auto m3 = milnor_sum(MultiPoly::parse("x1^3 + x1", 1, F7));
    CHECK(m3.finite);
    CHECK(m3.dim == 2);

    auto m4 = milnor_sum(MultiPoly::parse("x1*x2 + x1 + x2", 2, F3));
    CHECK(m4.finite);
    CHECK(m4.dim == 1);

    // non-isolated critical locus
    auto m5 = milnor_sum(MultiPoly::parse("x1^2", 2, F7));
    CHECK(!m5.finite);

    // oracle comparison on all finite cases with dim <= 20
    for (auto& [text, nv] : std::vector<std::pair<std::string, int>>{
             {"x1^3 + x1", 1}, {"x1*x2 + x1 + x2", 2}, {"x1^2 + x2^2", 2},
             {"x1^3 + x2^3 + x1*x2", 2}, {"x1^4 + x2^4 + x1", 2}}) {
        auto f = MultiPoly::parse(text, nv, F7);
        std::vector<MultiPoly> jac;
        for (int i = 0; i < nv; i++) jac.push_back(f.derivative(i));
        auto got = milnor_sum(f);
        REQUIRE(got.finite);
        CHECK(got.dim == brute_quotient_dim(jac, 12));
    }
}

TEST_CASE("origin_supported") {
    auto F7 = FieldSpec::make(7, 1);
    TermOrder grevlex{};
    CHECK(origin_supported(buchberger(parse_all({"x1", "x2"}, 2, F7), grevlex)));
    CHECK(!origin_supported(buchberger(parse_all({"x2 + 1", "x1 + 1"}, 2, F7), grevlex)));
    CHECK(origin_supported(buchberger(parse_all({"x1^2", "x2^2"}, 2, F7), grevlex)));

    // invariance under invertible linear changes of coordinates, sampled
    auto gens = parse_all({"x1^2 + x2^2", "x1*x2"}, 2, F7);
    CHECK(origin_supported(buchberger(gens, grevlex)));
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> d(0, 6);
    int sampled = 0;
    while (sampled < 6) {
        int64_t a = d(rng), b = d(rng), cc = d(rng), dd = d(rng);
        if (((a * dd - b * cc) % 7 + 7) % 7 == 0) continue;
        auto X1 = MultiPoly::variable(F7, 2, 0).scaled(F7->from_int(a)) +
                  MultiPoly::variable(F7, 2, 1).scaled(F7->from_int(b));
        auto X2 = MultiPoly::variable(F7, 2, 0).scaled(F7->from_int(cc)) +
                  MultiPoly::variable(F7, 2, 1).scaled(F7->from_int(dd));
        std::vector<MultiPoly> moved;
        for (auto& g : gens) {
            MultiPoly acc = MultiPoly::zero(F7, 2);
            for (auto& t : g.terms()) {
                MultiPoly term = MultiPoly::constant(F7, 2, t.second);
                for (uint32_t e = 0; e < t.first[0]; e++) term = term * X1;
                for (uint32_t e = 0; e < t.first[1]; e++) term = term * X2;
                acc = acc + term;
            }
            moved.push_back(acc);
        }
        CHECK(origin_supported(buchberger(moved, grevlex)));
        sampled++;
    }
}

TEST_CASE("smooth_ci_check") {
    auto F7 = FieldSpec::make(7, 1);

    // {x1, x2} in P^1: empty projective locus
    CHECK(smooth_ci_check(parse_all({"x1", "x2"}, 2, F7)).pass);

    // {x1*x2} in P^1: two reduced points, smooth
    CHECK(smooth_ci_check(parse_all({"x1*x2"}, 2, F7)).pass);

    // {x1^2} in P^1: double point, singular
    auto bad = smooth_ci_check(parse_all({"x1^2"}, 2, F7));
    CHECK(!bad.pass);
    CHECK(!bad.witness_ideal.empty());

    // smooth plane conic in P^2
    CHECK(smooth_ci_check(parse_all({"x1^2 + x2^2 + x3^2"}, 3, F7)).pass);

    // nodal cubic in P^2: singular at (0:0:1)
    CHECK(!smooth_ci_check(parse_all({"x1^3 + x2^3 + x1*x2*x3"}, 3, F7)).pass);
    CHECK(!smooth_ci_check(parse_all({"x2^2*x3 - x1^3 - x1^2*x3"}, 3, F7)).pass);

    // not a complete intersection: two forms sharing a component
    auto ci = smooth_ci_check(parse_all({"x1*x2", "x1*x3"}, 3, F7));
    CHECK(!ci.pass);

    // smooth codim-2 in P^2: two distinct lines... {x1, x2} meets in a point
    CHECK(smooth_ci_check(parse_all({"x1", "x2"}, 3, F7)).pass);
}

TEST_CASE("smooth_factorization_check") {
    auto F3 = FieldSpec::make(3, 1);
    auto F2 = FieldSpec::make(2, 1);
    auto F7 = FieldSpec::make(7, 1);

    // f = x1 x2 + x1 + x2 over F_3: factors x1, x2, delta' = 1, passes, e = 2
    {
        auto f = MultiPoly::parse("x1*x2 + x1 + x2", 2, F3);
        std::vector<std::pair<MultiPoly, int>> factors = {
            {MultiPoly::parse("x1", 2, F3), 1}, {MultiPoly::parse("x2", 2, F3), 1}};
        auto dp = MultiPoly::parse("x1 + x2", 2, F3);
        auto rep = smooth_factorization_check(factors, dp, f);
        CHECK(rep.pass);
        CHECK(rep.coprime);
        CHECK(rep.e == 2);
        CHECK(rep.delta == 2);
        CHECK(rep.delta_prime == 1);
    }

    // same f over F_2: gcd(2, delta*delta') = 2
    {
        auto f = MultiPoly::parse("x1*x2 + x1 + x2", 2, F2);
        std::vector<std::pair<MultiPoly, int>> factors = {
            {MultiPoly::parse("x1", 2, F2), 1}, {MultiPoly::parse("x2", 2, F2), 1}};
        auto dp = MultiPoly::parse("x1 + x2", 2, F2);
        auto rep = smooth_factorization_check(factors, dp, f);
        CHECK(!rep.pass);
        CHECK(!rep.coprime);
    }

    // a_1 = 2 with f^(delta') sharing a zero with the factor: fails with witness
    {
        // f = x1^2 x2 + x1 x2: f^(3) = x1^2 x2, f^(2) = x1 x2 vanishes where x1 = 0
        auto f = MultiPoly::parse("x1^2*x2 + x1*x2", 2, F7);
        std::vector<std::pair<MultiPoly, int>> factors = {
            {MultiPoly::parse("x1", 2, F7), 2}, {MultiPoly::parse("x2", 2, F7), 1}};
        auto dp = MultiPoly::parse("x1*x2", 2, F7);
        auto rep = smooth_factorization_check(factors, dp, f);
        CHECK(!rep.pass);
        CHECK(rep.coprime);  // gcd(7, 3*2*2*1) = 1: the failure is geometric
        bool witnessed = false;
        for (auto& s : rep.subsets)
            if (!s.pass && s.with_delta_prime) witnessed = true;
        CHECK(witnessed);
    }

    // factorization mismatch is rejected
    {
        auto f = MultiPoly::parse("x1*x2 + x1", 2, F3);
        std::vector<std::pair<MultiPoly, int>> factors = {
            {MultiPoly::parse("x1", 2, F3), 2}};
        auto dp = MultiPoly::parse("x1", 2, F3);
        CHECK_THROWS_AS(smooth_factorization_check(factors, dp, f), MismatchError);
    }

    // homogeneous f has no delta'
    {
        auto f = MultiPoly::parse("x1*x2", 2, F3);
        std::vector<std::pair<MultiPoly, int>> factors = {
            {MultiPoly::parse("x1", 2, F3), 1}, {MultiPoly::parse("x2", 2, F3), 1}};
        CHECK_THROWS_AS(smooth_factorization_check(factors, MultiPoly::parse("x1", 2, F3), f),
                        ArgumentError);
    }
}

TEST_CASE("buchberger on random ideals: every S-pair reduces to zero") {
    auto F5 = FieldSpec::make(5, 1);
    TermOrder grevlex{};
    std::mt19937 rng(57);
    std::uniform_int_distribution<int> ed(0, 3), cd(0, 4), tn(1, 3);
    for (int trial = 0; trial < 25; trial++) {
        std::vector<MultiPoly> gens;
        for (int g = 0; g < 3; g++) {
            MultiPoly f = MultiPoly::zero(F5, 2);
            int terms = tn(rng) + 1;
            for (int t = 0; t < terms; t++) {
                Monomial m{(uint32_t)ed(rng), (uint32_t)ed(rng)};
                f = f + MultiPoly::monomial(F5, 2, m, F5->from_int(cd(rng)));
            }
            if (!f.is_zero()) gens.push_back(f);
        }
        if (gens.empty()) continue;
        auto gb = buchberger(gens, grevlex);
        // generators remain in the ideal's normal-form kernel
        for (auto& g : gens) CHECK(normal_form(g, gb).is_zero());
        // the definitive property: all S-polynomials reduce to zero
        for (size_t i = 0; i < gb.generators.size(); i++)
            for (size_t j = i + 1; j < gb.generators.size(); j++) {
                auto& f = gb.generators[i];
                auto& g = gb.generators[j];
                Monomial l = mono_lcm(f.leading_term(grevlex).first,
                                      g.leading_term(grevlex).first);
                auto a = MultiPoly::monomial(
                    F5, 2, mono_div(l, f.leading_term(grevlex).first), F5->one());
                auto b = MultiPoly::monomial(
                    F5, 2, mono_div(l, g.leading_term(grevlex).first), F5->one());
                CHECK(normal_form(a * f - b * g, gb).is_zero());
            }
    }
}

TEST_CASE("hilbert numerator matches direct staircase counting") {
    // expand N(t)/(1-t)^n and compare with per-degree standard-monomial counts
    std::mt19937 rng(73);
    std::uniform_int_distribution<int> ed(0, 4);
    for (int trial = 0; trial < 20; trial++) {
        int n = 2 + trial % 2;
        std::vector<Monomial> leads;
        for (int g = 0; g < 3; g++) {
            Monomial m((size_t)n, 0);
            for (int j = 0; j < n; j++) m[(size_t)j] = (uint32_t)ed(rng);
            if (total_degree(m) > 0) leads.push_back(m);
        }
        if (leads.empty()) continue;
        auto N = hilbert_numerator(leads, n);
        // Hilbert function by repeated division by (1-t): h = N * (1-t)^{-n}
        int maxdeg = 10;
        std::vector<mpz_class> h(N.begin(), N.end());
        h.resize((size_t)maxdeg + 1, 0);
        for (int rep = 0; rep < n; rep++)
            for (int k = 1; k <= maxdeg; k++) h[(size_t)k] += h[(size_t)(k - 1)];
        for (int deg = 0; deg <= maxdeg; deg++) {
            // count monomials of this degree not divisible by any lead
            long count = 0;
            Monomial cur((size_t)n, 0);
            // odometer over the degree-bounded box
            for (;;) {
                if ((int)total_degree(cur) == deg) {
                    bool div = false;
                    for (auto& l : leads)
                        if (mono_divides(l, cur)) { div = true; break; }
                    if (!div) count++;
                }
                int j = 0;
                while (j < n) {
                    if ((int)++cur[(size_t)j] <= deg) break;
                    cur[(size_t)j] = 0;
                    j++;
                }
                if (j == n) break;
            }
            CHECK(h[(size_t)deg] == count);
        }
    }
}

TEST_CASE("hilbert_numerator") {
    // complete intersection (x1^2, x2^3): N = (1-t^2)(1-t^3)
    std::vector<Monomial> leads = {{2, 0}, {0, 3}};
    auto N = hilbert_numerator(leads, 2);
    std::vector<mpz_class> expect = {1, 0, -1, -1, 0, 1};
    CHECK(N == expect);

    // unit ideal
    CHECK(hilbert_numerator({{0, 0}}, 2) == std::vector<mpz_class>{0});
    // zero ideal
    CHECK(hilbert_numerator({}, 2) == std::vector<mpz_class>{1});
}
