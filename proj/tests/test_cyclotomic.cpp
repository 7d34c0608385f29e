#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclotomic.hpp"

using namespace expsum;

namespace {

CycInt random_cyc(int64_t p, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-20, 20);
    std::vector<mpz_class> c((size_t)(p - 1));
    for (auto& x : c) x = d(rng);
    return CycInt(p, std::move(c));
}

}  // namespace

TEST_CASE("power basis canonicalization") {
    // 1 + zeta + zeta^2 = 0 in Z[zeta_3]
    auto s = CycInt::from_int(3, 1) + CycInt::zeta_pow(3, 1) + CycInt::zeta_pow(3, 2);
    CHECK(s.is_zero());
    // zeta^p = 1
    CHECK(CycInt::zeta_pow(5, 5) == CycInt::from_int(5, 1));
    // zeta^{p-1} = -(1 + ... + zeta^{p-2})
    auto z4 = CycInt::zeta_pow(5, 4);
    for (auto& c : z4.coords()) CHECK(c == -1);
}

TEST_CASE("ring axioms, sampled") {
    std::mt19937 rng(5);
    for (int64_t p : {2, 3, 5, 7}) {
        for (int t = 0; t < 25; t++) {
            auto a = random_cyc(p, rng), b = random_cyc(p, rng), c = random_cyc(p, rng);
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + (-a) == CycInt(p));
        }
    }
}

TEST_CASE("Galois action is a ring automorphism") {
    std::mt19937 rng(9);
    for (int64_t p : {3, 5, 7}) {
        for (int64_t c = 1; c < p; c++) {
            for (int t = 0; t < 10; t++) {
                auto a = random_cyc(p, rng), b = random_cyc(p, rng);
                CHECK((a * b).galois(c) == a.galois(c) * b.galois(c));
                CHECK((a + b).galois(c) == a.galois(c) + b.galois(c));
            }
            CHECK(CycInt::zeta_pow(p, 1).galois(c) == CycInt::zeta_pow(p, c));
        }
        // sigma_1 = identity; composing sigma_c with sigma_{c^{-1}} = identity
        auto a = random_cyc(p, rng);
        CHECK(a.galois(1) == a);
        for (int64_t c = 1; c < p; c++) {
            int64_t cinv = 1;
            while ((cinv * c) % p != 1) cinv++;
            CHECK(a.galois(c).galois(cinv) == a);
        }
    }
}

TEST_CASE("exact division") {
    auto a = CycInt::from_int(5, 6) + CycInt::zeta_pow(5, 2).scaled(9);
    CHECK(a.divisible(3));
    CHECK(a.div_exact(3) == CycInt::from_int(5, 2) + CycInt::zeta_pow(5, 2).scaled(3));
    CHECK(!a.divisible(4));
    CHECK_THROWS_AS(a.div_exact(4), MismatchError);
}

TEST_CASE("rational field arithmetic") {
    std::mt19937 rng(13);
    for (int64_t p : {3, 5, 7}) {
        for (int t = 0; t < 15; t++) {
            auto a = CycRational(random_cyc(p, rng), 1 + (t % 4));
            if (a.is_zero()) continue;
            auto inv = a.inv();
            auto prod = a * inv;
            CHECK(prod == CycRational::from_int(p, 1));
        }
        // reduction: 2/2 = 1
        auto two_over_two = CycRational(CycInt::from_int(p, 2), 2);
        CHECK(two_over_two.is_integral());
        CHECK(two_over_two.num() == CycInt::from_int(p, 1));
    }
    CHECK_THROWS_AS(CycRational(CycInt(3)).inv(), ArgumentError);
}
