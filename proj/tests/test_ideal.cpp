#include <catch2/catch_amalgamated.hpp>

#include "milo/ideal.hpp"
#include "milo/parse.hpp"
#include "milo/random.hpp"
#include "oracles.hpp"

using namespace milo;

TEST_CASE("make_ideal minimalizes and canonicalizes") {
    // x1^2 is redundant; duplicates collapse
    MonomialIdeal I = make_ideal(
        2, {Monomial({2, 0}), Monomial({1, 0}), Monomial({1, 0}), Monomial({0, 3})});
    CHECK(I.num_gens() == 2);
    CHECK(to_string(I) == "x1, x2^3");
    // descending lex order of generators
    MonomialIdeal J = parse_ideal("x2^2, x1x2, x1^2", 2);
    CHECK(to_string(J) == "x1^2, x1*x2, x2^2");

    // idempotent: rebuilding from the minimal generators changes nothing
    CHECK(make_ideal(2, J.gens()) == J);
}

TEST_CASE("zero and unit ideals") {
    MonomialIdeal zero(3);
    CHECK(zero.is_zero());
    CHECK(zero.is_proper());
    CHECK_FALSE(contains(zero, Monomial({1, 0, 0})));

    MonomialIdeal unit = make_ideal(3, {Monomial::one(3)});
    CHECK(unit.is_unit());
    CHECK_FALSE(unit.is_proper());
    CHECK(contains(unit, Monomial::one(3)));
    // 1 absorbs every other generator
    CHECK(make_ideal(3, {Monomial::one(3), Monomial({1, 2, 0})}) == unit);
}

TEST_CASE("membership agrees with a divisor-box scan") {
    for (const MonomialIdeal& I : oracle::mixed_corpus(41, 12)) {
        if (I.is_zero()) continue;
        std::vector<Exponent> top(I.nvars(), 2);
        oracle::for_each_in_box(top, [&](const Monomial& m) {
            CHECK(contains(I, m) == oracle::contains_by_divisor_scan(I, m));
        });
    }
}

TEST_CASE("product matches expansion oracle") {
    MonomialIdeal I = parse_ideal("x1, x2", 2);
    MonomialIdeal J = parse_ideal("x1^2, x2^2", 2);
    MonomialIdeal P = product(I, J);
    CHECK(to_string(P) == "x1^3, x1^2*x2, x1*x2^2, x2^3");

    for (const MonomialIdeal& A : oracle::mixed_corpus(97, 6)) {
        for (const MonomialIdeal& B : oracle::mixed_corpus(131, 6)) {
            if (A.nvars() != B.nvars() || A.is_zero() || B.is_zero()) continue;
            MonomialIdeal AB = product(A, B);
            oracle::for_each_in_box(oracle::joint_bound(A, B), [&](const Monomial& m) {
                CHECK(contains(AB, m) == oracle::product_contains(A, B, m));
            });
        }
    }
}

TEST_CASE("product and power edge cases") {
    MonomialIdeal I = parse_ideal("x1, x2", 2);
    CHECK(product(I, MonomialIdeal(2)).is_zero());
    CHECK(power(I, 1) == I);
    CHECK(power(I, 3) == product(product(I, I), I));
    CHECK_THROWS_AS(power(I, 0), domain_error);
    CHECK_THROWS_AS(product(I, parse_ideal("x1", 3)), dimension_error);
    // unit is neutral
    MonomialIdeal unit = make_ideal(2, {Monomial::one(2)});
    CHECK(product(I, unit) == I);
}

TEST_CASE("colon by a monomial") {
    MonomialIdeal I = parse_ideal("x1x2, x1x3, x2^2", 3);
    CHECK(colon(I, parse_monomial("x1", 3)) == parse_ideal("x2, x3, x2^2", 3));
    CHECK(to_string(colon(I, parse_monomial("x1", 3))) == "x2, x3");
    // colon by 1 is the identity
    CHECK(colon(I, Monomial::one(3)) == I);

    for (const MonomialIdeal& A : oracle::mixed_corpus(7, 10)) {
        if (A.is_zero()) continue;
        Monomial c = A.gens()[0].colon(A.gens().back());
        MonomialIdeal Q = colon(A, c);
        oracle::for_each_in_box(oracle::joint_bound(A, Q), [&](const Monomial& m) {
            CHECK(contains(Q, m) == oracle::colon_contains(A, c, m));
        });
    }
}

TEST_CASE("intersection matches membership oracle") {
    MonomialIdeal I = parse_ideal("x1^2, x2", 2);
    MonomialIdeal J = parse_ideal("x1, x2^2", 2);
    CHECK(intersect(I, J) == parse_ideal("x1^2, x1x2, x2^2", 2));
    CHECK(intersect(I, MonomialIdeal(2)).is_zero());

    for (const MonomialIdeal& A : oracle::mixed_corpus(55, 6)) {
        for (const MonomialIdeal& B : oracle::mixed_corpus(77, 6)) {
            if (A.nvars() != B.nvars()) continue;
            MonomialIdeal C = intersect(A, B);
            oracle::for_each_in_box(oracle::joint_bound(A, B), [&](const Monomial& m) {
                CHECK(contains(C, m) == oracle::intersect_contains(A, B, m));
            });
        }
    }
}

TEST_CASE("single-variable saturation") {
    MonomialIdeal I = parse_ideal("x1x2, x1x3, x2^2", 3);
    CHECK(saturate_var(I, 0) == parse_ideal("x2, x3, x2^2", 3));
    CHECK(to_string(saturate_var(I, 0)) == "x2, x3");
    CHECK_THROWS_AS(saturate_var(I, 3), dimension_error);
    CHECK_THROWS_AS(saturate_var(MonomialIdeal(3), 0), domain_error);

    // saturation by x_i equals localization at the complementary prime
    for (const MonomialIdeal& A : oracle::mixed_corpus(11, 8)) {
        if (A.is_zero()) continue;
        for (std::size_t i = 0; i < A.nvars(); ++i) {
            std::vector<std::size_t> others;
            for (std::size_t v = 0; v < A.nvars(); ++v)
                if (v != i) others.push_back(v);
            CHECK(saturate_var(A, i) ==
                  localize(A, MonomialPrime(A.nvars(), others)));
        }
    }
}

TEST_CASE("graded saturation") {
    CHECK(saturate_graded(parse_ideal("x1^2, x1x2", 2)) == parse_ideal("x1", 2));
    // m-primary ideals saturate to the unit ideal
    CHECK(saturate_graded(parse_ideal("x1^2, x1x2, x2^2", 2)).is_unit());
    // saturated ideals are fixed points
    MonomialIdeal I = parse_ideal("x1x2, x1x3", 3);
    CHECK(saturate_graded(I) == I);
    // a principal ideal is its own saturation
    CHECK(saturate_graded(parse_ideal("x1^3", 2)) == parse_ideal("x1^3", 2));

    // oracle: result must be saturated and agree with I away from m
    for (const MonomialIdeal& A : oracle::mixed_corpus(23, 8)) {
        if (A.is_zero() || A.is_unit()) continue;
        MonomialIdeal S = saturate_graded(A);
        MonomialIdeal again = saturate_graded(S);
        CHECK(again == S);
        CHECK(is_subideal(A, S));
    }
}

TEST_CASE("localization substitutes variables outside the prime") {
    MonomialIdeal I = parse_ideal("x1x2, x1x3, x2^2", 3);
    MonomialIdeal L = localize(I, MonomialPrime(3, {0, 1}));
    CHECK(L == parse_ideal("x1, x2^2", 3));
    CHECK(L.nvars() == 3);   // ambient ring is preserved
    // localization at the maximal ideal is the identity
    CHECK(localize(I, MonomialPrime::maximal(3)) == I);
    CHECK_THROWS_AS(localize(I, MonomialPrime(4, {0, 1})), dimension_error);
}

TEST_CASE("localize agrees with its saturation route on all primes") {
    auto corpus = oracle::mixed_corpus(203, 12);
    corpus.push_back(parse_ideal("x1x2, x1x3, x2^2", 3));
    corpus.push_back(parse_ideal("x1^3, x1^2x2, x1^2x3, x2x3x4, x1x2x3, x1x3x4, x1^2x4", 4));
    for (const MonomialIdeal& A : corpus) {
        if (A.is_zero()) continue;
        const std::size_t n = A.nvars();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<std::size_t> vars;
            for (std::size_t v = 0; v < n; ++v)
                if (mask & (1u << v)) vars.push_back(v);
            MonomialPrime p(n, vars);
            CHECK(localize(A, p) == localize_via_saturation(A, p));
        }
    }
}

TEST_CASE("descriptors") {
    MonomialIdeal I = parse_ideal("x1^3, x1^2x2, x1x2^2", 3);
    Descriptors d = descriptors(I);
    CHECK(d.gcd == parse_monomial("x1", 3));
    CHECK(d.support == std::vector<std::size_t>({0, 1}));
    CHECK(d.bounds == std::vector<Exponent>({3, 2, 0}));
    CHECK(d.equigenerated);
    CHECK(*d.equigenerated == 3);
    CHECK_FALSE(d.squarefree);
    CHECK(d.pure_powers == std::vector<std::size_t>({0}));

    Descriptors mixed = descriptors(parse_ideal("x1, x2^2", 2));
    CHECK_FALSE(mixed.equigenerated);
    CHECK(mixed.pure_powers == std::vector<std::size_t>({0, 1}));

    CHECK_THROWS_AS(descriptors(MonomialIdeal(2)), domain_error);
    CHECK(descriptors(make_ideal(2, {Monomial::one(2)})).support.empty());
}

TEST_CASE("prime powers") {
    MonomialPrime p(3, {0, 2});
    CHECK(prime_power(p, 1) == parse_ideal("x1, x3", 3));
    CHECK(prime_power(p, 2) == parse_ideal("x1^2, x1x3, x3^2", 3));
    CHECK(prime_power(p, 0).is_unit());
    CHECK(prime_power(MonomialPrime::maximal(2), 3) == parse_ideal("x1^3, x1^2x2, x1x2^2, x2^3", 2));
}

TEST_CASE("localizing a prime power keeps it or kills it") {
    // localize(p^k, q) is p^k again when p <= q and the unit ideal otherwise
    const std::size_t n = 4;
    std::vector<MonomialPrime> primes;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < n; ++i)
            if (s & (1u << i)) vars.push_back(i);
        primes.emplace_back(n, std::move(vars));
    }
    for (const MonomialPrime& p : primes) {
        for (std::uint64_t k = 1; k <= 3; ++k) {
            MonomialIdeal pk = prime_power(p, k);
            for (const MonomialPrime& q : primes) {
                bool inside = std::includes(q.vars().begin(), q.vars().end(),
                                            p.vars().begin(), p.vars().end());
                MonomialIdeal loc = localize(pk, q);
                if (inside)
                    CHECK(loc == pk);
                else
                    CHECK(loc.is_unit());
            }
        }
    }
}

TEST_CASE("prime basics") {
    MonomialPrime p(4, {2, 0});
    CHECK(p.vars() == std::vector<std::size_t>({0, 2}));   // sorted, deduped
    CHECK(p.contains_var(0));
    CHECK_FALSE(p.contains_var(1));
    CHECK(p.complement() == std::vector<std::size_t>({1, 3}));
    CHECK_FALSE(p.is_maximal());
    CHECK(MonomialPrime::maximal(4).is_maximal());
    CHECK_THROWS_AS(MonomialPrime(4, {}), domain_error);
    CHECK_THROWS_AS(MonomialPrime(2, {3}), dimension_error);
}
