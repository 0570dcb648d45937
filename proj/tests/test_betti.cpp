#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "milo/betti.hpp"
#include "milo/parse.hpp"
#include "milo/random.hpp"
#include "milo/taylor.hpp"
#include "oracles.hpp"

using namespace milo;

namespace {

// squarefree degree-d monomials in n variables
std::vector<Monomial> squarefree_monomials(std::size_t n, std::size_t d) {
    std::vector<Monomial> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::size_t(std::popcount(mask)) != d) continue;
        std::vector<Exponent> e(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) e[i] = 1;
        out.push_back(Monomial(std::move(e)));
    }
    return out;
}

} // namespace

TEST_CASE("betti of a principal ideal") {
    MonomialIdeal I = parse_ideal("x1^2x3", 3);
    BettiTable B = betti(I);
    REQUIRE(B.entries.size() == 1);
    CHECK(B.at(0, {2, 0, 1}) == 1);
    CHECK(B.regularity() == 3);
    CHECK(has_linear_resolution(I));
}

TEST_CASE("betti of the maximal ideal is the Koszul complex") {
    for (std::size_t n = 2; n <= 4; ++n) {
        MonomialIdeal I = prime_power(MonomialPrime::maximal(n), 1);
        BettiTable B = betti(I);
        // beta_i totals C(n, i+1), all in degree i+1
        auto coarse = B.coarse();
        std::uint64_t choose = n;
        for (std::uint32_t i = 0; i + 1 <= n; ++i) {
            CHECK(coarse[{i, i + 1}] == choose);
            choose = choose * (n - i - 1) / (i + 2);
        }
        CHECK(B.regularity() == 1);
        CHECK(B.max_index() == n - 1);
    }
}

TEST_CASE("betti entries at generator degrees are exactly the generators") {
    for (const MonomialIdeal& I : oracle::mixed_corpus(701, 10)) {
        if (I.is_zero() || I.is_unit()) continue;
        BettiTable B = betti(I);
        for (const Monomial& g : I.gens())
            CHECK(B.at(0, g.exponents()) == 1);
        std::uint64_t total0 = 0;
        for (const auto& [k, v] : B.entries)
            if (k.first == 0) total0 += v;
        CHECK(total0 == I.num_gens());
    }
}

TEST_CASE("worked example: reg and linearity") {
    MonomialIdeal I = parse_ideal("x1x2, x1x3, x2^2", 3);
    CHECK(regularity(I) == 2);
    CHECK(has_linear_resolution(I));
    // its localization at (x1,x2) is mixed, so not linear
    MonomialIdeal L = parse_ideal("x1, x2^2", 3);
    CHECK_FALSE(has_linear_resolution(L));
    CHECK(regularity(L) == 2);
}

TEST_CASE("m^d has a d-linear resolution") {
    for (std::size_t n = 2; n <= 3; ++n)
        for (std::uint64_t d = 1; d <= 3; ++d) {
            MonomialIdeal I = prime_power(MonomialPrime::maximal(n), d);
            CHECK(regularity(I) == d);
            CHECK(has_linear_resolution(I));
        }
}

TEST_CASE("complete intersection x1^2, x3") {
    MonomialIdeal I = parse_ideal("x1^2, x3", 3);
    BettiTable B = betti(I);
    CHECK(B.at(0, {2, 0, 0}) == 1);
    CHECK(B.at(0, {0, 0, 1}) == 1);
    CHECK(B.at(1, {2, 0, 1}) == 1);
    CHECK(B.entries.size() == 3);
    CHECK(B.regularity() == 2);
    CHECK_FALSE(has_linear_resolution(I));
}

TEST_CASE("Koszul strands agree with the Taylor complex on small corpora") {
    // exhaustive: every squarefree ideal in <= 4 variables, degree <= 3,
    // up to 6 generators
    for (std::size_t n = 2; n <= 4; ++n) {
        for (std::size_t d = 1; d <= std::min<std::size_t>(3, n); ++d) {
            auto mons = squarefree_monomials(n, d);
            const std::size_t m = mons.size();
            for (std::uint32_t pick = 1; pick < (1u << m); ++pick) {
                if (std::size_t(std::popcount(pick)) > 6) continue;
                std::vector<Monomial> gens;
                for (std::size_t i = 0; i < m; ++i)
                    if (pick & (1u << i)) gens.push_back(mons[i]);
                MonomialIdeal I(n, std::move(gens));
                BettiTable K = betti(I);
                BettiTable T = taylor_betti(I);
                CHECK(K.entries == T.entries);
            }
        }
    }
}

TEST_CASE("Koszul strands agree with the Taylor complex on random ideals") {
    std::size_t tested = 0;
    for (std::size_t k = 0; tested < 120; ++k) {
        std::uint64_t s = mix_seed(9001, k);
        std::size_t nvars = 2 + s % 3;
        std::uint64_t deg = 2 + (s >> 8) % 3;
        std::size_t gens = 2 + (s >> 16) % 7;
        MonomialIdeal I = random_ideal(s, nvars, deg, gens, false);
        if (I.num_gens() > 8) continue;
        ++tested;
        CHECK(betti(I).entries == taylor_betti(I).entries);
        // characteristic 2 as well
        CHECK(betti(I, 2).entries == taylor_betti(I, 2).entries);
    }
}

TEST_CASE("mixed-degree ideals also agree with the Taylor oracle") {
    for (const MonomialIdeal& I : oracle::mixed_corpus(777, 25)) {
        if (I.is_zero() || I.is_unit() || I.num_gens() > 8) continue;
        CHECK(betti(I).entries == taylor_betti(I).entries);
    }
}

TEST_CASE("the two default characteristics agree on the worked examples") {
    for (const char* text : {"x1x2, x1x3, x2^2",
                             "x1^3, x1^2x2, x1^2x3, x2x3x4, x1x2x3, x1x3x4, x1^2x4",
                             "x1x3x5, x1x2x3, x1x2x4, x2x3x4, x3x4x5, x2x4x5"}) {
        MonomialIdeal I = parse_ideal(text);
        CHECK(regularity(I, 32003) == regularity(I, 2));
    }
}

TEST_CASE("betti rejects bad inputs") {
    CHECK_THROWS_AS(betti(MonomialIdeal(2)), domain_error);
    CHECK_THROWS_AS(betti(make_ideal(2, {Monomial::one(2)})), domain_error);
    CHECK_THROWS_AS(betti(parse_ideal("x1, x2", 2), 6), domain_error);   // 6 not prime
    CHECK_THROWS_AS(taylor_betti(prime_power(MonomialPrime::maximal(3), 3)), domain_error);
}

TEST_CASE("non-equigenerated ideals are never linear") {
    CHECK_FALSE(has_linear_resolution(parse_ideal("x1, x2^2", 2)));
    // unit and principal resolve in length zero
    CHECK(has_linear_resolution(make_ideal(2, {Monomial::one(2)})));
    CHECK(has_linear_resolution(parse_ideal("x1^4", 2)));
    CHECK_THROWS_AS(has_linear_resolution(MonomialIdeal(2)), domain_error);
}

namespace {
MonomialIdeal relabel(const MonomialIdeal& I, const std::vector<std::size_t>& perm) {
    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens()) {
        std::vector<Exponent> e(I.nvars(), 0);
        for (std::size_t i = 0; i < I.nvars(); ++i) e[perm[i]] = g[i];
        gens.emplace_back(std::move(e));
    }
    return make_ideal(I.nvars(), gens);
}
}   // namespace

TEST_CASE("regularity is invariant under relabeling the variables") {
    std::vector<std::size_t> perm = {0, 1, 2, 3};
    for (std::uint64_t s = 0; s < 12; ++s) {
        MonomialIdeal I = random_ideal(mix_seed(4242, s), 4, 2 + s % 3, 4, false);
        if (I.is_zero() || I.is_unit()) continue;
        std::uint64_t r = regularity(I);
        std::vector<std::size_t> q = perm;
        do {
            CHECK(regularity(relabel(I, q)) == r);
        } while (std::next_permutation(q.begin(), q.end()));
    }
}
