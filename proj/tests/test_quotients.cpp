#include <catch2/catch_amalgamated.hpp>

#include "milo/betti.hpp"
#include "milo/parse.hpp"
#include "milo/polymatroid.hpp"
#include "milo/quotients.hpp"
#include "milo/random.hpp"

using namespace milo;

TEST_CASE("linear quotients on simple ideals") {
    auto r = linear_quotients(prime_power(MonomialPrime::maximal(3), 2));
    CHECK(r.status == QuotientStatus::Found);
    CHECK(r.order.size() == 6);
    CHECK(verify_quotient_order(r.order));

    auto single = linear_quotients(parse_ideal("x1^2x2", 2));
    CHECK(single.status == QuotientStatus::Found);
}

TEST_CASE("linear quotients require equigenerated input") {
    CHECK_THROWS_AS(linear_quotients(parse_ideal("x1, x2^2", 2)), domain_error);
    CHECK_THROWS_AS(linear_quotients(MonomialIdeal(2)), domain_error);
}

TEST_CASE("an ideal with linear resolution but no linear quotients order") {
    // (x1x2, x3x4) is a complete intersection in degree 2: reg = 3, no
    // linear resolution, and no linear quotients either way round
    MonomialIdeal I = parse_ideal("x1x2, x3x4", 4);
    auto r = linear_quotients(I);
    CHECK(r.status == QuotientStatus::NotFound);
    CHECK(regularity(I) == 3);

    // same story for a pure-power complete intersection
    auto r2 = linear_quotients(parse_ideal("x1^2, x2^2", 2));
    CHECK(r2.status == QuotientStatus::NotFound);
    CHECK(r2.order.empty());
}

TEST_CASE("generator cap yields Unknown") {
    MonomialIdeal I = prime_power(MonomialPrime::maximal(3), 2);
    auto r = linear_quotients(I, 3);
    CHECK(r.status == QuotientStatus::Unknown);
    CHECK(r.order.empty());
}

TEST_CASE("linear quotients imply a linear resolution") {
    std::size_t found = 0;
    for (std::size_t k = 0; found < 25; ++k) {
        std::uint64_t s = mix_seed(1337, k);
        MonomialIdeal I = random_ideal(s, 2 + s % 3, 2 + (s >> 8) % 2,
                                       2 + (s >> 16) % 5, false);
        if (I.is_principal()) continue;
        auto r = linear_quotients(I);
        REQUIRE(r.status != QuotientStatus::Unknown);
        if (r.status != QuotientStatus::Found) continue;
        ++found;
        CHECK(has_linear_resolution(I));
    }
}

TEST_CASE("the quotients witness validates step by step") {
    MonomialIdeal I = parse_ideal("x1x2, x1x3, x2x3", 3);
    auto r = linear_quotients(I);
    REQUIRE(r.status == QuotientStatus::Found);
    REQUIRE(r.order.size() == 3);
    for (std::size_t k = 1; k < r.order.size(); ++k) {
        std::vector<Monomial> prefix(r.order.begin(), r.order.begin() + k);
        CHECK(quotient_is_linear(prefix, r.order[k]));
    }
    // the returned order is a permutation of the generators
    std::vector<Monomial> sorted = r.order;
    std::sort(sorted.begin(), sorted.end(), Monomial::lex_less);
    std::vector<Monomial> gens = I.gens();
    std::sort(gens.begin(), gens.end(), Monomial::lex_less);
    CHECK(sorted == gens);
}
