#ifndef MILO_RANDOM_HPP
#define MILO_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "milo/ideal.hpp"

namespace milo {

// mt19937_64 has an implementation-independent output sequence; the
// std::uniform_int_distribution adapters do not.  This rejection sampler is
// the portable replacement, so seeds reproduce across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t q = std::numeric_limits<std::uint64_t>::max() / n;
    const std::uint64_t r = std::numeric_limits<std::uint64_t>::max() % n;
    const std::uint64_t lim = (r + 1 == n) ? q + 1 : q;   // floor(2^64 / n)
    for (;;) {
        const std::uint64_t x = g();
        if (x / n < lim) return x % n;
    }
}

// Derive a stream for sample k from a base seed (splitmix-style mixing, so
// neighboring sample indices give unrelated streams).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Random equigenerated ideal: gen_count draws of degree-`degree` monomials
// in nvars variables (distinct squarefree supports when squarefree is set).
// Minimalization may shrink the generator count below gen_count.
inline MonomialIdeal random_ideal(std::uint64_t seed, std::size_t nvars, std::uint64_t degree,
                                  std::size_t gen_count, bool squarefree) {
    if (nvars == 0 || degree == 0 || gen_count == 0)
        throw domain_error("random ideal needs nvars, degree, gen_count >= 1");
    if (squarefree && degree > nvars)
        throw domain_error("squarefree degree cannot exceed nvars");
    std::mt19937_64 rng(seed);
    std::vector<Monomial> gens;
    if (squarefree) {
        // count the available supports to keep the request feasible
        std::uint64_t choose = 1;
        for (std::uint64_t i = 0; i < degree; ++i)
            choose = choose * (nvars - i) / (i + 1);
        if (gen_count > choose)
            throw domain_error("not enough squarefree monomials of this degree");
        std::set<std::vector<Exponent>> seen;
        while (seen.size() < gen_count) {
            std::vector<Exponent> e(nvars, 0);
            std::size_t placed = 0;
            while (placed < degree) {
                std::size_t v = static_cast<std::size_t>(uniform_below(rng, nvars));
                if (e[v] == 0) { e[v] = 1; ++placed; }
            }
            seen.insert(std::move(e));
        }
        for (const auto& e : seen) gens.push_back(Monomial(e));
    } else {
        for (std::size_t k = 0; k < gen_count; ++k) {
            std::vector<Exponent> e(nvars, 0);
            for (std::uint64_t d = 0; d < degree; ++d)
                ++e[static_cast<std::size_t>(uniform_below(rng, nvars))];
            gens.push_back(Monomial(std::move(e)));
        }
    }
    return MonomialIdeal(nvars, std::move(gens));
}

} // namespace milo

#endif
