#ifndef MILO_POLYMATROID_HPP
#define MILO_POLYMATROID_HPP

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "milo/ideal.hpp"

namespace milo {

// A failed exchange: deg_{x_i}(u) > deg_{x_i}(v) but no j with
// deg_{x_j}(v) > deg_{x_j}(u) admits x_j * u / x_i into the ideal.
struct ExchangeWitness {
    Monomial u, v;
    std::size_t var;
};

struct ExchangeResult {
    bool polymatroidal = false;
    std::optional<ExchangeWitness> witness;   // set only for exchange failures
};

// Exchange-property test on the minimal generators.  Non-equigenerated
// ideals fail outright (the generators are then not the bases of any
// discrete polymatroid).  Since all candidates x_j * u / x_i have the same
// total degree as the generators, membership reduces to an exact lookup in
// G(I).
inline ExchangeResult is_polymatroidal(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("exchange property of the zero or unit ideal");
    Descriptors d = descriptors(I);
    if (!d.equigenerated) return {false, std::nullopt};

    std::unordered_set<Monomial, MonomialHash> basis(I.gens().begin(), I.gens().end());
    const std::size_t n = I.nvars();
    for (const Monomial& u : I.gens()) {
        for (const Monomial& v : I.gens()) {
            for (std::size_t i = 0; i < n; ++i) {
                if (u[i] <= v[i]) continue;
                bool exchanged = false;
                for (std::size_t j = 0; j < n && !exchanged; ++j) {
                    if (v[j] <= u[j]) continue;
                    Monomial w = u;
                    w = w.with_exponent(i, u[i] - 1);
                    w = w.with_exponent(j, w[j] + 1);
                    if (basis.count(w)) exchanged = true;
                }
                if (!exchanged)
                    return {false, ExchangeWitness{u, v, i}};
            }
        }
    }
    return {true, std::nullopt};
}

// Matroidal = squarefree + polymatroidal.
inline bool is_matroidal(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("exchange property of the zero or unit ideal");
    if (!descriptors(I).squarefree) return false;
    return is_polymatroidal(I).polymatroidal;
}

// The ideal of Veronese type I_(d; a): all monomials of degree d with
// exponents bounded componentwise by a.
inline MonomialIdeal veronese_type(std::size_t nvars, std::uint64_t d,
                                   const std::vector<Exponent>& bounds) {
    if (d == 0)
        throw domain_error("Veronese degree must be >= 1");
    if (bounds.size() != nvars)
        throw dimension_error("bounds vector has wrong length");
    std::uint64_t total = 0;
    for (Exponent b : bounds) total += b;
    if (total < d)
        throw domain_error("bounds too small: no monomials of the requested degree");
    std::vector<Monomial> gens;
    std::vector<Exponent> cur(nvars, 0);
    // lexicographic enumeration of bounded compositions of d
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
        if (i + 1 == nvars) {
            if (left <= bounds[i]) {
                cur[i] = static_cast<Exponent>(left);
                gens.push_back(Monomial(cur));
                cur[i] = 0;
            }
            return;
        }
        const std::uint64_t top = std::min<std::uint64_t>(bounds[i], left);
        for (std::uint64_t e = 0; e <= top; ++e) {
            cur[i] = static_cast<Exponent>(e);
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    if (nvars == 0)
        throw domain_error("Veronese type needs at least one variable");
    rec(rec, 0, d);
    return MonomialIdeal(nvars, std::move(gens));
}

// Recognize an ideal of Veronese type: equigenerated of degree d with
// G(I) exactly the bounded degree-d monomials for the componentwise
// exponent bounds it attains.
inline std::optional<std::pair<std::uint64_t, std::vector<Exponent>>>
is_veronese_type(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("Veronese recognition of the zero or unit ideal");
    Descriptors d = descriptors(I);
    if (!d.equigenerated) return std::nullopt;
    MonomialIdeal V = veronese_type(I.nvars(), *d.equigenerated, d.bounds);
    if (V == I) return std::make_pair(*d.equigenerated, d.bounds);
    return std::nullopt;
}

// Transversal polymatroidal ideal: a product of monomial primes.
inline MonomialIdeal transversal(std::size_t nvars, const std::vector<MonomialPrime>& primes) {
    if (primes.empty())
        throw domain_error("transversal of an empty prime list");
    MonomialIdeal r = prime_power(primes.front(), 1);
    if (r.nvars() != nvars)
        throw dimension_error("prime lives in a different ring");
    for (std::size_t k = 1; k < primes.size(); ++k)
        r = product(r, prime_power(primes[k], 1));
    return r;
}

} // namespace milo

#endif
