#ifndef MILO_DECOMPOSE_HPP
#define MILO_DECOMPOSE_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "milo/ideal.hpp"

namespace milo {

// An irreducible monomial ideal (x_i^{e_i} : i in vars), e_i >= 1.
struct IrreducibleComponent {
    std::size_t nvars = 0;
    std::map<std::size_t, Exponent> exps;

    MonomialIdeal ideal() const {
        std::vector<Monomial> gens;
        gens.reserve(exps.size());
        for (auto [var, e] : exps)
            gens.push_back(Monomial::variable(nvars, var, e));
        return MonomialIdeal(nvars, std::move(gens));
    }

    MonomialPrime radical() const {
        std::vector<std::size_t> vars;
        vars.reserve(exps.size());
        for (auto [var, e] : exps) vars.push_back(var);
        return MonomialPrime(nvars, std::move(vars));
    }

    friend bool operator==(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.nvars == b.nvars && a.exps == b.exps;
    }
    friend bool operator<(const IrreducibleComponent& a, const IrreducibleComponent& b) {
        return a.exps < b.exps;
    }
};

namespace detail {

// Standard splitting: pick a generator u = x_i^a * u' that is not a pure
// power (x_i not dividing u'); then I = (I + (x_i^a)) cap (I + (u')).
// Recursion bottoms out at pure-power ideals, which are irreducible.
inline std::vector<std::vector<Exponent>> gens_key(const MonomialIdeal& I) {
    std::vector<std::vector<Exponent>> key;
    key.reserve(I.num_gens());
    for (const Monomial& g : I.gens()) key.push_back(g.exponents());
    return key;
}

inline void split_components(const MonomialIdeal& I,
                             std::set<std::vector<std::vector<Exponent>>>& seen,
                             std::set<IrreducibleComponent>& out) {
    if (!seen.insert(gens_key(I)).second) return;
    const Monomial* pivot = nullptr;
    for (const Monomial& g : I.gens())
        if (g.support_size() >= 2) { pivot = &g; break; }
    if (!pivot) {
        IrreducibleComponent c;
        c.nvars = I.nvars();
        for (const Monomial& g : I.gens())
            c.exps[g.support()[0]] = g[g.support()[0]];
        out.insert(std::move(c));
        return;
    }
    const std::size_t i = pivot->support()[0];
    std::vector<Monomial> a = I.gens(), b = I.gens();
    a.push_back(Monomial::variable(I.nvars(), i, (*pivot)[i]));
    b.push_back(pivot->with_exponent(i, 0));
    split_components(MonomialIdeal(I.nvars(), std::move(a)), seen, out);
    split_components(MonomialIdeal(I.nvars(), std::move(b)), seen, out);
}

} // namespace detail

// Irredundant irreducible decomposition.  Components are pruned first
// pairwise by containment, then against the intersection of all the others,
// and returned in canonical order (ascending on the exponent maps).
inline std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("decomposition of the zero or unit ideal");
    std::set<std::vector<std::vector<Exponent>>> seen;
    std::set<IrreducibleComponent> raw;
    detail::split_components(I, seen, raw);

    std::vector<IrreducibleComponent> comps(raw.begin(), raw.end());
    std::vector<MonomialIdeal> ideals;
    for (const auto& c : comps) ideals.push_back(c.ideal());

    // pairwise: if C_i <= C_j (as sets), C_j contributes nothing
    std::vector<bool> drop(comps.size(), false);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (i == j || drop[i] || drop[j]) continue;
            if (is_subideal(ideals[i], ideals[j])) drop[j] = true;
        }
    auto compact = [&] {
        std::vector<IrreducibleComponent> c2;
        std::vector<MonomialIdeal> i2;
        for (std::size_t k = 0; k < comps.size(); ++k)
            if (!drop[k]) { c2.push_back(comps[k]); i2.push_back(ideals[k]); }
        comps.swap(c2);
        ideals.swap(i2);
        drop.assign(comps.size(), false);
    };
    compact();

    // full irredundancy: drop any component containing the intersection of
    // the others; restart after each removal
    bool changed = true;
    while (changed && comps.size() > 1) {
        changed = false;
        for (std::size_t k = 0; k < comps.size(); ++k) {
            MonomialIdeal rest(I.nvars(), {Monomial::one(I.nvars())});
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (j != k) rest = intersect(rest, ideals[j]);
            if (is_subideal(rest, ideals[k])) {
                drop[k] = true;
                compact();
                changed = true;
                break;
            }
        }
    }
    return comps;
}

// Associated primes: the radicals of the irredundant components, deduped,
// canonical order.
inline std::vector<MonomialPrime> ass_primes(const MonomialIdeal& I) {
    std::set<std::vector<std::size_t>> vars;
    std::vector<MonomialPrime> out;
    for (const auto& c : irreducible_decomposition(I)) {
        MonomialPrime p = c.radical();
        if (vars.insert(p.vars()).second) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal primes as minimal covers of the generator supports: an
// independent route that never touches the decomposition.
inline std::vector<MonomialPrime> min_primes(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("minimal primes of the zero or unit ideal");
    std::vector<std::size_t> universe = descriptors(I).support;
    const std::size_t u = universe.size();
    if (u > 16)
        throw cap_error("too many variables for minimal-cover enumeration");
    std::vector<std::uint32_t> supports;
    for (const Monomial& g : I.gens()) {
        std::uint32_t s = 0;
        for (std::size_t k = 0; k < u; ++k)
            if (g[universe[k]] > 0) s |= (1u << k);
        supports.push_back(s);
    }
    auto covers = [&](std::uint32_t set) {
        for (std::uint32_t s : supports)
            if (!(s & set)) return false;
        return true;
    };
    std::vector<MonomialPrime> out;
    for (std::uint32_t set = 1; set < (1u << u); ++set) {
        if (!covers(set)) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < u && minimal; ++k)
            if ((set & (1u << k)) && covers(set & ~(1u << k))) minimal = false;
        if (!minimal) continue;
        std::vector<std::size_t> vars;
        for (std::size_t k = 0; k < u; ++k)
            if (set & (1u << k)) vars.push_back(universe[k]);
        out.emplace_back(I.nvars(), std::move(vars));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t height(const MonomialIdeal& I) {
    std::size_t h = I.nvars() + 1;
    for (const MonomialPrime& p : min_primes(I)) h = std::min(h, p.size());
    return h;
}

inline bool is_unmixed(const MonomialIdeal& I) {
    std::size_t h = height(I);
    for (const MonomialPrime& p : ass_primes(I))
        if (p.size() != h) return false;
    return true;
}

inline bool has_embedded_primes(const MonomialIdeal& I) {
    return ass_primes(I).size() > min_primes(I).size();
}

// A prime-power intersection presentation I = cap p^{d_p}.
struct IntersectionPresentation {
    std::size_t nvars = 0;
    std::vector<std::pair<MonomialPrime, std::uint64_t>> terms;

    MonomialIdeal evaluate() const {
        if (terms.empty())
            throw domain_error("empty intersection presentation");
        MonomialIdeal r = prime_power(terms.front().first, terms.front().second);
        for (std::size_t k = 1; k < terms.size(); ++k)
            r = intersect(r, prime_power(terms[k].first, terms[k].second));
        return r;
    }
};

inline MonomialIdeal intersect_presentation(const IntersectionPresentation& P) {
    return P.evaluate();
}

// Check a claimed presentation against an ideal: does it evaluate back to
// I, does it run over associated primes only, and do the exponents respect
// the regularity bound d_p <= reg(I(p))?  reg is passed in so callers pick
// the characteristic.
struct PresentationCheck {
    bool equals_ideal = false;
    bool primes_associated = false;
    bool exponents_bounded = false;
    bool valid() const { return equals_ideal && primes_associated && exponents_bounded; }
};

inline PresentationCheck
verify_presentation(const MonomialIdeal& I, const IntersectionPresentation& P,
                    const std::function<std::uint64_t(const MonomialIdeal&)>& reg) {
    PresentationCheck out;
    out.equals_ideal = (P.evaluate() == I);
    std::vector<MonomialPrime> ass = ass_primes(I);
    out.primes_associated = true;
    out.exponents_bounded = true;
    for (const auto& [p, d] : P.terms) {
        if (std::find(ass.begin(), ass.end(), p) == ass.end())
            out.primes_associated = false;
        MonomialIdeal loc = localize(I, p);
        if (!loc.is_unit() && d > reg(loc)) out.exponents_bounded = false;
        if (loc.is_unit() && d > 0) out.exponents_bounded = false;
    }
    return out;
}

// Strong intersection form: I = cap over Ass(I) of p^{reg(I(p))}.  Returns
// the candidate presentation along with whether it reproduces I.
struct StrongIntersectionResult {
    bool holds = false;
    IntersectionPresentation presentation;
};

inline StrongIntersectionResult
strong_intersection_check(const MonomialIdeal& I,
                          const std::function<std::uint64_t(const MonomialIdeal&)>& reg) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("intersection presentation of the zero or unit ideal");
    if (!descriptors(I).equigenerated)
        throw domain_error("intersection presentation requires an equigenerated ideal");
    StrongIntersectionResult r;
    r.presentation.nvars = I.nvars();
    for (const MonomialPrime& p : ass_primes(I)) {
        MonomialIdeal loc = localize(I, p);
        r.presentation.terms.emplace_back(p, loc.is_unit() ? 0 : reg(loc));
    }
    r.holds = (r.presentation.evaluate() == I);
    return r;
}

// Truncation at degree d: the ideal generated by all members of I of degree
// >= d.  Generators below the cutoff are padded by every monomial of the
// complementary degree.
inline MonomialIdeal truncate_at(const MonomialIdeal& I, std::uint64_t d) {
    if (I.is_zero())
        throw domain_error("truncation of the zero ideal");
    std::vector<Monomial> gens;
    std::vector<Exponent> cur(I.nvars(), 0);
    auto pad = [&](auto&& self, const Monomial& base, std::size_t i, std::uint64_t left) -> void {
        if (left == 0) {
            Monomial m = base;
            for (std::size_t k = 0; k < I.nvars(); ++k)
                if (cur[k] > 0) m = m.with_exponent(k, m[k] + cur[k]);
            gens.push_back(std::move(m));
            return;
        }
        if (i == I.nvars()) return;
        for (std::uint64_t e = 0; e <= left; ++e) {
            cur[i] = static_cast<Exponent>(e);
            self(self, base, i + 1, left - e);
        }
        cur[i] = 0;
    };
    for (const Monomial& g : I.gens()) {
        std::uint64_t deg = g.total_degree();
        if (deg >= d) {
            gens.push_back(g);
        } else {
            std::fill(cur.begin(), cur.end(), 0);
            pad(pad, g, 0, d - deg);
        }
    }
    return MonomialIdeal(I.nvars(), std::move(gens));
}

} // namespace milo

#endif
