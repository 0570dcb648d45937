#ifndef MILO_IDEAL_HPP
#define MILO_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "milo/monomial.hpp"

namespace milo {

// A monomial prime ideal, i.e. an ideal generated by a subset of the
// variables.  Kept separate from MonomialIdeal because localization and
// decomposition treat the variable subset, not the generators, as the datum.
class MonomialPrime {
public:
    MonomialPrime(std::size_t nvars, std::vector<std::size_t> vars)
        : nvars_(nvars), vars_(std::move(vars)) {
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        if (vars_.empty())
            throw domain_error("monomial prime needs a nonempty variable set");
        if (vars_.back() >= nvars_)
            throw dimension_error("prime variable index out of range");
    }

    // The graded maximal ideal (x_1, ..., x_n).
    static MonomialPrime maximal(std::size_t nvars) {
        std::vector<std::size_t> all(nvars);
        for (std::size_t i = 0; i < nvars; ++i) all[i] = i;
        return MonomialPrime(nvars, std::move(all));
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<std::size_t>& vars() const { return vars_; }
    std::size_t size() const { return vars_.size(); }
    bool is_maximal() const { return vars_.size() == nvars_; }

    bool contains_var(std::size_t var) const {
        return std::binary_search(vars_.begin(), vars_.end(), var);
    }

    std::vector<std::size_t> complement() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (!contains_var(i)) out.push_back(i);
        return out;
    }

    friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
        return a.nvars_ == b.nvars_ && a.vars_ == b.vars_;
    }
    friend bool operator!=(const MonomialPrime& a, const MonomialPrime& b) {
        return !(a == b);
    }

    // Canonical order: ascending lexicographic on the sorted index lists.
    friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
        return a.vars_ < b.vars_;
    }

private:
    std::size_t nvars_;
    std::vector<std::size_t> vars_;
};

namespace detail {

// Drop duplicates and non-minimal elements; what remains is the unique
// minimal generating set (an antichain under divisibility).
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return Monomial::lex_less(a, b);
    });
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (k.divides(g)) { redundant = true; break; }
        if (!redundant) kept.push_back(g);
    }
    // canonical order: descending lex
    std::sort(kept.begin(), kept.end(), [](const Monomial& a, const Monomial& b) {
        return Monomial::lex_less(b, a);
    });
    return kept;
}

} // namespace detail

// A monomial ideal, held by its unique minimal generating set in descending
// lex order.  The empty generator list is the zero ideal; the single
// generator 1 is the unit ideal.  nvars is the ambient ring dimension and is
// preserved by every operation (localization included).
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

    MonomialIdeal(std::size_t nvars, std::vector<Monomial> raw_gens) : nvars_(nvars) {
        for (const Monomial& g : raw_gens)
            if (g.nvars() != nvars_)
                throw dimension_error("generator has wrong number of variables");
        gens_ = detail::minimalize(std::move(raw_gens));
    }

    std::size_t nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t num_gens() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }
    bool is_principal() const { return gens_.size() == 1; }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

private:
    std::size_t nvars_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal make_ideal(std::size_t nvars, std::vector<Monomial> gens) {
    return MonomialIdeal(nvars, std::move(gens));
}

// Membership: a monomial lies in I iff some minimal generator divides it.
inline bool contains(const MonomialIdeal& I, const Monomial& m) {
    if (m.nvars() != I.nvars())
        throw dimension_error("monomial has wrong number of variables");
    for (const Monomial& g : I.gens())
        if (g.divides(m)) return true;
    return false;
}

// I contained in J as sets of monomials.
inline bool is_subideal(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw dimension_error("ideals live in different rings");
    for (const Monomial& g : I.gens())
        if (!contains(J, g)) return false;
    return true;
}

inline MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw dimension_error("ideals live in different rings");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal(I.nvars());
    std::vector<Monomial> prods;
    std::unordered_set<Monomial, MonomialHash> seen;
    prods.reserve(I.num_gens() * J.num_gens());
    for (const Monomial& g : I.gens())
        for (const Monomial& h : J.gens()) {
            Monomial p = g * h;
            if (seen.insert(p).second) prods.push_back(std::move(p));
        }
    return MonomialIdeal(I.nvars(), std::move(prods));
}

inline MonomialIdeal power(const MonomialIdeal& I, std::uint64_t k) {
    if (k == 0)
        throw domain_error("power exponent must be >= 1");
    MonomialIdeal r = I;
    for (std::uint64_t i = 1; i < k; ++i) r = product(r, I);
    return r;
}

// Colon by a single monomial: I : m = ({ g : m | g in G(I) }).
inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    if (m.nvars() != I.nvars())
        throw dimension_error("monomial has wrong number of variables");
    std::vector<Monomial> gens;
    gens.reserve(I.num_gens());
    for (const Monomial& g : I.gens()) gens.push_back(g.colon(m));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

// Intersection via pairwise lcms, folded with re-minimalization at each step
// to keep intermediate generator counts down.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars())
        throw dimension_error("ideals live in different rings");
    if (I.is_zero() || J.is_zero()) return MonomialIdeal(I.nvars());
    std::vector<Monomial> meets;
    meets.reserve(I.num_gens() * J.num_gens());
    for (const Monomial& g : I.gens())
        for (const Monomial& h : J.gens())
            meets.push_back(lcm(g, h));
    return MonomialIdeal(I.nvars(), std::move(meets));
}

// Saturation with respect to one variable, I : x_i^infty.  Substituting
// x_i -> 1 in every generator computes it in one pass: dividing out any
// power of x_i is eventually allowed.
inline MonomialIdeal saturate_var(const MonomialIdeal& I, std::size_t var) {
    if (var >= I.nvars())
        throw dimension_error("variable index out of range");
    if (I.is_zero())
        throw domain_error("saturation of the zero ideal");
    std::vector<Monomial> gens;
    gens.reserve(I.num_gens());
    for (const Monomial& g : I.gens()) gens.push_back(g.with_exponent(var, 0));
    return MonomialIdeal(I.nvars(), std::move(gens));
}

// Graded saturation I : m^infty, computed by iterating J <- J : m
// ( = intersection of J : x_i over *all* variables) until it stabilizes.
inline MonomialIdeal saturate_graded(const MonomialIdeal& I) {
    if (I.is_zero())
        throw domain_error("saturation of the zero ideal");
    MonomialIdeal J = I;
    for (;;) {
        MonomialIdeal next = colon(J, Monomial::variable(J.nvars(), 0));
        for (std::size_t i = 1; i < J.nvars(); ++i)
            next = intersect(next, colon(J, Monomial::variable(J.nvars(), i)));
        if (next == J) return J;
        J = next;
    }
}

// Monomial localization I(p): substitute x_i -> 1 for every variable outside
// p.  The ambient ring (nvars) is kept; the result simply does not involve
// the substituted variables.
inline MonomialIdeal localize(const MonomialIdeal& I, const MonomialPrime& p) {
    if (p.nvars() != I.nvars())
        throw dimension_error("prime lives in a different ring");
    if (I.is_zero())
        throw domain_error("localization of the zero ideal");
    std::vector<Monomial> gens;
    gens.reserve(I.num_gens());
    for (const Monomial& g : I.gens()) {
        Monomial h = g;
        for (std::size_t i : p.complement()) h = h.with_exponent(i, 0);
        gens.push_back(std::move(h));
    }
    return MonomialIdeal(I.nvars(), std::move(gens));
}

// Same localization computed by iterated single-variable saturations; kept
// as an independent route for cross-checking.
inline MonomialIdeal localize_via_saturation(const MonomialIdeal& I, const MonomialPrime& p) {
    if (p.nvars() != I.nvars())
        throw dimension_error("prime lives in a different ring");
    if (I.is_zero())
        throw domain_error("localization of the zero ideal");
    MonomialIdeal J = I;
    for (std::size_t i : p.complement()) J = saturate_var(J, i);
    return J;
}

// Aggregate shape data about a nonzero ideal.
struct Descriptors {
    Monomial gcd;                                  // gcd of all minimal generators
    std::vector<std::size_t> support;              // variables occurring in some generator
    std::vector<Exponent> bounds;                  // componentwise max of exponents
    std::optional<std::uint64_t> equigenerated;    // common degree, if all gens share one
    bool squarefree = false;
    std::vector<std::size_t> pure_powers;          // variables i with some x_i^e in G(I)
};

inline Descriptors descriptors(const MonomialIdeal& I) {
    if (I.is_zero())
        throw domain_error("descriptors of the zero ideal");
    Descriptors d{Monomial::one(I.nvars()), {}, std::vector<Exponent>(I.nvars(), 0), {}, true, {}};
    d.gcd = I.gens().front();
    bool equi = true;
    std::uint64_t deg0 = I.gens().front().total_degree();
    for (const Monomial& g : I.gens()) {
        d.gcd = gcd(d.gcd, g);
        if (!g.is_squarefree()) d.squarefree = false;
        if (g.total_degree() != deg0) equi = false;
        for (std::size_t i = 0; i < I.nvars(); ++i)
            d.bounds[i] = std::max(d.bounds[i], g[i]);
        if (g.is_pure_power()) d.pure_powers.push_back(g.support()[0]);
    }
    for (std::size_t i = 0; i < I.nvars(); ++i)
        if (d.bounds[i] > 0) d.support.push_back(i);
    if (equi) d.equigenerated = deg0;
    std::sort(d.pure_powers.begin(), d.pure_powers.end());
    return d;
}

// p^k as a monomial ideal; k = 0 gives the unit ideal.
inline MonomialIdeal prime_power(const MonomialPrime& p, std::uint64_t k) {
    std::vector<Monomial> vars;
    for (std::size_t i : p.vars())
        vars.push_back(Monomial::variable(p.nvars(), i));
    MonomialIdeal P(p.nvars(), std::move(vars));
    if (k == 0) return MonomialIdeal(p.nvars(), {Monomial::one(p.nvars())});
    return power(P, k);
}

} // namespace milo

#endif
