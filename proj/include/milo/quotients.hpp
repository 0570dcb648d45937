#ifndef MILO_QUOTIENTS_HPP
#define MILO_QUOTIENTS_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "milo/ideal.hpp"

namespace milo {

enum class QuotientStatus {
    Found,      // a linear-quotients order was found and verified
    NotFound,   // exhaustive search proved no order exists
    Unknown     // generator count above the search cap; nothing attempted
};

struct QuotientOrderResult {
    QuotientStatus status = QuotientStatus::Unknown;
    std::vector<Monomial> order;   // witness ordering when status == Found
};

// (u_1,...,u_{k-1}) : u_k must be generated by variables.
inline bool quotient_is_linear(const std::vector<Monomial>& prefix, const Monomial& u) {
    std::vector<Monomial> colon_gens;
    colon_gens.reserve(prefix.size());
    for (const Monomial& v : prefix) colon_gens.push_back(v.colon(u));
    colon_gens = detail::minimalize(std::move(colon_gens));
    for (const Monomial& c : colon_gens)
        if (c.total_degree() > 1) return false;
    return true;
}

inline bool verify_quotient_order(const std::vector<Monomial>& order) {
    std::vector<Monomial> prefix;
    for (const Monomial& u : order) {
        if (!prefix.empty() && !quotient_is_linear(prefix, u)) return false;
        prefix.push_back(u);
    }
    return true;
}

// Backtracking search for a linear-quotients order of G(I).  Generators are
// tried in canonical (descending lex) order, which happens to succeed
// immediately for most shellable examples.  Failed prefix *sets* are
// memoized: whether an extension exists depends only on the chosen set, not
// on the order it was built in.
inline QuotientOrderResult linear_quotients(const MonomialIdeal& I, std::size_t cap = 22) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("linear quotients of the zero or unit ideal");
    Descriptors d = descriptors(I);
    if (!d.equigenerated)
        throw domain_error("linear quotients require an equigenerated ideal");
    const std::size_t m = I.num_gens();
    if (m > cap) return {QuotientStatus::Unknown, {}};
    if (m > 62)
        throw cap_error("too many generators for the linear-quotients search");
    if (m == 1) return {QuotientStatus::Found, {I.gens()[0]}};

    std::unordered_set<std::uint64_t> dead;   // chosen-sets with no completion
    std::vector<std::size_t> chosen;
    chosen.reserve(m);
    std::uint64_t chosen_mask = 0;
    std::vector<Monomial> prefix;
    prefix.reserve(m);

    // iterative DFS with explicit candidate counters
    std::vector<std::size_t> next_candidate{0};
    while (!next_candidate.empty()) {
        if (chosen.size() == m) {
            std::vector<Monomial> order;
            order.reserve(m);
            for (std::size_t idx : chosen) order.push_back(I.gens()[idx]);
            // re-verify the witness end to end before returning it
            if (!verify_quotient_order(order))
                throw std::logic_error("linear-quotients witness failed verification");
            return {QuotientStatus::Found, std::move(order)};
        }
        std::size_t& cand = next_candidate.back();
        bool descended = false;
        for (; cand < m; ++cand) {
            const std::uint64_t bit = std::uint64_t(1) << cand;
            if (chosen_mask & bit) continue;
            if (dead.count(chosen_mask | bit)) continue;
            if (!prefix.empty() && !quotient_is_linear(prefix, I.gens()[cand])) continue;
            // descend
            chosen.push_back(cand);
            chosen_mask |= bit;
            prefix.push_back(I.gens()[cand]);
            ++cand;
            next_candidate.push_back(0);
            descended = true;
            break;
        }
        if (descended) continue;
        // exhausted: record failure and backtrack
        dead.insert(chosen_mask);
        next_candidate.pop_back();
        if (!chosen.empty()) {
            chosen_mask &= ~(std::uint64_t(1) << chosen.back());
            chosen.pop_back();
            prefix.pop_back();
        }
    }
    return {QuotientStatus::NotFound, {}};
}

} // namespace milo

#endif
