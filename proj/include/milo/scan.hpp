#ifndef MILO_SCAN_HPP
#define MILO_SCAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milo/betti.hpp"
#include "milo/decompose.hpp"
#include "milo/ideal.hpp"
#include "milo/parallel.hpp"
#include "milo/polymatroid.hpp"

namespace milo {

// One localization (or saturation) classified for the linearity survey.
struct LocalizationRow {
    MonomialPrime prime;
    MonomialIdeal localized;
    std::optional<std::uint64_t> equi_degree;   // nullopt: mixed degrees
    std::uint64_t reg = 0;
    bool linear = false;                        // unit/principal count as linear
};

struct LocalizationScanReport {
    std::vector<LocalizationRow> rows;   // all 2^n - 1 primes, canonical order
    bool all_linear = false;
    bool polymatroidal = false;
    // The conjecture under test: every monomial localization has a linear
    // resolution iff the ideal is polymatroidal.
    bool consistent = false;
};

namespace detail {

inline LocalizationRow classify(MonomialPrime p, MonomialIdeal J, std::uint32_t chr) {
    LocalizationRow row{std::move(p), std::move(J), std::nullopt, 0, false};
    if (row.localized.is_unit()) {
        row.equi_degree = 0;
        row.linear = true;
        return row;
    }
    if (row.localized.is_principal()) {
        // resolves in length zero: reg is the generator degree
        row.equi_degree = row.localized.gens()[0].total_degree();
        row.reg = *row.equi_degree;
        row.linear = true;
        return row;
    }
    Descriptors d = descriptors(row.localized);
    if (d.equigenerated) row.equi_degree = d.equigenerated;
    row.reg = regularity(row.localized, chr);
    row.linear = d.equigenerated && row.reg == *d.equigenerated;
    return row;
}

inline std::vector<MonomialPrime> all_primes(std::size_t nvars) {
    // ascending lex on the sorted index lists = canonical order
    std::vector<MonomialPrime> out;
    std::vector<std::vector<std::size_t>> lists;
    auto rec = [&](auto&& self, std::size_t from, std::vector<std::size_t>& cur) -> void {
        if (!cur.empty()) lists.push_back(cur);
        for (std::size_t v = from; v < nvars; ++v) {
            cur.push_back(v);
            self(self, v + 1, cur);
            cur.pop_back();
        }
    };
    std::vector<std::size_t> cur;
    rec(rec, 0, cur);
    for (auto& l : lists) out.emplace_back(nvars, std::move(l));
    return out;
}

} // namespace detail

// Survey all 2^n - 1 monomial localizations of an equigenerated ideal and
// compare "all linear" against the exchange property.
inline LocalizationScanReport scan_localizations(const MonomialIdeal& I,
                                                 std::uint32_t chr = 32003,
                                                 unsigned jobs = 1) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("localization scan of the zero or unit ideal");
    if (!descriptors(I).equigenerated)
        throw domain_error("localization scan requires an equigenerated ideal");
    if (I.nvars() > 20)
        throw cap_error("too many variables for a full localization scan");
    LocalizationScanReport report;
    std::vector<MonomialPrime> primes = detail::all_primes(I.nvars());
    report.rows.resize(primes.size(),
                       LocalizationRow{MonomialPrime(1, {0}), MonomialIdeal(0), {}, 0, false});
    parallel_for(jobs, primes.size(), [&](std::size_t k) {
        report.rows[k] = detail::classify(primes[k], localize(I, primes[k]), chr);
    });
    report.all_linear = true;
    for (const auto& row : report.rows)
        if (!row.linear) { report.all_linear = false; break; }
    report.polymatroidal = is_polymatroidal(I).polymatroidal;
    report.consistent = (report.all_linear == report.polymatroidal);
    return report;
}

// The co-rank-1 slice of the survey: I : x_i^infty for each variable.
inline std::vector<LocalizationRow> check_saturations(const MonomialIdeal& I,
                                                      std::uint32_t chr = 32003) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("saturation check of the zero or unit ideal");
    std::vector<LocalizationRow> rows;
    for (std::size_t i = 0; i < I.nvars(); ++i) {
        std::vector<std::size_t> others;
        for (std::size_t v = 0; v < I.nvars(); ++v)
            if (v != i) others.push_back(v);
        if (others.empty())
            throw domain_error("saturation check needs at least two variables");
        rows.push_back(detail::classify(MonomialPrime(I.nvars(), std::move(others)),
                                        saturate_var(I, i), chr));
    }
    return rows;
}

// Hypothesis flags for the proven special cases of the conjecture.  Each
// flag, when set, promises that "all localizations linear" is equivalent to
// a structural conclusion (Veronese type for the first two, the exchange
// property for the rest).
struct TheoremApplicability {
    bool height_n_minus_1 = false;       // height(I) >= n-1
    bool pure_powers_n_minus_1 = false;  // >= n-1 variables contribute a pure power
    bool pure_powers_n_minus_2 = false;
    bool pure_powers_n_minus_3 = false;
    bool four_vars = false;              // n <= 4
    bool unmixed_h2_4vars = false;       // n = 4, unmixed of height 2
    bool no_embedded_4vars = false;      // n = 4, no embedded primes

    bool any() const {
        return height_n_minus_1 || pure_powers_n_minus_1 || pure_powers_n_minus_2 ||
               pure_powers_n_minus_3 || four_vars || unmixed_h2_4vars || no_embedded_4vars;
    }
    bool veronese_case() const { return height_n_minus_1 || pure_powers_n_minus_1; }
    bool exchange_case() const {
        return pure_powers_n_minus_2 || pure_powers_n_minus_3 || four_vars ||
               unmixed_h2_4vars || no_embedded_4vars;
    }
};

inline TheoremApplicability theorem_preconditions(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("theorem preconditions of the zero or unit ideal");
    if (!descriptors(I).equigenerated)
        throw domain_error("theorem preconditions require an equigenerated ideal");
    TheoremApplicability t;
    const std::size_t n = I.nvars();
    const std::size_t pure = descriptors(I).pure_powers.size();
    t.height_n_minus_1 = n >= 1 && height(I) + 1 >= n;
    t.pure_powers_n_minus_1 = n >= 1 && pure + 1 >= n;
    t.pure_powers_n_minus_2 = n >= 2 && pure + 2 >= n;
    t.pure_powers_n_minus_3 = n >= 3 && pure + 3 >= n;
    t.four_vars = n <= 4;
    if (n == 4) {
        t.unmixed_h2_4vars = (height(I) == 2) && is_unmixed(I);
        t.no_embedded_4vars = !has_embedded_primes(I);
    }
    return t;
}

// Full verdict for one ideal: which proven cases apply, what the scan and
// the structural checks say, and which biconditionals (if any) failed.
// A nonempty `violated` is a genuine bug witness, not a conjecture finding.
struct TheoremVerdict {
    TheoremApplicability flags;
    bool all_linear = false;
    bool exchange = false;
    bool veronese = false;
    std::vector<std::string> violated;
};

inline TheoremVerdict verify_theorem_biconditionals(const MonomialIdeal& I,
                                                    std::uint32_t chr = 32003,
                                                    unsigned jobs = 1) {
    TheoremVerdict v;
    v.flags = theorem_preconditions(I);
    LocalizationScanReport scan = scan_localizations(I, chr, jobs);
    v.all_linear = scan.all_linear;
    v.exchange = scan.polymatroidal;
    v.veronese = is_veronese_type(I).has_value();
    auto check = [&](bool flag, const char* name, bool conclusion) {
        if (flag && v.all_linear != conclusion) v.violated.push_back(name);
    };
    check(v.flags.height_n_minus_1, "height_n_minus_1", v.veronese);
    check(v.flags.pure_powers_n_minus_1, "pure_powers_n_minus_1", v.veronese);
    check(v.flags.pure_powers_n_minus_2, "pure_powers_n_minus_2", v.exchange);
    check(v.flags.pure_powers_n_minus_3, "pure_powers_n_minus_3", v.exchange);
    check(v.flags.four_vars, "four_vars", v.exchange);
    check(v.flags.unmixed_h2_4vars, "unmixed_h2_4vars", v.exchange);
    check(v.flags.no_embedded_4vars, "no_embedded_4vars", v.exchange);
    return v;
}

// Linearity of I, I^2, ..., I^kmax.
struct PowerRow {
    std::uint64_t k = 0;
    std::optional<std::uint64_t> equi_degree;
    std::uint64_t reg = 0;
    bool linear = false;
};

inline std::vector<PowerRow> powers_linearity_profile(const MonomialIdeal& I,
                                                      std::uint64_t kmax,
                                                      std::uint32_t chr = 32003) {
    if (I.is_zero() || I.is_unit())
        throw domain_error("powers profile of the zero or unit ideal");
    if (kmax == 0)
        throw domain_error("kmax must be >= 1");
    std::vector<PowerRow> rows;
    MonomialIdeal P = I;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        if (k > 1) P = product(P, I);
        Descriptors d = descriptors(P);
        PowerRow row{k, d.equigenerated, regularity(P, chr), false};
        row.linear = P.is_principal() || (d.equigenerated && row.reg == *d.equigenerated);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Exchange property of I, J and I*J side by side (the product of
// polymatroidal ideals is polymatroidal, but not conversely).
struct ProductCheck {
    bool product_polymatroidal = false;
    bool left_polymatroidal = false;
    bool right_polymatroidal = false;
};

inline ProductCheck product_polymatroidality(const MonomialIdeal& I, const MonomialIdeal& J) {
    ProductCheck out;
    out.left_polymatroidal = is_polymatroidal(I).polymatroidal;
    out.right_polymatroidal = is_polymatroidal(J).polymatroidal;
    out.product_polymatroidal = is_polymatroidal(product(I, J)).polymatroidal;
    return out;
}

} // namespace milo

#endif
