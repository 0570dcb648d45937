#ifndef MILO_REGISTRY_HPP
#define MILO_REGISTRY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "milo/betti.hpp"
#include "milo/decompose.hpp"
#include "milo/parse.hpp"
#include "milo/polymatroid.hpp"
#include "milo/quotients.hpp"
#include "milo/scan.hpp"

namespace milo {

// Catalog of worked examples with pinned expected behavior.  Each entry
// re-derives everything from scratch and reports one line per claim, so a
// regression anywhere in the tower (parsing, localization, decomposition,
// homology, exchange checks) surfaces as a named failing claim.

struct ExampleCheck {
    std::string what;
    bool pass = false;
    std::string detail;
};

struct ExampleReport {
    std::string name;
    std::vector<ExampleCheck> checks;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline void claim(ExampleReport& r, const std::string& what, bool ok,
                  const std::string& detail = "") {
    r.checks.push_back({what, ok, detail});
}

inline ExampleReport example_1_4(std::uint32_t chr, unsigned jobs) {
    ExampleReport r{"example-1.4", {}};
    MonomialIdeal I = parse_ideal("x1x2, x1x3, x2^2", 3);
    std::uint64_t reg = regularity(I, chr);
    claim(r, "reg(I) = 2", reg == 2, "reg = " + std::to_string(reg));
    claim(r, "I has a linear resolution", has_linear_resolution(I, chr));
    ExchangeResult ex = is_polymatroidal(I);
    claim(r, "I is not polymatroidal", !ex.polymatroidal,
          ex.witness ? "witness u=" + to_string(ex.witness->u) + " v=" + to_string(ex.witness->v)
                     : "");
    claim(r, "exchange failure carries a witness", ex.witness.has_value());
    MonomialIdeal loc = localize(I, MonomialPrime(3, {0, 1}));
    claim(r, "I(x1,x2) = (x1, x2^2)", loc == parse_ideal("x1, x2^2", 3),
          "I(x1,x2) = " + to_string(loc));
    claim(r, "I(x1,x2) is not equigenerated", !descriptors(loc).equigenerated.has_value());
    LocalizationScanReport scan = scan_localizations(I, chr, jobs);
    claim(r, "some localization is non-linear", !scan.all_linear);
    claim(r, "scan verdict matches exchange verdict", scan.consistent);
    return r;
}

inline ExampleReport example_1_6(std::uint32_t chr, unsigned jobs) {
    ExampleReport r{"example-1.6", {}};
    MonomialIdeal I =
        parse_ideal("x1^3, x1^2x2, x1^2x3, x2x3x4, x1x2x3, x1x3x4, x1^2x4", 4);
    std::uint64_t reg = regularity(I, chr);
    claim(r, "reg(I) = 3", reg == 3, "reg = " + std::to_string(reg));
    claim(r, "I has a linear resolution", has_linear_resolution(I, chr));
    auto sats = check_saturations(I, chr);
    bool all = true;
    for (const auto& row : sats) all = all && row.linear;
    claim(r, "I : x_i^inf is linear for every i", all);
    claim(r, "I is not polymatroidal", !is_polymatroidal(I).polymatroidal);
    LocalizationScanReport scan = scan_localizations(I, chr, jobs);
    bool found = false;
    std::string which;
    for (const auto& row : scan.rows)
        if (!row.linear) { found = true; which = to_string(row.prime); break; }
    claim(r, "scan exhibits a non-linear localization", found, which);
    claim(r, "scan verdict matches exchange verdict", scan.consistent);
    return r;
}

inline ExampleReport example_1_7(std::uint32_t chr, unsigned jobs) {
    (void)jobs;
    ExampleReport r{"example-1.7", {}};
    MonomialIdeal I =
        parse_ideal("x1x3x5, x1x2x3, x1x2x4, x2x3x4, x3x4x5, x2x4x5", 5);
    claim(r, "I is squarefree", descriptors(I).squarefree);
    std::uint64_t reg = regularity(I, chr);
    claim(r, "reg(I) = 3", reg == 3, "reg = " + std::to_string(reg));
    claim(r, "I has a linear resolution", has_linear_resolution(I, chr));
    bool all = true;
    std::string detail;
    for (std::size_t i = 0; i < 5; ++i) {
        MonomialIdeal S = saturate_var(I, i);
        Descriptors d = descriptors(S);
        bool ok = d.squarefree && d.equigenerated && *d.equigenerated == 2 &&
                  regularity(S, chr) == 2;
        if (!ok) detail = "fails at i=" + std::to_string(i + 1);
        all = all && ok;
    }
    claim(r, "each I : x_i^inf is squarefree of degree 2 with reg = 2", all, detail);
    claim(r, "I is not matroidal", !is_matroidal(I));
    return r;
}

inline ExampleReport example_1_12(std::uint32_t chr, unsigned jobs) {
    (void)jobs;
    ExampleReport r{"example-1.12", {}};
    IntersectionPresentation def;
    def.nvars = 4;
    def.terms = {{MonomialPrime(4, {0, 1}), 2},
                 {MonomialPrime(4, {0, 1, 2}), 3},
                 {MonomialPrime(4, {0, 1, 3}), 3},
                 {MonomialPrime(4, {0, 1, 2, 3}), 5}};
    MonomialIdeal I = def.evaluate();
    Descriptors d = descriptors(I);
    claim(r, "I is equigenerated in degree 5",
          d.equigenerated && *d.equigenerated == 5);
    claim(r, "x1^5 and x2^5 are the only pure powers in G(I)",
          d.pure_powers == std::vector<std::size_t>({0, 1}));
    claim(r, "a_3 = 2", d.bounds[2] == 2, "a_3 = " + std::to_string(d.bounds[2]));
    claim(r, "x1*x3^2*x4^2 is not in I",
          !contains(I, parse_monomial("x1x3^2x4^2", 4)));
    claim(r, "I is not of Veronese type", !is_veronese_type(I).has_value());
    claim(r, "I is polymatroidal", is_polymatroidal(I).polymatroidal);
    claim(r, "height(I) = 2", height(I) == 2);
    claim(r, "I has an embedded prime", has_embedded_primes(I));
    auto reg_fn = [chr](const MonomialIdeal& J) { return regularity(J, chr); };
    StrongIntersectionResult s = strong_intersection_check(I, reg_fn);
    claim(r, "strong intersection presentation reproduces I", s.holds);
    std::map<std::vector<std::size_t>, std::uint64_t> expect = {
        {{0, 1}, 2}, {{0, 1, 2}, 3}, {{0, 1, 3}, 3}, {{0, 1, 2, 3}, 5}};
    std::map<std::vector<std::size_t>, std::uint64_t> got;
    for (const auto& [p, e] : s.presentation.terms) got[p.vars()] = e;
    claim(r, "exponents are reg of the localizations: 2,3,3,5", got == expect);
    auto q = linear_quotients(I, 40);
    claim(r, "I has linear quotients", q.status == QuotientStatus::Found);
    return r;
}

inline ExampleReport example_1_22(std::uint32_t chr, unsigned jobs) {
    (void)jobs;
    ExampleReport r{"example-1.22", {}};
    MonomialIdeal I = parse_ideal(
        "ace, acf, acg, ade, bcd, bfg, cde, cdf, cdg, cef, ceg, cfg, def, deg, dfg, efg", 7);
    claim(r, "|G(I)| = 16", I.num_gens() == 16);
    std::uint64_t r1 = regularity(I, chr);
    claim(r, "reg(I) = 3", r1 == 3, "reg = " + std::to_string(r1));
    claim(r, "I has a linear resolution", has_linear_resolution(I, chr));
    MonomialIdeal I2 = power(I, 2);
    std::uint64_t r2 = regularity(I2, chr);
    claim(r, "reg(I^2) = 6", r2 == 6, "reg = " + std::to_string(r2));
    claim(r, "I^2 has a linear resolution", has_linear_resolution(I2, chr));
    MonomialIdeal I3 = product(I2, I);
    std::uint64_t r3 = regularity(I3, chr);
    claim(r, "reg(I^3) = 10", r3 == 10, "reg = " + std::to_string(r3));
    claim(r, "I^3 has no linear resolution", !has_linear_resolution(I3, chr));
    return r;
}

inline ExampleReport example_1_24(std::uint32_t chr, unsigned jobs) {
    (void)chr;
    (void)jobs;
    ExampleReport r{"example-1.24", {}};
    MonomialIdeal I = parse_ideal("x1, x2", 2);
    MonomialIdeal J = parse_ideal("x1^2, x2^2", 2);
    ProductCheck pc = product_polymatroidality(I, J);
    claim(r, "I*J is polymatroidal", pc.product_polymatroidal);
    claim(r, "I is polymatroidal", pc.left_polymatroidal);
    claim(r, "J is not polymatroidal", !pc.right_polymatroidal);
    claim(r, "I*J = (x1,x2)^3",
          product(I, J) == prime_power(MonomialPrime::maximal(2), 3));
    return r;
}

inline ExampleReport example_1_25(std::uint32_t chr, unsigned jobs) {
    (void)chr;
    (void)jobs;
    ExampleReport r{"example-1.25", {}};
    MonomialIdeal I = parse_ideal("x1^2, x2^2, x1x3, x2x3", 3);
    MonomialIdeal J = parse_ideal("x1^2, x3^2, x1x2, x2x3", 3);
    ProductCheck pc = product_polymatroidality(I, J);
    claim(r, "I*J is polymatroidal", pc.product_polymatroidal);
    claim(r, "I is not polymatroidal", !pc.left_polymatroidal);
    claim(r, "J is not polymatroidal", !pc.right_polymatroidal);
    return r;
}

inline ExampleReport sturmfels(std::uint32_t chr, unsigned jobs) {
    (void)jobs;
    ExampleReport r{"sturmfels", {}};
    MonomialIdeal I = parse_ideal("def, cef, cdf, cde, bef, bcd, acf, ade", 6);
    std::uint64_t r1 = regularity(I, chr);
    claim(r, "reg(I) = 3", r1 == 3, "reg = " + std::to_string(r1));
    claim(r, "I has a linear resolution", has_linear_resolution(I, chr));
    MonomialIdeal I2 = power(I, 2);
    claim(r, "I^2 has no linear resolution", !has_linear_resolution(I2, chr));
    std::uint64_t r2 = regularity(I2, chr);
    claim(r, "reg(I^2) >= 7", r2 >= 7, "reg = " + std::to_string(r2));
    // I has linear quotients (hence the linear resolution above), yet the
    // quotients certificate must disappear for I^2
    claim(r, "I has linear quotients",
          linear_quotients(I).status == QuotientStatus::Found);
    return r;
}

} // namespace detail

inline std::vector<std::string> example_names() {
    return {"example-1.4",  "example-1.6",  "example-1.7",  "example-1.10",
            "example-1.11", "example-1.12", "example-1.22", "example-1.24",
            "example-1.25", "sturmfels"};
}

inline ExampleReport run_example(std::string_view name, std::uint32_t chr = 32003,
                                 unsigned jobs = 1) {
    if (name == "example-1.4") return detail::example_1_4(chr, jobs);
    if (name == "example-1.6" || name == "example-1.10") {
        ExampleReport r = detail::example_1_6(chr, jobs);
        r.name = std::string(name);
        return r;
    }
    if (name == "example-1.7" || name == "example-1.11") {
        ExampleReport r = detail::example_1_7(chr, jobs);
        r.name = std::string(name);
        return r;
    }
    if (name == "example-1.12") return detail::example_1_12(chr, jobs);
    if (name == "example-1.22") return detail::example_1_22(chr, jobs);
    if (name == "example-1.24") return detail::example_1_24(chr, jobs);
    if (name == "example-1.25") return detail::example_1_25(chr, jobs);
    if (name == "sturmfels") return detail::sturmfels(chr, jobs);
    throw parse_error("unknown example: " + std::string(name));
}

} // namespace milo

#endif
