#ifndef MILO_PARSE_HPP
#define MILO_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milo/ideal.hpp"

namespace milo {

// Text grammar
// ------------
// monomial  := "1" | factor+            (factors juxtaposed or '*'-separated)
// factor    := var [ '^' nat ]
// var       := 'x' nat                  (1-based index)
//            | letter                   ('a'..'z' mapped alphabetically to x1..x26)
// ideal     := "0" | monomial (',' monomial)*
//
// Whitespace is insignificant.  "x1x2^2", "x1 * x2^2" and "ab^2" (two
// variables) all parse.  A lone 'x' with no digits is the alphabetic
// variable x24.  Output always uses the x<i> form with '*' separators.

namespace detail {

struct Factor {
    std::size_t var;        // 0-based
    std::uint64_t exp;
};

// Parse one monomial into factors without fixing nvars yet; reports the
// largest variable index seen through max_var.
inline std::vector<Factor> lex_monomial(std::string_view text, std::size_t& max_var) {
    std::vector<Factor> factors;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_nat = [&]() -> std::uint64_t {
        std::uint64_t v = 0;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (std::uint64_t(1) << 32))
                throw parse_error("number too large in monomial");
            ++pos;
        }
        if (pos == start) throw parse_error("expected a number");
        return v;
    };
    skip_ws();
    if (pos >= text.size()) throw parse_error("empty monomial");
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c == '*') {
            if (!any) throw parse_error("unexpected '*'");
            ++pos;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Only the literal constant 1 is a valid numeric factor.
            if (read_nat() != 1)
                throw parse_error("numeric coefficients other than 1 are not monomials");
            any = true;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error(std::string("unexpected character '") + c + "' in monomial");
        ++pos;
        std::size_t var;
        if ((c == 'x' || c == 'X') && pos < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::uint64_t idx = read_nat();
            if (idx == 0) throw parse_error("variable indices are 1-based");
            var = static_cast<std::size_t>(idx - 1);
        } else {
            var = static_cast<std::size_t>(std::tolower(static_cast<unsigned char>(c)) - 'a');
        }
        std::uint64_t exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            exp = read_nat();
        }
        if (exp > 0) factors.push_back({var, exp});
        max_var = std::max(max_var, var + 1);
        any = true;
    }
    if (!any) throw parse_error("empty monomial");
    return factors;
}

inline Monomial build_monomial(const std::vector<Factor>& factors, std::size_t nvars) {
    std::vector<std::uint64_t> exps(nvars, 0);
    for (const Factor& f : factors) {
        if (f.var >= nvars)
            throw dimension_error("variable index exceeds nvars");
        exps[f.var] += f.exp;
    }
    std::vector<Exponent> out(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        if (exps[i] > max_exponent())
            throw cap_error("monomial exponent exceeds cap");
        out[i] = static_cast<Exponent>(exps[i]);
    }
    return Monomial(std::move(out));
}

inline std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ',') {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

inline bool blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace detail

inline Monomial parse_monomial(std::string_view text, std::size_t nvars) {
    std::size_t max_var = 0;
    auto factors = detail::lex_monomial(text, max_var);
    return detail::build_monomial(factors, nvars);
}

// Parse a comma-separated generator list.  With no nvars override the ring
// is the smallest one containing every mentioned variable.  "0" (or an empty
// string) is the zero ideal; note that a zero ideal parsed without an
// override lives in the 0-variable ring.
inline MonomialIdeal parse_ideal(std::string_view text,
                                 std::optional<std::size_t> nvars = std::nullopt) {
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "0")
        return MonomialIdeal(nvars.value_or(0));
    auto parts = detail::split_commas(text);
    std::vector<std::vector<detail::Factor>> monos;
    std::size_t max_var = 0;
    for (auto part : parts) {
        if (detail::blank(part))
            throw parse_error("empty generator in ideal");
        monos.push_back(detail::lex_monomial(part, max_var));
    }
    std::size_t n = nvars.value_or(max_var);
    std::vector<Monomial> gens;
    gens.reserve(monos.size());
    for (const auto& f : monos) gens.push_back(detail::build_monomial(f, n));
    return MonomialIdeal(n, std::move(gens));
}

inline std::string to_string(const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (m[i] > 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out.empty() ? "1" : out;
}

inline std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const Monomial& g : I.gens()) {
        if (!out.empty()) out += ", ";
        out += to_string(g);
    }
    return out;
}

inline std::string to_string(const MonomialPrime& p) {
    std::string out = "(";
    for (std::size_t k = 0; k < p.vars().size(); ++k) {
        if (k) out += ",";
        out += 'x';
        out += std::to_string(p.vars()[k] + 1);
    }
    out += ')';
    return out;
}

// Parse a prime from either "x1,x3" / "x1 x3" style variable lists or bare
// 1-based indices "1,3".
inline MonomialPrime parse_prime(std::string_view text, std::size_t nvars) {
    std::vector<std::size_t> vars;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' ||
                text[pos] == '(' || text[pos] == ')'))
            ++pos;
    };
    while (true) {
        skip();
        if (pos >= text.size()) break;
        char c = text[pos];
        std::size_t var;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t idx = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                idx = idx * 10 + (text[pos++] - '0');
            if (idx == 0) throw parse_error("variable indices are 1-based");
            var = static_cast<std::size_t>(idx - 1);
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos;
            if ((c == 'x' || c == 'X') && pos < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::uint64_t idx = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    idx = idx * 10 + (text[pos++] - '0');
                if (idx == 0) throw parse_error("variable indices are 1-based");
                var = static_cast<std::size_t>(idx - 1);
            } else {
                var = static_cast<std::size_t>(std::tolower(static_cast<unsigned char>(c)) - 'a');
            }
        } else {
            throw parse_error(std::string("unexpected character '") + c + "' in prime");
        }
        vars.push_back(var);
    }
    return MonomialPrime(nvars, std::move(vars));
}

} // namespace milo

#endif
