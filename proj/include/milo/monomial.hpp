#ifndef MILO_MONOMIAL_HPP
#define MILO_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <vector>

#include "milo/errors.hpp"

namespace milo {

using Exponent = std::uint32_t;

// Exponents are bounded machine naturals; products/powers check against this
// cap instead of wrapping.  2^16 is far beyond desk scale but keeps repeated
// squaring of accidental inputs from overflowing silently.
inline Exponent& max_exponent() {
    static Exponent cap = 1u << 16;
    return cap;
}

inline void set_max_exponent(Exponent cap) { max_exponent() = cap; }

// A monomial in a fixed ambient ring K[x_1..x_n], stored as its exponent
// vector.  Variables are indexed 0-based internally; all I/O layers present
// them 1-based (x1, x2, ...).
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
        for (Exponent e : exps_)
            if (e > max_exponent())
                throw cap_error("monomial exponent exceeds cap");
    }

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }

    static Monomial variable(std::size_t nvars, std::size_t var, Exponent e = 1) {
        if (var >= nvars)
            throw dimension_error("variable index out of range");
        Monomial m(nvars);
        m.exps_[var] = e;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    Exponent operator[](std::size_t var) const { return exps_[var]; }
    const std::vector<Exponent>& exponents() const { return exps_; }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (Exponent e : exps_) d += e;
        return d;
    }

    bool is_one() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
    }

    // Exactly one variable occurs (x_i^e with e >= 1).
    bool is_pure_power() const { return support_size() == 1; }

    std::size_t support_size() const {
        std::size_t k = 0;
        for (Exponent e : exps_) k += (e > 0);
        return k;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) s.push_back(i);
        return s;
    }

    bool divides(const Monomial& other) const {
        check_same_ring(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    // The monomial colon u : m = u / gcd(u, m).
    Monomial colon(const Monomial& m) const {
        check_same_ring(m);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            r.exps_[i] -= std::min(exps_[i], m.exps_[i]);
        return r;
    }

    // Copy with the exponent of one variable replaced (used by localization
    // and saturation to zero out variables).
    Monomial with_exponent(std::size_t var, Exponent e) const {
        if (var >= nvars())
            throw dimension_error("variable index out of range");
        Monomial r(*this);
        r.exps_[var] = e;
        return r;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        a.check_same_ring(b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.exps_.size(); ++i) {
            std::uint64_t e = std::uint64_t(a.exps_[i]) + b.exps_[i];
            if (e > max_exponent())
                throw cap_error("monomial exponent exceeds cap in product");
            r.exps_[i] = static_cast<Exponent>(e);
        }
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same_ring(b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_same_ring(b);
        Monomial r(a.nvars());
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Plain lexicographic order on exponent vectors; the canonical generator
    // order is *descending* lex.
    static bool lex_less(const Monomial& a, const Monomial& b) {
        return std::lexicographical_compare(a.exps_.begin(), a.exps_.end(),
                                            b.exps_.begin(), b.exps_.end());
    }

private:
    void check_same_ring(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw dimension_error("monomials live in different rings");
    }

    std::vector<Exponent> exps_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        // FNV-1a over the exponent words
        std::uint64_t h = 1469598103934665603ull;
        for (Exponent e : m.exponents()) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace milo

#endif
