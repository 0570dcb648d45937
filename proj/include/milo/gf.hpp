#ifndef MILO_GF_HPP
#define MILO_GF_HPP

#include <cstdint>
#include <vector>

#include "milo/errors.hpp"

namespace milo {

inline bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Arithmetic in GF(p) for word-sized primes.  All homology ranks are taken
// over such a field; 32003 is the conventional default, with 2 used as a
// cross-check characteristic.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p))
            throw domain_error("field characteristic must be prime");
    }

    std::uint32_t characteristic() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p_);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t inv(std::uint32_t a) const {
        // extended Euclid; a != 0 mod p
        std::int64_t t = 0, new_t = 1, r = p_, new_r = a % p_;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t; new_t = tmp;
            tmp = r - q * new_r;
            r = new_r; new_r = tmp;
        }
        if (r != 1)
            throw domain_error("inverse of zero in GF(p)");
        return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
    }

private:
    std::uint32_t p_;
};

// Row-major dense matrix rank by Gaussian elimination.  Destroys its input.
inline std::size_t matrix_rank(std::vector<std::uint32_t>& m, std::size_t rows,
                               std::size_t cols, const PrimeField& F) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(m[pivot * cols + j], m[rank * cols + j]);
        std::uint32_t inv = F.inv(m[rank * cols + col]);
        for (std::size_t j = col; j < cols; ++j)
            m[rank * cols + j] = F.mul(m[rank * cols + j], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::uint32_t f = m[r * cols + col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j)
                m[r * cols + j] = F.sub(m[r * cols + j], F.mul(f, m[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

} // namespace milo

#endif
