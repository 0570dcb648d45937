#ifndef MILO_TAYLOR_HPP
#define MILO_TAYLOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "milo/betti.hpp"
#include "milo/gf.hpp"
#include "milo/ideal.hpp"

namespace milo {

// Betti numbers read off the (generally non-minimal) Taylor complex: its
// strand in multidegree a has basis the generator subsets T with
// lcm(T) = x^a, and the differential keeps exactly the face maps that do
// not drop the lcm.  This is a completely different construction from the
// Koszul-strand computation in betti(), which makes it a useful oracle; the
// 2^|G| subsets limit it to small generator counts.
inline BettiTable taylor_betti(const MonomialIdeal& I, std::uint32_t p = 32003) {
    if (I.is_zero())
        throw domain_error("Betti numbers of the zero ideal");
    if (I.is_unit())
        throw domain_error("Betti numbers of the unit ideal");
    if (I.num_gens() > 8)
        throw domain_error("too many generators for the Taylor-complex oracle");
    PrimeField F(p);

    const std::size_t m = I.num_gens();
    const std::size_t n = I.nvars();
    const std::size_t size = std::size_t(1) << m;

    std::vector<std::vector<Exponent>> lcms(size, std::vector<Exponent>(n, 0));
    for (std::size_t T = 1; T < size; ++T) {
        const std::size_t low = std::size_t(T & (~T + 1));
        const std::size_t j = std::size_t(std::countr_zero(static_cast<std::uint64_t>(low)));
        const std::vector<Exponent>& rest = lcms[T ^ low];
        const Monomial& g = I.gens()[j];
        for (std::size_t i = 0; i < n; ++i)
            lcms[T][i] = std::max(rest[i], g[i]);
    }

    // bucket subsets by multidegree
    std::map<std::vector<Exponent>, std::vector<std::size_t>> strands;
    for (std::size_t T = 1; T < size; ++T) strands[lcms[T]].push_back(T);

    BettiTable table;
    table.nvars = n;
    table.field_char = p;

    std::vector<int> pos(size, -1);
    for (const auto& [a, subsets] : strands) {
        // split the strand by cardinality: C_k = { T : |T| = k, lcm T = a }
        std::vector<std::vector<std::size_t>> C(m + 1);
        for (std::size_t T : subsets) C[std::size_t(std::popcount(std::uint64_t(T)))].push_back(T);

        std::vector<std::size_t> ranks(m + 2, 0);
        for (std::size_t k = 2; k <= m; ++k) {
            if (C[k].empty() || C[k - 1].empty()) { ranks[k] = 0; continue; }
            for (std::size_t c = 0; c < C[k - 1].size(); ++c) pos[C[k - 1][c]] = static_cast<int>(c);
            const std::size_t rows = C[k - 1].size(), cols = C[k].size();
            std::vector<std::uint32_t> mat(rows * cols, 0);
            for (std::size_t c = 0; c < cols; ++c) {
                const std::size_t T = C[k][c];
                std::uint32_t sign = 1;
                for (std::size_t j = 0; j < m; ++j) {
                    if (!(T & (std::size_t(1) << j))) continue;
                    const std::size_t Tm = T ^ (std::size_t(1) << j);
                    // face survives in the strand only if the lcm is unchanged
                    if (lcms[Tm] == a) {
                        int r = pos[Tm];
                        mat[std::size_t(r) * cols + c] = sign ? 1 : F.characteristic() - 1;
                    }
                    sign ^= 1;
                }
            }
            ranks[k] = matrix_rank(mat, rows, cols, F);
            for (std::size_t T : C[k - 1]) pos[T] = -1;
        }

        // beta_{i,a}(I) is the homology at chain degree i+1 of the strand
        for (std::size_t k = 1; k <= m; ++k) {
            std::uint64_t h = C[k].size() - ranks[k] - ranks[k + 1];
            if (h > 0)
                table.entries[{static_cast<std::uint32_t>(k - 1), a}] = h;
        }
    }
    return table;
}

} // namespace milo

#endif
