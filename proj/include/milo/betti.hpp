#ifndef MILO_BETTI_HPP
#define MILO_BETTI_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "milo/gf.hpp"
#include "milo/ideal.hpp"

namespace milo {

// Multigraded Betti numbers of an ideal, keyed by (homological index,
// multidegree).  Only nonzero entries are stored.  Entries always refer to a
// minimal free resolution of I itself (so beta_{0,a} = 1 exactly at the
// multidegrees of minimal generators).
struct BettiTable {
    std::size_t nvars = 0;
    std::uint32_t field_char = 0;
    std::map<std::pair<std::uint32_t, std::vector<Exponent>>, std::uint64_t> entries;

    std::uint64_t at(std::uint32_t i, const std::vector<Exponent>& a) const {
        auto it = entries.find({i, a});
        return it == entries.end() ? 0 : it->second;
    }

    std::uint32_t max_index() const {
        std::uint32_t m = 0;
        for (const auto& [k, v] : entries) m = std::max(m, k.first);
        return m;
    }

    // reg(I) = max |a| - i over nonzero beta_{i,a}
    std::uint64_t regularity() const {
        std::uint64_t r = 0;
        for (const auto& [k, v] : entries) {
            std::uint64_t total = 0;
            for (Exponent e : k.second) total += e;
            r = std::max(r, total - k.first);
        }
        return r;
    }

    // Coarsely graded table: (i, total degree) -> summed rank.
    std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> coarse() const {
        std::map<std::pair<std::uint32_t, std::uint64_t>, std::uint64_t> out;
        for (const auto& [k, v] : entries) {
            std::uint64_t total = 0;
            for (Exponent e : k.second) total += e;
            out[{k.first, total}] += v;
        }
        return out;
    }
};

namespace detail {

// Homology workspace for one multidegree.  beta_{i,a}(I) is the i-th reduced
// simplicial homology (shifted by one) of the "upper Koszul" complex
//
//   K^a = { S subset supp(a) : x^(a - e_S) in I },
//
// computed over GF(p).  Equivalently the strand of the Koszul complex of
// x_1..x_n in multidegree a.  We enumerate K^a through bitmasks over the
// support positions of a.
struct KoszulScratch {
    std::vector<std::size_t> supp;          // positions of a with a_i > 0
    std::vector<std::uint32_t> masks;       // free-variable masks per dividing generator
    std::vector<char> member;               // 2^m membership table for K^a
    std::vector<std::uint32_t> faces[2];    // face lists for adjacent dimensions
    std::vector<int> pos;                   // mask -> index in its face list
    std::vector<std::uint32_t> matrix;
};

// Collect beta_{*,a} for one multidegree into out; returns false if the
// complex was detected contractible without building anything.
inline void betti_at(const MonomialIdeal& I, const std::vector<Exponent>& a,
                     const PrimeField& F, KoszulScratch& w,
                     std::map<std::pair<std::uint32_t, std::vector<Exponent>>,
                              std::uint64_t>& out) {
    const std::size_t n = I.nvars();
    w.supp.clear();
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] > 0) w.supp.push_back(i);
    const std::size_t m = w.supp.size();
    if (m > 24)
        throw cap_error("multidegree support too large for Koszul homology");

    // Masks of variables each dividing generator leaves free: g gives the
    // face { j : g[supp_j] < a[supp_j] } and all its subsets.
    const std::uint32_t full = (1u << m) - 1;
    w.masks.clear();
    std::uint32_t common = full;
    for (const Monomial& g : I.gens()) {
        bool div = true;
        for (std::size_t i = 0; i < n && div; ++i) div = g[i] <= a[i];
        if (!div) continue;
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (g[w.supp[j]] < a[w.supp[j]]) mask |= (1u << j);
        if (mask == full) return;   // K^a is the full simplex: contractible
        common &= mask;
        w.masks.push_back(mask);
    }
    if (w.masks.empty()) return;    // x^a not in I
    if (m > 0 && common != 0) return;  // common free variable: K^a is a cone

    // Downward-closed membership table seeded from the maximal faces.
    const std::size_t size = std::size_t(1) << m;
    w.member.assign(size, 0);
    for (std::uint32_t mask : w.masks) w.member[mask] = 1;
    for (std::size_t j = 0; j < m; ++j) {
        const std::uint32_t bit = 1u << j;
        for (std::size_t S = 0; S < size; ++S)
            if (!(S & bit) && !w.member[S] && w.member[S | bit]) w.member[S] = 1;
    }

    w.pos.assign(size, -1);

    // Walk dimensions low to high, keeping the previous dimension's face
    // list to index differential targets.  beta_i needs rank d_i and rank
    // d_{i+1}, so buffer ranks one step.
    std::vector<std::uint64_t> dims(m + 1, 0);
    std::vector<std::size_t> ranks(m + 2, 0);
    auto& faces_prev = w.faces[0];
    auto& faces_cur = w.faces[1];
    faces_prev.clear();
    faces_cur.clear();

    // dimension 0 in homological indexing: the empty face, always a member
    faces_prev = {0};
    w.pos[0] = 0;
    dims[0] = 1;

    for (std::size_t i = 1; i <= m; ++i) {
        faces_cur.clear();
        for (std::size_t S = 0; S < size; ++S)
            if (w.member[S] && std::size_t(std::popcount(static_cast<std::uint32_t>(S))) == i)
                faces_cur.push_back(static_cast<std::uint32_t>(S));
        dims[i] = faces_cur.size();
        // matrix of d_i : C_i -> C_{i-1}
        const std::size_t rows = faces_prev.size(), cols = faces_cur.size();
        if (rows == 0 || cols == 0) {
            ranks[i] = 0;
        } else {
            w.matrix.assign(rows * cols, 0);
            for (std::size_t c = 0; c < cols; ++c) {
                std::uint32_t S = faces_cur[c];
                std::uint32_t sign = 1;   // (-1)^k as 1 or p-1
                for (std::size_t j = 0; j < m; ++j) {
                    if (!(S & (1u << j))) continue;
                    int r = w.pos[S ^ (1u << j)];
                    w.matrix[std::size_t(r) * cols + c] =
                        sign ? 1 : F.characteristic() - 1;
                    sign ^= 1;
                }
            }
            ranks[i] = matrix_rank(w.matrix, rows, cols, F);
        }
        // publish current faces as "previous" for the next dimension
        for (std::uint32_t S : faces_prev) w.pos[S] = -1;
        for (std::size_t c = 0; c < faces_cur.size(); ++c) w.pos[faces_cur[c]] = static_cast<int>(c);
        std::swap(faces_prev, faces_cur);
    }
    for (std::uint32_t S : faces_prev) w.pos[S] = -1;

    for (std::size_t i = 0; i <= m; ++i) {
        std::uint64_t beta = dims[i] - ranks[i] - ranks[i + 1];
        if (beta > 0)
            out[{static_cast<std::uint32_t>(i), a}] = beta;
    }
}

} // namespace detail

// Full multigraded Betti table over GF(p).  Scans every multidegree
// componentwise below the lcm of the generators; everything outside that box
// vanishes.
inline BettiTable betti(const MonomialIdeal& I, std::uint32_t p = 32003) {
    if (I.is_zero())
        throw domain_error("Betti numbers of the zero ideal");
    if (I.is_unit())
        throw domain_error("Betti numbers of the unit ideal");
    PrimeField F(p);
    BettiTable table;
    table.nvars = I.nvars();
    table.field_char = p;

    const std::size_t n = I.nvars();
    std::vector<Exponent> top(n, 0);
    for (const Monomial& g : I.gens())
        for (std::size_t i = 0; i < n; ++i) top[i] = std::max(top[i], g[i]);

    // guard the box volume before odometer-walking it
    double volume = 1;
    for (std::size_t i = 0; i < n; ++i) volume *= double(top[i]) + 1;
    if (volume > double(1u << 27))
        throw cap_error("multidegree box too large for Betti scan");

    detail::KoszulScratch scratch;
    std::vector<Exponent> a(n, 0);
    for (;;) {
        detail::betti_at(I, a, F, scratch, table.entries);
        std::size_t i = 0;
        while (i < n && a[i] == top[i]) a[i++] = 0;
        if (i == n) break;
        ++a[i];
    }
    return table;
}

inline std::uint64_t regularity(const MonomialIdeal& I, std::uint32_t p = 32003) {
    return betti(I, p).regularity();
}

// Linear resolution test: all generators in one degree d and reg(I) = d.
// The unit ideal and principal ideals resolve in length zero and count as
// linear by convention.
inline bool has_linear_resolution(const MonomialIdeal& I, std::uint32_t p = 32003) {
    if (I.is_zero())
        throw domain_error("resolution of the zero ideal");
    if (I.is_unit() || I.is_principal()) return true;
    Descriptors d = descriptors(I);
    if (!d.equigenerated) return false;
    return regularity(I, p) == *d.equigenerated;
}

} // namespace milo

#endif
