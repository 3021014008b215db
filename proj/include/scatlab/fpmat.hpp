#pragma once

#include <cstdint>
#include <vector>

namespace scatlab {

/// @brief Dense matrix over the prime field F_p, row-major, entries in [0, p).
///
/// This is the workhorse of every kernel/rank computation: weights of linear
/// set points, subgeometry membership, code ranks. Kept deliberately simple;
/// p fits in 32 bits and dimensions stay small (at most a few hundred).
struct FpMat {
    std::uint32_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<std::uint32_t> a;

    FpMat() = default;
    FpMat(std::uint32_t p_, std::size_t r, std::size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static std::uint32_t inv_mod(std::uint32_t x, std::uint32_t p) {
        // extended Euclid; p prime, x != 0
        std::int64_t t = 0, nt = 1, r = p, nr = x % p;
        while (nr != 0) {
            std::int64_t qq = r / nr;
            std::int64_t tmp = t - qq * nt;
            t = nt;
            nt = tmp;
            tmp = r - qq * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<std::uint32_t>(t);
    }

    /// In-place row reduction; returns the rank. Rows end up in (non-reduced)
    /// echelon form unless reduced=true.
    std::size_t echelonize(bool reduced = false) {
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t piv = rank;
            while (piv < rows && at(piv, c) == 0) ++piv;
            if (piv == rows) continue;
            if (piv != rank)
                for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
            std::uint64_t pivinv = inv_mod(at(rank, c), p);
            for (std::size_t j = c; j < cols; ++j)
                at(rank, j) = static_cast<std::uint32_t>(at(rank, j) * pivinv % p);
            std::size_t r0 = reduced ? 0 : rank + 1;
            for (std::size_t r = r0; r < rows; ++r) {
                if (r == rank) continue;
                std::uint64_t f = at(r, c);
                if (f == 0) continue;
                std::uint64_t fneg = p - f;
                for (std::size_t j = c; j < cols; ++j)
                    at(r, j) = static_cast<std::uint32_t>((at(r, j) + fneg * at(rank, j)) % p);
            }
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const {
        FpMat tmp = *this;
        return tmp.echelonize();
    }

    /// Inverse of a square matrix; returns false if singular.
    bool inverse(FpMat& out) const {
        if (rows != cols) return false;
        FpMat aug(p, rows, 2 * cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols + r) = 1;
        }
        if (aug.echelonize(true) != rows) return false;
        out = FpMat(p, rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = aug.at(r, cols + c);
        return true;
    }

    /// Basis of the right null space {x : A x = 0}, one solution per row.
    FpMat nullspace() const {
        FpMat red = *this;
        red.echelonize(true);
        std::vector<std::size_t> pivot_col;
        std::vector<bool> is_pivot(cols, false);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            if (red.at(r, c) != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                ++r;
            }
        }
        std::size_t rk = pivot_col.size();
        FpMat ns(p, cols - rk, cols);
        std::size_t out = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            ns.at(out, c) = 1;
            for (std::size_t i = 0; i < rk; ++i) {
                std::uint32_t v = red.at(i, c);
                if (v) ns.at(out, pivot_col[i]) = p - v;
            }
            ++out;
        }
        return ns;
    }
};

/// Rank of a matrix given as a raw row-major buffer; destroys the buffer.
/// Used in sweep inner loops to avoid per-query allocation.
inline std::size_t fp_rank_destructive(std::uint32_t* m, std::size_t rows, std::size_t cols,
                                       std::uint32_t p) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = c; j < cols; ++j) std::swap(m[piv * cols + j], m[rank * cols + j]);
        std::uint64_t pivinv = FpMat::inv_mod(m[rank * cols + c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t f = m[r * cols + c];
            if (f == 0) continue;
            // r <- r - (f/pivot) * pivot_row
            std::uint64_t scale = (p - f % p) * pivinv % p;
            for (std::size_t j = c; j < cols; ++j)
                m[r * cols + j] = static_cast<std::uint32_t>(
                    (m[r * cols + j] + scale * m[rank * cols + j]) % p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace scatlab
