#pragma once

#include <cstdint>
#include <vector>

#include "scatlab/field.hpp"
#include "scatlab/linpoly.hpp"

namespace scatlab {

/// @brief Dense matrix over F_{q^n}, row-major. Used for subspace bases and
/// dual equation systems in the projective geometry layer.
struct FqnMat {
    Ctx ctx;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> a;

    FqnMat() = default;
    FqnMat(Ctx c, std::size_t r, std::size_t cc)
        : ctx(std::move(c)), rows(r), cols(cc), a(r * cc, 0) {}

    Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Elem at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    /// In-place reduction to reduced row echelon form; drops zero rows;
    /// returns the rank.
    std::size_t rref() {
        const FieldCtx& F = *ctx;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t piv = rank;
            while (piv < rows && at(piv, c) == 0) ++piv;
            if (piv == rows) continue;
            if (piv != rank)
                for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
            Elem inv = F.inv(at(rank, c));
            for (std::size_t j = c; j < cols; ++j) at(rank, j) = F.mul(at(rank, j), inv);
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rank) continue;
                Elem f = at(r, c);
                if (!f) continue;
                for (std::size_t j = c; j < cols; ++j)
                    at(r, j) = F.sub(at(r, j), F.mul(f, at(rank, j)));
            }
            ++rank;
        }
        rows = rank;
        a.resize(rows * cols);
        return rank;
    }

    std::size_t rank() const {
        FqnMat t = *this;
        return t.rref();
    }

    /// Basis of {x : A x = 0}, one solution per row of the result.
    FqnMat nullspace() const {
        FqnMat red = *this;
        red.rref();
        std::vector<std::size_t> pivot_col;
        std::vector<bool> is_pivot(cols, false);
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols && r < red.rows; ++c) {
            if (red.at(r, c) != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                ++r;
            }
        }
        const FieldCtx& F = *ctx;
        std::size_t rk = pivot_col.size();
        FqnMat ns(ctx, cols - rk, cols);
        std::size_t out = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (is_pivot[c]) continue;
            ns.at(out, c) = 1;
            for (std::size_t i = 0; i < rk; ++i) {
                Elem v = red.at(i, c);
                if (v) ns.at(out, pivot_col[i]) = F.neg(v);
            }
            ++out;
        }
        return ns;
    }

    /// Stack another matrix with the same column count below this one.
    FqnMat vstack(const FqnMat& o) const {
        FqnMat r(ctx, rows + o.rows, cols);
        std::copy(a.begin(), a.end(), r.a.begin());
        std::copy(o.a.begin(), o.a.end(), r.a.begin() + static_cast<std::ptrdiff_t>(a.size()));
        return r;
    }

    bool operator==(const FqnMat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline FqnMat mat_from_rows(const Ctx& ctx, const std::vector<std::vector<Elem>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    FqnMat m(ctx, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace scatlab
