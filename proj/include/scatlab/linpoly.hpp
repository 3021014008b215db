#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <vector>

#include "scatlab/error.hpp"
#include "scatlab/field.hpp"
#include "scatlab/fpmat.hpp"

namespace scatlab {

using Ctx = std::shared_ptr<const FieldCtx>;

/// @brief A linearized q-polynomial f(x) = sum_i a_i x^{q^i}, i = 0..n-1,
/// i.e. an F_q-linear endomorphism of F_{q^n} in reduced form.
///
/// Coefficients are stored eagerly reduced, so equality of coefficient
/// vectors is equality of the induced maps.
class LinPoly {
   public:
    LinPoly() = default;
    LinPoly(Ctx ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        if (c_.size() != ctx_->n())
            fail(errc::degree_mismatch, "q-polynomial needs exactly n coefficients");
        for (Elem a : c_)
            if (!ctx_->valid(a)) fail(errc::invalid_parameter, "coefficient out of range");
    }

    /// The zero map.
    static LinPoly zero(const Ctx& ctx) { return LinPoly(ctx, std::vector<Elem>(ctx->n(), 0)); }

    /// a * x^{q^i}.
    static LinPoly monomial(const Ctx& ctx, unsigned i, Elem a = 1) {
        std::vector<Elem> c(ctx->n(), 0);
        c[i % ctx->n()] = a;
        return LinPoly(ctx, std::move(c));
    }

    /// The identity map x.
    static LinPoly identity(const Ctx& ctx) { return monomial(ctx, 0, 1); }

    const Ctx& ctx() const { return ctx_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(unsigned i) const { return c_[i]; }
    unsigned n() const { return static_cast<unsigned>(c_.size()); }

    bool operator==(const LinPoly& o) const { return c_ == o.c_; }
    bool operator!=(const LinPoly& o) const { return c_ != o.c_; }

    bool is_zero() const {
        for (Elem a : c_)
            if (a) return false;
        return true;
    }

    Elem eval(Elem x) const {
        const FieldCtx& F = *ctx_;
        Elem acc = 0;
        Elem xq = x;
        for (unsigned i = 0; i < n(); ++i) {
            if (c_[i]) acc = F.add(acc, F.mul(c_[i], xq));
            if (i + 1 < n()) xq = F.frobenius(xq, 1);
        }
        return acc;
    }

    LinPoly add(const LinPoly& g) const {
        std::vector<Elem> c(n());
        for (unsigned i = 0; i < n(); ++i) c[i] = ctx_->add(c_[i], g.c_[i]);
        return LinPoly(ctx_, std::move(c));
    }

    LinPoly sub(const LinPoly& g) const {
        std::vector<Elem> c(n());
        for (unsigned i = 0; i < n(); ++i) c[i] = ctx_->sub(c_[i], g.c_[i]);
        return LinPoly(ctx_, std::move(c));
    }

    /// Left scalar multiple lambda * f (compose with y -> lambda*y on the left).
    LinPoly scale(Elem lambda) const {
        std::vector<Elem> c(n());
        for (unsigned i = 0; i < n(); ++i) c[i] = ctx_->mul(lambda, c_[i]);
        return LinPoly(ctx_, std::move(c));
    }

    /// f o g reduced mod x^{q^n} - x: coefficient of x^{q^k} is
    /// sum_{i+j == k mod n} f_i * g_j^{q^i}.
    LinPoly compose(const LinPoly& g) const {
        const FieldCtx& F = *ctx_;
        unsigned nn = n();
        std::vector<Elem> c(nn, 0);
        for (unsigned i = 0; i < nn; ++i) {
            if (!c_[i]) continue;
            for (unsigned j = 0; j < nn; ++j) {
                if (!g.c_[j]) continue;
                unsigned k = (i + j) % nn;
                c[k] = F.add(c[k], F.mul(c_[i], F.frobenius(g.c_[j], i)));
            }
        }
        return LinPoly(ctx_, std::move(c));
    }

    /// The adjoint w.r.t. the trace form: Tr(x f(y)) = Tr(y fhat(x)).
    LinPoly adjoint() const {
        const FieldCtx& F = *ctx_;
        unsigned nn = n();
        std::vector<Elem> c(nn, 0);
        for (unsigned i = 0; i < nn; ++i) {
            unsigned k = (nn - i) % nn;
            c[k] = F.frobenius(c_[i], k);
        }
        return LinPoly(ctx_, std::move(c));
    }

    /// The q-polynomial equal to f(x)^{q^s}: coefficient a_i^{q^s} moves to
    /// exponent index i+s (mod n).
    LinPoly twist(int s) const {
        const FieldCtx& F = *ctx_;
        unsigned nn = n();
        int sm = ((s % static_cast<int>(nn)) + static_cast<int>(nn)) % static_cast<int>(nn);
        std::vector<Elem> c(nn, 0);
        for (unsigned i = 0; i < nn; ++i)
            c[(i + static_cast<unsigned>(sm)) % nn] = F.frobenius(c_[i], sm);
        return LinPoly(ctx_, std::move(c));
    }

    /// Matrix of x -> f(x) over F_p in the power basis (hn x hn), columns are
    /// images of t^j.
    FpMat fp_matrix() const {
        const FieldCtx& F = *ctx_;
        unsigned d = F.deg();
        FpMat M(static_cast<std::uint32_t>(F.p()), d, d);
        std::vector<std::uint32_t> dig(d);
        Elem tpow = 1;
        for (unsigned j = 0; j < d; ++j) {
            Elem img = eval(tpow);
            F.digits_into(img, dig.data());
            for (unsigned i = 0; i < d; ++i) M.at(i, j) = dig[i];
            tpow = F.mul(tpow, static_cast<Elem>(F.p()));
        }
        return M;
    }

    /// Matrix of x -> f(x) over F_q in the pinned F_q-basis of the context
    /// (n x n, entries are F_q elements encoded as Elem).
    std::vector<std::vector<Elem>> matrix_over_fq() const {
        const FieldCtx& F = *ctx_;
        unsigned nn = n();
        std::vector<std::vector<Elem>> M(nn, std::vector<Elem>(nn, 0));
        const auto& basis = F.fq_basis();
        for (unsigned j = 0; j < nn; ++j) {
            auto col = F.fq_coords(eval(basis[j]));
            for (unsigned i = 0; i < nn; ++i) M[i][j] = col[i];
        }
        return M;
    }

    /// dim_{F_q} ker f. Computed by F_p Gaussian elimination:
    /// dim_{F_q} = (hn - rank_{F_p}) / h.
    unsigned kernel_dim() const {
        const FieldCtx& F = *ctx_;
        FpMat M = fp_matrix();
        std::size_t rk = M.echelonize();
        return static_cast<unsigned>((F.deg() - rk) / F.h());
    }

    /// Roots of f as an F_q-subspace would have q^kernel_dim elements; f is
    /// invertible iff kernel_dim()==0.
    bool invertible() const { return kernel_dim() == 0; }

    /// Largest l | n with all coefficient indices i with a_i != 0 divisible
    /// by l; f is then F_{q^l}-semilinear on each graph component.
    unsigned support_gcd() const {
        unsigned g = n();
        for (unsigned i = 0; i < n(); ++i)
            if (c_[i]) g = std::gcd(g, i == 0 ? n() : i);
        return g;
    }

   private:
    Ctx ctx_;
    std::vector<Elem> c_;
};

}  // namespace scatlab
