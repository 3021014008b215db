#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scatlab/error.hpp"
#include "scatlab/field.hpp"
#include "scatlab/linpoly.hpp"
#include "scatlab/parallel.hpp"

namespace scatlab {

/// Default cap on exhaustive field sweeps: fields larger than this require an
/// explicit force flag (the largest intended run is ~5.9e8 elements).
inline constexpr std::uint64_t kSweepBudget = 1ull << 30;

/// @brief The F_q-linear set L_f of rank n on PG(1,q^n) defined by the graph
/// subspace U_f = {(x, f(x))}.
struct LinearSetSpec {
    LinPoly f;
};

/// Map weight w >= 1 -> number of points of that weight; satisfies the mass
/// identity sum_w count_w * (q^w - 1) = q^n - 1.
struct WeightSpectrum {
    std::map<unsigned, std::uint64_t> counts;

    std::uint64_t size() const {
        std::uint64_t s = 0;
        for (auto& [w, c] : counts) s += c;
        return s;
    }

    unsigned max_weight() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

struct ScatteredVerdict {
    bool scattered = false;
    /// Least m (in encoding order) with weight of <(1,m)> at least 2, when
    /// not scattered.
    std::optional<Elem> witness;
    std::uint64_t points_checked = 0;
};

namespace detail {

/// Per-worker scratch state for the m-sweep: row-major F_p matrix of f in
/// column-of-t^j layout, plus a work buffer.
struct SweepScratch {
    std::vector<std::uint32_t> fmat;  // column-major matrix of f (d*d)
    std::vector<std::uint32_t> mmat;  // column-major matrix of y -> m*y
    std::vector<std::uint32_t> work;
    unsigned d = 0;
    std::uint32_t p = 0;

    explicit SweepScratch(const LinPoly& f) {
        const FieldCtx& F = *f.ctx();
        d = F.deg();
        p = static_cast<std::uint32_t>(F.p());
        fmat.assign(static_cast<std::size_t>(d) * d, 0);
        mmat.assign(static_cast<std::size_t>(d) * d, 0);
        work.assign(static_cast<std::size_t>(d) * d, 0);
        std::vector<std::uint32_t> dig(d);
        Elem tpow = 1;
        for (unsigned j = 0; j < d; ++j) {
            F.digits_into(f.eval(tpow), dig.data());
            for (unsigned i = 0; i < d; ++i) fmat[static_cast<std::size_t>(j) * d + i] = dig[i];
            tpow = F.mul(tpow, static_cast<Elem>(F.p()));
        }
    }

    /// dim_{F_q} ker(f - m*x); rank is invariant under transpose, so the
    /// column-major layout is used directly.
    unsigned kernel_dim_fq(const FieldCtx& F, Elem m) {
        F.mul_matrix_cols(m, mmat.data());
        std::size_t sz = static_cast<std::size_t>(d) * d;
        for (std::size_t i = 0; i < sz; ++i) {
            std::uint32_t v = fmat[i] + p - mmat[i];
            work[i] = v >= p ? v - p : v;
        }
        std::size_t rk = fp_rank_destructive(work.data(), d, d, p);
        return static_cast<unsigned>((d - rk) / F.h());
    }
};

}  // namespace detail

inline void check_sweep_budget(const FieldCtx& F, bool force) {
    if (!force && F.order() > kSweepBudget)
        fail(errc::budget_exceeded,
             "field sweep over " + std::to_string(F.order()) +
                 " elements exceeds the default budget; pass force to run anyway");
}

/// Weight of the point <(1,m)> of L_f (pass m; the point <(0,1)> always has
/// weight 0 for graph subspaces).
inline unsigned point_weight(const LinearSetSpec& spec, Elem m) {
    detail::SweepScratch scratch(spec.f);
    return scratch.kernel_dim_fq(*spec.f.ctx(), m);
}

/// Exact weight spectrum of L_f by full m-sweep.
inline WeightSpectrum weight_spectrum(const LinearSetSpec& spec, unsigned threads = 0,
                                      bool force = false) {
    const FieldCtx& F = *spec.f.ctx();
    check_sweep_budget(F, force);
    unsigned t = effective_threads(threads);
    std::vector<std::map<unsigned, std::uint64_t>> partial(t);
    parallel_ranges(0, F.order(), t, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        detail::SweepScratch scratch(spec.f);
        auto& mine = partial[w];
        for (Elem m = lo; m < hi; ++m) {
            unsigned k = scratch.kernel_dim_fq(F, m);
            if (k) ++mine[k];
        }
    });
    WeightSpectrum sp;
    for (auto& part : partial)
        for (auto& [w, c] : part) sp.counts[w] += c;
    return sp;
}

/// Decides scatteredness by the m-sweep, short-circuiting on the first
/// witness of weight >= 2. The witness is the least such m in encoding order
/// regardless of thread count.
inline ScatteredVerdict is_scattered(const LinearSetSpec& spec, unsigned threads = 0,
                                     bool force = false) {
    const FieldCtx& F = *spec.f.ctx();
    check_sweep_budget(F, force);
    unsigned t = effective_threads(threads);
    std::vector<std::optional<Elem>> found(t);
    std::vector<std::uint64_t> checked(t, 0);
    std::atomic<bool> stop{false};
    parallel_ranges(0, F.order(), t, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        detail::SweepScratch scratch(spec.f);
        for (Elem m = lo; m < hi; ++m) {
            if ((m & 0xfff) == 0 && stop.load(std::memory_order_relaxed)) break;
            ++checked[w];
            if (scratch.kernel_dim_fq(F, m) >= 2) {
                found[w] = m;
                stop.store(true, std::memory_order_relaxed);
                break;
            }
        }
    });
    ScatteredVerdict v;
    for (unsigned w = 0; w < t; ++w) {
        v.points_checked += checked[w];
        if (found[w] && (!v.witness || *found[w] < *v.witness)) v.witness = found[w];
    }
    v.scattered = !v.witness.has_value();
    return v;
}

/// Largest l | n such that U_f is closed under multiplication by F_{q^l},
/// i.e. L_f is an F_{q^l}-linear set. Decided exactly by the coefficient
/// condition a_i != 0 => lambda^{q^i} = lambda for all lambda in F_{q^l},
/// which holds iff l | gcd(i, n).
inline unsigned max_field_of_linearity(const LinearSetSpec& spec) {
    return spec.f.support_gcd();
}

/// One entry of the known catalog of maximum scattered subspaces of
/// F_{q^6}^2 (families 1-4, with their parameter validity conditions).
struct CatalogEntry {
    std::string name;  // "U1", "U2", "U3", "U4"
    bool has_delta = false;
    LinPoly f;  // for parametrized families, f at a given delta
};

/// Validity predicate for family index 1..4 at the given delta.
inline bool catalog_delta_valid(const Ctx& ctx, unsigned family, Elem delta) {
    const FieldCtx& F = *ctx;
    switch (family) {
        case 1:
            return true;
        case 2: {  // N_{q^6/q}(delta) not in {0,1}
            Elem nv = F.norm(delta);
            return nv != 0 && nv != 1;
        }
        case 3: {  // N_{q^6/q^3}(delta) not in {0,1}
            Elem nv = F.norm_to(delta, 3);
            return nv != 0 && nv != 1;
        }
        case 4:  // q odd, delta^2 + delta = 1
            return F.p() != 2 && F.add(F.mul(delta, delta), delta) == 1;
        default:
            return false;
    }
}

/// The defining q-polynomial of catalog family 1..4 at delta (family 1
/// ignores delta).
inline LinPoly catalog_polynomial(const Ctx& ctx, unsigned family, Elem delta = 0) {
    if (ctx->n() != 6) fail(errc::invalid_parameter, "catalog is defined for n=6 only");
    if (family < 1 || family > 4) fail(errc::invalid_parameter, "catalog family must be 1..4");
    if (!catalog_delta_valid(ctx, family, delta))
        fail(errc::invalid_parameter, "delta violates the validity condition of family " +
                                          std::to_string(family));
    std::vector<Elem> c(6, 0);
    switch (family) {
        case 1: c[1] = 1; break;                       // x^q
        case 2: c[1] = delta; c[5] = 1; break;         // delta x^q + x^{q^5}
        case 3: c[1] = delta; c[4] = 1; break;         // delta x^q + x^{q^4}
        case 4: c[1] = 1; c[3] = 1; c[5] = delta; break;  // x^q + x^{q^3} + delta x^{q^5}
    }
    return LinPoly(ctx, std::move(c));
}

/// All four known families instantiated at the given deltas (delta ignored
/// for family 1); throws InvalidParameter on a bad delta.
inline std::vector<CatalogEntry> known_catalog(const Ctx& ctx, Elem d2, Elem d3, Elem d4) {
    std::vector<CatalogEntry> out;
    out.push_back({"U1", false, catalog_polynomial(ctx, 1)});
    out.push_back({"U2", true, catalog_polynomial(ctx, 2, d2)});
    out.push_back({"U3", true, catalog_polynomial(ctx, 3, d3)});
    out.push_back({"U4", true, catalog_polynomial(ctx, 4, d4)});
    return out;
}

/// The polynomial x^q - x^{q^2} + x^{q^4} + x^{q^5} whose linear set is the
/// central object of study (n must be 6).
inline LinPoly central_polynomial(const Ctx& ctx) {
    if (ctx->n() != 6) fail(errc::invalid_parameter, "defined for n=6 only");
    std::vector<Elem> c(6, 0);
    c[1] = 1;
    c[2] = ctx->neg(1);
    c[4] = 1;
    c[5] = 1;
    return LinPoly(ctx, std::move(c));
}

}  // namespace scatlab
