#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "scatlab/error.hpp"
#include "scatlab/fpmat.hpp"

namespace scatlab {

/// Elements of F_{p^{hn}} travel as integer encodings: the base-p digits of
/// the encoding are the power-basis coordinates w.r.t. the modulus.
using Elem = std::uint64_t;

namespace detail {

inline bool is_prime_u64(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// ---- dense polynomials over F_p, little-endian coefficient vectors ----

using Poly = std::vector<std::uint32_t>;

inline void ptrim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly pmul(const Poly& f, const Poly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        std::uint64_t fi = f[i];
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + fi * g[j]) % p);
    }
    return r;
}

// remainder of f modulo monic m
inline Poly pmod(Poly f, const Poly& m, std::uint32_t p) {
    std::size_t d = m.size() - 1;
    ptrim(f);
    while (f.size() > d) {
        std::uint64_t lead = f.back();
        std::size_t shift = f.size() - 1 - d;
        if (lead != 0) {
            for (std::size_t i = 0; i < d; ++i)
                f[shift + i] = static_cast<std::uint32_t>(
                    (f[shift + i] + (p - static_cast<std::uint32_t>(lead * m[i] % p))) % p);
        }
        f.pop_back();
        ptrim(f);
    }
    return f;
}

inline Poly pmulmod(const Poly& f, const Poly& g, const Poly& m, std::uint32_t p) {
    return pmod(pmul(f, g, p), m, p);
}

inline Poly ppowmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline Poly pgcd(Poly a, Poly b, std::uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic, then a mod b
        std::uint32_t inv = FpMat::inv_mod(b.back(), p);
        for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin irreducibility test for a monic polynomial of degree d over F_p.
inline bool is_irreducible(const Poly& m, std::uint32_t p) {
    std::size_t d = m.size() - 1;
    if (d == 0) return false;
    Poly x{0, 1};
    // u_k = x^(p^k) mod m, built by iterated p-th powers
    auto p_power_of = [&](const Poly& f) { return ppowmod(f, p, m, p); };
    std::vector<Poly> frob_chain(d + 1);
    frob_chain[0] = pmod(x, m, p);
    for (std::size_t k = 1; k <= d; ++k) frob_chain[k] = p_power_of(frob_chain[k - 1]);
    // x^(p^d) == x mod m
    Poly diff = frob_chain[d];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
    ptrim(diff);
    if (!diff.empty()) return false;
    for (std::uint64_t r : prime_factors(d)) {
        Poly g = frob_chain[d / r];
        g.resize(std::max<std::size_t>(g.size(), 2), 0);
        g[1] = static_cast<std::uint32_t>((g[1] + p - 1) % p);
        Poly gc = pgcd(m, g, p);
        if (!(gc.size() == 1)) return false;
    }
    return true;
}

/// Incrementally maintained row echelon form over F_p, for greedy basis building.
class IncEchelon {
   public:
    IncEchelon(std::uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

    bool contains(std::vector<std::uint32_t> v) const {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
    }

    // returns false if v was already in the span
    bool add(std::vector<std::uint32_t> v) {
        reduce(v);
        std::size_t lead = 0;
        while (lead < cols_ && v[lead] == 0) ++lead;
        if (lead == cols_) return false;
        std::uint32_t inv = FpMat::inv_mod(v[lead], p_);
        for (auto& x : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p_);
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

   private:
    void reduce(std::vector<std::uint32_t>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint64_t f = v[leads_[i]];
            if (f == 0) continue;
            std::uint64_t fneg = p_ - f;
            for (std::size_t j = leads_[i]; j < cols_; ++j)
                v[j] = static_cast<std::uint32_t>((v[j] + fneg * rows_[i][j]) % p_);
        }
    }

    std::uint32_t p_;
    std::size_t cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> leads_;
};

}  // namespace detail

/// @brief The pair (F_q, F_{q^n}) with q = p^h, realized as the single extension
/// F_p[t]/(m(t)) of degree h*n.
///
/// F_q is the fixed field of x -> x^q. Contexts are immutable after
/// construction and safe to share across threads; all operations are pure.
///
/// When the field order is at most `table_threshold`, discrete log/exp tables
/// are built and multiplication, inversion and Frobenius powers become table
/// lookups; above it, polynomial-basis arithmetic is used.
class FieldCtx {
   public:
    static std::shared_ptr<const FieldCtx> make(std::uint64_t p, unsigned h, unsigned n,
                                                const std::vector<std::uint32_t>& modulus = {},
                                                std::uint64_t table_threshold = 1ull << 24) {
        return std::shared_ptr<const FieldCtx>(new FieldCtx(p, h, n, modulus, table_threshold));
    }

    std::uint64_t p() const { return p_; }
    unsigned h() const { return h_; }
    unsigned n() const { return n_; }
    unsigned deg() const { return deg_; }     ///< h*n, the F_p-degree
    std::uint64_t q() const { return q_; }    ///< p^h
    std::uint64_t order() const { return order_; }  ///< q^n = p^(hn)
    bool has_tables() const { return tables_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    bool valid(Elem x) const { return x < order_; }

    // ---- basic arithmetic ----

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        Elem r = 0, mul = 1;
        while (a || b) {
            std::uint64_t d = (a % p_ + b % p_) % p_;
            r += d * mul;
            mul *= p_;
            a /= p_;
            b /= p_;
        }
        return r;
    }

    Elem neg(Elem a) const {
        if (p_ == 2) return a;
        Elem r = 0, mul = 1;
        while (a) {
            std::uint64_t d = a % p_;
            if (d) r += (p_ - d) * mul;
            mul *= p_;
            a /= p_;
        }
        return r;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (tables_) return exp_[static_cast<std::uint64_t>(log_[a]) + log_[b]];
        detail::Poly f = to_poly(a), g = to_poly(b);
        return from_poly(detail::pmulmod(f, g, modulus_, static_cast<std::uint32_t>(p_)));
    }

    Elem inv(Elem a) const {
        if (a == 0) fail(errc::invalid_parameter, "inverse of zero");
        if (tables_) return exp_[mult_order_ - log_[a]];
        return pow(a, order_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (tables_) {
            std::uint64_t le = detail::mulmod_u64(log_[a], e % mult_order_, mult_order_);
            return exp_[le];
        }
        Elem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // ---- Frobenius, norm, trace ----

    /// x -> x^(p^j), the j-th power of the absolute Frobenius.
    Elem frob_p(Elem x, unsigned j) const {
        j %= deg_;
        if (j == 0 || x == 0) return x;
        if (tables_) return exp_[detail::mulmod_u64(log_[x], p_pow_mod_[j], mult_order_)];
        return apply_fp_matrix(frobp_mat_[j], x);
    }

    /// x -> x^(q^s); s is reduced mod n.
    Elem frobenius(Elem x, int s) const {
        long long sm = static_cast<long long>(s) % n_;
        if (sm < 0) sm += n_;
        return frob_p(x, static_cast<unsigned>(sm) * h_);
    }

    /// N_{q^n/q^l}(x) for l | n; l defaults to 1.
    Elem norm_to(Elem x, unsigned l = 1) const {
        Elem r = 1;
        for (unsigned i = 0; i < n_ / l; ++i) r = mul(r, frobenius(x, static_cast<int>(i * l)));
        return r;
    }

    Elem norm(Elem x) const { return norm_to(x, 1); }

    /// Tr_{q^n/q}(x); the induced bilinear form (x,y) -> trace(xy) is non-degenerate.
    Elem trace(Elem x) const {
        Elem r = 0;
        for (unsigned i = 0; i < n_; ++i) r = add(r, frobenius(x, static_cast<int>(i)));
        return r;
    }

    bool in_subfield(Elem x, unsigned l) const { return frobenius(x, static_cast<int>(l)) == x; }

    // ---- digit/coordinate access ----

    void digits_into(Elem x, std::uint32_t* out) const {
        for (unsigned i = 0; i < deg_; ++i) {
            out[i] = static_cast<std::uint32_t>(x % p_);
            x /= p_;
        }
    }

    std::vector<std::uint32_t> digits(Elem x) const {
        std::vector<std::uint32_t> d(deg_);
        digits_into(x, d.data());
        return d;
    }

    Elem from_digits(const std::uint32_t* d) const {
        Elem x = 0;
        for (unsigned i = deg_; i-- > 0;) x = x * p_ + d[i] % p_;
        return x;
    }

    Elem from_digits(const std::vector<std::uint32_t>& d) const { return from_digits(d.data()); }

    /// F_p-matrix of x -> x^(p^j) in the power basis.
    const FpMat& frobp_matrix(unsigned j) const { return frobp_mat_[j % deg_]; }
    const FpMat& frobenius_matrix(unsigned s) const { return frobp_mat_[(s % n_) * h_]; }

    /// Column-major digits of the multiplication-by-m map, into caller storage
    /// of deg*deg entries (out[c*deg + r]). Cheap: one t-shift per column.
    void mul_matrix_cols(Elem m, std::uint32_t* out) const {
        digits_into(m, out);  // column 0 = m itself
        for (unsigned c = 1; c < deg_; ++c) {
            const std::uint32_t* prev = out + (c - 1) * deg_;
            std::uint32_t* cur = out + c * deg_;
            std::uint64_t top = prev[deg_ - 1];
            cur[0] = static_cast<std::uint32_t>((p_ - top * modulus_[0] % p_) % p_);
            for (unsigned r = 1; r < deg_; ++r)
                cur[r] = static_cast<std::uint32_t>(
                    (prev[r - 1] + (p_ - top * modulus_[r] % p_)) % p_);
        }
    }

    // ---- the subfield F_q ----

    /// All q elements of the fixed field of x -> x^q, sorted by encoding.
    const std::vector<Elem>& fq_elements() const { return fq_elems_; }

    /// A generator of F_q^* (any element of multiplicative order q-1).
    Elem fq_generator() const { return fq_gen_; }

    /// The pinned F_q-basis of F_{q^n} used for all matrix representations.
    const std::vector<Elem>& fq_basis() const { return fq_basis_; }

    /// Coordinates of x in fq_basis(), as n elements of the subfield F_q.
    std::vector<Elem> fq_coords(Elem x) const {
        std::vector<std::uint32_t> d = digits(x);
        std::vector<Elem> out(n_, 0);
        for (unsigned r = 0; r < deg_; ++r) {
            std::uint64_t acc = 0;
            for (unsigned c = 0; c < deg_; ++c)
                acc += static_cast<std::uint64_t>(fq_decomp_.at(r, c)) * d[c] % p_;
            std::uint32_t coord = static_cast<std::uint32_t>(acc % p_);
            if (coord) {
                unsigned i = r / h_, j = r % h_;
                out[i] = add(out[i], mul(coord, u_pow_[j]));
            }
        }
        return out;
    }

    /// Rebuild an element from F_q-coordinates w.r.t. fq_basis().
    Elem from_fq_coords(const std::vector<Elem>& c) const {
        Elem x = 0;
        for (unsigned i = 0; i < n_; ++i) x = add(x, mul(c[i], fq_basis_[i]));
        return x;
    }

    std::string describe() const {
        std::string s = "F_" + std::to_string(p_);
        if (h_ > 1) s += "^" + std::to_string(h_);
        s += " in F_" + std::to_string(p_) + "^" + std::to_string(deg_);
        return s;
    }

   private:
    FieldCtx(std::uint64_t p, unsigned h, unsigned n, const std::vector<std::uint32_t>& modulus,
             std::uint64_t table_threshold)
        : p_(p), h_(h), n_(n) {
        if (!detail::is_prime_u64(p)) fail(errc::composite_p, "p is not prime");
        if (h < 1 || n < 2) fail(errc::invalid_parameter, "need h >= 1 and n >= 2");
        deg_ = h * n;
        // p^(hn) must fit the 64-bit element encoding
        long double bits = deg_ * std::log2l(static_cast<long double>(p));
        if (bits > 62.0L) fail(errc::invalid_parameter, "field order exceeds encoding range");
        q_ = 1;
        for (unsigned i = 0; i < h_; ++i) q_ *= p_;
        order_ = 1;
        for (unsigned i = 0; i < deg_; ++i) order_ *= p_;

        if (!modulus.empty()) {
            if (modulus.size() != deg_ + 1) fail(errc::degree_mismatch, "modulus degree must be h*n");
            detail::Poly m(modulus.begin(), modulus.end());
            for (auto& c : m) c %= static_cast<std::uint32_t>(p_);
            if (m.back() == 0) fail(errc::degree_mismatch, "modulus has zero leading coefficient");
            if (m.back() != 1) {  // normalize monic
                std::uint32_t inv = FpMat::inv_mod(m.back(), static_cast<std::uint32_t>(p_));
                for (auto& c : m)
                    c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p_);
            }
            if (!detail::is_irreducible(m, static_cast<std::uint32_t>(p_)))
                fail(errc::reducible_modulus, "modulus is reducible over F_p");
            modulus_ = std::move(m);
        } else {
            modulus_ = default_modulus();
        }

        build_frobenius();
        if (order_ <= table_threshold) build_tables();
        build_subfield();
    }

    detail::Poly to_poly(Elem x) const {
        detail::Poly f(deg_);
        for (unsigned i = 0; i < deg_; ++i) {
            f[i] = static_cast<std::uint32_t>(x % p_);
            x /= p_;
        }
        detail::ptrim(f);
        return f;
    }

    Elem from_poly(const detail::Poly& f) const {
        Elem x = 0;
        for (std::size_t i = f.size(); i-- > 0;) x = x * p_ + f[i];
        return x;
    }

    // lexicographically least monic irreducible: x^deg + (poly with least encoding)
    detail::Poly default_modulus() const {
        for (Elem tail = 0; tail < order_; ++tail) {
            detail::Poly m = to_poly(tail);
            m.resize(deg_ + 1, 0);
            m[deg_] = 1;
            if (detail::is_irreducible(m, static_cast<std::uint32_t>(p_))) return m;
        }
        fail(errc::internal, "no irreducible polynomial found");
    }

    Elem apply_fp_matrix(const FpMat& m, Elem x) const {
        std::uint32_t d[64];
        digits_into(x, d);
        std::uint32_t out[64];
        for (unsigned r = 0; r < deg_; ++r) {
            std::uint64_t acc = 0;
            for (unsigned c = 0; c < deg_; ++c)
                acc += static_cast<std::uint64_t>(m.at(r, c)) * d[c] % p_;
            out[r] = static_cast<std::uint32_t>(acc % p_);
        }
        return from_digits(out);
    }

    void build_frobenius() {
        std::uint32_t pp = static_cast<std::uint32_t>(p_);
        // columns of x -> x^p are (t^j)^p = (t^p)^j
        detail::Poly tp = detail::ppowmod({0, 1}, p_, modulus_, pp);
        FpMat f1(pp, deg_, deg_);
        detail::Poly col{1};
        for (unsigned j = 0; j < deg_; ++j) {
            for (std::size_t i = 0; i < col.size(); ++i) f1.at(i, j) = col[i];
            if (j + 1 < deg_) col = detail::pmulmod(col, tp, modulus_, pp);
        }
        frobp_mat_.resize(deg_);
        frobp_mat_[0] = FpMat(pp, deg_, deg_);
        for (unsigned i = 0; i < deg_; ++i) frobp_mat_[0].at(i, i) = 1;
        for (unsigned j = 1; j < deg_; ++j) {
            const FpMat& prev = frobp_mat_[j - 1];
            FpMat cur(pp, deg_, deg_);
            for (unsigned r = 0; r < deg_; ++r)
                for (unsigned c = 0; c < deg_; ++c) {
                    std::uint64_t acc = 0;
                    for (unsigned k = 0; k < deg_; ++k)
                        acc += static_cast<std::uint64_t>(f1.at(r, k)) * prev.at(k, c) % p_;
                    cur.at(r, c) = static_cast<std::uint32_t>(acc % p_);
                }
            frobp_mat_[j] = std::move(cur);
        }
    }

    Elem pow_no_tables(Elem a, std::uint64_t e) const {
        detail::Poly f = to_poly(a);
        return from_poly(detail::ppowmod(f, e, modulus_, static_cast<std::uint32_t>(p_)));
    }

    void build_tables() {
        mult_order_ = order_ - 1;
        std::vector<std::uint64_t> factors = detail::prime_factors(mult_order_);
        Elem g = 0;
        for (Elem cand = 2; cand < order_; ++cand) {
            bool ok = true;
            for (std::uint64_t r : factors)
                if (pow_no_tables(cand, mult_order_ / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                g = cand;
                break;
            }
        }
        if (g == 0) fail(errc::internal, "no multiplicative generator found");
        generator_ = g;

        exp_.assign(2 * mult_order_, 0);
        log_.assign(order_, 0);
        std::uint32_t pp = static_cast<std::uint32_t>(p_);
        detail::Poly gv = to_poly(g), cur{1};
        for (std::uint64_t i = 0; i < mult_order_; ++i) {
            Elem e = from_poly(cur);
            exp_[i] = static_cast<std::uint32_t>(e);
            exp_[i + mult_order_] = static_cast<std::uint32_t>(e);
            log_[e] = static_cast<std::uint32_t>(i);
            cur = detail::pmulmod(cur, gv, modulus_, pp);
        }
        tables_ = true;
        p_pow_mod_.resize(deg_);
        p_pow_mod_[0] = 1 % mult_order_;
        for (unsigned j = 1; j < deg_; ++j)
            p_pow_mod_[j] = detail::mulmod_u64(p_pow_mod_[j - 1], p_ % mult_order_, mult_order_);
    }

    void build_subfield() {
        std::uint32_t pp = static_cast<std::uint32_t>(p_);
        // F_q = ker(Frob_q - id) as an F_p-space
        const FpMat& fq_mat = frobp_mat_[h_ % deg_];
        FpMat m(pp, deg_, deg_);
        for (unsigned r = 0; r < deg_; ++r)
            for (unsigned c = 0; c < deg_; ++c) {
                std::uint32_t v = fq_mat.at(r, c);
                if (r == c) v = static_cast<std::uint32_t>((v + p_ - 1) % p_);
                m.at(r, c) = v;
            }
        FpMat ker = m.nullspace();
        if (ker.rows != h_) fail(errc::internal, "subfield dimension mismatch");
        // enumerate all p^h combinations
        std::uint64_t count = q_;
        fq_elems_.reserve(count);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            std::uint32_t acc[64] = {0};
            for (unsigned b = 0; b < h_; ++b) {
                std::uint32_t s = static_cast<std::uint32_t>(t % p_);
                t /= p_;
                if (s)
                    for (unsigned c = 0; c < deg_; ++c)
                        acc[c] = static_cast<std::uint32_t>(
                            (acc[c] + static_cast<std::uint64_t>(s) * ker.at(b, c)) % p_);
            }
            fq_elems_.push_back(from_digits(acc));
        }
        std::sort(fq_elems_.begin(), fq_elems_.end());

        // generator of F_q^*
        std::vector<std::uint64_t> qfac = detail::prime_factors(q_ - 1);
        fq_gen_ = 1;
        for (Elem x : fq_elems_) {
            if (x == 0 || x == 1) continue;
            bool ok = true;
            for (std::uint64_t r : qfac)
                if (pow(x, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                fq_gen_ = x;
                break;
            }
        }
        if (q_ > 2 && fq_gen_ == 1) fail(errc::internal, "no F_q generator found");
        u_pow_.resize(h_);
        u_pow_[0] = 1;
        for (unsigned j = 1; j < h_; ++j) u_pow_[j] = mul(u_pow_[j - 1], fq_gen_);

        // greedy F_q-basis of F_{q^n} from the power basis
        detail::IncEchelon ech(pp, deg_);
        Elem tpow = 1;
        for (unsigned k = 0; k < deg_ && fq_basis_.size() < n_; ++k) {
            if (!ech.contains(digits(tpow))) {
                fq_basis_.push_back(tpow);
                for (unsigned j = 0; j < h_; ++j) ech.add(digits(mul(tpow, u_pow_[j])));
            }
            tpow = mul(tpow, Elem(p_));  // t has encoding p
        }
        if (fq_basis_.size() != n_) fail(errc::internal, "F_q-basis construction failed");

        // change of basis: power-basis digits -> coordinates in {b_i u^j}
        FpMat cb(pp, deg_, deg_);
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < h_; ++j) {
                std::vector<std::uint32_t> col = digits(mul(fq_basis_[i], u_pow_[j]));
                for (unsigned r = 0; r < deg_; ++r) cb.at(r, i * h_ + j) = col[r];
            }
        if (!cb.inverse(fq_decomp_)) fail(errc::internal, "F_q-basis is singular");
    }

    std::uint64_t p_;
    unsigned h_, n_, deg_ = 0;
    std::uint64_t q_ = 0, order_ = 0;
    detail::Poly modulus_;
    std::vector<FpMat> frobp_mat_;

    bool tables_ = false;
    std::uint64_t mult_order_ = 0;
    Elem generator_ = 0;
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint64_t> p_pow_mod_;

    std::vector<Elem> fq_elems_;
    Elem fq_gen_ = 1;
    std::vector<Elem> u_pow_;
    std::vector<Elem> fq_basis_;
    FpMat fq_decomp_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

}  // namespace scatlab
