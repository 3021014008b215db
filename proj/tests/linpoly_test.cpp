#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "scatlab/linpoly.hpp"

using namespace scatlab;

namespace {
Ctx mk(unsigned p, unsigned h, unsigned n) { return FieldCtx::make(p, h, n, {}); }

LinPoly sample_poly(const Ctx& ctx, std::uint64_t seed) {
    std::vector<Elem> c(ctx->n());
    std::uint64_t s = seed;
    for (auto& x : c) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        x = (s >> 13) % ctx->order();
    }
    return LinPoly(ctx, c);
}
}  // namespace

TEST_CASE("construction validates degree and coefficients") {
    auto F = mk(3, 1, 4);
    CHECK_THROWS_AS(LinPoly(F, std::vector<Elem>{0, 1}), error);
    CHECK_THROWS_AS(LinPoly(F, std::vector<Elem>{0, 1, 0, F->order()}), error);
    CHECK(LinPoly::identity(F).eval(5) == 5);
    CHECK(LinPoly::zero(F).eval(5) == 0);
    CHECK(LinPoly::monomial(F, 2, 1).eval(7) == F->frobenius(7, 2));
}

TEST_CASE("evaluation is F_q-linear") {
    auto F = mk(3, 2, 3);
    auto f = sample_poly(F, 42);
    for (Elem x = 0; x < F->order(); x += 7) {
        for (Elem y = 1; y < F->order(); y += 11) {
            CHECK(f.eval(F->add(x, y)) == F->add(f.eval(x), f.eval(y)));
        }
        for (Elem lam : F->fq_elements()) {
            CHECK(f.eval(F->mul(lam, x)) == F->mul(lam, f.eval(x)));
        }
    }
}

TEST_CASE("ring operations match pointwise semantics") {
    auto F = mk(3, 1, 4);
    auto f = sample_poly(F, 1), g = sample_poly(F, 2);
    for (Elem x = 0; x < F->order(); x += 5) {
        CHECK(f.add(g).eval(x) == F->add(f.eval(x), g.eval(x)));
        CHECK(f.sub(g).eval(x) == F->sub(f.eval(x), g.eval(x)));
        CHECK(f.scale(7).eval(x) == F->mul(7, f.eval(x)));
        CHECK(f.compose(g).eval(x) == f.eval(g.eval(x)));
    }
}

TEST_CASE("adjoint satisfies the trace identity and is an involution") {
    auto F = mk(3, 1, 4);
    auto f = sample_poly(F, 3);
    auto fa = f.adjoint();
    for (Elem x = 0; x < F->order(); x += 7)
        for (Elem y = 1; y < F->order(); y += 13)
            CHECK(F->trace(F->mul(x, f.eval(y))) == F->trace(F->mul(y, fa.eval(x))));
    CHECK(fa.adjoint().coeffs() == f.coeffs());
    // adjoint of a monomial: c x^{q^i} -> c^{q^{n-i}} x^{q^{n-i}}
    auto m = LinPoly::monomial(F, 1, 5);
    auto ma = m.adjoint();
    CHECK(ma.coeff(3) == F->frobenius(5, 3));
}

TEST_CASE("twist computes f(x)^(q^s)") {
    auto F = mk(3, 1, 4);
    auto f = sample_poly(F, 4);
    for (unsigned s = 0; s < 4; ++s) {
        auto g = f.twist(static_cast<int>(s));
        for (Elem x = 0; x < F->order(); x += 5)
            CHECK(g.eval(x) == F->frobenius(f.eval(x), static_cast<int>(s)));
    }
}

TEST_CASE("kernel dimension equals the brute-force root count") {
    auto F = mk(3, 2, 2);  // q=9, n=2
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto f = sample_poly(F, seed);
        std::uint64_t roots = 0;
        for (Elem x = 0; x < F->order(); ++x)
            if (f.eval(x) == 0) ++roots;
        std::uint64_t expect = 1;
        for (unsigned i = 0; i < f.kernel_dim(); ++i) expect *= F->q();
        CHECK(roots == expect);
        CHECK(f.invertible() == (roots == 1));
    }
}

TEST_CASE("matrix forms agree with evaluation") {
    auto F = mk(3, 2, 2);
    auto f = sample_poly(F, 9);
    auto M = f.fp_matrix();
    for (Elem x = 0; x < F->order(); x += 3) {
        auto d = F->digits(x);
        std::vector<std::uint32_t> out(F->deg(), 0);
        for (unsigned r = 0; r < F->deg(); ++r) {
            std::uint64_t acc = 0;
            for (unsigned c = 0; c < F->deg(); ++c) acc += M.at(r, c) * d[c];
            out[r] = static_cast<std::uint32_t>(acc % F->p());
        }
        CHECK(F->from_digits(out) == f.eval(x));
    }
}

TEST_CASE("support gcd identifies the maximum field of linearity") {
    auto F = mk(3, 1, 6);
    std::vector<Elem> c(6, 0);
    c[2] = 1;
    CHECK(LinPoly(F, c).support_gcd() == 2);  // x^{q^2}
    c.assign(6, 0);
    c[1] = 1;
    c[3] = 1;
    CHECK(LinPoly(F, c).support_gcd() == 1);  // x^q + x^{q^3}
    c.assign(6, 0);
    c[0] = 2;
    CHECK(LinPoly(F, c).support_gcd() == 6);  // scalar map: F_{q^6}-linear
    c.assign(6, 0);
    c[2] = 1;
    c[4] = 2;
    CHECK(LinPoly(F, c).support_gcd() == 2);
}
