#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "scatlab/linset.hpp"

using namespace scatlab;

namespace {
Ctx mk(unsigned p, unsigned h, unsigned n) { return FieldCtx::make(p, h, n, {}); }

LinPoly monomial(const Ctx& ctx, unsigned i, Elem a = 1) { return LinPoly::monomial(ctx, i, a); }
}  // namespace

TEST_CASE("mass identity of the weight spectrum") {
    auto F = mk(3, 1, 4);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::vector<Elem> c(4);
        std::uint64_t s = seed;
        for (auto& x : c) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            x = (s >> 9) % F->order();
        }
        LinearSetSpec spec{LinPoly(F, c)};
        auto sp = weight_spectrum(spec);
        std::uint64_t mass = 0;
        for (auto& [w, cnt] : sp.counts) {
            std::uint64_t qw = 1;
            for (unsigned i = 0; i < w; ++i) qw *= F->q();
            mass += cnt * (qw - 1);
        }
        // each nonzero (x, f(x)) lies over exactly one point <(1, f(x)/x)>
        CHECK(mass == F->order() - 1);
    }
}

TEST_CASE("the pseudoregulus polynomial is scattered") {
    auto F = mk(3, 1, 4);
    LinearSetSpec spec{monomial(F, 1)};
    auto v = is_scattered(spec);
    CHECK(v.scattered);
    CHECK(!v.witness);
    CHECK(v.points_checked == F->order());
    auto sp = weight_spectrum(spec);
    CHECK(sp.max_weight() == 1);
    CHECK(sp.size() == (F->order() - 1) / (F->q() - 1));
}

TEST_CASE("a subfield-linear polynomial is not scattered") {
    auto F = mk(3, 1, 4);
    LinearSetSpec spec{monomial(F, 2)};  // x^{q^2} is F_{q^2}-linear
    CHECK(max_field_of_linearity(spec) == 2);
    auto v = is_scattered(spec);
    CHECK(!v.scattered);
    CHECK(v.witness);
    // the witness is minimal in encoding order
    detail::SweepScratch scratch(spec.f);
    for (Elem m = 0; m < *v.witness; ++m) CHECK(scratch.kernel_dim_fq(*F, m) < 2);
}

TEST_CASE("binomial dichotomy at a single delta pair") {
    auto F = mk(3, 1, 5);
    // norm(delta) = 1 forces a non-scattered binomial; norm != 1 scattered
    Elem good = 0, bad = 0;
    for (Elem d = 1; d < F->order() && !(good && bad); ++d) {
        if (F->norm(d) == 1) {
            if (!bad) bad = d;
        } else if (!good) {
            good = d;
        }
    }
    std::vector<Elem> c(5, 0);
    c[1] = good;
    c[4] = 1;
    CHECK(is_scattered({LinPoly(F, c)}).scattered);
    c[1] = bad;
    CHECK(!is_scattered({LinPoly(F, c)}).scattered);
}

TEST_CASE("spectrum is deterministic across thread counts") {
    auto F = mk(3, 1, 4);
    LinearSetSpec spec{monomial(F, 2)};
    auto a = weight_spectrum(spec, 1);
    auto b = weight_spectrum(spec, 3);
    CHECK(a.counts == b.counts);
}

TEST_CASE("catalog validity conditions and polynomials") {
    auto F = mk(5, 1, 6);
    CHECK(catalog_delta_valid(F, 1, 0));
    CHECK(!catalog_delta_valid(F, 2, 0));
    CHECK(!catalog_delta_valid(F, 4, 0));
    // family 4 at q=5: delta=2 satisfies delta^2+delta=1
    CHECK(catalog_delta_valid(F, 4, 2));
    auto u4 = catalog_polynomial(F, 4, 2);
    CHECK(u4.coeff(1) == 1);
    CHECK(u4.coeff(3) == 1);
    CHECK(u4.coeff(5) == 2);
    CHECK_THROWS_AS(catalog_polynomial(F, 4, 1), error);
    CHECK_THROWS_AS(catalog_polynomial(F, 5, 0), error);
    // norm conditions for families 2 and 3
    for (Elem d = 1; d < 200; ++d) {
        CHECK(catalog_delta_valid(F, 2, d) == (F->norm(d) != 0 && F->norm(d) != 1));
        CHECK(catalog_delta_valid(F, 3, d) ==
              (F->norm_to(d, 3) != 0 && F->norm_to(d, 3) != 1));
    }
    auto cat = known_catalog(F, 2, 2, 2);  // norm(2) != 1 in F_{5^6}; delta4=2
    CHECK(cat.size() == 4);
    CHECK(cat[0].f.coeff(1) == 1);
}

TEST_CASE("the hexic polynomial exists only at n=6 and is scattered at q=5") {
    auto F = mk(5, 1, 6);
    auto f = central_polynomial(F);
    CHECK(f.coeff(1) == 1);
    CHECK(f.coeff(2) == F->neg(1));
    CHECK(f.coeff(4) == 1);
    CHECK(f.coeff(5) == 1);
    CHECK(is_scattered({f}).scattered);
    CHECK(max_field_of_linearity({f}) == 1);
    auto F4 = mk(3, 1, 4);
    CHECK_THROWS_AS(central_polynomial(F4), error);
}

TEST_CASE("budget guard triggers without force") {
    // q=2^31 is not constructible here; emulate with a tiny budget by calling
    // check_sweep_budget directly through a large-order field surrogate:
    // order 3^20 > 2^30 exceeds the default budget
    auto F = mk(3, 1, 20);
    CHECK_THROWS_AS(check_sweep_budget(*F, false), error);
    CHECK_NOTHROW(check_sweep_budget(*F, true));
}
