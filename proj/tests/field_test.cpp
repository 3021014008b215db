#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "scatlab/field.hpp"

using namespace scatlab;

TEST_CASE("construction and basic parameters") {
    auto F = FieldCtx::make(5, 1, 6, {});
    CHECK(F->p() == 5);
    CHECK(F->q() == 5);
    CHECK(F->deg() == 6);
    CHECK(F->order() == 15625);
    CHECK(F->has_tables());
    CHECK(F->modulus().size() == 7);

    auto G = FieldCtx::make(3, 2, 2, {});
    CHECK(G->q() == 9);
    CHECK(G->order() == 81);
}

TEST_CASE("rejects composite characteristic and reducible modulus") {
    CHECK_THROWS_AS(FieldCtx::make(4, 1, 2, {}), error);
    try {
        FieldCtx::make(6, 1, 2, {});
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::composite_p);
    }
    // x^2 - 1 = (x-1)(x+1) over F_5
    try {
        FieldCtx::make(5, 1, 2, {4, 0, 1});
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::reducible_modulus);
    }
}

TEST_CASE("field axioms on samples") {
    auto F = FieldCtx::make(3, 1, 4, {});
    for (Elem a = 0; a < F->order(); a += 7) {
        for (Elem b = 1; b < F->order(); b += 13) {
            CHECK(F->add(a, b) == F->add(b, a));
            CHECK(F->mul(a, b) == F->mul(b, a));
            CHECK(F->sub(F->add(a, b), b) == a);
            if (a) CHECK(F->mul(F->div(a, b), b) == a);
        }
    }
    for (Elem a = 1; a < F->order(); ++a) {
        CHECK(F->mul(a, F->inv(a)) == 1);
    }
}

TEST_CASE("pow and generator") {
    auto F = FieldCtx::make(3, 1, 4, {});
    // fq_generator generates the multiplicative group of the subfield F_q
    auto G9 = FieldCtx::make(3, 2, 3, {});
    Elem g = G9->fq_generator();
    CHECK(G9->in_subfield(g, 1));
    std::uint64_t m = G9->q() - 1;
    CHECK(G9->pow(g, m) == 1);
    for (std::uint64_t d : detail::prime_factors(m)) CHECK(G9->pow(g, m / d) != 1);
    // Fermat: x^q = frobenius(x)
    for (Elem x = 0; x < F->order(); x += 5) CHECK(F->pow(x, F->q()) == F->frobenius(x, 1));
}

TEST_CASE("frobenius is an automorphism with the right fixed fields") {
    auto F = FieldCtx::make(3, 2, 3, {});  // F_729 over F_9
    for (Elem x = 0; x < F->order(); x += 3) {
        for (Elem y = 1; y < F->order(); y += 11) {
            CHECK(F->frobenius(F->add(x, y), 1) ==
                  F->add(F->frobenius(x, 1), F->frobenius(y, 1)));
            CHECK(F->frobenius(F->mul(x, y), 1) ==
                  F->mul(F->frobenius(x, 1), F->frobenius(y, 1)));
        }
        CHECK(F->frob_p(x, F->deg()) == x);
        CHECK(F->frobenius(x, -1) == F->frobenius(x, static_cast<int>(F->n()) - 1));
    }
    // #fixed points of x -> x^q is q
    std::uint64_t fixed = 0;
    for (Elem x = 0; x < F->order(); ++x)
        if (F->in_subfield(x, 1)) ++fixed;
    CHECK(fixed == F->q());
}

TEST_CASE("norm and trace hit every value with the right multiplicity") {
    auto F = FieldCtx::make(3, 1, 4, {});
    std::map<Elem, unsigned> norm_count, trace_count;
    for (Elem x = 1; x < F->order(); ++x) ++norm_count[F->norm(x)];
    for (Elem x = 0; x < F->order(); ++x) ++trace_count[F->trace(x)];
    CHECK(norm_count.size() == F->q() - 1);
    for (auto& [v, c] : norm_count) {
        CHECK(F->in_subfield(v, 1));
        CHECK(c == (F->order() - 1) / (F->q() - 1));
    }
    CHECK(trace_count.size() == F->q());
    for (auto& [v, c] : trace_count) {
        CHECK(F->in_subfield(v, 1));
        CHECK(c == F->order() / F->q());
    }
    // relative norms land in the right subfield and are multiplicative
    auto G = FieldCtx::make(3, 1, 6, {});
    for (unsigned l : {1u, 2u, 3u}) {
        for (Elem x = 0; x < G->order(); x += 101) {
            CHECK(G->in_subfield(G->norm_to(x, l), l));
            CHECK(G->norm_to(G->mul(x, 7), l) == G->mul(G->norm_to(x, l), G->norm_to(7, l)));
        }
    }
}

TEST_CASE("digit encoding round-trips") {
    auto F = FieldCtx::make(7, 1, 3, {});
    for (Elem x = 0; x < F->order(); x += 11) {
        CHECK(F->from_digits(F->digits(x)) == x);
    }
}

TEST_CASE("multiplication matrix agrees with mul") {
    auto F = FieldCtx::make(3, 2, 3, {});
    unsigned d = F->deg();
    std::vector<std::uint32_t> mat(d * d), xd(d), yd(d);
    for (Elem m = 1; m < F->order(); m += 17) {
        F->mul_matrix_cols(m, mat.data());
        for (Elem y = 0; y < F->order(); y += 23) {
            F->digits_into(y, yd.data());
            std::fill(xd.begin(), xd.end(), 0);
            for (unsigned c = 0; c < d; ++c)
                for (unsigned r = 0; r < d; ++r)
                    xd[r] = (xd[r] + mat[c * d + r] * yd[c]) % F->p();
            CHECK(F->from_digits(xd) == F->mul(m, y));
        }
    }
}

TEST_CASE("table-free arithmetic agrees with table-backed arithmetic") {
    auto A = FieldCtx::make(3, 1, 5, {});
    auto B = FieldCtx::make(3, 1, 5, A->modulus(), /*table_threshold=*/1);
    CHECK(A->has_tables());
    CHECK(!B->has_tables());
    for (Elem x = 0; x < A->order(); x += 7) {
        for (Elem y = 1; y < A->order(); y += 19) {
            CHECK(A->mul(x, y) == B->mul(x, y));
            CHECK(A->inv(y) == B->inv(y));
            CHECK(A->pow(x, 37) == B->pow(x, 37));
        }
        CHECK(A->frobenius(x, 2) == B->frobenius(x, 2));
    }
}

TEST_CASE("intermediate-field basis and coordinates round-trip") {
    auto F = FieldCtx::make(3, 2, 2, {});  // F_81 over F_9
    auto basis = F->fq_basis();
    CHECK(basis.size() == F->n());
    for (Elem x = 0; x < F->order(); ++x) {
        auto co = F->fq_coords(x);
        CHECK(co.size() == F->n());
        for (Elem c : co) CHECK(F->in_subfield(c, 1));
        CHECK(F->from_fq_coords(co) == x);
    }
    // fq_elements enumerates exactly the subfield
    auto sub = F->fq_elements();
    CHECK(sub.size() == F->q());
    for (Elem s : sub) CHECK(F->in_subfield(s, 1));
}
