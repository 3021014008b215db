#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "scatlab/linalg.hpp"

using namespace scatlab;

namespace {
Ctx mk() { return FieldCtx::make(3, 1, 4, {}); }

FqnMat random_mat(const Ctx& ctx, std::size_t r, std::size_t c, std::uint64_t seed) {
    FqnMat m(ctx, r, c);
    std::uint64_t s = seed;
    for (auto& x : m.a) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        x = (s >> 17) % ctx->order();
    }
    return m;
}
}  // namespace

TEST_CASE("rref is idempotent and rank-revealing") {
    auto ctx = mk();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto m = random_mat(ctx, 3, 5, seed);
        auto r1 = m;
        std::size_t rank = r1.rref();
        CHECK(rank == r1.rows);
        auto r2 = r1;
        CHECK(r2.rref() == rank);
        CHECK(r1 == r2);
        CHECK(m.rank() == rank);
    }
}

TEST_CASE("rank of structured matrices") {
    auto ctx = mk();
    FqnMat id(ctx, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
    CHECK(id.rank() == 4);
    FqnMat z(ctx, 3, 4);
    CHECK(z.rank() == 0);
    // duplicated rows collapse
    auto m = random_mat(ctx, 2, 4, 7);
    FqnMat dup(ctx, 4, 4);
    for (std::size_t c = 0; c < 4; ++c) {
        dup.at(0, c) = m.at(0, c);
        dup.at(1, c) = m.at(1, c);
        dup.at(2, c) = m.at(0, c);
        dup.at(3, c) = ctx->mul(2, m.at(1, c));
    }
    CHECK(dup.rank() == m.rank());
}

TEST_CASE("nullspace rows annihilate the matrix and have the right count") {
    auto ctx = mk();
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto m = random_mat(ctx, 2, 5, seed * 31 + 1);
        auto ns = m.nullspace();
        CHECK(ns.rows == m.cols - m.rank());
        for (std::size_t k = 0; k < ns.rows; ++k) {
            for (std::size_t r = 0; r < m.rows; ++r) {
                Elem acc = 0;
                for (std::size_t c = 0; c < m.cols; ++c)
                    acc = ctx->add(acc, ctx->mul(m.at(r, c), ns.at(k, c)));
                CHECK(acc == 0);
            }
        }
        // double annihilator recovers the row space dimension
        CHECK(ns.nullspace().rank() == m.rank());
    }
}

TEST_CASE("vstack concatenates and respects rank bounds") {
    auto ctx = mk();
    auto a = random_mat(ctx, 2, 4, 3), b = random_mat(ctx, 2, 4, 4);
    auto s = a.vstack(b);
    CHECK(s.rows == 4);
    CHECK(s.rank() <= a.rank() + b.rank());
    CHECK(s.rank() >= a.rank());
    auto same = a.vstack(a);
    CHECK(same.rank() == a.rank());
}
