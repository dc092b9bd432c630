#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/linalg.hpp"
#include "oracles.hpp"

using namespace folia;

namespace {

std::vector<SparseRow> sparse(const std::vector<std::vector<Rational>>& m) {
    std::vector<SparseRow> rows;
    for (const auto& r : m) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) s[c] = r[c];
        rows.push_back(s);
    }
    return rows;
}

}  // namespace

TEST_CASE("rank agrees with dense elimination on random matrices") {
    oracle::Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        int r = rng.uniform(1, 7), c = rng.uniform(1, 7);
        std::vector<std::vector<Rational>> m(r, std::vector<Rational>(c));
        for (auto& row : m)
            for (auto& x : row) x = rng.uniform(0, 2) == 0 ? rng.rational() : Rational(0);
        // force some dependence
        if (r > 2)
            for (int k = 0; k < c; ++k) m[2][k] = m[0][k] - 2 * m[1][k];
        CHECK(rank(c, sparse(m)) == oracle::dense_rank(m));
    }
}

TEST_CASE("solve returns a solution or detects inconsistency") {
    oracle::Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        int r = rng.uniform(1, 6), c = rng.uniform(1, 6);
        std::vector<std::vector<Rational>> m(r, std::vector<Rational>(c));
        for (auto& row : m)
            for (auto& x : row) x = rng.rational();
        std::vector<Rational> b(r);
        for (auto& x : b) x = rng.rational();
        auto sol = solve(c, sparse(m), b);
        auto aug = m;
        for (int i = 0; i < r; ++i) aug[i].push_back(b[i]);
        bool consistent = oracle::dense_rank(aug) == oracle::dense_rank(m);
        CHECK(sol.has_value() == consistent);
        if (sol)
            for (int i = 0; i < r; ++i) {
                Rational s = 0;
                for (int k = 0; k < c; ++k) s += m[i][k] * (*sol)[k];
                CHECK(s == b[i]);
            }
    }
}

TEST_CASE("incremental echelon") {
    RowEchelon e(3);
    CHECK(e.insert({{0, 1}, {1, 1}}));
    CHECK(e.insert({{1, 1}, {2, 1}}));
    CHECK_FALSE(e.insert({{0, 1}, {2, -1}}));
    CHECK(e.rank() == 2);
    CHECK_FALSE(solve(1, {SparseRow{{0, 1}}, SparseRow{{0, 1}}}, {1, 2}));
}
