// Independent reference computations used by the tests.
#pragma once

#include "folia/algebroid.hpp"
#include "folia/fields.hpp"
#include "folia/ratlog.hpp"

#include <random>
#include <vector>

namespace oracle {

using folia::Poly;
using folia::Rational;
using folia::VarList;

// Sign of a graded permutation by literally performing adjacent swaps on the
// source sequence until it matches sigma.
inline int bubble_koszul_sign(const std::vector<int>& sigma, const std::vector<int>& degrees) {
    std::vector<int> cur(sigma.size());
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = static_cast<int>(i);
    int sign = 1;
    for (std::size_t target = 0; target < sigma.size(); ++target) {
        std::size_t pos = target;
        while (cur[pos] != sigma[target]) ++pos;
        while (pos > target) {
            int a = degrees[cur[pos - 1]], b = degrees[cur[pos]];
            sign *= ((a * b) % 2 == 0) ? -1 : 1;
            std::swap(cur[pos - 1], cur[pos]);
            --pos;
        }
    }
    return sign;
}

inline std::size_t dense_rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(unsigned long seed) : gen(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    Rational rational() { return folia::ratio(uniform(-5, 5), uniform(1, 3)); }
    Poly poly(const VarList& v, int max_degree, int terms) {
        Poly p(v);
        for (int t = 0; t < terms; ++t) {
            folia::Exponents e(v->size(), 0);
            int budget = uniform(0, max_degree);
            for (int k = 0; k < budget; ++k) ++e[uniform(0, static_cast<int>(v->size()) - 1)];
            p.add_term(e, rational());
        }
        return p;
    }
    folia::VectorField field(const VarList& v, int max_degree, int terms) {
        std::vector<Poly> c;
        for (std::size_t i = 0; i < v->size(); ++i) c.push_back(poly(v, max_degree, terms));
        return folia::VectorField(v, c);
    }
    std::vector<Rational> point(std::size_t n) {
        std::vector<Rational> p;
        for (std::size_t i = 0; i < n; ++i) p.push_back(rational());
        return p;
    }
};

// X(num/den) by the quotient rule and X(c ln P) = c X(P)/P, with X applied to
// polynomials through explicit partial derivatives.
inline folia::RatFunc apply_by_expansion(const folia::VectorField& x, const folia::RatLogExpr& g) {
    auto xp = [&](const Poly& p) {
        Poly s(x.vars());
        for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * p.derive(i);
        return s;
    };
    const Poly& n = g.rational().num();
    const Poly& d = g.rational().den();
    folia::RatFunc out(xp(n) * d - n * xp(d), d * d);
    for (const auto& [p, c] : g.logs()) out = out + folia::RatFunc(xp(p) * c, p);
    return out;
}

}  // namespace oracle
