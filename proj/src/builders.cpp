#include "folia/builders.hpp"

#include <algorithm>
#include <map>

namespace folia {

namespace {

Poly var(const VarList& v, std::size_t i) { return Poly::variable(v, i); }
Poly cst(const VarList& v, const Rational& c) { return Poly(v, c); }

// Sorted k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) return out;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

std::string digits(const std::vector<int>& I) {
    std::string s;
    for (int i : I) s += std::to_string(i);
    return s;
}

// Sorts I in place; returns the sign of the sorting permutation, 0 on a repeat.
int sort_with_sign(std::vector<int>& I) {
    int inversions = 0;
    for (std::size_t i = 0; i < I.size(); ++i)
        for (std::size_t j = i + 1; j < I.size(); ++j) {
            if (I[i] == I[j]) return 0;
            if (I[i] > I[j]) ++inversions;
        }
    std::sort(I.begin(), I.end());
    return inversions % 2 == 0 ? 1 : -1;
}

Section zero_section(const LieNAlgebroid& A, int level) {
    return Section{level, std::vector<Poly>(A.rank(level), Poly(A.vars()))};
}

void require_small(int n, int lo, const char* what) {
    if (n < lo || n > 9) throw std::invalid_argument(std::string(what) + ": n must be between " + std::to_string(lo) +
                                                     " and 9");
}

}  // namespace

LieNAlgebroid build_single_vf(const VectorField& x) {
    LieNAlgebroid A(x.vars(), GradedBundle({1}, {{"one"}}));
    A.set_anchor(0, x);
    A.declare_l2(0, 0);
    return A;
}

LieNAlgebroid build_euler(int n) {
    if (n < 1) throw std::invalid_argument("euler: n must be positive");
    VarList v = default_vars(static_cast<std::size_t>(n));
    std::vector<Poly> comps;
    for (int i = 0; i < n; ++i) comps.push_back(var(v, i));
    return build_single_vf(VectorField(v, comps));
}

LieNAlgebroid build_poisson_r3() {
    VarList v = make_vars({"x", "y", "z"});
    Poly x = var(v, 0), y = var(v, 1), zero(v);
    LieNAlgebroid A(v, GradedBundle({3, 1}, {{"dx", "dy", "dz"}, {"one"}}));
    A.set_anchor(0, VectorField(v, {zero, zero, x}));
    A.set_anchor(1, VectorField(v, {zero, zero, y}));
    A.set_anchor(2, VectorField(v, {-x, -y, zero}));
    A.declare_l2(0, 0);
    A.set_l2({0, 0}, {0, 2}, A.basis(0, 0));
    A.set_l2({0, 1}, {0, 2}, A.basis(0, 1));
    A.declare_l2(0, 1);
    A.set_l2({0, 2}, {1, 0}, Poly::constant(-2) * A.basis(1, 0));
    A.set_differential(1, 0, A.make_section(0, {y, -x, zero}));
    A.declare_l3(0, 0, 0);
    return A;
}

LieNAlgebroid build_quadratic_r2() {
    VarList v = make_vars({"x", "y"});
    const Poly x = var(v, 0), y = var(v, 1);
    LieNAlgebroid A(v, GradedBundle({6, 4}, {{"e1", "e2", "e3", "e4", "e5", "e6"}, {"f1", "f2", "f3", "f4"}}));
    // Degree 0: index 3*s + m, A_m in {[[1,0],[0,0]], [[0,1],[1,0]], [[0,0],[0,1]]}, X_s in {(1,0), (0,1)}.
    // Degree -1: index 2*s + q, (alpha, beta) = (1,0) or (0,1), Y = X_s.
    struct Quad {
        Rational a, b, c;
    };
    const Quad quads[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const Rational xs[2][2] = {{1, 0}, {0, 1}};
    auto form = [&](const Quad& q) { return q.a * x * x + Rational(2) * q.b * x * y + q.c * y * y; };
    auto field = [&](int s) { return VectorField(v, {cst(v, xs[s][0]), cst(v, xs[s][1])}); };
    // Section A' (x) X_s in degree 0 with polynomial entries a, b, c.
    auto deg0 = [&](const Poly& a, const Poly& b, const Poly& c, int s) {
        Section out = zero_section(A, 0);
        out.coeffs[3 * s + 0] = a;
        out.coeffs[3 * s + 1] = b;
        out.coeffs[3 * s + 2] = c;
        return out;
    };
    auto deg1 = [&](const Poly& alpha, const Poly& beta, int s) {
        Section out = zero_section(A, 1);
        out.coeffs[2 * s + 0] = alpha;
        out.coeffs[2 * s + 1] = beta;
        return out;
    };

    for (int s = 0; s < 2; ++s)
        for (int m = 0; m < 3; ++m) A.set_anchor(3 * s + m, form(quads[m]) * field(s));

    for (int s = 0; s < 2; ++s)
        for (int q = 0; q < 2; ++q) {
            const Rational al = q == 0 ? 1 : 0, be = q == 0 ? 0 : 1;
            Poly a = Rational(2) * al * y, b = -al * x + be * y, c = Rational(-2) * be * x;
            A.set_differential(1, 2 * s + q, deg0(a, b, c, s));
        }

    A.declare_l2(0, 0);
    A.declare_l2(0, 1);
    A.declare_l3(0, 0, 0);
    for (int s = 0; s < 2; ++s)
        for (int m = 0; m < 3; ++m) {
            const Quad& qa = quads[m];
            VectorField xbar = field(s);
            const Poly ax = form(qa);
            for (int t = 0; t < 2; ++t)
                for (int k = 0; k < 3; ++k) {
                    if (3 * t + k <= 3 * s + m) continue;
                    const Quad& qb = quads[k];
                    VectorField ybar = field(t);
                    Poly xb = xbar.apply(form(qb)), ya = ybar.apply(ax);
                    Section val = deg0(xb * cst(v, qa.a), xb * cst(v, qa.b), xb * cst(v, qa.c), t) +
                                  deg0(-ya * cst(v, qb.a), -ya * cst(v, qb.b), -ya * cst(v, qb.c), s);
                    A.set_l2({0, 3 * s + m}, {0, 3 * t + k}, val);
                }
            const Rational u = xs[s][0], w = xs[s][1];
            const Rational &a = qa.a, &b = qa.b, &c = qa.c;
            for (int t = 0; t < 2; ++t)
                for (int q = 0; q < 2; ++q) {
                    const Rational al = q == 0 ? 1 : 0, be = q == 0 ? 0 : 1;
                    Poly p1 = al * (a * u * x + Rational(2) * b * w * x + c * w * y) + be * (a * u * y - a * w * x);
                    Poly p2 = be * (a * u * x + Rational(2) * b * u * y + c * w * y) + al * (c * w * x - c * u * y);
                    Poly ya = field(t).apply(ax);
                    Section val = deg1(p1, p2, t) + deg1(-ya * cst(v, al), -ya * cst(v, be), s);
                    A.set_l2({0, 3 * s + m}, {1, 2 * t + q}, val);
                }
        }

    // l3(A1 X1, A2 X2, A3 X3) = sum over cyclic rotations of
    //   X1 X2 (A3(x,y)) * ((b1 a2 - a1 b2) x + (c1 a2 - a1 c2) y / 2,
    //                      (c1 b2 - b1 c2) y + (c1 a2 - a1 c2) x / 2) (x) X3.
    auto l3_term = [&](int i1, int i2, int i3) {
        const Quad &q1 = quads[i1 % 3], &q2 = quads[i2 % 3], &q3 = quads[i3 % 3];
        Poly coef = field(i1 / 3).apply(field(i2 / 3).apply(form(q3)));
        Rational half(1, 2);
        Poly alpha = (q1.b * q2.a - q1.a * q2.b) * x + half * (q1.c * q2.a - q1.a * q2.c) * y;
        Poly beta = (q1.c * q2.b - q1.b * q2.c) * y + half * (q1.c * q2.a - q1.a * q2.c) * x;
        return deg1(coef * alpha, coef * beta, i3 / 3);
    };
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                Section val = l3_term(i, j, k) + l3_term(j, k, i) + l3_term(k, i, j);
                A.set_l3({0, i}, {0, j}, {0, k}, val);
            }
    return A;
}

LieNAlgebroid build_gln(int n) {
    require_small(n, 1, "gln");
    VarList v = default_vars(static_cast<std::size_t>(n));
    // Level p: pairs (I, k), |I| = p + 1. Level 0 is ordered by I then k,
    // higher levels by k then I.
    std::vector<int> ranks;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::map<std::pair<std::vector<int>, int>, int>> index(n);
    std::vector<std::vector<std::pair<std::vector<int>, int>>> elems(n);
    for (int p = 0; p < n; ++p) {
        auto sets = subsets(n, p + 1);
        if (p == 0) {
            for (const auto& I : sets)
                for (int k = 1; k <= n; ++k) elems[p].push_back({I, k});
        } else {
            for (int k = 1; k <= n; ++k)
                for (const auto& I : sets) elems[p].push_back({I, k});
        }
        labels.emplace_back();
        for (std::size_t t = 0; t < elems[p].size(); ++t) {
            index[p][elems[p][t]] = static_cast<int>(t);
            labels.back().push_back("e" + std::to_string(p) + "_" + digits(elems[p][t].first) + "_" +
                                    std::to_string(elems[p][t].second));
        }
        ranks.push_back(static_cast<int>(elems[p].size()));
    }
    LieNAlgebroid A(v, GradedBundle(ranks, labels));

    for (int t = 0; t < A.rank(0); ++t) {
        const auto& [I, j] = elems[0][t];
        std::vector<Poly> comps(n, Poly(v));
        comps[j - 1] = var(v, I[0] - 1);
        A.set_anchor(t, VectorField(v, comps));
    }
    for (int p = 1; p < n; ++p)
        for (int t = 0; t < A.rank(p); ++t) {
            const auto& [I, k] = elems[p][t];
            Section d = zero_section(A, p - 1);
            for (std::size_t l = 0; l < I.size(); ++l) {
                std::vector<int> rest = I;
                rest.erase(rest.begin() + static_cast<long>(l));
                Poly c = var(v, I[l] - 1);
                d.coeffs[index[p - 1].at({rest, k})] += l % 2 == 0 ? c : -c;
            }
            A.set_differential(p, t, d);
        }
    for (int p = 0; p < n; ++p) A.declare_l2(0, p);
    for (int s = 0; s < A.rank(0); ++s) {
        const int i = elems[0][s].first[0], j = elems[0][s].second;
        for (int p = 0; p < n; ++p)
            for (int t = 0; t < A.rank(p); ++t) {
                if (p == 0 && t <= s) continue;
                const auto& [I, k] = elems[p][t];
                Section val = zero_section(A, p);
                for (std::size_t l = 0; l < I.size(); ++l) {
                    if (I[l] != j) continue;
                    std::vector<int> J = I;
                    J[l] = i;
                    int sign = sort_with_sign(J);
                    if (sign == 0) continue;
                    val.coeffs[index[p].at({J, k})] += cst(v, sign);
                }
                if (i == k) val.coeffs[index[p].at({I, j})] -= cst(v, 1);
                A.set_l2({0, s}, {p, t}, val);
            }
    }
    return A;
}

LieNAlgebroid build_son(int n) {
    require_small(n, 2, "son");
    VarList v = default_vars(static_cast<std::size_t>(n));
    const int depth = n - 1;
    std::vector<std::vector<std::vector<int>>> sets(depth);
    std::vector<std::map<std::vector<int>, int>> index(depth);
    std::vector<int> ranks;
    std::vector<std::vector<std::string>> labels;
    for (int i = 0; i < depth; ++i) {
        sets[i] = subsets(n, i + 2);
        labels.emplace_back();
        for (std::size_t t = 0; t < sets[i].size(); ++t) {
            index[i][sets[i][t]] = static_cast<int>(t);
            labels.back().push_back("d" + digits(sets[i][t]));
        }
        ranks.push_back(static_cast<int>(sets[i].size()));
    }
    LieNAlgebroid A(v, GradedBundle(ranks, labels));

    for (int t = 0; t < A.rank(0); ++t) {
        const int k = sets[0][t][0], l = sets[0][t][1];
        std::vector<Poly> comps(n, Poly(v));
        comps[l - 1] = var(v, k - 1);
        comps[k - 1] = -var(v, l - 1);
        A.set_anchor(t, VectorField(v, comps));
    }
    // l1 = contraction with d(phi) = sum x_i dx_i.
    for (int i = 1; i < depth; ++i)
        for (int t = 0; t < A.rank(i); ++t) {
            const auto& I = sets[i][t];
            Section d = zero_section(A, i - 1);
            for (std::size_t j = 0; j < I.size(); ++j) {
                std::vector<int> rest = I;
                rest.erase(rest.begin() + static_cast<long>(j));
                Poly c = var(v, I[j] - 1);
                d.coeffs[index[i - 1].at(rest)] += j % 2 == 0 ? c : -c;
            }
            A.set_differential(i, t, d);
        }
    // l2(d_kl, d_I) is the Lie derivative of the multivector d_I along x_k d_l - x_l d_k.
    for (int i = 0; i < depth; ++i) A.declare_l2(0, i);
    for (int s = 0; s < A.rank(0); ++s) {
        const int k = sets[0][s][0], l = sets[0][s][1];
        for (int i = 0; i < depth; ++i)
            for (int t = 0; t < A.rank(i); ++t) {
                if (i == 0 && t <= s) continue;
                const auto& I = sets[i][t];
                Section val = zero_section(A, i);
                for (std::size_t j = 0; j < I.size(); ++j) {
                    // slot j (0-based) replaced by -d_l if I[j] == k, by +d_k if I[j] == l,
                    // then moved to the front: sign (-1)^j.
                    int repl = 0, sign = 0;
                    if (I[j] == k) repl = l, sign = -1;
                    if (I[j] == l) repl = k, sign = 1;
                    if (!repl) continue;
                    std::vector<int> J = I;
                    J.erase(J.begin() + static_cast<long>(j));
                    J.insert(J.begin(), repl);
                    if (j % 2 == 1) sign = -sign;
                    int s2 = sort_with_sign(J);
                    if (s2 == 0) continue;
                    val.coeffs[index[i].at(J)] += cst(v, sign * s2);
                }
                A.set_l2({0, s}, {i, t}, val);
            }
    }
    return A;
}

LieNAlgebroid direct_sum(const LieNAlgebroid& a, const LieNAlgebroid& b) {
    VarList vars = a.vars();
    if (!same_vars(a.vars(), b.vars())) {
        std::vector<std::string> names = *a.vars();
        for (const auto& nm : *b.vars())
            if (std::find(names.begin(), names.end(), nm) == names.end()) names.push_back(nm);
        vars = make_vars(names);
    }
    const int depth = std::max(a.depth(), b.depth());
    std::vector<int> ranks(depth);
    std::vector<std::vector<std::string>> labels(depth);
    for (int l = 0; l < depth; ++l) {
        ranks[l] = a.rank(l) + b.rank(l);
        for (int i = 0; i < a.rank(l); ++i) labels[l].push_back(a.label({l, i}));
    }
    std::vector<std::string> used;
    for (const auto& lv : labels) used.insert(used.end(), lv.begin(), lv.end());
    for (int l = 0; l < depth; ++l)
        for (int i = 0; i < b.rank(l); ++i) {
            std::string lab = b.label({l, i});
            while (std::find(used.begin(), used.end(), lab) != used.end()) lab += "_b";
            used.push_back(lab);
            labels[l].push_back(lab);
        }
    for (int l = 0; l < depth; ++l)
        if (ranks[l] == 0) throw std::invalid_argument("direct sum would have an empty level");
    LieNAlgebroid S(vars, GradedBundle(ranks, labels));

    auto embed_vf = [&](const VectorField& x) {
        std::vector<Poly> comps(vars->size(), Poly(vars));
        for (std::size_t i = 0; i < x.dim(); ++i) {
            auto it = std::find(vars->begin(), vars->end(), (*x.vars())[i]);
            comps[static_cast<std::size_t>(it - vars->begin())] = x[i].embed(vars);
        }
        return VectorField(vars, comps);
    };
    // Place a summand's section at its offset within the sum.
    auto embed_section = [&](const Section& s, bool second) {
        Section out{s.level, {}};
        if (s.coeffs.empty()) return out;
        out.coeffs.assign(ranks[s.level], Poly(vars));
        const int off = second ? a.rank(s.level) : 0;
        for (std::size_t i = 0; i < s.coeffs.size(); ++i) out.coeffs[off + i] = (s.coeffs[i] + Poly(second ? b.vars() : a.vars())).embed(vars);
        return out;
    };
    auto ref = [&](BasisRef r, bool second) { return BasisRef{r.level, r.index + (second ? a.rank(r.level) : 0)}; };

    for (int i = 0; i < a.rank(0); ++i) S.set_anchor(i, embed_vf(a.anchor(i)));
    for (int i = 0; i < b.rank(0); ++i) S.set_anchor(a.rank(0) + i, embed_vf(b.anchor(i)));
    for (int i = 0; i < a.rank(0); ++i)
        for (int j = 0; j < b.rank(0); ++j) {
            VectorField c = lie_bracket(S.anchor(i), S.anchor(a.rank(0) + j));
            if (!c.is_zero())
                throw CrossBracketNonZero("anchors of " + a.label({0, i}) + " and " + b.label({0, j}) +
                                          " do not commute: " + c.to_string());
        }
    for (int l = 1; l < depth; ++l) {
        for (int i = 0; i < a.rank(l); ++i) S.set_differential(l, i, embed_section(a.differential(l, i), false));
        for (int i = 0; i < b.rank(l); ++i) S.set_differential(l, a.rank(l) + i, embed_section(b.differential(l, i), true));
    }

    auto vacuous = [](const LieNAlgebroid& x, std::initializer_list<int> levels) {
        for (int l : levels)
            if (l >= x.depth()) return true;
        return false;
    };
    for (int la = 0; la < depth; ++la)
        for (int lb = la; lb < depth; ++lb) {
            if (la + lb >= depth) continue;
            bool ka = vacuous(a, {la, lb}) || a.l2_known(la, lb);
            bool kb = vacuous(b, {la, lb}) || b.l2_known(la, lb);
            if (ka && kb) S.declare_l2(la, lb);
            for (int lc = lb; lc < depth; ++lc) {
                if (la + lb + lc + 1 >= depth) continue;
                bool ta = vacuous(a, {la, lb, lc}) || a.l3_known(la, lb, lc);
                bool tb = vacuous(b, {la, lb, lc}) || b.l3_known(la, lb, lc);
                if (ta && tb) S.declare_l3(la, lb, lc);
            }
        }
    for (const auto& [key, val] : a.l2_entries()) S.set_l2(ref(key.first, false), ref(key.second, false), embed_section(val, false));
    for (const auto& [key, val] : b.l2_entries()) S.set_l2(ref(key.first, true), ref(key.second, true), embed_section(val, true));
    for (const auto& [key, val] : a.l3_entries())
        S.set_l3(ref(key[0], false), ref(key[1], false), ref(key[2], false), embed_section(val, false));
    for (const auto& [key, val] : b.l3_entries())
        S.set_l3(ref(key[0], true), ref(key[1], true), ref(key[2], true), embed_section(val, true));
    return S;
}

LieNAlgebroid build_son_euler_lifted(int n) {
    LieNAlgebroid S = direct_sum(build_son(n), build_euler(n));
    const int one = S.rank(0) - 1;
    for (int i = 1; i < S.depth(); ++i)
        for (int t = 0; t < S.rank(i); ++t) S.set_l2({0, one}, {i, t}, Poly::constant(i) * S.basis(i, t));
    return S;
}

// ---- regular presentations -------------------------------------------------

RegularPresentation spiral_presentation() {
    RegularPresentation p;
    p.name = "spiral";
    p.vars = make_vars({"x", "y"});
    Poly x = var(p.vars, 0), y = var(p.vars, 1);
    p.generator_names = {"v"};
    p.generators = {VectorField(p.vars, {x - y, x + y})};
    DifferentialForm w(p.vars, 1);
    w.add({0}, x + y);
    w.add({1}, -(x - y));
    p.annihilators = {w};
    p.volume = w;
    p.locus = x * x + y * y;
    p.witness = RatLogExpr::log(x * x + y * y);
    p.invariant = RatFunc(Poly(p.vars, 1), x * x + y * y);
    return p;
}

RegularPresentation circles_presentation() {
    RegularPresentation p;
    p.name = "circles";
    p.vars = make_vars({"x", "y"});
    Poly x = var(p.vars, 0), y = var(p.vars, 1);
    p.generator_names = {"v"};
    p.generators = {VectorField(p.vars, {-y, x})};
    DifferentialForm w(p.vars, 1);
    w.add({0}, Rational(2) * x);
    w.add({1}, Rational(2) * y);
    p.annihilators = {w};
    p.volume = w;
    p.locus = x * x + y * y;
    p.witness = RatLogExpr(Poly(p.vars));
    p.invariant = RatFunc(Poly(p.vars, 1));
    return p;
}

RegularPresentation euler_regular_presentation(int n) {
    if (n < 2) throw std::invalid_argument("euler regular presentation needs n >= 2");
    RegularPresentation p;
    p.name = "euler-regular";
    p.vars = default_vars(static_cast<std::size_t>(n));
    std::vector<Poly> xs;
    Poly q(p.vars);
    for (int i = 0; i < n; ++i) {
        xs.push_back(var(p.vars, i));
        q += xs.back() * xs.back();
    }
    p.generator_names = {"eps"};
    p.generators = {VectorField(p.vars, xs)};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            DifferentialForm w(p.vars, 1);
            w.add({j}, xs[i]);
            w.add({i}, -xs[j]);
            p.annihilators.push_back(w);
        }
    p.volume = interior_product(p.generators[0], DifferentialForm::top(p.vars));
    p.locus = q;
    p.witness = RatLogExpr::log(q, ratio(n, 2));
    if (n % 2 == 0) {
        p.invariant = RatFunc(Poly(p.vars, 1), q.pow(static_cast<unsigned>(n / 2)));
    } else {
        p.invariant = RatFunc(Poly(p.vars, 1), q.pow(static_cast<unsigned>(n)));
        p.invariant_squared = true;
    }
    return p;
}

RegularPresentation poisson3_regular_presentation() {
    RegularPresentation p;
    p.name = "poisson3-regular";
    p.vars = make_vars({"x", "y", "z"});
    Poly x = var(p.vars, 0), y = var(p.vars, 1), zero(p.vars);
    p.generator_names = {"X_x", "X_y", "X_z"};
    p.generators = {VectorField(p.vars, {zero, zero, x}), VectorField(p.vars, {zero, zero, y}),
                    VectorField(p.vars, {-x, -y, zero})};
    DifferentialForm w(p.vars, 1);
    w.add({0}, y);
    w.add({1}, -x);
    p.annihilators = {w};
    p.volume = w;
    p.locus = x * x + y * y;
    p.witness = RatLogExpr::log(x * x + y * y);
    p.invariant = RatFunc(Poly(p.vars, 1), x * x + y * y);
    return p;
}

}  // namespace folia
