#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/builders.hpp"
#include "folia/modular.hpp"
#include "folia/parse.hpp"
#include "oracles.hpp"

using namespace folia;

namespace {

BasisRef ref(const LieNAlgebroid& A, const std::string& label) {
    auto r = A.bundle().find(label);
    REQUIRE(r);
    return {r->first, r->second};
}

Poly cst(const LieNAlgebroid& A, long c) { return Poly(A.vars(), c); }

std::vector<Rational> origin(const LieNAlgebroid& A) { return std::vector<Rational>(A.vars()->size(), 0); }

}  // namespace

TEST_CASE("adjoint traces of the quadratic builder") {
    LieNAlgebroid A = build_quadratic_r2();
    CHECK(adjoint_trace(A, ref(A, "e1").index, 0) == parse_poly("-2*x", A.vars()));
    CHECK(adjoint_trace(A, ref(A, "e1").index, 1).is_zero());
}

TEST_CASE("adjoint traces of gl_n are p C(n, p+1) on the diagonal") {
    for (int n = 2; n <= 5; ++n) {
        LieNAlgebroid A = build_gln(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                int a = ref(A, "e0_" + std::to_string(i) + "_" + std::to_string(j)).index;
                for (int p = 0; p < n; ++p) {
                    long expected = i == j ? p * oracle::binomial(n, p + 1) : 0;
                    CHECK(adjoint_trace(A, a, p) == cst(A, expected));
                }
            }
        CHECK(adjoint_trace(A, ref(A, "e0_1_1").index, 1) == cst(A, n * (n - 1) / 2));
    }
}

TEST_CASE("adjoint_matrix is the matrix of the bracket") {
    LieNAlgebroid A = build_poisson_r3();
    auto m = adjoint_matrix(A, ref(A, "dz").index, 0);
    CHECK(m[0][0] == cst(A, -1));
    CHECK(m[1][1] == cst(A, -1));
    CHECK(m[2][2].is_zero());
    CHECK(m[0][1].is_zero());
}

TEST_CASE("modular one-form of the examples") {
    for (int n = 1; n <= 6; ++n) CHECK(modular_one_form(build_euler(n)).values[0] == Poly(default_vars(n), n));

    LieNAlgebroid P = build_poisson_r3();
    ModularOneForm t = modular_one_form(P);
    CHECK(t.values[ref(P, "dx").index].is_zero());
    CHECK(t.values[ref(P, "dy").index].is_zero());
    const int z = ref(P, "dz").index;
    CHECK(t.values[z] == cst(P, -2));
    CHECK(t.divergences[z] == cst(P, -2));
    CHECK(t.traces[z][0] == cst(P, -2));
    CHECK(t.traces[z][1] == cst(P, -2));

    for (int n = 2; n <= 5; ++n)
        for (const auto& v : modular_one_form(build_gln(n)).values) CHECK(v.is_zero());
    CHECK(modular_one_form(build_gln(1)).values[0] == cst(build_gln(1), 1));

    for (int n = 2; n <= 5; ++n)
        for (const auto& v : modular_one_form(build_son(n)).values) CHECK(v.is_zero());

    VarList v = default_vars(3);
    LieNAlgebroid S = build_single_vf(VectorField(v, {parse_poly("x1^3 + 2*x1", v), Poly(v), Poly(v)}));
    CHECK(modular_one_form(S).values[0] == parse_poly("3*x1^2 + 2", v));
}

TEST_CASE("undeclared adjoint action aborts with MissingBracket") {
    VarList v = make_vars({"x"});
    LieNAlgebroid A(v, GradedBundle({1, 1}));
    A.set_anchor(0, VectorField(v, {Poly(v)}));
    A.declare_l2(0, 0);
    CHECK_THROWS_AS(modular_one_form(A), MissingBracket);
    CHECK_THROWS_AS(adjoint_trace(A, 0, 1), MissingBracket);
}

TEST_CASE("closedness on every builder") {
    for (const auto& A : {build_euler(3), build_poisson_r3(), build_quadratic_r2(), build_gln(2), build_gln(3),
                          build_son(3), build_son(4), build_son_euler_lifted(3)}) {
        auto rep = closedness_check(A, modular_one_form(A).form());
        CHECK(rep.pass);
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("closedness detects a perturbed form") {
    LieNAlgebroid S = build_son(3);
    EOneForm theta = modular_one_form(S).form();
    theta.values[ref(S, "d12").index] += Poly::variable(S.vars(), 0);
    auto rep = closedness_check(S, theta);
    CHECK_FALSE(rep.pass);
    bool d0 = false;
    for (const auto& f : rep.failures)
        if (f.where.find("d123") != std::string::npos) {
            d0 = true;
            CHECK(f.residual == "x1*x3");
        }
    CHECK(d0);
}

TEST_CASE("depth one runs only d1") {
    VarList v = make_vars({"x", "y"});
    LieNAlgebroid A(v, GradedBundle({2}));
    A.set_anchor(0, VectorField(v, {Poly(v, 1), Poly(v)}));
    A.set_anchor(1, VectorField(v, {Poly(v), Poly(v, 1)}));
    A.declare_l2(0, 0);
    auto rep = closedness_check(A, modular_one_form(A).form());
    CHECK(rep.pass);
    CHECK(rep.d0_checked == 0);
    CHECK(rep.d1_checked == 1);
    LieNAlgebroid E = build_euler(2);
    CHECK(closedness_check(E, modular_one_form(E).form()).d0_checked == 0);
}

TEST_CASE("exactness search") {
    LieNAlgebroid G = build_gln(3);
    auto g = exactness_search(G, modular_one_form(G).form(), 2);
    REQUIRE(g);
    CHECK(g->is_zero());
    for (int n = 1; n <= 3; ++n) {
        LieNAlgebroid E = build_euler(n);
        for (int D = 0; D <= 8; ++D) CHECK_FALSE(exactness_search(E, modular_one_form(E).form(), D));
    }
    VarList v = default_vars(3);
    LieNAlgebroid S = build_single_vf(VectorField(v, {parse_poly("x2^2 + x3^2", v), Poly(v), Poly(v)}));
    auto s = exactness_search(S, modular_one_form(S).form(), 4);
    REQUIRE(s);
    CHECK(s->is_zero());
}

TEST_CASE("exactness search finds a nonzero polynomial witness") {
    // rho(one) = d/dx1 and theta = 2 x1 up to the divergence: use theta = d_E(x1^2)
    VarList v = default_vars(2);
    LieNAlgebroid A = build_single_vf(VectorField(v, {Poly(v, 1), Poly(v)}));
    EOneForm theta = d_function(A, parse_poly("x1^2 + x1*x2", v));
    auto g = exactness_search(A, theta, 3);
    REQUIRE(g);
    CHECK(d_function(A, *g).values == theta.values);
}

TEST_CASE("origin obstruction") {
    LieNAlgebroid E = build_euler(2);
    auto o = origin_obstruction(E, modular_one_form(E).form(), origin(E));
    CHECK(o.obstructed);
    CHECK(o.value == 2);

    LieNAlgebroid P = build_poisson_r3();
    auto op = origin_obstruction(P, modular_one_form(P).form(), origin(P));
    CHECK(op.obstructed);
    CHECK(P.label({0, op.basis_index}) == "dz");
    CHECK(op.value == -2);
    // off the singular leaf some anchor is nonzero
    CHECK_FALSE(origin_obstruction(P, modular_one_form(P).form(), {1, 0, 0}).obstructed);

    LieNAlgebroid S = build_son(3);
    CHECK_FALSE(origin_obstruction(S, modular_one_form(S).form(), origin(S)).obstructed);
}

TEST_CASE("witness verification") {
    for (int n = 1; n <= 5; ++n) {
        LieNAlgebroid E = build_euler(n);
        std::string q;
        for (int i = 1; i <= n; ++i) q += (i > 1 ? " + x" : "x") + std::to_string(i) + "^2";
        RatLogExpr g = RatLogExpr::log(parse_poly(q, E.vars()), ratio(n, 2));
        CHECK(verify_witness(E, modular_one_form(E).form(), g).pass);
    }
    LieNAlgebroid P = build_poisson_r3();
    EOneForm t = modular_one_form(P).form();
    CHECK(verify_witness(P, t, parse_ratlog("ln(x^2 + y^2)", P.vars())).pass);
    auto bad = verify_witness(P, t, parse_ratlog("1/2*ln(x^2 + y^2)", P.vars()));
    CHECK_FALSE(bad.pass);
    CHECK(bad.residuals[ref(P, "dz").index] == RatLogExpr(Poly::constant(1)));
}

TEST_CASE("assembled reports") {
    ModularReport e = assemble_report(build_euler(3));
    CHECK(e.unimodular == Unimodular::No);
    CHECK(e.exactness.kind == Verdict::NotExactNear);

    ModularReport g = assemble_report(build_gln(4));
    CHECK(g.unimodular == Unimodular::Yes);
    CHECK(g.exactness.kind == Verdict::ExactWithWitness);
    REQUIRE(g.exactness.witness);
    CHECK(g.exactness.witness->is_zero());

    ModularReport s = assemble_report(direct_sum(build_son(3), build_euler(3)));
    CHECK(s.unimodular == Unimodular::No);

    // theta = 2 x1 along (1 + x1^2) d/dx1 needs ln(1 + x1^2): no polynomial witness, no obstruction
    VarList v = default_vars(1);
    ModularReport i = assemble_report(build_single_vf(VectorField(v, {parse_poly("1 + x1^2", v)})));
    CHECK(i.unimodular == Unimodular::Unknown);
    CHECK(i.exactness.kind == Verdict::InconclusiveAtBound);
    CHECK(to_string(i.exactness.kind) == "inconclusive_at_bound");
}

TEST_CASE("witness and obstruction are never both reported") {
    for (const auto& A : {build_euler(2), build_poisson_r3(), build_quadratic_r2(), build_gln(1), build_gln(3),
                          build_son(3)}) {
        ModularReport r = assemble_report(A);
        bool obstructed = false;
        for (const auto& o : r.obstructions) obstructed = obstructed || o.obstructed;
        CHECK_FALSE((r.exactness.kind == Verdict::ExactWithWitness && obstructed));
        CHECK((r.unimodular == Unimodular::Yes) == (r.exactness.kind == Verdict::ExactWithWitness));
        CHECK((r.unimodular == Unimodular::No) == (r.exactness.kind == Verdict::NotExactNear));
    }
}

TEST_CASE("supertrace vanishes on commutators") {
    oracle::Rng rng(43);
    std::vector<LieNAlgebroid> builders{build_poisson_r3(), build_quadratic_r2(), build_gln(2), build_gln(3),
                                        build_son(3),       build_son(4)};
    for (int t = 0; t < 200; ++t) {
        const LieNAlgebroid& A = builders[rng.uniform(0, static_cast<int>(builders.size()) - 1)];
        int a = rng.uniform(0, A.rank(0) - 1), b = rng.uniform(0, A.rank(0) - 1);
        CHECK(supertrace_of_commutator(A, a, b).is_zero());
    }
}

TEST_CASE("scaling the Berezinian section shifts theta by d ln f") {
    for (const auto& A : {build_euler(2), build_poisson_r3(), build_gln(2)}) {
        EOneForm theta = modular_one_form(A).form();
        const VarList& v = A.vars();
        std::string x1 = (*v)[0], x2 = (*v)[1];
        for (const std::string& f : {"1 + " + x1 + "^2", std::string("2"), "3 + " + x2 + "^2"})
            CHECK(scaling_invariance_holds(A, theta, parse_poly(f, v)));
    }
}

TEST_CASE("Berezinian descriptor") {
    auto b = berezinian(build_poisson_r3());
    CHECK(b.depth_even);
    CHECK(b.factors == std::vector<std::string>{"top(T*M)", "top(E_0)", "top(E_-1*)"});
    CHECK(b.weights == std::vector<int>{1, -1});
    auto g = berezinian(build_gln(3));
    CHECK(g.factors.size() == 4);
    CHECK(g.factors[3] == "top(E_-2)");
}
