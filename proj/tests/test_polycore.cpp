#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folia/fields.hpp"
#include "folia/parse.hpp"
#include "oracles.hpp"

using namespace folia;

namespace {

VarList xyz = make_vars({"x", "y", "z"});
VarList xy = make_vars({"x", "y"});

Poly P(const std::string& s, const VarList& v = xyz) { return parse_poly(s, v); }

VectorField euler_field(const VarList& v) {
    std::vector<Poly> c;
    for (std::size_t i = 0; i < v->size(); ++i) c.push_back(Poly::variable(v, i));
    return VectorField(v, c);
}

// omega = sum (-1)^(i-1) x_i dx_1 ^ .. ^ ^dx_i ^ .. ^ dx_n
DifferentialForm spherical_form(const VarList& v) {
    const int n = static_cast<int>(v->size());
    DifferentialForm w(v, n - 1);
    for (int i = 0; i < n; ++i) {
        DifferentialForm::Word word;
        for (int j = 0; j < n; ++j)
            if (j != i) word.push_back(j);
        Poly c = Poly::variable(v, i);
        w.add(word, i % 2 == 0 ? c : -c);
    }
    return w;
}

}  // namespace

TEST_CASE("canonical printing in graded-lex order") {
    CHECK(P("1 + x*y*y - 3/2*x").to_string() == "x*y^2 - 3/2*x + 1");
    CHECK(P("(x + y)^2").to_string() == "x^2 + 2*x*y + y^2");
    CHECK(P("x - x").to_string() == "0");
    CHECK(P("z + y + x").to_string() == "x + y + z");
    CHECK(P("0.5*x").to_string() == "1/2*x");
    CHECK(P("(x^2 - y^2)/(x - y)", xy).to_string() == "x + y");
}

TEST_CASE("no stored zero coefficients") {
    Poly p = P("x^2 + y") - P("x^2");
    CHECK(p.terms().size() == 1);
    Poly q = P("x*y") * P("x - y") + P("x*y^2");
    for (const auto& [e, c] : q.terms()) CHECK(c != 0);
}

TEST_CASE("derive") {
    CHECK(P("x^2*y").derive(0) == P("2*x*y"));
    CHECK(P("7").derive(0).is_zero());
    VarList v = default_vars(4);
    Poly phi = parse_poly("1/2*(x1^2 + x2^2 + x3^2 + x4^2)", v);
    CHECK(phi.derive(0) == Poly::variable(v, 0));
}

TEST_CASE("derivatives commute") {
    oracle::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Poly p = rng.poly(xyz, 5, 6);
        int i = rng.uniform(0, 2), j = rng.uniform(0, 2);
        CHECK(p.derive(i).derive(j) == p.derive(j).derive(i));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    oracle::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        Poly a = rng.poly(xyz, 3, 4), b = rng.poly(xyz, 3, 4), c = rng.poly(xyz, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism (oracle)") {
    oracle::Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        Poly a = rng.poly(xyz, 3, 4), b = rng.poly(xyz, 3, 4);
        auto pt = rng.point(3);
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}

TEST_CASE("evaluate_at") {
    std::vector<Rational> o{0, 0, 0};
    CHECK(evaluate_at(P("x^2 + 1"), o) == 1);
    VarList v = default_vars(2);
    std::vector<Rational> p{2, 3};
    CHECK(evaluate_at(parse_poly("x1*x2", v), p) == 6);
    auto e = evaluate_at(euler_field(xyz), o);
    CHECK(e == std::vector<Rational>{0, 0, 0});
}

TEST_CASE("apply_vf") {
    VarList v = default_vars(3);
    RatLogExpr h = parse_ratlog("ln(sqrt(x1^2 + x2^2 + x3^2))", v);
    CHECK(apply_vf(euler_field(v), h) == RatLogExpr(Poly::constant(1)));

    VectorField xdz(xyz, {Poly(xyz), Poly(xyz), P("x")});
    CHECK(apply_vf(xdz, P("z")) == P("x"));

    VectorField spiral(xy, {P("x - y", xy), P("x + y", xy)});
    CHECK(apply_vf(spiral, parse_ratlog("ln(x^2 + y^2)", xy)) == RatLogExpr(Poly::constant(2)));
    CHECK(apply_vf(spiral, parse_ratlog("1/2*ln(x^2 + y^2)", xy)) == RatLogExpr(Poly::constant(1)));
}

TEST_CASE("apply_vf on rational-log expressions agrees with the expansion oracle") {
    oracle::Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        Poly num = rng.poly(xy, 3, 3);
        Poly den = rng.poly(xy, 2, 2) + Poly(xy, 1) * P("x^2 + y^2 + 1", xy);
        Poly arg = rng.poly(xy, 2, 3);
        if (arg.is_zero()) arg = P("x", xy);
        RatLogExpr g = RatLogExpr(RatFunc(num, den)) + RatLogExpr::log(arg, rng.rational());
        VectorField x = rng.field(xy, 2, 3);
        RatLogExpr got = apply_vf(x, g);
        CHECK_FALSE(got.has_logs());
        CHECK(got.rational() == oracle::apply_by_expansion(x, g));
    }
}

TEST_CASE("log normalization splits positive constants") {
    RatLogExpr a = parse_ratlog("ln(2*x^2 + 2*y^2)", xy);
    RatLogExpr b = parse_ratlog("ln(2) + ln(x^2 + y^2)", xy);
    CHECK(a == b);
    CHECK_FALSE(a == parse_ratlog("ln(x^2 + y^2)", xy));
    CHECK(parse_ratlog("ln(x) - ln(x)", xy).is_zero());
    CHECK(RatLogExpr::log(P("x", xy), 2).to_string() == "2*ln(x)");
}

TEST_CASE("lie_bracket") {
    VectorField xdz(xyz, {Poly(xyz), Poly(xyz), P("x")});
    VectorField xz(xyz, {P("-x"), P("-y"), Poly(xyz)});
    CHECK(lie_bracket(xdz, xz) == xdz);
    CHECK(lie_bracket(xz, xz).is_zero());

    VarList v = default_vars(4);
    VectorField rot(v, {Poly(v), -Poly::variable(v, 2), Poly::variable(v, 1), Poly(v)});
    CHECK(lie_bracket(rot, euler_field(v)).is_zero());
}

TEST_CASE("lie_bracket antisymmetry and Jacobi on random cubic fields") {
    oracle::Rng rng(19);
    for (int t = 0; t < 200; ++t) {
        VectorField a = rng.field(xyz, 3, 2), b = rng.field(xyz, 3, 2), c = rng.field(xyz, 3, 2);
        CHECK((lie_bracket(a, b) + lie_bracket(b, a)).is_zero());
        VectorField j = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                        lie_bracket(c, lie_bracket(a, b));
        CHECK(j.is_zero());
    }
}

TEST_CASE("lie_bracket is the commutator of derivations (oracle)") {
    oracle::Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        VectorField a = rng.field(xyz, 2, 2), b = rng.field(xyz, 2, 2);
        Poly f = rng.poly(xyz, 3, 4);
        CHECK(lie_bracket(a, b).apply(f) == a.apply(b.apply(f)) - b.apply(a.apply(f)));
    }
}

TEST_CASE("divergence") {
    for (int n = 1; n <= 6; ++n) {
        VarList v = default_vars(n);
        CHECK(divergence(euler_field(v)) == Poly(v, n));
    }
    VectorField rot(xyz, {-P("y"), P("x"), Poly(xyz)});
    CHECK(divergence(rot).is_zero());
    VectorField q(xy, {P("x^2", xy), Poly(xy)});
    CHECK(divergence(q) == P("2*x", xy));
}

TEST_CASE("exterior_derivative") {
    DifferentialForm w(xy, 1);
    w.add({0}, P("x + y", xy));
    w.add({1}, -P("x - y", xy));
    DifferentialForm expected(xy, 2);
    expected.add({0, 1}, Poly(xy, -2));
    CHECK(exterior_derivative(w) == expected);

    DifferentialForm dx(xy, 1);
    dx.add({0}, Poly(xy, 1));
    CHECK(exterior_derivative(dx).is_zero());

    for (int n = 2; n <= 5; ++n) {
        VarList v = default_vars(n);
        CHECK(exterior_derivative(spherical_form(v)) == DifferentialForm::top(v, Poly(v, n)));
    }
    CHECK_THROWS_AS(exterior_derivative(DifferentialForm::top(xy)), std::domain_error);
}

TEST_CASE("d squared vanishes on random forms of every degree") {
    oracle::Rng rng(29);
    VarList v = default_vars(4);
    for (int t = 0; t < 200; ++t) {
        int k = rng.uniform(0, 2);
        DifferentialForm w(v, k);
        for (int s = 0; s < 3; ++s) {
            std::vector<int> idx{0, 1, 2, 3};
            std::shuffle(idx.begin(), idx.end(), rng.gen);
            idx.resize(k);
            Poly q = rng.poly(v, 1, 2);
            RatFunc c(rng.poly(v, 3, 3), Poly(v, 1) + q * q);
            w.add(idx, c);
        }
        CHECK(exterior_derivative(exterior_derivative(w)).is_zero());
    }
}

TEST_CASE("interior_product") {
    for (int n = 2; n <= 5; ++n) {
        VarList v = default_vars(n);
        CHECK(interior_product(euler_field(v), DifferentialForm::top(v)) == spherical_form(v));
    }
    VectorField s(xy, {P("x - y", xy), P("x + y", xy)});
    DifferentialForm expected(xy, 1);
    expected.add({1}, P("x - y", xy));
    expected.add({0}, -P("x + y", xy));
    CHECK(interior_product(s, DifferentialForm::top(xy)) == expected);
}

TEST_CASE("iota squared vanishes") {
    oracle::Rng rng(31);
    VarList v = default_vars(4);
    for (int t = 0; t < 200; ++t) {
        VectorField x = rng.field(v, 2, 2);
        DifferentialForm w(v, 3);
        w.add({0, 1, 2}, rng.poly(v, 2, 2));
        w.add({1, 2, 3}, rng.poly(v, 2, 2));
        w.add({0, 2, 3}, rng.poly(v, 2, 2));
        CHECK(interior_product(x, interior_product(x, w)).is_zero());
    }
}

TEST_CASE("word order in DifferentialForm::add carries the sign") {
    DifferentialForm a(xyz, 2), b(xyz, 2);
    a.add({1, 0}, Poly(xyz, 1));
    b.add({0, 1}, Poly(xyz, -1));
    CHECK(a == b);
    DifferentialForm c(xyz, 2);
    c.add({1, 1}, Poly(xyz, 1));
    CHECK(c.is_zero());
}

TEST_CASE("rational functions") {
    RatFunc r(P("x^2 - y^2", xy), P("2*x - 2*y", xy));
    CHECK(r.is_polynomial());
    CHECK(r.as_poly() == P("1/2*x + 1/2*y", xy));
    RatFunc q(P("1", xy), P("x^2 + y^2", xy));
    CHECK(q.to_string() == "(1)/(x^2 + y^2)");
    CHECK(q * RatFunc(P("x^2 + y^2", xy)) == RatFunc(Poly(xy, 1)));
    CHECK_THROWS(q.as_poly());
}

TEST_CASE("variable contexts") {
    Poly c = Poly::constant(3);
    CHECK((c + P("x")).vars() == xyz);
    VarList other = make_vars({"u", "v"});
    CHECK_THROWS_AS(P("x") + parse_poly("u", other), IncompatibleVariables);
}

TEST_CASE("parse errors carry a column") {
    try {
        parse_poly("x + * y", xyz);
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_poly("w + 1", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("1/x", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("ln(x)", xyz), ParseError);
    CHECK_THROWS_AS(parse_poly("(x + 1", xyz), ParseError);
    CHECK(parse_rational("-3/6") == ratio(-1, 2));
}

TEST_CASE("monomial enumeration") {
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_up_to(3, 2).size() == 10);
    CHECK(monomials_of_degree(2, 0).size() == 1);
}
