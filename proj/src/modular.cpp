#include "folia/modular.hpp"

#include "folia/linalg.hpp"

namespace folia {

std::vector<std::vector<Poly>> adjoint_matrix(const LieNAlgebroid& A, int a, int level) {
    const int r = A.rank(level);
    std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r, Poly(A.vars())));
    if (!A.l2_known(0, level))
        throw MissingBracket("l2(E_0, E_" + std::string(level ? "-" : "") + std::to_string(level) + ") is not declared");
    for (int col = 0; col < r; ++col) {
        Section s = A.l2(BasisRef{0, a}, BasisRef{level, col});
        for (std::size_t row = 0; row < s.coeffs.size(); ++row) m[row][col] = s.coeffs[row] + Poly(A.vars());
    }
    return m;
}

Poly adjoint_trace(const LieNAlgebroid& A, int a, int level) {
    auto m = adjoint_matrix(A, a, level);
    Poly t(A.vars());
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

Poly supertrace_of_commutator(const LieNAlgebroid& A, int a, int b) {
    Poly total(A.vars());
    for (int level = 0; level < A.depth(); ++level) {
        auto ma = adjoint_matrix(A, a, level);
        auto mb = adjoint_matrix(A, b, level);
        Poly t(A.vars());
        const std::size_t r = ma.size();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k) t += ma[i][k] * mb[k][i] - mb[i][k] * ma[k][i];
        total += level % 2 == 0 ? t : -t;
    }
    return total;
}

BerezinianDescriptor berezinian(const LieNAlgebroid& A) {
    BerezinianDescriptor d;
    d.depth_even = A.depth() % 2 == 0;
    d.factors.push_back("top(T*M)");
    for (int i = 0; i < A.depth(); ++i) {
        std::string e = "E_" + (i == 0 ? std::string("0") : "-" + std::to_string(i));
        d.factors.push_back(i % 2 == 0 ? "top(" + e + ")" : "top(" + e + "*)");
        d.weights.push_back(i % 2 == 0 ? 1 : -1);
    }
    return d;
}

ModularOneForm modular_one_form(const LieNAlgebroid& A) {
    ModularOneForm th;
    th.provenance = "constant wedge of all basis elements with dx1^...^dxn";
    for (int a = 0; a < A.rank(0); ++a) {
        Poly div = divergence(A.anchor(a)) + Poly(A.vars());
        Poly v = div;
        std::vector<Poly> traces;
        for (int i = 0; i < A.depth(); ++i) {
            Poly t = adjoint_trace(A, a, i);
            v += i % 2 == 0 ? t : -t;
            traces.push_back(std::move(t));
        }
        th.values.push_back(std::move(v));
        th.divergences.push_back(std::move(div));
        th.traces.push_back(std::move(traces));
    }
    return th;
}

ClosednessReport closedness_check(const LieNAlgebroid& A, const EOneForm& theta) {
    ClosednessReport r;
    auto d0 = d0_on_oneform(A, theta);
    for (std::size_t u = 0; u < d0.size(); ++u) {
        ++r.d0_checked;
        if (!d0[u].is_zero())
            r.failures.push_back({"d0(" + A.label({1, static_cast<int>(u)}) + ")", d0[u].to_string()});
    }
    for (int a = 0; a < A.rank(0); ++a)
        for (int b = a + 1; b < A.rank(0); ++b) {
            const std::string where = "d1(" + A.label({0, a}) + ", " + A.label({0, b}) + ")";
            try {
                Poly v = d1_on_oneform(A, theta, {0, a}, {0, b});
                ++r.d1_checked;
                if (!v.is_zero()) r.failures.push_back({where, v.to_string()});
            } catch (const MissingBracket& e) {
                r.unchecked.push_back(where + ": " + e.what());
            }
        }
    r.pass = r.failures.empty() && r.unchecked.empty();
    return r;
}

std::optional<Poly> exactness_search(const LieNAlgebroid& A, const EOneForm& theta, int bound) {
    const std::size_t n = A.vars()->size();
    auto mons = monomials_up_to(n, bound);
    // Unknown: coefficient of monomial m in g. Equations: coefficient of each
    // monomial e in rho(a)[g] - theta(a), for each basis a.
    std::map<std::pair<int, Exponents>, std::size_t> eq_index;
    std::vector<SparseRow> rows;
    std::vector<Rational> rhs;
    auto eq = [&](int a, const Exponents& e) {
        auto [it, ins] = eq_index.try_emplace({a, e}, rows.size());
        if (ins) {
            rows.emplace_back();
            rhs.emplace_back(0);
        }
        return it->second;
    };
    for (std::size_t col = 0; col < mons.size(); ++col) {
        Poly m = Poly::monomial(A.vars(), mons[col]);
        for (int a = 0; a < A.rank(0); ++a) {
            Poly img = A.anchor(a).apply(m);
            for (const auto& [e, c] : img.terms()) rows[eq(a, e)][col] += c;
        }
    }
    for (int a = 0; a < A.rank(0); ++a) {
        Poly t = theta.values.at(a) + Poly(A.vars());
        for (const auto& [e, c] : t.terms()) rhs[eq(a, e)] += c;
    }
    for (auto& row : rows)
        for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
    auto sol = solve(mons.size(), rows, rhs);
    if (!sol) return std::nullopt;
    Poly g(A.vars());
    for (std::size_t col = 0; col < mons.size(); ++col)
        if ((*sol)[col] != 0) g.add_term(mons[col], (*sol)[col]);
    return g;
}

Obstruction origin_obstruction(const LieNAlgebroid& A, const EOneForm& theta, const std::vector<Rational>& point) {
    if (point.size() != A.vars()->size()) throw std::invalid_argument("obstruction point has wrong dimension");
    Obstruction o;
    o.point = point;
    for (int a = 0; a < A.rank(0); ++a)
        for (const auto& v : evaluate_at(A.anchor(a), point))
            if (v != 0) return o;
    for (int a = 0; a < A.rank(0); ++a) {
        Rational v = evaluate_at(theta.values.at(a) + Poly(A.vars()), point);
        if (v != 0) {
            o.obstructed = true;
            o.basis_index = a;
            o.value = v;
            return o;
        }
    }
    return o;
}

WitnessCheck verify_witness(const LieNAlgebroid& A, const EOneForm& theta, const RatLogExpr& g) {
    WitnessCheck w;
    for (int a = 0; a < A.rank(0); ++a) {
        RatLogExpr res = apply_vf(A.anchor(a), g) - RatLogExpr(theta.values.at(a) + Poly(A.vars()));
        if (!res.is_zero()) w.pass = false;
        w.residuals.push_back(std::move(res));
    }
    return w;
}

std::vector<RatFunc> scaled_modular_form(const LieNAlgebroid& A, const EOneForm& theta, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("scale factor must be nonzero");
    std::vector<RatFunc> out;
    for (int a = 0; a < A.rank(0); ++a)
        out.emplace_back(A.anchor(a).apply(f) + f * theta.values.at(a), f);
    return out;
}

bool scaling_invariance_holds(const LieNAlgebroid& A, const EOneForm& theta, const Poly& f) {
    auto scaled = scaled_modular_form(A, theta, f);
    RatLogExpr lnf = RatLogExpr::log(f);
    for (int a = 0; a < A.rank(0); ++a) {
        RatLogExpr diff = RatLogExpr(scaled[a] - RatFunc(theta.values.at(a)));
        if (!(diff == apply_vf(A.anchor(a), lnf))) return false;
    }
    return true;
}

ModularReport assemble_report(const LieNAlgebroid& A, const ReportOptions& options) {
    ModularReport r;
    r.theta = modular_one_form(A);
    const EOneForm theta = r.theta.form();
    r.closedness = closedness_check(A, theta);

    auto points = options.obstruction_points;
    if (points.empty()) points.push_back(std::vector<Rational>(A.vars()->size(), 0));
    for (const auto& p : points) r.obstructions.push_back(origin_obstruction(A, theta, p));

    if (options.witness) r.witness_check = verify_witness(A, theta, *options.witness);

    r.exactness.bound = options.degree_bound;
    if (auto g = exactness_search(A, theta, options.degree_bound)) {
        r.exactness.kind = Verdict::ExactWithWitness;
        r.exactness.witness = RatLogExpr(*g);
        r.exactness.domain = "full space";
        r.unimodular = Unimodular::Yes;
    } else {
        for (const auto& o : r.obstructions)
            if (o.obstructed) {
                r.exactness.kind = Verdict::NotExactNear;
                r.exactness.point = o.point;
                r.exactness.basis_index = o.basis_index;
                r.unimodular = Unimodular::No;
                break;
            }
    }
    if (r.exactness.kind == Verdict::ExactWithWitness)
        for (const auto& o : r.obstructions)
            if (o.obstructed) throw std::logic_error("polynomial witness found at an obstructed point");
    return r;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::ExactWithWitness: return "exact";
        case Verdict::NotExactNear: return "not_exact_near";
        case Verdict::InconclusiveAtBound: return "inconclusive_at_bound";
    }
    return "";
}

std::string to_string(Unimodular u) {
    switch (u) {
        case Unimodular::Yes: return "yes";
        case Unimodular::No: return "no";
        case Unimodular::Unknown: return "unknown";
    }
    return "";
}

}  // namespace folia
