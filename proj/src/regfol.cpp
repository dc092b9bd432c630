#include "folia/regfol.hpp"

namespace folia {

DifferentialForm bott_derivative(const VectorField& u, const DifferentialForm& xi) {
    return interior_product(u, exterior_derivative(xi));
}

RatFunc transverse_modular_value(const RegularPresentation& p, const VectorField& u) {
    if (p.volume.is_zero()) throw std::invalid_argument("transverse volume form is zero");
    DifferentialForm d = bott_derivative(u, p.volume);
    if (d.is_zero()) return RatFunc(Poly(p.vars));
    const auto& [word, c] = *p.volume.terms().begin();
    RatFunc t = d.coefficient(word) / c;
    if (!(t * p.volume == d)) throw NotProportional("the Bott derivative of the volume form along " + u.to_string() +
                                                    " is not a multiple of it");
    return t;
}

bool invariance_check(const RegularPresentation& p, const VectorField& u, const RatFunc& f) {
    return bott_derivative(u, f * p.volume).is_zero();
}

bool invariance_check_squared(const RegularPresentation& p, const VectorField& u, const RatFunc& f2) {
    RatFunc t = transverse_modular_value(p, u);
    return (u.apply(f2) + RatFunc(Poly::constant(2)) * f2 * t).is_zero();
}

std::vector<RatLogExpr> transverse_witness_residuals(const RegularPresentation& p, const RatLogExpr& h) {
    std::vector<RatLogExpr> out;
    for (const auto& u : p.generators) out.push_back(apply_vf(u, h) - RatLogExpr(transverse_modular_value(p, u)));
    return out;
}

bool annihilator_consistent(const RegularPresentation& p) {
    for (const auto& u : p.generators)
        for (const auto& xi : p.annihilators)
            if (!interior_product(u, xi).is_zero()) return false;
    return true;
}

bool bott_flat(const RegularPresentation& p) {
    std::vector<DifferentialForm> forms = p.annihilators;
    forms.push_back(p.volume);
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        for (std::size_t j = i + 1; j < p.generators.size(); ++j) {
            const VectorField& u = p.generators[i];
            const VectorField& w = p.generators[j];
            VectorField uw = lie_bracket(u, w);
            for (const auto& xi : forms) {
                DifferentialForm r = bott_derivative(u, bott_derivative(w, xi)) -
                                     bott_derivative(w, bott_derivative(u, xi)) - bott_derivative(uw, xi);
                if (!r.is_zero()) return false;
            }
        }
    return true;
}

}  // namespace folia
