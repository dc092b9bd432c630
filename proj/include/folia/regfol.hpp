// Bott connection of regular foliations given by generating vector fields
// and an annihilator frame, valid off a declared singular locus.
#pragma once

#include "folia/fields.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folia {

class NotProportional : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RegularPresentation {
    std::string name;
    VarList vars;
    std::vector<std::string> generator_names;
    std::vector<VectorField> generators;
    std::vector<DifferentialForm> annihilators;  // 1-forms spanning the annihilator
    DifferentialForm volume;                     // top transverse form
    Poly locus;                                  // excluded zero set
    std::optional<RatLogExpr> witness;           // h with theta(u) = u(h)
    std::optional<RatFunc> invariant;            // f with the Bott action trivial on f * volume
    bool invariant_squared = false;              // `invariant` holds f^2 rather than f
};

/// iota_u d xi.
DifferentialForm bott_derivative(const VectorField& u, const DifferentialForm& xi);

/// The factor t with bott_derivative(u, volume) = t * volume.
RatFunc transverse_modular_value(const RegularPresentation& p, const VectorField& u);

/// bott_derivative(u, f * volume) == 0.
bool invariance_check(const RegularPresentation& p, const VectorField& u, const RatFunc& f);
/// u(f2) + 2 f2 theta(u) == 0, for scale factors known only through their square.
bool invariance_check_squared(const RegularPresentation& p, const VectorField& u, const RatFunc& f2);

/// u(h) - theta(u) for each generator u.
std::vector<RatLogExpr> transverse_witness_residuals(const RegularPresentation& p, const RatLogExpr& h);

/// iota_u xi for every generator u and frame form xi; all must vanish.
bool annihilator_consistent(const RegularPresentation& p);

/// nabla_u nabla_w xi - nabla_w nabla_u xi - nabla_[u,w] xi for all generator
/// pairs and every frame form and the volume form; true when all vanish.
bool bott_flat(const RegularPresentation& p);

}  // namespace folia
