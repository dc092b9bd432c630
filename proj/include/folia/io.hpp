// Text presentations, named builtins, and JSON reports.
//
// Algebroid files are line-oriented with [section] headers:
//
//   [variables]     x, y, z
//   [ranks]         3, 1
//   [labels]        0: dx, dy, dz        (one line per level; optional)
//   [anchor]        dx: 0, 0, x          (one component per variable)
//   [differential]  one: y*dx - x*dy
//   [bracket2]      dx, dz: dx
//   [bracket3]      e1, e2, e3: x*f1
//   [declared]      l2: 0 1 | l3: 0 0 0  (blocks whose absent entries are zero)
//   [witness]       ln(x^2 + y^2)
//   [locus]         x^2 + y^2
//   [obstruction]   0, 0, 0              (one point per line)
//   [options]       degree_bound = 6 | exactness_degree = 4
//
// Sections are written as polynomials in the variables and the labels, linear
// in the labels. '#' starts a comment.
//
// Regular presentations use [variables], [generators] ("v: x - y, x + y"),
// [annihilator] and [volume] (lines "x, y: coefficient"; every [annihilator]
// header starts a new form), [locus], [witness], [invariant] and [options]
// (invariant_squared = true).
#pragma once

#include "folia/algebroid.hpp"
#include "folia/modular.hpp"
#include "folia/regfol.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace folia {

class PresentationError : public std::runtime_error {
public:
    PresentationError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct PresentationFile {
    std::string name;
    LieNAlgebroid algebroid;
    std::optional<std::string> witness;
    std::optional<std::string> locus;
    std::vector<std::vector<Rational>> obstruction_points;
    std::optional<int> degree_bound;
    std::optional<int> exactness_degree;
};

PresentationFile parse_presentation(const std::string& text, const std::string& name = "");
std::string write_presentation(const PresentationFile& file);

RegularPresentation parse_regular(const std::string& text, const std::string& name = "");
std::string write_regular(const RegularPresentation& p);

/// Builtin algebroids: euler, poisson3, quadratic, gln, son, son+euler,
/// son+euler-lifted, single-vf (field given as comma-separated components in
/// x1..xm; default (x2^2 + x3^2, 0, 0)). Euler-type builtins carry their
/// known log witness.
PresentationFile builtin_presentation(const std::string& name, std::optional<int> n = std::nullopt,
                                      const std::optional<std::string>& field = std::nullopt);
/// Builtin regular presentations: spiral, circles, euler-regular, poisson3-regular.
RegularPresentation builtin_regular(const std::string& name, std::optional<int> n = std::nullopt);
std::vector<std::string> builtin_names();
std::vector<std::string> builtin_regular_names();

using Json = nlohmann::ordered_json;

struct VerifyOptions {
    std::optional<int> exactness_degree;
};

/// Structure checks; "pass" is false iff some check found a failure.
Json verify_json(const PresentationFile& file, const VerifyOptions& options = {});
/// Full modular pipeline. Throws MissingBracket when theta cannot be computed.
Json modular_json(const PresentationFile& file, const ReportOptions& options);
Json bott_json(const RegularPresentation& p, const std::optional<RatLogExpr>& extra_witness = std::nullopt);

/// Report options from the file, overridden by explicit values.
ReportOptions report_options(const PresentationFile& file, std::optional<int> degree_bound,
                             const std::optional<std::string>& witness,
                             const std::vector<std::vector<Rational>>& points);

std::vector<Rational> parse_point(const std::string& text, std::size_t dim);

}  // namespace folia
