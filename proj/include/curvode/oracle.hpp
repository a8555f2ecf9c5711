#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "curvode/curve_ode.hpp"
#include "curvode/matrices.hpp"
#include "curvode/rational.hpp"

namespace curvode {

// Dense univariate polynomial over Rational, coeffs[i] holding x^i.
using UniPoly = std::vector<Rational>;

Rational uni_eval(const UniPoly& p, const Rational& x);
UniPoly uni_derivative(const UniPoly& p);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);

// A plane curve u(x, y) = 0 of total degree n, monic in y^n, together with a
// rational base point on a smooth non-vertical branch.
struct CurveInstance {
    int n = 0;
    std::map<std::pair<int, int>, Rational> coefficients;  // (i, j) -> coeff of x^i y^j
    Rational x0, y0;

    Rational eval(const Rational& x, const Rational& y) const;
    Rational eval_dy(const Rational& x, const Rational& y) const;

    // Throws unless u(x0, y0) = 0, du/dy(x0, y0) != 0 and the y^n term is 1.
    void validate() const;

    nlohmann::json to_json() const;

    friend bool operator==(const CurveInstance&, const CurveInstance&) = default;
};

// Exact derivatives y^(0)..y^(order) of the implicit branch at x0.
// Normalized derivatives are D^i y = values[i] / i!.
struct DerivativeJet {
    int order = 0;
    std::vector<Rational> values;
};

// Deterministic in seed: integer coefficients in [-coeff_bound, coeff_bound],
// y^n forced monic, base point made exact by shifting the constant term.
// Resamples (bounded) until the smoothness invariant holds.
CurveInstance random_curve(int n, std::uint64_t seed, int coeff_bound);

// Derivatives of the branch y(x) through the base point, computed by solving
// u(x0 + t, y0 + sum a_k t^k) = 0 order by order; each step divides by
// du/dy(x0, y0), which validate() guarantees is nonzero.
DerivativeJet implicit_jet(const CurveInstance& c, int order);

// Substitutes the jet into the equation's variables (Lambda^i A = values[i]/i!
// and the D/E rescalings) and returns the exact value; 0 means satisfied.
Rational check_vanishing(const CurveOde& ode, const DerivativeJet& jet);

// Checks D^n(x^r y^k) = x^r Lambda^n(k A + r x^-1) for the given polynomial y:
// left side by direct differentiation, right side through the series calculus
// with Lambda^i A evaluated from y's derivatives at x0.
bool leibnitz_check(int n, int k, int r, const UniPoly& y_poly, const Rational& x0);

enum class VerifyMode { Symbolic, Numeric };

struct VerifyFailure {
    int trial = 0;
    CurveInstance curve;
    Rational value;
};

struct Report {
    int n = 0;
    VerifyMode mode = VerifyMode::Symbolic;
    int trials = 0;
    int passes = 0;
    int discrimination_nonzero = 0;
    int accidental_zeros = 0;
    std::uint64_t seed = 0;
    std::vector<VerifyFailure> failures;

    bool all_passed() const { return passes == trials && failures.empty(); }
    nlohmann::json to_json() const;
    std::string summary() const;
};

// End-to-end validation: degree-n curves must annihilate the degree-n
// equation on every trial; degree-(n+1) curves must generically not, with
// accidental zeros resampled and counted. Symbolic mode goes through
// curve_ode, numeric mode evaluates both elimination matrices directly.
Report verify_degree(int n, int trials, std::uint64_t seed, VerifyMode mode,
                     int cap = kDefaultSymbolicCap);

}  // namespace curvode
