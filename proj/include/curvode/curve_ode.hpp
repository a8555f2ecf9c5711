#pragma once

#include <optional>
#include <string>

#include "curvode/invariants.hpp"
#include "curvode/matrices.hpp"
#include "curvode/multipoly.hpp"

namespace curvode {

enum class OdeBasis { A, D, E, Psi, Derivative };

const char* ode_basis_name(OdeBasis b);
OdeBasis ode_basis_from_name(const std::string& s);

// Canonical differential equation of a generic degree-n plane curve.
//
// `poly` is the equation in the requested alphabet for bases A/D/E. For the
// Psi and Derivative bases it holds the D-alphabet form (Derivative is a pure
// rendering of it; the psi rendering additionally lives in `psi`).
// degree_in_lambda/weight are those of `poly`: it is homogeneous and isobaric,
// each variable weighing its index.
struct CurveOde {
    int n = 0;
    OdeBasis basis = OdeBasis::D;
    MultiPoly poly;
    std::optional<PsiExpression> psi;
    int degree_in_lambda = 0;
    int weight = 0;
};

// Expands the Sylvester determinant, removes the conic's extraneous
// Lambda^0 D factor when n = 2, normalizes sign and content, and re-expresses
// in the requested basis. The symbolic cap bounds the matrix side.
CurveOde curve_ode(int n, OdeBasis basis, int cap = kDefaultSymbolicCap);

}  // namespace curvode
