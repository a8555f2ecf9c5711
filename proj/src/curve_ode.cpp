#include "curvode/curve_ode.hpp"

#include <stdexcept>

#include "curvode/alphabet_ops.hpp"

namespace curvode {

const char* ode_basis_name(OdeBasis b) {
    switch (b) {
        case OdeBasis::A: return "A";
        case OdeBasis::D: return "D";
        case OdeBasis::E: return "E";
        case OdeBasis::Psi: return "psi";
        case OdeBasis::Derivative: return "derivative";
    }
    throw std::logic_error("unreachable basis");
}

OdeBasis ode_basis_from_name(const std::string& s) {
    if (s == "A") return OdeBasis::A;
    if (s == "D") return OdeBasis::D;
    if (s == "E") return OdeBasis::E;
    if (s == "psi") return OdeBasis::Psi;
    if (s == "derivative") return OdeBasis::Derivative;
    throw std::invalid_argument("unknown basis: " + s);
}

CurveOde curve_ode(int n, OdeBasis basis, int cap) {
    MultiPoly det = expand_determinant(build_sylvester_matrix(n), cap);

    // The 3x3 conic determinant carries the extraneous Lambda^0 D factor
    // (the y''/2 the classical derivation divides away). No analogous factor
    // is known for n >= 3, so the determinant is kept whole there.
    if (n == 2) det = det.divide_exact_by_var(lam(Alphabet::D, 0));

    det = det.canonicalized();

    CurveOde ode;
    ode.n = n;
    ode.basis = basis;
    switch (basis) {
        case OdeBasis::D:
        case OdeBasis::Derivative:
            ode.poly = det;
            break;
        case OdeBasis::A:
            ode.poly = reexpress(det, Alphabet::D, Alphabet::A).canonicalized();
            break;
        case OdeBasis::E:
            ode.poly = reexpress(det, Alphabet::D, Alphabet::E).canonicalized();
            break;
        case OdeBasis::Psi: {
            ode.poly = det;
            const MultiPoly in_e = reexpress(det, Alphabet::D, Alphabet::E)
                                       .substitute(lam(Alphabet::E, 0), Rational(1));
            PsiExpression rewritten = rewrite_in_psi(in_e);
            if (rewritten.contains_psi1())
                throw std::domain_error(
                    "equation is not a polynomial in psi_2, psi_3, ... (psi_1 present)");
            ode.psi = PsiExpression(rewritten.poly().canonicalized());
            break;
        }
    }

    if (!ode.poly.is_homogeneous(&ode.degree_in_lambda))
        throw std::logic_error("curve equation failed the homogeneity invariant");
    if (!ode.poly.is_isobaric(&ode.weight))
        throw std::logic_error("curve equation failed the isobarity invariant");
    return ode;
}

}  // namespace curvode
