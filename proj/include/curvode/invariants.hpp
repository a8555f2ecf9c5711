#pragma once

#include <json.hpp>

#include "curvode/multipoly.hpp"

namespace curvode {

// Polynomial in the abstract power-sum generators psi_1, psi_2, ... The
// underlying MultiPoly uses PSI variables only.
class PsiExpression {
  public:
    PsiExpression() = default;
    explicit PsiExpression(MultiPoly p);

    const MultiPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    bool contains_psi1() const;

    // Substitutes lambda_to_psi(i, alphabet) for every psi_i, yielding the
    // expansion in Lambda variables (normalized convention Lambda^0 = 1).
    MultiPoly expand(Alphabet alphabet) const;

    std::string to_string() const;  // factors within a term by index descending
    nlohmann::json to_json() const;
    static PsiExpression from_json(const nlohmann::json& j);

    friend bool operator==(const PsiExpression&, const PsiExpression&) = default;

  private:
    MultiPoly poly_;
};

// The linear derivation whose kernel consists of the semi-invariants:
//   on D-variables: Lambda^i -> i * Lambda^{i-1}
//   on E-variables: Lambda^i -> Lambda^{i-1}
// with Lambda^0 = 1 substituted into the images. Operands must be normalized
// (no index-0 variables) and purely in the derivation's alphabet.
struct Derivation {
    Alphabet alphabet;  // D or E
};

inline constexpr Derivation nabla_d{Alphabet::D};
inline constexpr Derivation nabla_e{Alphabet::E};

MultiPoly nabla(const Derivation& d, const MultiPoly& p);

bool is_semi_invariant(const MultiPoly& p, Alphabet alphabet);

// psi_3, the invariant whose vanishing is the differential equation of all
// plane conics (Monge's equation).
PsiExpression monge_invariant();

// 48 psi_5 psi_3 - 20 psi_3^2 psi_2 - psi_2^4 + 12 psi_2^2 psi_4 - 36 psi_4^2,
// the next projective differential invariant after Monge's.
PsiExpression halphen_invariant();

// Pads every monomial with Lambda^0 of the given alphabet up to
// target_degree; fails if a monomial already exceeds it.
MultiPoly homogenize(const MultiPoly& p, int target_degree, Alphabet alphabet);
MultiPoly homogenize(const PsiExpression& p, int target_degree,
                     Alphabet alphabet = Alphabet::E);

// Rewrites a polynomial in Lambda variables (Lambda^0 = 1 convention) of one
// alphabet as a polynomial in the psi generators. Always exact: over the
// rationals the Lambda and psi families generate the same ring.
PsiExpression rewrite_in_psi(const MultiPoly& p);

}  // namespace curvode
