#pragma once

#include "curvode/multipoly.hpp"

namespace curvode {

// Newton-identity basis conversions. Both work in the normalized convention
// Lambda^0 = 1: the unit coefficient never appears as a variable here.

// psi_i expressed in Lambda^1..Lambda^i of the given alphabet. i >= 1.
MultiPoly lambda_to_psi(int i, Alphabet alphabet = Alphabet::E);

// Lambda^i expressed in the abstract power-sum generators psi_1..psi_i.
// Substituting lambda_to_psi(j, alph) for each psi_j gives back Lambda^i.
MultiPoly psi_to_lambda(int i);

// Substitutes every Lambda variable of `from` by its expression in `to`,
// following Lambda^i D = Lambda^{i+2} A and Lambda^i E = Lambda^i D / i!.
// A -> D fails if the polynomial contains Lambda^0 A or Lambda^1 A.
MultiPoly reexpress(const MultiPoly& p, Alphabet from, Alphabet to);

}  // namespace curvode
