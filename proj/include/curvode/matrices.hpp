#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "curvode/multipoly.hpp"

namespace curvode {

enum class MatrixBasis { FullA, SylvesterD };

const char* matrix_basis_name(MatrixBasis b);

// Square elimination matrix of side n(n+1)/2 whose vanishing determinant is
// the differential equation of a degree-n plane curve. Rows correspond to the
// normalized derivative orders n+1 .. n(n+3)/2 of the curve equation; columns
// are indexed by (m, s) with block m = 1..n and x-shift s = n-m..0, ordered by
// m ascending then s descending.
struct PolyMatrix {
    int n = 0;
    MatrixBasis basis = MatrixBasis::FullA;
    int side = 0;
    std::vector<MultiPoly> entries;  // row-major, side*side

    const MultiPoly& at(int row, int col) const { return entries[row * side + col]; }

    nlohmann::json to_json() const;
    static PolyMatrix from_json(const nlohmann::json& j);
};

// Entry (j, (m,s)) = Lambda^{n+1+j-s}(m A). Requires n >= 2.
PolyMatrix build_full_matrix(int n);

// Entry (j, (m,s)) = Lambda^{n+1+j-s-2m}(m D); negative superscripts are the
// zero polynomial. Requires n >= 2.
PolyMatrix build_sylvester_matrix(int n);

inline constexpr int kDefaultSymbolicCap = 6;  // matrix side, i.e. n <= 3

// Exact symbolic determinant by minor-caching expansion over column prefixes
// (2^side cached minors). Refuses sides above the cap.
MultiPoly expand_determinant(const PolyMatrix& m, int cap = kDefaultSymbolicCap);

// Exact rational determinant of the evaluated matrix: rows are scaled to
// integers and eliminated fraction-free (Bareiss). The assignment must cover
// every variable appearing in the matrix.
Rational evaluate_determinant(const PolyMatrix& m,
                              const std::map<VarId, Rational>& assignment);

}  // namespace curvode
