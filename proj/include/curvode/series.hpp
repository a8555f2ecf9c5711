#pragma once

#include <vector>

#include "curvode/multipoly.hpp"

namespace curvode {

// Truncated generating series sum_{i=0}^{N} z^i * c_i with MultiPoly
// coefficients. Results of arithmetic are valid through z^min(N_a, N_b); the
// truncation is carried explicitly and never widened.
class AlphabetSeries {
  public:
    AlphabetSeries() : coeffs_(1) {}
    explicit AlphabetSeries(std::vector<MultiPoly> coeffs);

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of z^i; zero for i < 0, out of range past the truncation.
    const MultiPoly& coeff(int i) const;

    friend AlphabetSeries operator*(const AlphabetSeries& a, const AlphabetSeries& b);
    friend AlphabetSeries operator+(const AlphabetSeries& a, const AlphabetSeries& b);

  private:
    std::vector<MultiPoly> coeffs_;
};

// Series of a pure alphabet: coefficient of z^i is the variable Lambda^i of
// the alphabet, including i = 0 (the z^0 coefficient is a genuine variable,
// not the constant 1).
AlphabetSeries series_of_alphabet(Alphabet alphabet, int truncation);

// s^k at the same truncation; coefficient of z^i is Lambda^i(k*alphabet) when
// s is a pure alphabet series. Requires k >= 1.
AlphabetSeries series_power(const AlphabetSeries& s, int k);

// (1 + z*letter)^r * s: adds r copies of a letter to the underlying alphabet.
// The letter must be a single term (a variable such as x, the formal inverse
// x^-1, or a rational constant); the zero letter leaves s unchanged.
AlphabetSeries add_letter(const AlphabetSeries& s, int r, const MultiPoly& letter);

// Lambda^i(k*alphabet) as a polynomial in the alphabet's Lambda variables;
// the zero polynomial for i < 0. Requires truncation >= i and k >= 1.
MultiPoly lambda_of_multiple(Alphabet alphabet, int k, int i, int truncation);

}  // namespace curvode
