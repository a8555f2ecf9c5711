#include "curvode/series.hpp"

#include <stdexcept>

namespace curvode {

namespace {
const MultiPoly kZero{};
}

AlphabetSeries::AlphabetSeries(std::vector<MultiPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the z^0 coefficient");
}

const MultiPoly& AlphabetSeries::coeff(int i) const {
    if (i < 0 || i > truncation()) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

AlphabetSeries operator*(const AlphabetSeries& a, const AlphabetSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    std::vector<MultiPoly> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) {
            if (a.coeffs_[i].is_zero() || b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    return AlphabetSeries(std::move(out));
}

AlphabetSeries operator+(const AlphabetSeries& a, const AlphabetSeries& b) {
    const int n = std::min(a.truncation(), b.truncation());
    std::vector<MultiPoly> out(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) out[i] = a.coeffs_[i] + b.coeffs_[i];
    return AlphabetSeries(std::move(out));
}

AlphabetSeries series_of_alphabet(Alphabet alphabet, int truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    if (alphabet != Alphabet::A && alphabet != Alphabet::D && alphabet != Alphabet::E)
        throw std::invalid_argument("series_of_alphabet expects a lambda alphabet");
    std::vector<MultiPoly> out;
    out.reserve(static_cast<std::size_t>(truncation) + 1);
    for (int i = 0; i <= truncation; ++i) out.emplace_back(MultiPoly(lam(alphabet, i)));
    return AlphabetSeries(std::move(out));
}

AlphabetSeries series_power(const AlphabetSeries& s, int k) {
    if (k < 1) throw std::invalid_argument("series_power needs k >= 1");
    AlphabetSeries r = s;
    for (int i = 1; i < k; ++i) r = r * s;
    return r;
}

AlphabetSeries add_letter(const AlphabetSeries& s, int r, const MultiPoly& letter) {
    if (r < 1) throw std::invalid_argument("add_letter needs r >= 1");
    if (letter.term_count() > 1)
        throw std::invalid_argument("add_letter letter must be a single term");
    if (letter.is_zero()) return s;

    // (1 + z*letter)^r truncated at s's order, then multiplied in.
    const int n = s.truncation();
    std::vector<MultiPoly> binom(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= std::min(n, r); ++i)
        binom[i] = Rational(binomial(r, i)) * letter.pow(i);
    return AlphabetSeries(std::move(binom)) * s;
}

MultiPoly lambda_of_multiple(Alphabet alphabet, int k, int i, int truncation) {
    if (i < 0) return MultiPoly::zero();
    if (truncation < i) throw std::invalid_argument("truncation below requested coefficient");
    if (k < 1) throw std::invalid_argument("lambda_of_multiple needs k >= 1");
    return series_power(series_of_alphabet(alphabet, truncation), k).coeff(i);
}

}  // namespace curvode
