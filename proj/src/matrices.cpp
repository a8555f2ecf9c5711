#include "curvode/matrices.hpp"

#include <bit>
#include <stdexcept>

#include "curvode/errors.hpp"
#include "curvode/series.hpp"

namespace curvode {

const char* matrix_basis_name(MatrixBasis b) {
    return b == MatrixBasis::FullA ? "full_a" : "sylvester_d";
}

namespace {

// lam_table[m][i] = Lambda^i(m * alphabet) for m = 1..n, i = 0..max_order.
std::vector<std::vector<MultiPoly>> multiple_table(Alphabet alphabet, int n, int max_order) {
    std::vector<std::vector<MultiPoly>> table(static_cast<std::size_t>(n) + 1);
    const AlphabetSeries base = series_of_alphabet(alphabet, max_order);
    AlphabetSeries power = base;
    for (int m = 1; m <= n; ++m) {
        auto& row = table[m];
        row.reserve(static_cast<std::size_t>(max_order) + 1);
        for (int i = 0; i <= max_order; ++i) row.push_back(power.coeff(i));
        if (m < n) power = power * base;
    }
    return table;
}

PolyMatrix build_matrix(int n, MatrixBasis basis) {
    if (n < 2) throw std::invalid_argument("curve degree must be at least 2");
    const Alphabet alphabet = basis == MatrixBasis::FullA ? Alphabet::A : Alphabet::D;
    const int side = n * (n + 1) / 2;
    const int max_order =
        basis == MatrixBasis::FullA ? n * (n + 3) / 2 : (n - 1) * (n + 4) / 2;
    const auto table = multiple_table(alphabet, n, max_order);

    PolyMatrix matrix{n, basis, side, {}};
    matrix.entries.reserve(static_cast<std::size_t>(side) * side);
    for (int j = 0; j < side; ++j) {
        for (int m = 1; m <= n; ++m) {
            for (int s = n - m; s >= 0; --s) {
                int super = n + 1 + j - s;
                if (basis == MatrixBasis::SylvesterD) super -= 2 * m;
                matrix.entries.push_back(super < 0 ? MultiPoly::zero() : table[m][super]);
            }
        }
    }
    return matrix;
}

}  // namespace

PolyMatrix build_full_matrix(int n) { return build_matrix(n, MatrixBasis::FullA); }

PolyMatrix build_sylvester_matrix(int n) { return build_matrix(n, MatrixBasis::SylvesterD); }

MultiPoly expand_determinant(const PolyMatrix& m, int cap) {
    const int q = m.side;
    if (q > cap)
        throw CapExceededError("symbolic expansion refused; use numeric evaluation (side " +
                               std::to_string(q) + " exceeds cap " + std::to_string(cap) + ")");

    // minors[mask] = det of the submatrix (rows in mask) x (first popcount(mask)
    // columns). Column c extends every minor with popcount c by one row.
    std::vector<MultiPoly> minors(std::size_t{1} << q);
    minors[0] = MultiPoly::one();
    for (int c = 0; c < q; ++c) {
        for (unsigned mask = 0; mask < minors.size(); ++mask) {
            if (std::popcount(mask) != c || (c > 0 && minors[mask].is_zero())) continue;
            for (int r = 0; r < q; ++r) {
                if (mask & (1u << r)) continue;
                const MultiPoly& entry = m.at(r, c);
                if (entry.is_zero()) continue;
                const int rows_below = std::popcount(mask & ((1u << r) - 1));
                const Rational sign(((rows_below + c) % 2) ? -1 : 1);
                minors[mask | (1u << r)] += sign * (entry * minors[mask]);
            }
        }
    }
    return minors.back();
}

namespace {

// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
Int bareiss_determinant(std::vector<std::vector<Int>> a) {
    const int q = static_cast<int>(a.size());
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < q; ++k) {
        int pivot = -1;
        for (int r = k; r < q; ++r)
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < q; ++i) {
            for (int j = k + 1; j < q; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[q - 1][q - 1];
}

}  // namespace

Rational evaluate_determinant(const PolyMatrix& m,
                              const std::map<VarId, Rational>& assignment) {
    const int q = m.side;
    std::vector<std::vector<Int>> ints(q, std::vector<Int>(q));
    Rational denom_product(1);
    for (int r = 0; r < q; ++r) {
        std::vector<Rational> row(q);
        Int common_den = 1;
        for (int c = 0; c < q; ++c) {
            row[c] = m.at(r, c).evaluate(assignment);
            common_den = lcm(common_den, denominator(row[c]));
        }
        for (int c = 0; c < q; ++c) {
            const Rational scaled = row[c] * common_den;
            ints[r][c] = numerator(scaled);
        }
        denom_product *= common_den;
    }
    return Rational(bareiss_determinant(std::move(ints))) / denom_product;
}

nlohmann::json PolyMatrix::to_json() const {
    nlohmann::json jentries = nlohmann::json::array();
    for (const MultiPoly& p : entries) jentries.push_back(p.to_json());
    return {{"n", n}, {"basis", matrix_basis_name(basis)}, {"side", side},
            {"entries", jentries}};
}

PolyMatrix PolyMatrix::from_json(const nlohmann::json& j) {
    PolyMatrix m;
    m.n = j.at("n").get<int>();
    m.side = j.at("side").get<int>();
    const std::string basis = j.at("basis").get<std::string>();
    if (basis == "full_a")
        m.basis = MatrixBasis::FullA;
    else if (basis == "sylvester_d")
        m.basis = MatrixBasis::SylvesterD;
    else
        throw std::invalid_argument("unknown matrix basis: " + basis);
    for (const auto& je : j.at("entries")) m.entries.push_back(MultiPoly::from_json(je));
    if (m.entries.size() != static_cast<std::size_t>(m.side) * m.side)
        throw std::invalid_argument("matrix entry count does not match side");
    return m;
}

}  // namespace curvode
