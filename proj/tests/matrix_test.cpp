#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "curvode/alphabet_ops.hpp"
#include "curvode/curve_ode.hpp"
#include "curvode/errors.hpp"
#include "curvode/matrices.hpp"
#include "curvode/series.hpp"
#include "test_util.hpp"

using namespace curvode;
using testutil::Rng;
using testutil::term;
using testutil::var;

namespace {

MultiPoly explicit_monge() {
    return var(Alphabet::D, 0).pow(2) * var(Alphabet::D, 3) -
           Rational(3) * (var(Alphabet::D, 0) * var(Alphabet::D, 1) * var(Alphabet::D, 2)) +
           Rational(2) * var(Alphabet::D, 1).pow(3);
}

// Independent oracle: textbook cofactor expansion along the first row.
MultiPoly naive_determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t q = m.size();
    if (q == 1) return m[0][0];
    MultiPoly acc;
    for (std::size_t c = 0; c < q; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (std::size_t r = 1; r < q; ++r) {
            std::vector<MultiPoly> row;
            for (std::size_t cc = 0; cc < q; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        const Rational sign((c % 2) ? -1 : 1);
        acc += sign * (m[0][c] * naive_determinant(minor));
    }
    return acc;
}

std::vector<std::vector<MultiPoly>> as_grid(const PolyMatrix& m) {
    std::vector<std::vector<MultiPoly>> g(m.side, std::vector<MultiPoly>(m.side));
    for (int r = 0; r < m.side; ++r)
        for (int c = 0; c < m.side; ++c) g[r][c] = m.at(r, c);
    return g;
}

PolyMatrix custom_matrix(std::vector<std::vector<MultiPoly>> grid) {
    PolyMatrix m;
    m.n = 0;
    m.side = static_cast<int>(grid.size());
    for (auto& row : grid)
        for (auto& e : row) m.entries.push_back(std::move(e));
    return m;
}

// Golden-file format: optional # comments; per line an integer coefficient
// followed by L<index>^<exponent> factors.
MultiPoly load_golden(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open golden file ", path);
    MultiPoly p;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long coeff = 0;
        ls >> coeff;
        std::vector<std::pair<VarId, int>> factors;
        std::string tok;
        while (ls >> tok) {
            REQUIRE(tok[0] == 'L');
            const auto caret = tok.find('^');
            const int index = std::stoi(tok.substr(1, caret - 1));
            const int exp = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            factors.emplace_back(lam(Alphabet::D, index), exp);
        }
        p += MultiPoly(Monomial(std::move(factors)), Rational(coeff));
    }
    return p;
}

std::string golden_path(const std::string& name) {
    return std::string(GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("full matrix rows for the conic") {
    const PolyMatrix m = build_full_matrix(2);
    REQUIRE(m.side == 3);
    CHECK(m.basis == MatrixBasis::FullA);

    const MultiPoly l3_2a = term(2, {{lam(Alphabet::A, 0), 1}, {lam(Alphabet::A, 3), 1}}) +
                            term(2, {{lam(Alphabet::A, 1), 1}, {lam(Alphabet::A, 2), 1}});
    CHECK(m.at(0, 0) == var(Alphabet::A, 2));
    CHECK(m.at(0, 1) == var(Alphabet::A, 3));
    CHECK(m.at(0, 2) == l3_2a);

    const MultiPoly l5_2a = term(2, {{lam(Alphabet::A, 0), 1}, {lam(Alphabet::A, 5), 1}}) +
                            term(2, {{lam(Alphabet::A, 1), 1}, {lam(Alphabet::A, 4), 1}}) +
                            term(2, {{lam(Alphabet::A, 2), 1}, {lam(Alphabet::A, 3), 1}});
    CHECK(m.at(2, 0) == var(Alphabet::A, 4));
    CHECK(m.at(2, 1) == var(Alphabet::A, 5));
    CHECK(m.at(2, 2) == l5_2a);

    CHECK_THROWS_AS(build_full_matrix(1), std::invalid_argument);
}

TEST_CASE("full matrix cubic row 0, block m=2") {
    const PolyMatrix m = build_full_matrix(3);
    REQUIRE(m.side == 6);
    // Columns: block 1 (s=2,1,0) then block 2 (s=1,0) then block 3 (s=0).
    const MultiPoly l3_2a = term(2, {{lam(Alphabet::A, 0), 1}, {lam(Alphabet::A, 3), 1}}) +
                            term(2, {{lam(Alphabet::A, 1), 1}, {lam(Alphabet::A, 2), 1}});
    const MultiPoly l4_2a = term(2, {{lam(Alphabet::A, 0), 1}, {lam(Alphabet::A, 4), 1}}) +
                            term(2, {{lam(Alphabet::A, 1), 1}, {lam(Alphabet::A, 3), 1}}) +
                            term(1, {{lam(Alphabet::A, 2), 2}});
    CHECK(m.at(0, 3) == l3_2a);
    CHECK(m.at(0, 4) == l4_2a);
    // Block 1 of row 0 is Lambda^2 A, Lambda^3 A, Lambda^4 A.
    CHECK(m.at(0, 0) == var(Alphabet::A, 2));
    CHECK(m.at(0, 2) == var(Alphabet::A, 4));
}

TEST_CASE("matrix side law for degrees 2..8") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(build_full_matrix(n).side == n * (n + 1) / 2);
        CHECK(build_sylvester_matrix(n).side == n * (n + 1) / 2);
    }
}

TEST_CASE("sylvester matrix rows match the shifted alphabet") {
    const PolyMatrix m3 = build_sylvester_matrix(3);
    REQUIRE(m3.side == 6);
    CHECK(m3.at(0, 0) == var(Alphabet::D, 0));
    CHECK(m3.at(0, 1) == var(Alphabet::D, 1));
    CHECK(m3.at(0, 2) == var(Alphabet::D, 2));
    CHECK(m3.at(0, 3).is_zero());  // Lambda^{-1}(2 D)
    CHECK(m3.at(0, 4) == var(Alphabet::D, 0).pow(2));
    CHECK(m3.at(0, 5).is_zero());  // Lambda^{-2}(3 D)

    // Largest superscript appearing is (n-1)(n+4)/2 = 7.
    int max_index = 0;
    for (const MultiPoly& e : m3.entries)
        for (const VarId& v : e.variables()) max_index = std::max(max_index, v.index);
    CHECK(max_index == 7);
    CHECK(m3.at(5, 2) == var(Alphabet::D, 7));

    const PolyMatrix m2 = build_sylvester_matrix(2);
    CHECK(m2.at(0, 2).is_zero());
    CHECK(m2.at(1, 2) == var(Alphabet::D, 0).pow(2));
    CHECK(m2.at(2, 2) == term(2, {{lam(Alphabet::D, 0), 1}, {lam(Alphabet::D, 1), 1}}));
}

TEST_CASE("expand_determinant of a diagonal matrix") {
    const MultiPoly a = var(Alphabet::A, 1), b = var(Alphabet::A, 2), c = var(Alphabet::A, 3);
    const PolyMatrix m = custom_matrix({{a, MultiPoly::zero(), MultiPoly::zero()},
                                        {MultiPoly::zero(), b, MultiPoly::zero()},
                                        {MultiPoly::zero(), MultiPoly::zero(), c}});
    CHECK(expand_determinant(m) == a * b * c);
}

TEST_CASE("conic determinant is -Lambda^0 D times Monge") {
    const MultiPoly det = expand_determinant(build_sylvester_matrix(2));
    CHECK(det == -(var(Alphabet::D, 0) * explicit_monge()));
}

TEST_CASE("expansion agrees with naive cofactor expansion") {
    CHECK(expand_determinant(build_sylvester_matrix(2)) ==
          naive_determinant(as_grid(build_sylvester_matrix(2))));
    CHECK(expand_determinant(build_sylvester_matrix(3)) ==
          naive_determinant(as_grid(build_sylvester_matrix(3))));

    Rng rng(11);
    for (int t = 0; t < 5; ++t) {
        std::vector<std::vector<MultiPoly>> grid(3, std::vector<MultiPoly>(3));
        for (auto& row : grid)
            for (auto& e : row) e = testutil::random_poly(rng, Alphabet::A, 3, 2, 2);
        CHECK(expand_determinant(custom_matrix(grid)) == naive_determinant(grid));
    }
}

TEST_CASE("expansion cap is enforced") {
    CHECK_THROWS_AS(expand_determinant(build_sylvester_matrix(4)), CapExceededError);
    CHECK_THROWS_AS(curve_ode(4, OdeBasis::D), CapExceededError);
}

TEST_CASE("golden cubic expansion") {
    const MultiPoly golden = load_golden(golden_path("cubic_lambda.txt"));
    REQUIRE(golden.term_count() == 109);
    const MultiPoly det = expand_determinant(build_sylvester_matrix(3))
                              .substitute(lam(Alphabet::D, 0), Rational(1));
    const bool matches = (det == golden) || (det == -golden);
    CHECK_MESSAGE(matches, "expansion differs from the transcribed golden file");
}

TEST_CASE("evaluate_determinant on the identity pattern") {
    const MultiPoly a = var(Alphabet::A, 1), b = var(Alphabet::A, 2), c = var(Alphabet::A, 3);
    const MultiPoly off = var(Alphabet::A, 4);
    const PolyMatrix m = custom_matrix({{a, off, off}, {off, b, off}, {off, off, c}});
    const std::map<VarId, Rational> assignment{{lam(Alphabet::A, 1), Rational(1)},
                                               {lam(Alphabet::A, 2), Rational(1)},
                                               {lam(Alphabet::A, 3), Rational(1)},
                                               {lam(Alphabet::A, 4), Rational(0)}};
    CHECK(evaluate_determinant(m, assignment) == 1);
}

TEST_CASE("evaluate_determinant on the circle jet") {
    // y = sqrt(1 - x^2) at x = 0: D^0..D^5 y = 1, 0, -1/2, 0, -1/8, 0.
    const std::map<VarId, Rational> jet{
        {lam(Alphabet::A, 0), Rational(1)},     {lam(Alphabet::A, 1), Rational(0)},
        {lam(Alphabet::A, 2), Rational(-1, 2)}, {lam(Alphabet::A, 3), Rational(0)},
        {lam(Alphabet::A, 4), Rational(-1, 8)}, {lam(Alphabet::A, 5), Rational(0)}};
    CHECK(evaluate_determinant(build_full_matrix(2), jet) == 0);
}

TEST_CASE("evaluate_determinant needs a complete assignment") {
    const std::map<VarId, Rational> partial{{lam(Alphabet::A, 0), Rational(1)}};
    CHECK_THROWS_AS(evaluate_determinant(build_full_matrix(2), partial),
                    std::invalid_argument);
}

TEST_CASE("evaluate agrees with expand + substitution") {
    Rng rng(5);
    for (int n = 2; n <= 3; ++n) {
        for (const bool sylvester : {false, true}) {
            const PolyMatrix m = sylvester ? build_sylvester_matrix(n) : build_full_matrix(n);
            for (int t = 0; t < 4; ++t) {
                std::map<VarId, Rational> assignment;
                const int max_order = n * (n + 3) / 2;
                const Alphabet a = sylvester ? Alphabet::D : Alphabet::A;
                for (int i = 0; i <= max_order; ++i) assignment[lam(a, i)] = rng.rational();
                CHECK(evaluate_determinant(m, assignment) ==
                      expand_determinant(m).evaluate(assignment));
            }
        }
    }
}

TEST_CASE("determinant is independent of Lambda^0 A and Lambda^1 A") {
    Rng rng(17);
    for (int n = 2; n <= 3; ++n) {
        const PolyMatrix m = build_full_matrix(n);
        const int max_order = n * (n + 3) / 2;
        for (int t = 0; t < 5; ++t) {
            std::map<VarId, Rational> assignment;
            for (int i = 2; i <= max_order; ++i)
                assignment[lam(Alphabet::A, i)] = rng.rational();
            assignment[lam(Alphabet::A, 0)] = rng.rational();
            assignment[lam(Alphabet::A, 1)] = rng.rational();
            const Rational first = evaluate_determinant(m, assignment);
            assignment[lam(Alphabet::A, 0)] = rng.rational() + 1;
            assignment[lam(Alphabet::A, 1)] = rng.rational() - 2;
            CHECK(evaluate_determinant(m, assignment) == first);
        }
    }
}

TEST_CASE("full and Sylvester determinants agree up to a constant sign per degree") {
    Rng rng(23);
    for (int n = 2; n <= 4; ++n) {
        const PolyMatrix full = build_full_matrix(n);
        const PolyMatrix sylv = build_sylvester_matrix(n);
        const int max_order = n * (n + 3) / 2;
        Rational sign(0);
        for (int t = 0; t < 5; ++t) {
            std::map<VarId, Rational> a_assign, d_assign;
            a_assign[lam(Alphabet::A, 0)] = 0;
            a_assign[lam(Alphabet::A, 1)] = 0;
            for (int i = 2; i <= max_order; ++i) {
                const Rational v = rng.rational();
                a_assign[lam(Alphabet::A, i)] = v;
                d_assign[lam(Alphabet::D, i - 2)] = v;
            }
            const Rational df = evaluate_determinant(full, a_assign);
            const Rational ds = evaluate_determinant(sylv, d_assign);
            if (ds == 0) {
                CHECK(df == 0);
                continue;
            }
            const Rational ratio = df / ds;
            CHECK((ratio == 1 || ratio == -1));
            if (sign == 0) sign = ratio;
            CHECK(ratio == sign);
        }
    }
}

TEST_CASE("conic factorization") {
    const MultiPoly det = expand_determinant(build_sylvester_matrix(2));
    const MultiPoly quotient = det.divide_exact_by_var(lam(Alphabet::D, 0));
    const MultiPoly monge = explicit_monge();
    CHECK((quotient == monge || quotient == -monge));
}

TEST_CASE("curve_ode degree 2 in every basis") {
    CHECK(curve_ode(2, OdeBasis::D).poly == explicit_monge());

    const CurveOde a = curve_ode(2, OdeBasis::A);
    CHECK(a.poly == var(Alphabet::A, 2).pow(2) * var(Alphabet::A, 5) -
                        Rational(3) * (var(Alphabet::A, 2) * var(Alphabet::A, 3) *
                                       var(Alphabet::A, 4)) +
                        Rational(2) * var(Alphabet::A, 3).pow(3));

    const CurveOde e = curve_ode(2, OdeBasis::E);
    CHECK(e.poly == Rational(3) * (var(Alphabet::E, 0).pow(2) * var(Alphabet::E, 3)) -
                        Rational(3) * (var(Alphabet::E, 0) * var(Alphabet::E, 1) *
                                       var(Alphabet::E, 2)) +
                        var(Alphabet::E, 1).pow(3));

    const CurveOde psi = curve_ode(2, OdeBasis::Psi);
    REQUIRE(psi.psi.has_value());
    CHECK(psi.psi->poly() == MultiPoly(psi_var(3)));

    const CurveOde deriv = curve_ode(2, OdeBasis::Derivative);
    CHECK(deriv.poly == explicit_monge());

    CHECK(curve_ode(2, OdeBasis::D).degree_in_lambda == 3);
    CHECK(curve_ode(2, OdeBasis::D).weight == 3);
}

TEST_CASE("cubic equation degree and weight") {
    const CurveOde ode = curve_ode(3, OdeBasis::D);
    CHECK(ode.degree_in_lambda == 10);
    CHECK(ode.weight == 15);
    int deg = 0, w = 0;
    CHECK(ode.poly.is_homogeneous(&deg));
    CHECK(ode.poly.is_isobaric(&w));
    CHECK(deg == 10);
    CHECK(w == 15);
    CHECK(ode.poly.leading_coefficient() > 0);
    CHECK(ode.poly.content() == 1);
}

TEST_CASE("matrix JSON round trip") {
    const PolyMatrix m = build_sylvester_matrix(2);
    const nlohmann::json j = m.to_json();
    CHECK(j["n"] == 2);
    CHECK(j["side"] == 3);
    CHECK(j["basis"] == "sylvester_d");
    const PolyMatrix back = PolyMatrix::from_json(j);
    CHECK(back.entries == m.entries);
    CHECK(back.to_json().dump() == j.dump());
}
