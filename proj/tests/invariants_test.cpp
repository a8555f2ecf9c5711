#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvode/alphabet_ops.hpp"
#include "curvode/curve_ode.hpp"
#include "curvode/invariants.hpp"
#include "test_util.hpp"

using namespace curvode;
using testutil::Rng;
using testutil::random_poly;
using testutil::var;

TEST_CASE("nabla on the normalized Monge polynomial") {
    const MultiPoly monge_at_one = var(Alphabet::D, 3) -
                                   Rational(3) * (var(Alphabet::D, 1) * var(Alphabet::D, 2)) +
                                   Rational(2) * var(Alphabet::D, 1).pow(3);
    CHECK(nabla(nabla_d, monge_at_one).is_zero());
    CHECK(is_semi_invariant(monge_at_one, Alphabet::D));
}

TEST_CASE("nabla sends Lambda^1 E to 1 and constants to 0") {
    CHECK(nabla(nabla_e, var(Alphabet::E, 1)) == MultiPoly::one());
    CHECK(nabla(nabla_e, MultiPoly(Rational(7, 3))).is_zero());
    CHECK(nabla(nabla_e, MultiPoly::zero()).is_zero());
    CHECK(nabla(nabla_d, var(Alphabet::D, 4)) == Rational(4) * var(Alphabet::D, 3));
    CHECK(nabla(nabla_e, var(Alphabet::E, 4)) == var(Alphabet::E, 3));
}

TEST_CASE("nabla rejects wrong or unnormalized operands") {
    CHECK_THROWS_AS(nabla(nabla_d, var(Alphabet::E, 1)), std::invalid_argument);
    CHECK_THROWS_AS(nabla(nabla_e, var(Alphabet::A, 2)), std::invalid_argument);
    CHECK_THROWS_AS(nabla(nabla_d, var(Alphabet::D, 0)), std::invalid_argument);
    CHECK_THROWS_AS(is_semi_invariant(var(Alphabet::D, 1), Alphabet::A),
                    std::invalid_argument);
}

TEST_CASE("semi-invariance of the power sums") {
    CHECK(is_semi_invariant(lambda_to_psi(2, Alphabet::E), Alphabet::E));
    CHECK_FALSE(is_semi_invariant(var(Alphabet::E, 1), Alphabet::E));
    // nabla_E psi_1 = 1, psi_i -> 0 for i = 2..8.
    CHECK(nabla(nabla_e, lambda_to_psi(1, Alphabet::E)) == MultiPoly::one());
    for (int i = 2; i <= 8; ++i)
        CHECK(nabla(nabla_e, lambda_to_psi(i, Alphabet::E)).is_zero());
}

TEST_CASE("the cubic equation is a semi-invariant") {
    const MultiPoly cubic =
        curve_ode(3, OdeBasis::D).poly.substitute(lam(Alphabet::D, 0), Rational(1));
    CHECK(is_semi_invariant(cubic, Alphabet::D));
}

TEST_CASE("Leibniz rule for both derivations") {
    Rng rng(31);
    for (const Derivation& d : {nabla_d, nabla_e}) {
        const Alphabet a = d.alphabet;
        for (int t = 0; t < 15; ++t) {
            const MultiPoly p = random_poly(rng, a, 5, 4, 2, 1);
            const MultiPoly q = random_poly(rng, a, 5, 4, 2, 1);
            CHECK(nabla(d, p * q) == nabla(d, p) * q + p * nabla(d, q));
        }
    }
}

TEST_CASE("derivations are compatible with the E rescaling") {
    Rng rng(37);
    for (int t = 0; t < 15; ++t) {
        const MultiPoly p = random_poly(rng, Alphabet::D, 5, 4, 2, 1);
        const MultiPoly lhs = nabla(nabla_e, reexpress(p, Alphabet::D, Alphabet::E));
        const MultiPoly rhs = reexpress(nabla(nabla_d, p), Alphabet::D, Alphabet::E);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("monge invariant") {
    const PsiExpression m = monge_invariant();
    CHECK(m.poly() == MultiPoly(psi_var(3)));

    const MultiPoly expanded = m.expand(Alphabet::E);
    CHECK(expanded == Rational(3) * var(Alphabet::E, 3) -
                          Rational(3) * (var(Alphabet::E, 1) * var(Alphabet::E, 2)) +
                          var(Alphabet::E, 1).pow(3));
    CHECK(nabla(nabla_e, expanded).is_zero());
}

TEST_CASE("homogenized psi_3 rescaled to D is half the conic equation") {
    const MultiPoly hom = homogenize(monge_invariant(), 3);
    CHECK(hom == Rational(3) * (var(Alphabet::E, 0).pow(2) * var(Alphabet::E, 3)) -
                     Rational(3) *
                         (var(Alphabet::E, 0) * var(Alphabet::E, 1) * var(Alphabet::E, 2)) +
                     var(Alphabet::E, 1).pow(3));
    const MultiPoly in_d = reexpress(hom, Alphabet::E, Alphabet::D);
    CHECK(in_d == Rational(1, 2) * curve_ode(2, OdeBasis::D).poly);
}

TEST_CASE("halphen invariant") {
    const PsiExpression h = halphen_invariant();
    CHECK(h.poly().coefficient(Monomial({{psi_var(5), 1}, {psi_var(3), 1}})) == 48);
    CHECK(h.poly().coefficient(Monomial({{psi_var(4), 2}})) == -36);
    CHECK(h.poly().coefficient(Monomial({{psi_var(2), 4}})) == -1);
    CHECK(h.poly().coefficient(Monomial({{psi_var(2), 1}, {psi_var(3), 2}})) == -20);
    CHECK(h.poly().coefficient(Monomial({{psi_var(2), 2}, {psi_var(4), 1}})) == 12);
    CHECK(h.poly().term_count() == 5);

    // Every term has psi-weight 8.
    int w = 0;
    CHECK(h.poly().is_isobaric(&w));
    CHECK(w == 8);

    CHECK(is_semi_invariant(h.expand(Alphabet::E), Alphabet::E));
}

TEST_CASE("homogenize pads with Lambda^0") {
    const MultiPoly p = Rational(3) * var(Alphabet::E, 3) -
                        Rational(3) * (var(Alphabet::E, 1) * var(Alphabet::E, 2)) +
                        var(Alphabet::E, 1).pow(3);
    const MultiPoly hom = homogenize(p, 3, Alphabet::E);
    CHECK(hom ==
          Rational(3) * (var(Alphabet::E, 0).pow(2) * var(Alphabet::E, 3)) -
              Rational(3) * (var(Alphabet::E, 0) * var(Alphabet::E, 1) * var(Alphabet::E, 2)) +
              var(Alphabet::E, 1).pow(3));
    int deg = 0;
    CHECK(hom.is_homogeneous(&deg));
    CHECK(deg == 3);

    // Already homogeneous input is unchanged.
    CHECK(homogenize(hom, 3, Alphabet::E) == hom);
    // A constant becomes a pure Lambda^0 power.
    CHECK(homogenize(MultiPoly::one(), 2, Alphabet::E) == var(Alphabet::E, 0).pow(2));
    CHECK_THROWS_AS(homogenize(var(Alphabet::E, 1).pow(3), 2, Alphabet::E),
                    std::invalid_argument);
}

TEST_CASE("rewrite_in_psi inverts the psi expansion") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const MultiPoly p = random_poly(rng, Alphabet::E, 5, 4, 2, 1);
        const PsiExpression rewritten = rewrite_in_psi(p);
        CHECK(rewritten.expand(Alphabet::E) == p);
    }
    // Lambda^2 E = (psi_1^2 - psi_2)/2 contains psi_1; psi_2 itself does not.
    CHECK(rewrite_in_psi(var(Alphabet::E, 2)).contains_psi1());
    CHECK_FALSE(rewrite_in_psi(lambda_to_psi(2, Alphabet::E)).contains_psi1());
}

TEST_CASE("psi expression JSON round trips") {
    const PsiExpression h = halphen_invariant();
    const nlohmann::json j = h.to_json();
    CHECK(PsiExpression::from_json(j) == h);
    CHECK(PsiExpression::from_json(j).to_json().dump() == j.dump());

    // psis are listed with indices descending.
    bool found = false;
    for (const auto& t : j.at("terms")) {
        if (t.at("coeff") == "48/1") {
            CHECK(t.at("psis") == nlohmann::json::array({{5, 1}, {3, 1}}));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("PsiExpression rejects non-psi variables") {
    CHECK_THROWS_AS(PsiExpression(var(Alphabet::D, 1)), std::invalid_argument);
}
