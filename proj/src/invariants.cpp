#include "curvode/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "curvode/alphabet_ops.hpp"

namespace curvode {

PsiExpression::PsiExpression(MultiPoly p) : poly_(std::move(p)) {
    for (const VarId& v : poly_.variables())
        if (v.alphabet != Alphabet::PSI)
            throw std::invalid_argument("PsiExpression accepts psi generators only, got " +
                                        variable_to_string(v));
}

bool PsiExpression::contains_psi1() const {
    for (const VarId& v : poly_.variables())
        if (v.index == 1) return true;
    return false;
}

MultiPoly PsiExpression::expand(Alphabet alphabet) const {
    MultiPoly out = poly_;
    for (const VarId& v : poly_.variables())
        out = out.substitute(v, lambda_to_psi(v.index, alphabet));
    return out;
}

std::string PsiExpression::to_string() const {
    if (poly_.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : poly_.terms()) {
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mon;
        const auto& fs = m.factors();
        for (auto it = fs.rbegin(); it != fs.rend(); ++it) {  // index descending
            if (!mon.empty()) mon += "*";
            mon += "psi_" + std::to_string(it->first.index);
            if (it->second > 1) mon += "^" + std::to_string(it->second);
        }
        if (mon.empty())
            os << mag;
        else if (mag == 1)
            os << mon;
        else
            os << mag << "*" << mon;
    }
    return os.str();
}

nlohmann::json PsiExpression::to_json() const {
    nlohmann::json jterms = nlohmann::json::array();
    for (const auto& [m, c] : poly_.terms()) {
        nlohmann::json psis = nlohmann::json::array();
        const auto& fs = m.factors();
        for (auto it = fs.rbegin(); it != fs.rend(); ++it)
            psis.push_back({it->first.index, it->second});
        jterms.push_back({{"coeff", to_fraction_string(c)}, {"psis", psis}});
    }
    return {{"terms", jterms}};
}

PsiExpression PsiExpression::from_json(const nlohmann::json& j) {
    MultiPoly p;
    for (const auto& jt : j.at("terms")) {
        std::vector<std::pair<VarId, int>> factors;
        for (const auto& jp : jt.at("psis"))
            factors.emplace_back(psi_var(jp.at(0).get<int>()), jp.at(1).get<int>());
        p += MultiPoly(Monomial(std::move(factors)),
                       parse_rational(jt.at("coeff").get<std::string>()));
    }
    return PsiExpression(std::move(p));
}

MultiPoly nabla(const Derivation& d, const MultiPoly& p) {
    if (d.alphabet != Alphabet::D && d.alphabet != Alphabet::E)
        throw std::invalid_argument("derivation is defined for the D and E alphabets");
    for (const VarId& v : p.variables()) {
        if (v.alphabet != d.alphabet)
            throw std::invalid_argument("derivation applied to wrong-alphabet variable " +
                                        variable_to_string(v));
        if (v.index < 1)
            throw std::invalid_argument(
                "derivation operand must be normalized (substitute Lambda^0 = 1 first)");
    }

    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        const auto& fs = m.factors();
        for (std::size_t k = 0; k < fs.size(); ++k) {
            const auto [v, e] = fs[k];
            // d/dv with the chain image of v multiplied in.
            Rational coeff = c * e;
            if (d.alphabet == Alphabet::D) coeff *= v.index;
            std::vector<std::pair<VarId, int>> rest;
            for (std::size_t t = 0; t < fs.size(); ++t) {
                if (t == k) {
                    if (e > 1) rest.emplace_back(v, e - 1);
                } else {
                    rest.push_back(fs[t]);
                }
            }
            if (v.index > 1) rest.emplace_back(lam(d.alphabet, v.index - 1), 1);
            out += MultiPoly(Monomial(std::move(rest)), coeff);
        }
    }
    return out;
}

bool is_semi_invariant(const MultiPoly& p, Alphabet alphabet) {
    return nabla(Derivation{alphabet}, p).is_zero();
}

PsiExpression monge_invariant() { return PsiExpression(MultiPoly(psi_var(3))); }

PsiExpression halphen_invariant() {
    auto term = [](int c, std::vector<std::pair<int, int>> psis) {
        std::vector<std::pair<VarId, int>> factors;
        for (auto [i, e] : psis) factors.emplace_back(psi_var(i), e);
        return MultiPoly(Monomial(std::move(factors)), Rational(c));
    };
    MultiPoly h = term(48, {{5, 1}, {3, 1}});
    h += term(-20, {{3, 2}, {2, 1}});
    h += term(-1, {{2, 4}});
    h += term(12, {{2, 2}, {4, 1}});
    h += term(-36, {{4, 2}});
    return PsiExpression(std::move(h));
}

MultiPoly homogenize(const MultiPoly& p, int target_degree, Alphabet alphabet) {
    if (alphabet != Alphabet::A && alphabet != Alphabet::D && alphabet != Alphabet::E)
        throw std::invalid_argument("homogenize expects a lambda alphabet");
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        const int pad = target_degree - m.degree();
        if (pad < 0)
            throw std::invalid_argument("monomial degree exceeds homogenization target");
        std::vector<std::pair<VarId, int>> fs = m.factors();
        if (pad > 0) fs.emplace_back(lam(alphabet, 0), pad);
        out += MultiPoly(Monomial(std::move(fs)), c);
    }
    return out;
}

MultiPoly homogenize(const PsiExpression& p, int target_degree, Alphabet alphabet) {
    return homogenize(p.expand(alphabet), target_degree, alphabet);
}

PsiExpression rewrite_in_psi(const MultiPoly& p) {
    MultiPoly out = p;
    for (const VarId& v : p.variables()) {
        if (v.alphabet == Alphabet::PSI) continue;
        if (v.alphabet != Alphabet::A && v.alphabet != Alphabet::D &&
            v.alphabet != Alphabet::E)
            throw std::invalid_argument("rewrite_in_psi expects lambda variables");
        if (v.index < 1)
            throw std::invalid_argument(
                "rewrite_in_psi operand must be normalized (substitute Lambda^0 = 1 first)");
        out = out.substitute(v, psi_to_lambda(v.index));
    }
    return PsiExpression(std::move(out));
}

}  // namespace curvode
