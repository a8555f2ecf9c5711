#include "curvode/alphabet_ops.hpp"

#include <stdexcept>
#include <vector>

namespace curvode {

MultiPoly lambda_to_psi(int i, Alphabet alphabet) {
    if (i < 1) throw std::invalid_argument("lambda_to_psi needs i >= 1");
    auto e = [&](int j) { return MultiPoly(lam(alphabet, j)); };
    // p_k = sum_{j=1}^{k-1} (-1)^{j-1} e_j p_{k-j} + (-1)^{k-1} k e_k
    std::vector<MultiPoly> p(static_cast<std::size_t>(i) + 1);
    for (int k = 1; k <= i; ++k) {
        MultiPoly acc = Rational(k * ((k % 2) ? 1 : -1)) * e(k);
        for (int j = 1; j < k; ++j) {
            const Rational sign((j % 2) ? 1 : -1);
            acc += sign * (e(j) * p[k - j]);
        }
        p[k] = std::move(acc);
    }
    return p[i];
}

MultiPoly psi_to_lambda(int i) {
    if (i < 1) throw std::invalid_argument("psi_to_lambda needs i >= 1");
    auto p = [](int j) { return MultiPoly(psi_var(j)); };
    // e_k = (1/k) sum_{j=1}^{k} (-1)^{j-1} e_{k-j} p_j, with e_0 = 1
    std::vector<MultiPoly> e(static_cast<std::size_t>(i) + 1);
    e[0] = MultiPoly::one();
    for (int k = 1; k <= i; ++k) {
        MultiPoly acc;
        for (int j = 1; j <= k; ++j) {
            const Rational sign((j % 2) ? 1 : -1);
            acc += sign * (e[k - j] * p(j));
        }
        e[k] = Rational(1, k) * acc;
    }
    return e[i];
}

namespace {

// One conversion step along the chain A <-> D <-> E.
MultiPoly step(const MultiPoly& p, Alphabet from, Alphabet to) {
    MultiPoly out;
    for (const auto& [m, c] : p.terms()) {
        Rational coeff = c;
        std::vector<std::pair<VarId, int>> factors;
        for (const auto& [v, exp] : m.factors()) {
            if (v.alphabet != from)
                throw std::invalid_argument("reexpress: variable " + variable_to_string(v) +
                                            " is not in the source alphabet");
            int idx = v.index;
            if (from == Alphabet::D && to == Alphabet::A) {
                idx += 2;
            } else if (from == Alphabet::A && to == Alphabet::D) {
                if (v.index < 2)
                    throw std::invalid_argument(
                        "reexpress A->D undefined for Lambda^0 A and Lambda^1 A");
                idx -= 2;
            } else if (from == Alphabet::E && to == Alphabet::D) {
                // Lambda^i E = Lambda^i D / i!
                coeff /= rational_pow(Rational(factorial(v.index)), exp);
            } else if (from == Alphabet::D && to == Alphabet::E) {
                coeff *= rational_pow(Rational(factorial(v.index)), exp);
            } else {
                throw std::logic_error("reexpress: bad conversion step");
            }
            factors.emplace_back(lam(to, idx), exp);
        }
        out += MultiPoly(Monomial(std::move(factors)), coeff);
    }
    return out;
}

}  // namespace

MultiPoly reexpress(const MultiPoly& p, Alphabet from, Alphabet to) {
    if (from == to) return p;
    const bool lambda_alphabets =
        (from == Alphabet::A || from == Alphabet::D || from == Alphabet::E) &&
        (to == Alphabet::A || to == Alphabet::D || to == Alphabet::E);
    if (!lambda_alphabets) throw std::invalid_argument("reexpress expects lambda alphabets");

    if (from != Alphabet::D && to != Alphabet::D)  // A <-> E goes through D
        return step(step(p, from, Alphabet::D), Alphabet::D, to);
    return step(p, from, to);
}

}  // namespace curvode
