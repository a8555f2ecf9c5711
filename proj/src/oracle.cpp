#include "curvode/oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "curvode/series.hpp"

namespace curvode {

Rational uni_eval(const UniPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(i) * p[i]);
    return d;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

namespace {

// Truncated power series in t, coefficient vectors of fixed length K+1.
using Series = std::vector<Rational>;

Series series_mul(const Series& a, const Series& b, int trunc) {
    Series r(static_cast<std::size_t>(trunc) + 1, Rational(0));
    for (int i = 0; i <= trunc; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= trunc; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// u(x0 + t, Y(t)) mod t^{trunc+1}, with Y given by its series coefficients.
Series eval_on_branch(const CurveInstance& c, const Series& y_series, int trunc) {
    const std::size_t len = static_cast<std::size_t>(trunc) + 1;
    std::vector<Series> xpow(static_cast<std::size_t>(c.n) + 1, Series(len, Rational(0)));
    std::vector<Series> ypow(static_cast<std::size_t>(c.n) + 1, Series(len, Rational(0)));
    xpow[0][0] = 1;
    ypow[0][0] = 1;
    Series x_lin(len, Rational(0));
    x_lin[0] = c.x0;
    if (trunc >= 1) x_lin[1] = 1;
    Series y_t(len, Rational(0));
    for (int i = 0; i <= trunc && i < static_cast<int>(y_series.size()); ++i)
        y_t[i] = y_series[i];
    for (int i = 1; i <= c.n; ++i) {
        xpow[i] = series_mul(xpow[i - 1], x_lin, trunc);
        ypow[i] = series_mul(ypow[i - 1], y_t, trunc);
    }

    Series acc(len, Rational(0));
    for (const auto& [ij, coeff] : c.coefficients) {
        if (coeff == 0) continue;
        const Series prod = series_mul(xpow[ij.first], ypow[ij.second], trunc);
        for (int k = 0; k <= trunc; ++k) acc[k] += coeff * prod[k];
    }
    return acc;
}

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [lo, hi]; bias from the modulo is irrelevant here.
    long pick(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace

Rational CurveInstance::eval(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [ij, coeff] : coefficients)
        acc += coeff * rational_pow(x, ij.first) * rational_pow(y, ij.second);
    return acc;
}

Rational CurveInstance::eval_dy(const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [ij, coeff] : coefficients) {
        if (ij.second == 0) continue;
        acc += coeff * Rational(ij.second) * rational_pow(x, ij.first) *
               rational_pow(y, ij.second - 1);
    }
    return acc;
}

void CurveInstance::validate() const {
    auto monic = coefficients.find({0, n});
    if (monic == coefficients.end() || monic->second != 1)
        throw std::invalid_argument("curve is not monic in y^n");
    for (const auto& [ij, coeff] : coefficients)
        if (ij.first + ij.second > n)
            throw std::invalid_argument("coefficient above total degree");
    if (eval(x0, y0) != 0)
        throw std::invalid_argument("base point does not lie on the curve");
    if (eval_dy(x0, y0) == 0)
        throw std::invalid_argument("branch is singular or vertical at the base point");
}

nlohmann::json CurveInstance::to_json() const {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& [ij, coeff] : coefficients)
        if (coeff != 0) jc.push_back({ij.first, ij.second, to_fraction_string(coeff)});
    return {{"n", n},
            {"coefficients", jc},
            {"base_point", {to_fraction_string(x0), to_fraction_string(y0)}}};
}

CurveInstance random_curve(int n, std::uint64_t seed, int coeff_bound) {
    if (n < 1 || coeff_bound < 1)
        throw std::invalid_argument("random_curve needs n >= 1 and coeff_bound >= 1");
    SplitMix64 rng{seed};
    constexpr int kBudget = 64;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        CurveInstance c;
        c.n = n;
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                c.coefficients[{i, j}] = Rational(rng.pick(-coeff_bound, coeff_bound));
        c.coefficients[{0, n}] = 1;
        c.x0 = Rational(rng.pick(-4, 4), rng.pick(1, 3));
        c.y0 = Rational(rng.pick(-4, 4), rng.pick(1, 3));
        // Shifting the constant term puts the base point on the curve exactly.
        c.coefficients[{0, 0}] -= c.eval(c.x0, c.y0);
        if (c.eval_dy(c.x0, c.y0) == 0) continue;
        c.validate();
        return c;
    }
    throw std::runtime_error("random_curve: resampling budget exhausted (seed " +
                             std::to_string(seed) + ")");
}

DerivativeJet implicit_jet(const CurveInstance& c, int order) {
    if (order < 1) throw std::invalid_argument("implicit_jet needs order >= 1");
    // Any smooth non-vertical branch works here; monicity only matters for the
    // elimination theory, not for differentiating the branch.
    if (c.eval(c.x0, c.y0) != 0)
        throw std::invalid_argument("base point does not lie on the curve");
    const Rational uy = c.eval_dy(c.x0, c.y0);
    if (uy == 0)
        throw std::invalid_argument("branch is singular or vertical at the base point");

    Series a{c.y0};
    for (int k = 1; k <= order; ++k) {
        // u(x0+t, Y + a_k t^k) = u(x0+t, Y) + uy * a_k t^k (mod t^{k+1})
        const Series residual = eval_on_branch(c, a, k);
        a.push_back(-residual[k] / uy);
    }
    const Series residual = eval_on_branch(c, a, order);
    for (const Rational& r : residual)
        if (r != 0) throw std::logic_error("implicit_jet left a nonzero residual");

    DerivativeJet jet;
    jet.order = order;
    for (int i = 0; i <= order; ++i) jet.values.push_back(a[i] * factorial(i));
    return jet;
}

namespace {

// Required jet order and evaluation map for one lambda variable.
int derivative_order_of(VarId v) {
    switch (v.alphabet) {
        case Alphabet::A: return v.index;
        case Alphabet::D:
        case Alphabet::E: return v.index + 2;
        default:
            throw std::invalid_argument("cannot evaluate variable " + variable_to_string(v) +
                                        " on a jet");
    }
}

Rational jet_value_of(VarId v, const DerivativeJet& jet) {
    const int d = derivative_order_of(v);
    Rational value = jet.values[d] / factorial(d);  // D^d y
    if (v.alphabet == Alphabet::E) value /= factorial(v.index);
    return value;
}

}  // namespace

Rational check_vanishing(const CurveOde& ode, const DerivativeJet& jet) {
    std::map<VarId, Rational> assignment;
    for (const VarId& v : ode.poly.variables()) {
        if (derivative_order_of(v) > jet.order)
            throw std::invalid_argument("jet of order " + std::to_string(jet.order) +
                                        " too short for the equation");
        assignment[v] = jet_value_of(v, jet);
    }
    return ode.poly.evaluate(assignment);
}

bool leibnitz_check(int n, int k, int r, const UniPoly& y_poly, const Rational& x0) {
    if (n < 0 || k < 1 || r < 0) throw std::invalid_argument("leibnitz_check domain");
    if (r > 0 && x0 == 0) throw std::invalid_argument("x0 must be nonzero when r > 0");

    // Left side: direct differentiation of x^r y(x)^k.
    UniPoly g{Rational(1)};
    for (int i = 0; i < k; ++i) g = uni_mul(g, y_poly);
    UniPoly xr(static_cast<std::size_t>(r) + 1, Rational(0));
    xr[r] = 1;
    g = uni_mul(g, xr);
    for (int i = 0; i < n; ++i) g = uni_derivative(g);
    const Rational lhs = uni_eval(g, x0) / factorial(n);

    // Right side: x^r Lambda^n(k A + r x^-1) through the series calculus.
    AlphabetSeries s = series_power(series_of_alphabet(Alphabet::A, n), k);
    if (r > 0) s = add_letter(s, r, MultiPoly(var_x_inverse()));
    MultiPoly rhs_poly = MultiPoly(Monomial({{var_x(), r}}), Rational(1)) * s.coeff(n);

    std::map<VarId, Rational> assignment;
    assignment[var_x()] = x0;
    if (x0 != 0) assignment[var_x_inverse()] = 1 / x0;
    UniPoly deriv = y_poly;
    for (int i = 0; i <= n; ++i) {
        assignment[lam(Alphabet::A, i)] = uni_eval(deriv, x0) / factorial(i);
        deriv = uni_derivative(deriv);
    }
    return lhs == rhs_poly.evaluate(assignment);
}

namespace {

std::map<VarId, Rational> full_assignment(const DerivativeJet& jet, int max_order) {
    std::map<VarId, Rational> a;
    for (int i = 0; i <= max_order; ++i)
        a[lam(Alphabet::A, i)] = jet.values[i] / factorial(i);
    return a;
}

std::map<VarId, Rational> sylvester_assignment(const DerivativeJet& jet, int max_index) {
    std::map<VarId, Rational> a;
    for (int i = 0; i <= max_index; ++i)
        a[lam(Alphabet::D, i)] = jet.values[i + 2] / factorial(i + 2);
    return a;
}

}  // namespace

Report verify_degree(int n, int trials, std::uint64_t seed, VerifyMode mode, int cap) {
    if (n < 2) throw std::invalid_argument("verify_degree needs n >= 2");
    if (trials < 1) throw std::invalid_argument("verify_degree needs trials >= 1");

    Report report;
    report.n = n;
    report.mode = mode;
    report.trials = trials;
    report.seed = seed;

    const int jet_order = n * (n + 3) / 2;
    constexpr int kCoeffBound = 5;

    CurveOde ode;
    PolyMatrix full, sylvester;
    if (mode == VerifyMode::Symbolic) {
        ode = curve_ode(n, OdeBasis::D, cap);
    } else {
        full = build_full_matrix(n);
        sylvester = build_sylvester_matrix(n);
    }

    auto equation_value = [&](const DerivativeJet& jet) -> Rational {
        if (mode == VerifyMode::Symbolic) return check_vanishing(ode, jet);
        const Rational v = evaluate_determinant(full, full_assignment(jet, jet_order));
        if (v != 0) return v;
        return evaluate_determinant(sylvester, sylvester_assignment(jet, jet_order - 2));
    };

    SplitMix64 seeds{seed};

    for (int t = 0; t < trials; ++t) {
        const CurveInstance curve = random_curve(n, seeds.next(), kCoeffBound);
        const Rational value = equation_value(implicit_jet(curve, jet_order));
        if (value == 0)
            ++report.passes;
        else
            report.failures.push_back({t, curve, value});
    }

    // Discrimination: degree-(n+1) curves must generically give nonzero.
    constexpr int kResampleBudget = 16;
    for (int t = 0; t < trials; ++t) {
        for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
            const CurveInstance curve = random_curve(n + 1, seeds.next(), kCoeffBound);
            const Rational value = equation_value(implicit_jet(curve, jet_order));
            if (value != 0) {
                ++report.discrimination_nonzero;
                break;
            }
            ++report.accidental_zeros;
        }
    }
    return report;
}

nlohmann::json Report::to_json() const {
    nlohmann::json jfailures = nlohmann::json::array();
    for (const VerifyFailure& f : failures)
        jfailures.push_back({{"trial", f.trial},
                             {"curve", f.curve.to_json()},
                             {"value", to_fraction_string(f.value)}});
    return {{"n", n},
            {"mode", mode == VerifyMode::Symbolic ? "symbolic" : "numeric"},
            {"trials", trials},
            {"passes", passes},
            {"discrimination_nonzero", discrimination_nonzero},
            {"accidental_zeros", accidental_zeros},
            {"seed", seed},
            {"failures", jfailures}};
}

std::string Report::summary() const {
    std::ostringstream os;
    os << "degree " << n << " (" << (mode == VerifyMode::Symbolic ? "symbolic" : "numeric")
       << "): " << passes << "/" << trials << " vanishing trials passed, "
       << discrimination_nonzero << "/" << trials << " discrimination trials nonzero, "
       << accidental_zeros << " accidental zeros resampled (seed " << seed << ")";
    for (const VerifyFailure& f : failures)
        os << "\n  FAIL trial " << f.trial << ": value " << to_fraction_string(f.value)
           << " on curve " << f.curve.to_json().dump();
    return os.str();
}

}  // namespace curvode
