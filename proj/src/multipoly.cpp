#include "curvode/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace curvode {

const char* alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::A: return "A";
        case Alphabet::D: return "D";
        case Alphabet::E: return "E";
        case Alphabet::X: return "X";
        case Alphabet::XI: return "XI";
        case Alphabet::PSI: return "PSI";
    }
    throw std::logic_error("unreachable alphabet");
}

Alphabet alphabet_from_name(const std::string& s) {
    if (s == "A") return Alphabet::A;
    if (s == "D") return Alphabet::D;
    if (s == "E") return Alphabet::E;
    if (s == "X") return Alphabet::X;
    if (s == "XI") return Alphabet::XI;
    if (s == "PSI") return Alphabet::PSI;
    throw std::invalid_argument("unknown alphabet: " + s);
}

Monomial::Monomial(std::vector<std::pair<VarId, int>> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
        if (e == 0) continue;
        if (!factors_.empty() && factors_.back().first == v)
            factors_.back().second += e;
        else
            factors_.emplace_back(v, e);
    }
    cancel_x_pairs();
}

void Monomial::cancel_x_pairs() {
    auto x = std::find_if(factors_.begin(), factors_.end(),
                          [](const auto& f) { return f.first == var_x(); });
    auto xi = std::find_if(factors_.begin(), factors_.end(),
                           [](const auto& f) { return f.first == var_x_inverse(); });
    if (x == factors_.end() || xi == factors_.end()) return;
    const int c = std::min(x->second, xi->second);
    x->second -= c;
    xi->second -= c;
    std::erase_if(factors_, [](const auto& f) { return f.second == 0; });
}

int Monomial::exponent_of(VarId v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::weight() const {
    int w = 0;
    for (const auto& [v, e] : factors_)
        if (v.alphabet != Alphabet::X && v.alphabet != Alphabet::XI) w += v.index * e;
    return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first)
            r.factors_.push_back(*i++);
        else if (j->first < i->first)
            r.factors_.push_back(*j++);
        else {
            r.factors_.emplace_back(i->first, i->second + j->second);
            ++i, ++j;
        }
    }
    r.factors_.insert(r.factors_.end(), i, a.factors_.end());
    r.factors_.insert(r.factors_.end(), j, b.factors_.end());
    r.cancel_x_pairs();
    return r;
}

std::strong_ordering Monomial::lex_cmp(const Monomial& a, const Monomial& b) {
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first < j->first) return std::strong_ordering::greater;
        if (j->first < i->first) return std::strong_ordering::less;
        if (i->second != j->second)
            return i->second > j->second ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        ++i, ++j;
    }
    if (i != a.factors_.end()) return std::strong_ordering::greater;
    if (j != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

MultiPoly::MultiPoly(Rational constant) {
    if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

MultiPoly::MultiPoly(VarId v) { terms_.emplace(Monomial({{v, 1}}), Rational(1)); }

MultiPoly::MultiPoly(Monomial m, Rational coeff) {
    if (coeff != 0) terms_.emplace(std::move(m), std::move(coeff));
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

int MultiPoly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<VarId> MultiPoly::variables() const {
    std::vector<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool MultiPoly::is_homogeneous(int* deg) const {
    if (terms_.empty()) {
        if (deg) *deg = 0;
        return true;
    }
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    if (deg) *deg = d;
    return true;
}

bool MultiPoly::is_isobaric(int* weight) const {
    if (terms_.empty()) {
        if (weight) *weight = 0;
        return true;
    }
    const int w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    if (weight) *weight = w;
    return true;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    if (c == 0) return MultiPoly();
    MultiPoly r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly MultiPoly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    MultiPoly r = one();
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

Rational rational_pow(const Rational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative rational power");
    Rational r(1);
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

Rational MultiPoly::evaluate(const std::map<VarId, Rational>& assignment) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("assignment missing variable " +
                                            variable_to_string(v));
            t *= rational_pow(it->second, e);
        }
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute(VarId v, const MultiPoly& replacement) const {
    MultiPoly result;
    std::vector<MultiPoly> powers{MultiPoly::one()};  // powers[e] = replacement^e
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent_of(v);
        if (e == 0) {
            result.add_term(m, c);
            continue;
        }
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * replacement);
        std::vector<std::pair<VarId, int>> rest;
        for (const auto& f : m.factors())
            if (f.first != v) rest.push_back(f);
        result += MultiPoly(Monomial(std::move(rest)), c) * powers[e];
    }
    return result;
}

MultiPoly MultiPoly::substitute(VarId v, const Rational& value) const {
    return substitute(v, MultiPoly(value));
}

MultiPoly MultiPoly::divide_exact_by_var(VarId v, int power) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.exponent_of(v) < power)
            throw std::domain_error("polynomial not divisible by " +
                                    variable_to_string(v) + "^" + std::to_string(power));
        std::vector<std::pair<VarId, int>> fs = m.factors();
        for (auto& f : fs)
            if (f.first == v) f.second -= power;
        r.terms_.emplace(Monomial(std::move(fs)), c);
    }
    return r;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(1);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    return Rational(abs(num_gcd), den_lcm);
}

MultiPoly MultiPoly::canonicalized() const {
    if (terms_.empty()) return *this;
    Rational scale = 1 / content();
    if (leading_coefficient() < 0) scale = -scale;
    return scale * *this;
}

std::string variable_to_string(VarId v) {
    switch (v.alphabet) {
        case Alphabet::X: return "x";
        case Alphabet::XI: return "x^-1";
        case Alphabet::PSI: return "psi" + std::to_string(v.index);
        default: return std::string(alphabet_name(v.alphabet)) + std::to_string(v.index);
    }
}

std::string monomial_to_string(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : m.factors()) {
        if (!first) os << "*";
        first = false;
        os << variable_to_string(v);
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit())
            os << mag;
        else if (mag == 1)
            os << monomial_to_string(m);
        else
            os << mag << "*" << monomial_to_string(m);
    }
    return os.str();
}

nlohmann::json MultiPoly::to_json() const {
    const std::vector<VarId> vars = variables();
    nlohmann::json jvars = nlohmann::json::array();
    for (const VarId& v : vars) jvars.push_back({alphabet_name(v.alphabet), v.index});

    nlohmann::json jterms = nlohmann::json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::json jmon = nlohmann::json::array();
        for (const auto& [v, e] : m.factors()) {
            const auto idx = std::lower_bound(vars.begin(), vars.end(), v) - vars.begin();
            jmon.push_back({idx, e});
        }
        jterms.push_back({{"coeff", to_fraction_string(c)}, {"monomial", jmon}});
    }
    return {{"vars", jvars}, {"terms", jterms}};
}

MultiPoly MultiPoly::from_json(const nlohmann::json& j) {
    std::vector<VarId> vars;
    for (const auto& jv : j.at("vars"))
        vars.push_back(VarId{alphabet_from_name(jv.at(0).get<std::string>()),
                             jv.at(1).get<int>()});
    MultiPoly p;
    for (const auto& jt : j.at("terms")) {
        std::vector<std::pair<VarId, int>> factors;
        for (const auto& jf : jt.at("monomial")) {
            const auto idx = jf.at(0).get<std::size_t>();
            if (idx >= vars.size())
                throw std::invalid_argument("monomial references unknown variable index");
            factors.emplace_back(vars[idx], jf.at(1).get<int>());
        }
        p.add_term(Monomial(std::move(factors)),
                   parse_rational(jt.at("coeff").get<std::string>()));
    }
    return p;
}

}  // namespace curvode
