#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "curvode/rational.hpp"

namespace curvode {

// Variable universe. A, D, E are the three lambda alphabets (Lambda^i of
// each); X is the auxiliary indeterminate x and XI its formal inverse, with
// x * x^-1 = 1 enforced by monomial multiplication. PSI holds the abstract
// power-sum generators psi_i.
enum class Alphabet : std::uint8_t { A, D, E, X, XI, PSI };

const char* alphabet_name(Alphabet a);
Alphabet alphabet_from_name(const std::string& s);

struct VarId {
    Alphabet alphabet = Alphabet::A;
    int index = 0;  // X and XI always use index 0

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

inline VarId lam(Alphabet a, int i) { return VarId{a, i}; }
inline VarId var_x() { return VarId{Alphabet::X, 0}; }
inline VarId var_x_inverse() { return VarId{Alphabet::XI, 0}; }
inline VarId psi_var(int i) { return VarId{Alphabet::PSI, i}; }

// Product of variables with positive integer exponents, kept sorted by VarId.
// The empty factor list is the unit monomial.
class Monomial {
  public:
    Monomial() = default;
    // Repeated variables are merged; zero exponents dropped; x/x^-1 pairs cancel.
    explicit Monomial(std::vector<std::pair<VarId, int>> factors);

    const std::vector<std::pair<VarId, int>>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int exponent_of(VarId v) const;

    int degree() const;  // sum of exponents
    int weight() const;  // sum of index * exponent, X and XI excluded

    friend Monomial operator*(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Lexicographic order scanning VarIds in increasing order; at the first
    // position where exponents differ the monomial with the larger exponent is
    // the greater one. This makes e.g. L0^2*L3 > L0*L1*L2 > L1^3.
    static std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b);

  private:
    std::vector<std::pair<VarId, int>> factors_;
    void cancel_x_pairs();
};

struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::lex_cmp(a, b) == std::strong_ordering::greater;
    }
};

// Sparse multivariate polynomial over Rational. Terms are stored with the
// lexicographically greatest monomial first, so iteration order, printing and
// serialization are all deterministic. Immutable-value usage: every operation
// returns a fresh polynomial.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Rational, MonomialLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(Rational constant);
    explicit MultiPoly(VarId v);
    MultiPoly(Monomial m, Rational coeff);

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly one() { return MultiPoly(Rational(1)); }
    static MultiPoly variable(VarId v) { return MultiPoly(v); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    // Greatest monomial and its coefficient; throws on the zero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    int degree() const;  // max over monomials; zero polynomial has degree 0
    std::vector<VarId> variables() const;

    bool is_homogeneous(int* deg = nullptr) const;
    bool is_isobaric(int* weight = nullptr) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    MultiPoly operator-() const;
    MultiPoly pow(int k) const;  // k >= 0

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    // Every variable of the polynomial must be covered by the assignment.
    Rational evaluate(const std::map<VarId, Rational>& assignment) const;
    MultiPoly substitute(VarId v, const MultiPoly& replacement) const;
    MultiPoly substitute(VarId v, const Rational& value) const;

    // Exact division by v^power; throws if any monomial lacks the factor.
    MultiPoly divide_exact_by_var(VarId v, int power = 1) const;

    // Positive rational c such that (1/c) * poly has coprime integer
    // coefficients; content of the zero polynomial is 1.
    Rational content() const;
    // Divides by the content and flips the sign so the lexicographically
    // greatest monomial has a positive coefficient.
    MultiPoly canonicalized() const;

    std::string to_string() const;  // deterministic text form, greatest term first

    nlohmann::json to_json() const;
    static MultiPoly from_json(const nlohmann::json& j);

  private:
    TermMap terms_;
    void add_term(const Monomial& m, const Rational& c);
    friend class PolyBuilder;
};

std::string variable_to_string(VarId v);
std::string monomial_to_string(const Monomial& m);

// Rational power with integer exponent >= 0.
Rational rational_pow(const Rational& base, int exp);

}  // namespace curvode
