#include "curvode/cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "curvode/alphabet_ops.hpp"
#include "curvode/curve_ode.hpp"
#include "curvode/errors.hpp"
#include "curvode/invariants.hpp"
#include "curvode/oracle.hpp"

namespace curvode {

namespace {

enum class Format { Text, Json, Latex };

Format format_from_name(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "latex") return Format::Latex;
    throw CLI::ValidationError("--format", "expected text, json or latex");
}

std::string latex_factor(VarId v, int exp) {
    std::string base;
    switch (v.alphabet) {
        case Alphabet::A: base = "\\Lambda_{" + std::to_string(v.index) + "}(\\mathbb{A})"; break;
        case Alphabet::D: base = "\\Lambda_{" + std::to_string(v.index) + "}"; break;
        case Alphabet::E: base = "\\Lambda_{" + std::to_string(v.index) + "}(\\mathcal{E})"; break;
        case Alphabet::PSI: base = "\\psi_{" + std::to_string(v.index) + "}"; break;
        case Alphabet::X: base = "x"; break;
        case Alphabet::XI: base = "x^{-1}"; break;
    }
    if (exp > 1) base += "^{" + std::to_string(exp) + "}";
    return base;
}

// Lambda^i D = D^{i+2} y = y^{(i+2)}/(i+2)!, with the factorial kept visible.
std::string derivative_factor(VarId v, int exp, bool latex) {
    const int k = v.index + 2;
    std::string y;
    if (k == 2)
        y = "y''";
    else if (k == 3)
        y = "y'''";
    else
        y = latex ? "y^{(" + std::to_string(k) + ")}" : "y^(" + std::to_string(k) + ")";
    std::string base = latex ? "\\frac{" + y + "}{" + std::to_string(k) + "!}"
                             : "(" + y + "/" + std::to_string(k) + "!)";
    if (exp > 1)
        base += latex ? "^{" + std::to_string(exp) + "}" : "^" + std::to_string(exp);
    return base;
}

using FactorFn = std::function<std::string(VarId, int)>;

std::string render_terms(const MultiPoly& p, const FactorFn& factor, const std::string& mul,
                         bool descending_factors) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mon;
        auto emit = [&](const std::pair<VarId, int>& f) {
            if (!mon.empty()) mon += mul;
            mon += factor(f.first, f.second);
        };
        const auto& fs = m.factors();
        if (descending_factors)
            for (auto it = fs.rbegin(); it != fs.rend(); ++it) emit(*it);
        else
            for (const auto& f : fs) emit(f);
        if (mon.empty())
            os << mag;
        else if (mag == 1)
            os << mon;
        else
            os << mag << mul << mon;
    }
    return os.str();
}

std::string render_ode(const CurveOde& ode, Format format) {
    switch (format) {
        case Format::Text:
            if (ode.basis == OdeBasis::Psi) return ode.psi->to_string() + " = 0";
            if (ode.basis == OdeBasis::Derivative)
                return render_terms(
                           ode.poly,
                           [](VarId v, int e) { return derivative_factor(v, e, false); }, "*",
                           false) +
                       " = 0";
            return ode.poly.to_string() + " = 0";
        case Format::Latex: {
            const bool psi = ode.basis == OdeBasis::Psi;
            const MultiPoly& p = psi ? ode.psi->poly() : ode.poly;
            FactorFn f = ode.basis == OdeBasis::Derivative
                             ? FactorFn([](VarId v, int e) { return derivative_factor(v, e, true); })
                             : FactorFn(latex_factor);
            return render_terms(p, f, "\\,", psi) + " = 0";
        }
        case Format::Json: {
            nlohmann::json j{{"n", ode.n},
                             {"basis", ode_basis_name(ode.basis)},
                             {"degree", ode.degree_in_lambda},
                             {"weight", ode.weight},
                             {"poly", ode.poly.to_json()}};
            if (ode.psi) j["psi"] = ode.psi->to_json();
            return j.dump();
        }
    }
    throw std::logic_error("unreachable format");
}

std::string render_psi_expression(const PsiExpression& p, Format format) {
    switch (format) {
        case Format::Text: return p.to_string() + " = 0";
        case Format::Latex: return render_terms(p.poly(), latex_factor, "\\,", true) + " = 0";
        case Format::Json: return p.to_json().dump();
    }
    throw std::logic_error("unreachable format");
}

struct CliOptions {
    int degree = 2;
    std::string basis = "D";
    std::string format = "text";
    std::string mode = "symbolic";
    int trials = 10;
    std::uint64_t seed = 0;
    int cap = kDefaultSymbolicCap;
    bool halphen_only = false;
};

int cmd_emit(const CliOptions& opt, std::ostream& out) {
    const CurveOde ode = curve_ode(opt.degree, ode_basis_from_name(opt.basis), opt.cap);
    out << render_ode(ode, format_from_name(opt.format)) << "\n";
    return 0;
}

int cmd_check(const CliOptions& opt, bool degree_given, std::ostream& out) {
    bool all_ok = true;
    auto verdict = [&](const std::string& name, bool ok) {
        out << (ok ? "ok:   " : "FAIL: ") << name << "\n";
        all_ok = all_ok && ok;
    };

    if (!opt.halphen_only) {
        if (degree_given) {
            const CurveOde ode = curve_ode(opt.degree, OdeBasis::D, opt.cap);
            const MultiPoly normalized =
                ode.poly.substitute(lam(Alphabet::D, 0), Rational(1));
            verdict("degree-" + std::to_string(opt.degree) +
                        " equation is annihilated by nabla_D",
                    is_semi_invariant(normalized, Alphabet::D));
        }
        for (int i = 2; i <= 8; ++i)
            verdict("psi_" + std::to_string(i) + " is a semi-invariant",
                    is_semi_invariant(lambda_to_psi(i, Alphabet::E), Alphabet::E));
    }
    verdict("halphen invariant is a semi-invariant",
            is_semi_invariant(halphen_invariant().expand(Alphabet::E), Alphabet::E));
    return all_ok ? 0 : 1;
}

int cmd_verify(const CliOptions& opt, std::ostream& out) {
    const VerifyMode mode =
        opt.mode == "numeric" ? VerifyMode::Numeric : VerifyMode::Symbolic;
    const Report report = verify_degree(opt.degree, opt.trials, opt.seed, mode, opt.cap);
    if (format_from_name(opt.format) == Format::Json)
        out << report.to_json().dump() << "\n";
    else
        out << report.summary() << "\n";
    return report.all_passed() ? 0 : 1;
}

int cmd_matrix(const CliOptions& opt, std::ostream& out) {
    if (opt.basis != "A" && opt.basis != "D")
        throw CLI::ValidationError("--basis", "matrix basis is A (full) or D (Sylvester)");
    const PolyMatrix m = opt.basis == "A" ? build_full_matrix(opt.degree)
                                          : build_sylvester_matrix(opt.degree);
    if (format_from_name(opt.format) == Format::Json) {
        out << m.to_json().dump() << "\n";
    } else {
        for (int r = 0; r < m.side; ++r) {
            for (int c = 0; c < m.side; ++c)
                out << (c ? " | " : "") << m.at(r, c).to_string();
            out << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("curvode");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact differential equations of plane algebraic curves"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_common = [&](CLI::App* cmd, bool with_basis) {
        cmd->add_option("--format", opt.format, "text, json or latex")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        if (with_basis) cmd->add_option("--basis", opt.basis, "variable basis");
        cmd->add_option("--cap", opt.cap, "symbolic expansion cap (matrix side)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* emit = app.add_subcommand("emit", "print the curve equation");
    emit->add_option("--degree", opt.degree, "curve degree")->required()->check(CLI::Range(2, 64));
    add_common(emit, true);
    emit->get_option("--basis")->check(CLI::IsMember({"A", "D", "E", "psi", "derivative"}));

    CLI::App* check = app.add_subcommand("check", "kernel (semi-invariance) checks");
    CLI::Option* check_degree =
        check->add_option("--degree", opt.degree, "curve degree")->check(CLI::Range(2, 64));
    check->add_flag("--halphen", opt.halphen_only, "check only the Halphen invariant");
    check->add_option("--cap", opt.cap, "symbolic expansion cap")->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "random-curve verification runs");
    verify->add_option("--degree", opt.degree, "curve degree")->required()->check(CLI::Range(2, 64));
    verify->add_option("--trials", opt.trials, "number of trials")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "random seed");
    verify->add_option("--mode", opt.mode, "symbolic or numeric")
        ->check(CLI::IsMember({"symbolic", "numeric"}));
    add_common(verify, false);

    CLI::App* matrix = app.add_subcommand("matrix", "dump an elimination matrix");
    matrix->add_option("--degree", opt.degree, "curve degree")->required()->check(CLI::Range(2, 64));
    add_common(matrix, true);

    CLI::App* halphen = app.add_subcommand("halphen", "print the Halphen invariant");
    add_common(halphen, false);
    CLI::App* monge = app.add_subcommand("monge", "print the Monge invariant");
    add_common(monge, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (emit->parsed()) return cmd_emit(opt, out);
        if (check->parsed()) return cmd_check(opt, static_cast<bool>(*check_degree), out);
        if (verify->parsed()) return cmd_verify(opt, out);
        if (matrix->parsed()) return cmd_matrix(opt, out);
        if (halphen->parsed()) {
            out << render_psi_expression(halphen_invariant(), format_from_name(opt.format))
                << "\n";
            return 0;
        }
        if (monge->parsed()) {
            out << render_psi_expression(monge_invariant(), format_from_name(opt.format))
                << "\n";
            return 0;
        }
        err << "no command given\n";
        return 2;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace curvode
