// zetakit: exact number theory calculator; every library operation behind
// one batch-oriented command with optional JSON output.

#include <CLI11.hpp>

#include <complex>
#include <iostream>
#include <sstream>

#include "ztk/bernoulli.hpp"
#include "ztk/characters.hpp"
#include "ztk/errors.hpp"
#include "ztk/modular.hpp"
#include "ztk/mzv.hpp"
#include "ztk/padic.hpp"
#include "ztk/serialize.hpp"
#include "ztk/zetavalues.hpp"

using ztk::json;

namespace {

struct GlobalOpts {
    bool as_json = false;
    double tol = 1e-6;
    long order = 10;
    long precision = 3;
};

void emit(const GlobalOpts& g, const json& j, const std::string& text)
{
    if (g.as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::vector<unsigned long> parse_comma_list(const std::string& s)
{
    std::vector<unsigned long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoul(item));
    return out;
}

// character selection shared by gen-bernoulli, lvalue and padic-l
struct CharacterArgs {
    long kronecker = 0;
    bool has_kronecker = false;
    unsigned long modulus = 0;
    unsigned long order = 0;
    std::string values;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--kronecker", kronecker,
                        "use the quadratic character of this fundamental discriminant")
            ->each([this](const std::string&) { has_kronecker = true; });
        cmd->add_option("--char-modulus", modulus, "character modulus");
        cmd->add_option("--char-order", order, "character order");
        cmd->add_option("--char-values", values,
                        "comma list of exponents per residue, 'x' where the character vanishes");
    }

    ztk::DirichletCharacter build() const
    {
        if (has_kronecker)
            return ztk::kronecker_character(kronecker);
        if (modulus == 0)
            throw CLI::ValidationError(
                "character", "need --kronecker or --char-modulus/--char-order/--char-values");
        std::vector<long> table;
        std::stringstream ss(values);
        std::string item;
        while (std::getline(ss, item, ','))
            table.push_back(item == "x" ? -1 : std::stol(item));
        return ztk::make_character(modulus, order, table);
    }
};

std::string format_complex(std::complex<double> z)
{
    std::ostringstream os;
    os.precision(10);
    os << z.real();
    if (z.imag() != 0.0)
        os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string series_table(const ztk::TruncatedSeries& s)
{
    std::ostringstream os;
    for (long e = s.leading_exponent(); e < s.truncation_order(); ++e) {
        os << "q^" << e << "\t" << ztk::to_string(s.coefficient(e));
        if (e + 1 < s.truncation_order())
            os << "\n";
    }
    return os.str();
}

} // namespace

int main(int argc, char** argv)
{
    GlobalOpts g;
    CLI::App app{"exact Bernoulli/zeta/L-value calculator with p-adic interpolation"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.as_json, "emit one JSON document");
    app.add_option("--tol", g.tol, "tolerance for numeric evaluations");
    app.add_option("--order", g.order, "q-expansion order for series commands");
    app.add_option("--precision", g.precision, "p-adic precision");

    unsigned long bm = 0;
    auto* c_bern = app.add_subcommand("bernoulli", "Bernoulli number B_m");
    c_bern->add_option("m", bm, "index")->required();
    c_bern->callback([&] {
        ztk::Rational b = ztk::bernoulli_number(bm);
        emit(g, json{{"m", bm}, {"value", ztk::to_string(b)}}, ztk::to_string(b));
    });

    unsigned long bpm = 0;
    auto* c_bpoly = app.add_subcommand("bernoulli-poly", "Bernoulli polynomial B_m(x)");
    c_bpoly->add_option("m", bpm, "index")->required();
    c_bpoly->callback([&] {
        ztk::Polynomial p = ztk::bernoulli_polynomial(bpm);
        json coeffs = json::array();
        for (const auto& c : p.coefficients())
            coeffs.push_back(ztk::to_string(c));
        emit(g, json{{"m", bpm}, {"coefficients", coeffs}}, p.to_string());
    });

    unsigned long gbn = 1;
    CharacterArgs gb_char;
    auto* c_genb = app.add_subcommand("gen-bernoulli", "generalized Bernoulli number B_{n,chi}");
    c_genb->add_option("n", gbn, "index")->required();
    gb_char.attach(c_genb);
    c_genb->callback([&] {
        ztk::CyclotomicNumber b = ztk::generalized_bernoulli(gbn, gb_char.build());
        json coeffs = json::array();
        for (const auto& c : b.coefficients())
            coeffs.push_back(ztk::to_string(c));
        emit(g, json{{"n", gbn}, {"level", b.level()}, {"coefficients", coeffs}},
             b.to_string());
    });

    long va = 0, vN = 0;
    unsigned long vm = 1;
    auto* c_vor = app.add_subcommand("voronoi", "Voronoi congruence check for B_2m");
    c_vor->add_option("a", va)->required();
    c_vor->add_option("N", vN)->required();
    c_vor->add_option("m", vm)->required();
    c_vor->callback([&] {
        auto r = ztk::voronoi_check(ztk::Integer(va), ztk::Integer(vN), vm);
        std::ostringstream os;
        os << r.lhs.get_str() << " = " << r.rhs.get_str() << " (mod " << r.modulus.get_str()
           << "): " << (r.holds ? "holds" : "FAILS");
        emit(g, ztk::to_json(r), os.str());
    });

    unsigned long kp = 5, km = 2, kn = 6, kN = 0;
    auto* c_kum = app.add_subcommand("kummer", "Kummer congruence check");
    c_kum->add_option("p", kp)->required();
    c_kum->add_option("m", km)->required();
    c_kum->add_option("n", kn)->required();
    c_kum->add_option("N", kN, "congruence depth (mod p^{N+1})");
    c_kum->callback([&] {
        auto r = ztk::kummer_check(kp, km, kn, kN);
        std::ostringstream os;
        os << r.lhs.get_str() << " = " << r.rhs.get_str() << " (mod " << r.modulus.get_str()
           << "): " << (r.holds ? "holds" : "FAILS");
        emit(g, ztk::to_json(r), os.str());
    });

    unsigned long z_even = 0, z_neg = 0;
    auto* c_zeta = app.add_subcommand("zeta", "special values of the Riemann zeta function");
    auto* opt_even = c_zeta->add_option("--even", z_even, "zeta(2m) as a pi power");
    auto* opt_neg = c_zeta->add_option("--negative", z_neg, "zeta(-n) as a rational");
    c_zeta->callback([&] {
        if (opt_even->count() + opt_neg->count() != 1)
            throw CLI::ValidationError("zeta", "pass exactly one of --even or --negative");
        if (opt_even->count()) {
            ztk::PiPower z = ztk::zeta_even(z_even);
            emit(g, ztk::to_json(z), z.to_string());
        } else {
            ztk::Rational z = ztk::zeta_negative(z_neg);
            emit(g, json{{"n", z_neg}, {"value", ztk::to_string(z)}}, ztk::to_string(z));
        }
    });

    unsigned long plm = 2;
    double plre = 0.0, plim = 0.0;
    auto* c_poly = app.add_subcommand("polylog", "polylogarithm L_m(z)");
    c_poly->add_option("m", plm)->required();
    c_poly->add_option("re", plre, "Re z")->required();
    c_poly->add_option("im", plim, "Im z");
    c_poly->callback([&] {
        auto v = ztk::polylog(plm, {plre, plim}, g.tol);
        emit(g,
             json{{"m", plm}, {"re", v.real()}, {"im", v.imag()}, {"tol", g.tol}},
             format_complex(v) + " (+/- " + std::to_string(g.tol) + ")");
    });

    double ls = 1.0;
    CharacterArgs l_char;
    auto* c_lval = app.add_subcommand("lvalue", "Dirichlet L(s, chi) numerically");
    c_lval->add_option("s", ls)->required();
    l_char.attach(c_lval);
    c_lval->callback([&] {
        auto v = ztk::dirichlet_L(l_char.build(), ls, g.tol);
        emit(g, json{{"s", ls}, {"re", v.real()}, {"im", v.imag()}, {"tol", g.tol}},
             format_complex(v) + " (+/- " + std::to_string(g.tol) + ")");
    });

    long cd = -4;
    auto* c_class = app.add_subcommand("class-number", "class number of Q(sqrt(D)), D < 0");
    c_class->add_option("D", cd, "fundamental discriminant")->required();
    c_class->callback([&] {
        unsigned long h = ztk::class_number(cd);
        emit(g, json{{"D", cd}, {"h", h}}, std::to_string(h));
    });

    std::string mzv_index;
    unsigned long mzv_limit = 100000;
    auto* c_mzv = app.add_subcommand("mzv", "multiple zeta value of an index like 2,2");
    c_mzv->add_option("index", mzv_index)->required();
    c_mzv->add_option("--limit", mzv_limit, "truncation bound for the outer sum");
    c_mzv->callback([&] {
        auto r = ztk::mzv(ztk::MZVIndex::untwisted(parse_comma_list(mzv_index)), mzv_limit);
        std::ostringstream os;
        os.precision(10);
        os << r.value << " (+/- " << r.error_bound << ")";
        emit(g, json{{"index", mzv_index}, {"value", r.value}, {"errorBound", r.error_bound}},
             os.str());
    });

    std::string cmzv_index, cmzv_twists;
    unsigned long cmzv_level = 1, cmzv_limit = 100000;
    auto* c_cmzv = app.add_subcommand("cmzv", "cyclotomic multiple zeta value");
    c_cmzv->add_option("index", cmzv_index)->required();
    c_cmzv->add_option("--twists", cmzv_twists, "root-of-unity exponents, comma list");
    c_cmzv->add_option("--level", cmzv_level, "level N of mu_N");
    c_cmzv->add_option("--limit", cmzv_limit, "truncation bound");
    c_cmzv->callback([&] {
        auto exps = parse_comma_list(cmzv_index);
        auto tws = cmzv_twists.empty() ? std::vector<unsigned long>(exps.size(), 0)
                                       : parse_comma_list(cmzv_twists);
        auto r = ztk::cyclotomic_mzv(ztk::MZVIndex::twisted(exps, tws, cmzv_level), cmzv_limit);
        emit(g,
             json{{"index", cmzv_index},
                  {"level", cmzv_level},
                  {"re", r.value.real()},
                  {"im", r.value.imag()},
                  {"errorBound", r.error_bound}},
             format_complex(r.value) + " (+/- " + std::to_string(r.error_bound) + ")");
    });

    unsigned long sa = 2, sb = 2;
    auto* c_stuffle = app.add_subcommand("stuffle",
                                         "check zeta(a)zeta(b) = zeta(a,b)+zeta(b,a)+zeta(a+b)");
    c_stuffle->add_option("a", sa)->required();
    c_stuffle->add_option("b", sb)->required();
    c_stuffle->callback([&] {
        bool ok = ztk::stuffle_check(sa, sb, g.tol);
        emit(g, json{{"a", sa}, {"b", sb}, {"tol", g.tol}, {"holds", ok}},
             ok ? "holds" : "FAILS");
        if (!ok)
            throw ztk::PrecisionError("stuffle identity failed at this tolerance");
    });

    auto* c_iter = app.add_subcommand("iterint", "zeta(2) via its iterated integral");
    c_iter->callback([&] {
        double v = ztk::zeta2_via_iterated_integral(g.tol);
        std::ostringstream os;
        os.precision(12);
        os << v << " (+/- " << g.tol << ")";
        emit(g, json{{"value", v}, {"tol", g.tol}}, os.str());
    });

    std::string per;
    unsigned long pep = 5;
    auto* c_embed = app.add_subcommand("padic-embed", "embed a rational into Q_p");
    c_embed->add_option("rational", per, "value like 22/7")->required();
    c_embed->add_option("p", pep)->required();
    c_embed->callback([&] {
        ztk::PAdic x = ztk::padic_embed(ztk::rational_from_string(per), pep, g.precision);
        emit(g, ztk::to_json(x), x.to_string());
    });

    long tc = 2;
    unsigned long tp = 5;
    auto* c_teich = app.add_subcommand("teichmuller", "Teichmuller representative of c in Z_p");
    c_teich->add_option("c", tc)->required();
    c_teich->add_option("p", tp)->required();
    c_teich->callback([&] {
        ztk::PAdic x = ztk::teichmuller(ztk::Integer(tc), tp, g.precision);
        emit(g, ztk::to_json(x), x.to_string());
    });

    unsigned long dm = 0, dp = 5, dN = 1;
    long dalpha = 0;
    auto* c_dist = app.add_subcommand("distribution", "Bernoulli distribution on [alpha, N]_p");
    c_dist->add_option("m", dm)->required();
    c_dist->add_option("p", dp)->required();
    c_dist->add_option("alpha", dalpha)->required();
    c_dist->add_option("N", dN)->required();
    c_dist->callback([&] {
        ztk::Rational v = ztk::bernoulli_distribution(
            dm, ztk::PAdicInterval(dp, ztk::Integer(dalpha), dN));
        emit(g,
             json{{"m", dm}, {"p", dp}, {"alpha", dalpha}, {"N", dN},
                  {"value", ztk::to_string(v)}},
             ztk::to_string(v));
    });

    unsigned long zp = 5, za = 2;
    long zs = -1;
    auto* c_pz = app.add_subcommand("padic-zeta", "Kubota-Leopoldt zeta branch value");
    c_pz->add_option("p", zp)->required();
    c_pz->add_option("a", za, "branch")->required();
    c_pz->add_option("s", zs, "integer evaluation point")->required();
    c_pz->callback([&] {
        ztk::PAdic v = ztk::padic_zeta(zp, za, zs, g.precision);
        emit(g, ztk::to_json(v), v.to_string());
    });

    unsigned long lp = 5, ln = 1;
    CharacterArgs lp_char;
    auto* c_pl = app.add_subcommand("padic-l", "p-adic L-value L_p(1-n, chi)");
    c_pl->add_option("p", lp)->required();
    c_pl->add_option("n", ln)->required();
    lp_char.attach(c_pl);
    c_pl->callback([&] {
        ztk::PAdic v = ztk::padic_L(lp, lp_char.build(), ln, g.precision);
        emit(g, ztk::to_json(v), v.to_string());
    });

    unsigned long sigk = 1, sign = 1;
    auto* c_sigma = app.add_subcommand("sigma", "divisor power sum sigma_k(n)");
    c_sigma->add_option("k", sigk)->required();
    c_sigma->add_option("n", sign)->required();
    c_sigma->callback([&] {
        ztk::Integer v = ztk::divisor_sigma(sigk, sign);
        emit(g, json{{"k", sigk}, {"n", sign}, {"value", v.get_str()}}, v.get_str());
    });

    unsigned long ek = 2;
    auto* c_eis = app.add_subcommand("eisenstein", "normalized Eisenstein series E_k");
    c_eis->add_option("k", ek, "index (weight 2k)")->required();
    c_eis->callback([&] {
        ztk::EisensteinSeries e = ztk::eisenstein_series(ek, g.order);
        json j = ztk::to_json(e.series);
        j["k"] = ek;
        j["weight"] = e.weight();
        j["prefactor"] = ztk::to_json(ztk::eisenstein_prefactor(ek));
        emit(g, j, series_table(e.series));
    });

    auto* c_delta = app.add_subcommand("delta", "normalized discriminant cusp form");
    c_delta->callback([&] {
        ztk::TruncatedSeries d = ztk::discriminant_series(g.order);
        emit(g, ztk::to_json(d), series_table(d));
    });

    auto* c_j = app.add_subcommand("j", "modular j-invariant q-expansion");
    c_j->callback([&] {
        ztk::TruncatedSeries jj = ztk::j_series(g.order);
        emit(g, ztk::to_json(jj), series_table(jj));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ztk::Error& e) {
        if (g.as_json)
            std::cout << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
