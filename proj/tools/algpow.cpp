// algpow command-line front end.  JSON goes to stdout (or -o), errors to
// stderr as a JSON object.  Exit: 0 success / yes, 2 verdict no, 1 error or
// an inconclusive verdict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "algpow/decide.hpp"
#include "algpow/error.hpp"
#include "algpow/report.hpp"

using namespace algpow;

namespace {

struct Common {
    std::string poly;
    std::optional<std::size_t> root_index;
    long precision = default_start_bits;
    std::string output;
};

struct LambdaArgs {
    std::string lambda = "1";
    std::string lambda_poly;
    std::optional<std::size_t> lambda_root;
};

void add_common(CLI::App * app, Common & c, bool need_output = false)
{
    app->add_option("--poly", c.poly, "minimal polynomial, ascending coefficients, or a bare rational")->required();
    app->add_option("--root-index", c.root_index, "designated root (index in the sorted root list)");
    app->add_option("--precision", c.precision, "starting working precision in bits")->check(CLI::Range(16L, 1L << 20));
    auto * o = app->add_option("-o,--output", c.output, "output path");
    if (need_output)
        o->required();
}

void add_lambda(CLI::App * app, LambdaArgs & l)
{
    app->add_option("--lambda", l.lambda, "lambda as a rational or coordinates [c0, c1, ...] in powers of alpha");
    app->add_option("--lambda-poly", l.lambda_poly, "minimal polynomial of lambda (lifted into Q(alpha))");
    app->add_option("--lambda-root-index", l.lambda_root, "designated root of --lambda-poly");
}

AlgPtr make_alpha(Common const & c)
{
    return AlgebraicNumber::from_minpoly(parse_minpoly(c.poly), c.root_index, c.precision);
}

bool trimmed_starts_with_bracket(std::string const & s)
{
    auto p = s.find_first_not_of(" \t");
    return p != std::string::npos && s[p] == '[';
}

FieldElement make_lambda(LambdaArgs const & l, AlgPtr const & a, long precision)
{
    if (!l.lambda_poly.empty()) {
        AlgPtr lp = AlgebraicNumber::from_minpoly(parse_minpoly(l.lambda_poly), l.lambda_root, precision);
        auto x = lift_to_field(lp, a);
        if (!x)
            throw Error(errc::outside_field, "lambda is not in Q(alpha)");
        return *x;
    }
    if (trimmed_starts_with_bracket(l.lambda)) {
        auto v = parse_rat_vector(l.lambda);
        if (static_cast<int>(v.size()) > a->degree())
            throw Error(errc::parse, "lambda has more coordinates than the degree of alpha");
        return FieldElement::from_poly(a, RatPoly(v));
    }
    return FieldElement::rational(a, parse_rational(l.lambda));
}

void emit(std::string const & text, std::string const & path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error(errc::precondition, "cannot write " + path);
    f << text;
}

int fail(std::string const & code, std::string const & message)
{
    json j{{"error", code}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return 1;
}

int decision_exit(Decision const & d)
{
    switch (d.verdict) {
    case Verdict::yes:
        return 0;
    case Verdict::no:
        return 2;
    case Verdict::unknown:
        return 1;
    }
    return 1;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"algpow: powers of algebraic numbers, trace orbits, limit points and the Hardy/Mahler sets"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Common cc;
    LambdaArgs la;

    auto * classify = app.add_subcommand("classify", "PV / Salem / pseudo-PV classification");
    add_common(classify, cc);

    std::string decide_kind;
    bool no_cross = false;
    auto * decide = app.add_subcommand("decide", "decide membership of (lambda, alpha) in H or M");
    decide->add_option("problem", decide_kind, "hardy or mahler")->required()->check(CLI::IsMember({"hardy", "mahler"}));
    add_common(decide, cc);
    add_lambda(decide, la);
    decide->add_flag("--no-cross-check", no_cross, "skip the numerical cross-check");
    auto * dh = app.add_subcommand("decide-hardy", "same as 'decide hardy'");
    add_common(dh, cc);
    add_lambda(dh, la);
    dh->add_flag("--no-cross-check", no_cross, "skip the numerical cross-check");
    auto * dm = app.add_subcommand("decide-mahler", "same as 'decide mahler'");
    add_common(dm, cc);
    add_lambda(dm, la);
    dm->add_flag("--no-cross-check", no_cross, "skip the numerical cross-check");

    std::optional<std::int64_t> b;
    auto * orbit = app.add_subcommand("orbit", "Tr(lambda alpha^n) mod b as preperiod + cycle");
    add_common(orbit, cc);
    add_lambda(orbit, la);
    orbit->add_option("--b", b, "modulus")->required();

    auto * limits = app.add_subcommand("limits", "limit points / intervals of ||lambda alpha^n||");
    add_common(limits, cc);
    add_lambda(limits, la);
    limits->add_option("--b", b, "denominator: limits of ||(lambda/b) alpha^n||");

    long n_max = 0;
    long guard = 64;
    auto * scatter = app.add_subcommand("scatter", "CSV of n, ||lambda alpha^n||, error");
    add_common(scatter, cc, true);
    add_lambda(scatter, la);
    scatter->add_option("--n", n_max, "largest n")->required()->check(CLI::Range(0L, 1L << 24));
    scatter->add_option("--guard-bits", guard, "extra bits carried beyond the output accuracy")->check(CLI::Range(16L, 4096L));

    std::optional<long> h_override;
    long zt_n = 200;
    auto * zt = app.add_subcommand("zero-trace", "zero-trace criterion for a real positive algebraic number");
    add_common(zt, cc);
    zt->add_option("--h-override", h_override, "torsion order override for non-totally-real fields");
    zt->add_option("--n", zt_n, "largest n checked")->check(CLI::Range(1L, 100000L));

    std::string digits, eps_text = "1/2", out_digits;
    long liouville = 0;
    int base = 10;
    auto * dg = app.add_subcommand("digits", "long runs of 0 or (a-1) in a base-a digit string");
    auto * dgo = dg->add_option("--digits", digits, "digit string (after the radix point)");
    dg->add_option("--liouville", liouville, "use the first N digits of sum 10^-n!")->excludes(dgo)->check(CLI::Range(1L, 1L << 24));
    dg->add_option("--base", base, "base")->check(CLI::Range(2, 36));
    dg->add_option("--eps", eps_text, "comma separated rationals");
    dg->add_option("-o,--output", out_digits, "output path");

    auto * ds = app.add_subcommand("de-smit", "trace integrality test for algebraic integers");
    add_common(ds, cc);

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (classify->parsed()) {
            emit(dump_report(json(classify_number(*make_alpha(cc)))), cc.output);
            return 0;
        }
        if (decide->parsed() || dh->parsed() || dm->parsed()) {
            bool hardy = dh->parsed() || (decide->parsed() && decide_kind == "hardy");
            AlgPtr a = make_alpha(cc);
            Decision d;
            if (!la.lambda_poly.empty()) {
                AlgPtr lp = AlgebraicNumber::from_minpoly(parse_minpoly(la.lambda_poly), la.lambda_root, cc.precision);
                d = hardy ? decide_hardy(lp, a, !no_cross) : decide_mahler(lp, a, !no_cross);
            } else {
                FieldElement l = make_lambda(la, a, cc.precision);
                d = hardy ? decide_hardy(l, !no_cross) : decide_mahler(l, !no_cross);
            }
            emit(dump_report(json(d)), cc.output);
            return decision_exit(d);
        }
        if (orbit->parsed()) {
            AlgPtr a = make_alpha(cc);
            emit(dump_report(json(trace_residue_orbit(make_lambda(la, a, cc.precision), *b))), cc.output);
            return 0;
        }
        if (limits->parsed()) {
            AlgPtr a = make_alpha(cc);
            FieldElement l = make_lambda(la, a, cc.precision);
            NumberKind k = classify_number(*a).kind;
            LimitSet ls;
            if (k == NumberKind::PV) {
                ls = pv_limit_points(b ? field_scale(l, Rat(1) / Rat(static_cast<long>(*b))) : l);
            } else if (k == NumberKind::Salem) {
                if (b) {
                    ls = salem_limit_intervals(l, *b);
                } else {
                    auto [bb, shift] = admissible_denominator(l);
                    FieldElement seed =
                        field_mul(field_scale(l, Rat(static_cast<long>(bb))), field_pow(FieldElement::generator(a), shift));
                    ls = salem_limit_intervals(seed, bb);
                    ls.shift = shift;
                }
            } else {
                throw Error(errc::wrong_kind, "limits need a PV or Salem base; alpha is " + to_string(k));
            }
            emit(dump_report(json(ls)), cc.output);
            return 0;
        }
        if (scatter->parsed()) {
            AlgPtr a = make_alpha(cc);
            ScatterSeries s = scatter_series(make_lambda(la, a, cc.precision), n_max, guard);
            std::ostringstream csv;
            write_scatter_csv(s, csv);
            emit(csv.str(), cc.output);
            std::cout << dump_report(scatter_summary(s));
            return 0;
        }
        if (zt->parsed()) {
            emit(dump_report(json(zero_trace_real(make_alpha(cc), h_override, zt_n))), cc.output);
            return 0;
        }
        if (dg->parsed()) {
            std::string text = liouville > 0 ? liouville_digits(liouville) : digits;
            std::vector<Rat> eps;
            std::stringstream ss(eps_text);
            for (std::string item; std::getline(ss, item, ',');)
                eps.push_back(parse_rational(item));
            emit(dump_report(json(digit_block_analyzer(text, base, eps))), out_digits);
            return 0;
        }
        if (ds->parsed()) {
            emit(dump_report(json(de_smit_check(*make_alpha(cc)))), cc.output);
            return 0;
        }
    } catch (Error const & e) {
        return fail(e.code(), e.what());
    } catch (std::exception const & e) {
        return fail("internal", e.what());
    }
    return 1;
}
