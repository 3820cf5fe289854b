// End-to-end acceptance run: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "algpow/classify.hpp"
#include "algpow/decide.hpp"
#include "algpow/exactalg.hpp"
#include "algpow/rootbox.hpp"
#include "algpow/spectra.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace algpow;
using namespace fx;

namespace {

struct Tally {
    std::vector<std::string> failures;
    long checks = 0;
    void operator()(bool ok, std::string const & what)
    {
        ++checks;
        if (!ok)
            failures.push_back(what);
    }
};

bool cyclic_equal(std::vector<std::int64_t> const & a, std::vector<std::int64_t> const & b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            ok = a[(i + r) % a.size()] == b[i];
        if (ok)
            return true;
    }
    return false;
}

std::vector<std::pair<Rat, Rat>> pairs(std::initializer_list<std::array<long, 4>> v)
{
    std::vector<std::pair<Rat, Rat>> out;
    for (auto const & x : v)
        out.emplace_back(frac(x[0], x[1]), frac(x[2], x[3]));
    return out;
}

std::int64_t balanced(Int v, std::int64_t b)
{
    Int r = v % b;
    if (r < 0)
        r += b;
    long x = r.get_si();
    return x > b / 2 ? x - b : x;
}

void salem_b25(Tally & t)
{
    auto s = salem();
    ResidueOrbit o = trace_residue_orbit(rat_in(s, 1), 25);
    t(o.period() == 6, "period is not 6");
    t(cyclic_equal(o.cycle, {0, -2, 0, -2, 0, 4}), "cycle is not the word (0,-2,0,-2,0,4)");
    LimitSet l = salem_limit_intervals(rat_in(s, 1), 25);
    t(l.folded == pairs({{0, 1, 2, 25}, {0, 1, 4, 25}, {2, 25, 6, 25}}), "folded intervals differ");
    t(l.union_set == pairs({{0, 1, 6, 25}}), "union is not [0, 6/25]");
    ScatterSeries ser = scatter_series(rat_in(s, frac(1, 25)), 2500);
    CoverageReport c = coverage_report(ser, l, 100, frac(1, 1000000));
    t(c.considered == 2401, "scatter does not cover 100..2500");
    t(c.fraction && *c.fraction == 1, "some scatter point lies outside the union");
}

void salem_b29(Tally & t)
{
    auto s = salem();
    ResidueOrbit o = trace_residue_orbit(rat_in(s, 1), 29);
    std::set<std::int64_t> res(o.cycle.begin(), o.cycle.end());
    std::set<std::int64_t> all;
    for (int i = -14; i <= 14; ++i)
        all.insert(i);
    t(res == all, "residue set is not -14..14");
    LimitSet l = salem_limit_intervals(rat_in(s, 1), 29);
    t(l.folded.size() == 15, "expected 15 folded intervals");
    t(l.measure == frac(1, 2), "union measure is not 1/2");
    t(l.union_set == pairs({{0, 1, 1, 2}}), "union is not [0, 1/2]");
    ScatterSeries ser = scatter_series(rat_in(s, frac(1, 29)), 2500);
    CoverageReport c = coverage_report(ser, l, 100, frac(1, 1000000));
    t(c.fraction && *c.fraction == 1, "scatter for 1/29 leaves the union");
}

void classification(Tally & t)
{
    struct Gold {
        IntPoly p;
        NumberKind k;
    };
    std::vector<Gold> golds{{ip({1, -25, 1, -25, 1}), NumberKind::Salem},
                            {ip({-1, -1, 1}), NumberKind::PV},
                            {ip({-1, 0, -1, 0, 1}), NumberKind::algebraic_integer_other}};
    for (auto const & g : golds)
        for (long bits : {64L, 128L, 256L}) {
            auto k = classify_number(*AlgebraicNumber::from_minpoly(g.p, std::nullopt, bits)).kind;
            t(k == g.k, to_string(g.p) + " at " + std::to_string(bits) + " bits is " + to_string(k));
        }
}

void de_smit(Tally & t)
{
    auto r = de_smit_check(*AlgebraicNumber::from_minpoly(ip({-1, 0, 2})));
    t(r.bound == 4, "bound for degree 2 is not 4");
    t(r.traces.size() == 4, "expected traces for i = 1..4");
    for (std::size_t i = 0; i < 3 && i < r.traces.size(); ++i)
        t(r.traces[i].get_den() == 1, "trace " + std::to_string(i + 1) + " not integral");
    t(r.first_failure == 4, "first failure is not at i = 4");
    t(!r.certified, "2x^2 - 1 certified");
    auto g = de_smit_check(*phi());
    t(g.bound == 4 && g.certified, "phi not certified at B = 4");
}

void zero_trace(Tally & t)
{
    auto e = zero_trace_real(num({4, 0, -6, 0, 1}), std::nullopt, 201);
    t(e.h == 2 && e.h_exactness == "exact", "h is not exactly 2");
    t(e.h_prime == 2, "h' is not 2");
    t(e.infinitely_many_zeros, "verdict is not infinitely many zeros");
    std::set<long> z(e.zeros.begin(), e.zeros.end());
    bool odd = true;
    for (long n = 1; n <= 201; n += 2)
        odd = odd && z.count(n);
    t(odd, "some odd trace up to 201 is nonzero");
    auto g = zero_trace_real(phi());
    t(!g.infinitely_many_zeros, "phi reports infinitely many zeros");
    auto seq = power_trace_seq(rat_in(phi(), 1), 30);
    auto lucas = oracle::lucas(30);
    auto mat = oracle::matrix_power_traces(ip({-1, -1, 1}), 30);
    for (long n = 0; n <= 30; ++n) {
        auto i = static_cast<std::size_t>(n);
        t(seq[i] == Rat(lucas[i]) && seq[i] == mat[i], "trace " + std::to_string(n) + " is not Lucas");
    }
}

void deciders(Tally & t)
{
    auto a = phi();
    Decision h1 = decide_hardy(rat_in(a, 1));
    t(h1.verdict == Verdict::yes && h1.k == 0, "hardy(1, phi) not yes with k = 0");
    t(h1.cross_check.passed && h1.cross_check.c0 && std::stod(*h1.cross_check.c0) < 1,
      "hardy(1, phi) decay cross-check");

    Decision h5 = decide_hardy(rat_in(a, frac(1, 5)));
    t(h5.verdict == Verdict::no, "hardy(1/5, phi) not no");
    bool excludes0 = !h5.cross_check.limit_points.empty() &&
                     std::find(h5.cross_check.limit_points.begin(), h5.cross_check.limit_points.end(), Rat(0)) ==
                         h5.cross_check.limit_points.end();
    t(excludes0, "limit set of (1/5, phi) contains 0");

    Decision m = decide_mahler(rat_in(num({-1, 0, -1, 0, 1}), 1));
    t(m.verdict == Verdict::yes && m.s == 2 && m.t == 0, "mahler(1, sqrt phi) not yes with (2, 0)");
    t(m.cross_check.passed && m.cross_check.c0 && std::stod(*m.cross_check.c0) < 1 &&
          m.cross_check.modulus == 2 && m.cross_check.residue == 0 && m.cross_check.n_to == 200,
      "mahler(1, sqrt phi) decay cross-check");

    auto th = num({-3, 2});
    Decision r = decide_mahler(rat_in(th, 1));
    t(r.verdict == Verdict::no && r.reason == "not an algebraic integer", "mahler(1, 3/2) reason");
    t(classify_number(*th).kind != NumberKind::PV, "3/2 classified PV");
}

void properties(Tally & t)
{
    // (a) orbits of units
    {
        std::mt19937 rng(4242);
        int done = 0;
        while (done < 50) {
            int d = 2 + done % 3;
            IntPoly p = oracle::random_poly(rng, d, 4, true);
            std::vector<Int> c;
            for (int i = 0; i <= d; ++i)
                c.push_back(p.coeff(i));
            c[0] = (done % 2) ? 1 : -1;
            p = IntPoly(c);
            if (!is_squarefree(to_rat(p)) || !irreducibility_check(p).irreducible())
                continue;
            ++done;
            std::int64_t b = 2 + done % 8;
            std::uniform_int_distribution<int> u(-3, 3);
            std::vector<Rat> sc(static_cast<std::size_t>(d));
            for (auto & x : sc)
                x = u(rng);
            sc[0] += 1;
            auto a = AlgebraicNumber::from_known_minpoly(p);
            ResidueOrbit o = trace_residue_orbit(FieldElement::from_coords(a, sc), b);
            t(o.period() <= std::pow(static_cast<double>(b), d), "(a) period exceeds b^d");
            t(o.preperiod() == 0, "(a) unit orbit not purely periodic");
            auto ps = oracle::newton_power_sums(p, static_cast<int>(3 * o.period() + d));
            for (long n = 0; n <= 3 * o.period(); ++n) {
                Int tr = 0;
                for (int i = 0; i < d; ++i)
                    tr += sc[static_cast<std::size_t>(i)].get_num() * ps[static_cast<std::size_t>(n + i)];
                t(o.at(n) == balanced(tr, b), "(a) residue mismatch");
            }
        }
    }
    // (b) recurrence traces against matrix traces
    {
        std::mt19937 rng(2718);
        for (int k = 0; k < 20; ++k) {
            IntPoly p = random_irreducible(rng, 2 + k % 4, k % 4 != 3);
            auto a = AlgebraicNumber::from_known_minpoly(p);
            auto seq = power_trace_seq(rat_in(a, 1), 50);
            auto mat = oracle::matrix_power_traces(p, 50);
            for (std::size_t n = 0; n <= 50; ++n)
                t(seq[n] == mat[n], "(b) trace mismatch for " + to_string(p));
        }
    }
    // (c) resultant vanishes iff the gcd is nonconstant
    {
        std::mt19937 rng(2024);
        for (int k = 0; k < 100; ++k) {
            RatPoly a = to_rat(oracle::random_poly(rng, 1 + k % 4, 7, false));
            RatPoly b = to_rat(oracle::random_poly(rng, 1 + (k / 4) % 4, 7, false));
            if (k % 2 == 0) {
                RatPoly c = to_rat(oracle::random_poly(rng, 1 + k % 3, 4, false));
                a = a * c;
                b = b * c;
            }
            Rat r = resultant(a, b);
            t((r == 0) == (poly_gcd(a, b).degree() >= 1), "(c) duality");
            t(r == oracle::sylvester_resultant(a, b), "(c) Sylvester");
        }
    }
    // (d) Hardy pairs and their powers
    {
        std::vector<FieldElement> fixtures{rat_in(phi(), 1),
                                           rat_in(phi(), 3),
                                           field_inv(FieldElement::from_coords(phi(), rv({-1, 2}))),
                                           rat_in(phi(), frac(1, 2)),
                                           rat_in(phi(), frac(1, 5)),
                                           rat_in(num({-1, -1, 0, 1}), 1),
                                           rat_in(num({-1, -3, 0, 1}), frac(1, 3))};
        int yes = 0;
        for (auto const & lam : fixtures) {
            bool base = decide_hardy(lam, false).verdict == Verdict::yes;
            yes += base;
            FieldElement g = FieldElement::generator(lam.base);
            for (long s = 1; s <= 3; ++s) {
                FieldElement beta = field_pow(g, s);
                AlgPtr sub = subfield_generator(beta);
                bool every = true;
                for (long tt = 0; tt < s; ++tt) {
                    FieldElement x = field_mul(lam, field_pow(g, tt));
                    bool y = decide_hardy(restrict_to_subfield(x, beta, sub), false).verdict == Verdict::yes;
                    every = every && y;
                }
                t(every == base, "(d) equivalence at s = " + std::to_string(s));
            }
        }
        t(yes >= 3, "(d) too few yes fixtures");
    }
    // (e) unit circle partition
    {
        std::mt19937 rng(31337);
        int rec = 0, gen = 0;
        while (rec < 25 || gen < 25) {
            bool want_rec = rec < 25;
            IntPoly p;
            if (want_rec) {
                int k = 1 + rec % 4;
                std::uniform_int_distribution<int> u(-6, 6);
                std::vector<Int> c(static_cast<std::size_t>(2 * k) + 1);
                for (int i = 0; i <= k; ++i) {
                    int v = u(rng);
                    c[static_cast<std::size_t>(i)] = v;
                    c[static_cast<std::size_t>(2 * k - i)] = v;
                }
                c[0] = c.back() = 1;
                p = IntPoly(c);
            } else {
                p = oracle::random_poly(rng, 2 + gen % 5, 7, false);
            }
            if (p.coeff(0) == 0 || !is_squarefree(to_rat(p)))
                continue;
            auto u = unit_modulus_count(p);
            int in = 0, on = 0, out = 0;
            for (int sd : u.side) {
                in += sd < 0;
                on += sd == 0;
                out += sd > 0;
            }
            t(on == u.count && in + on + out == p.degree(), "(e) counts do not sum to the degree");
            if (want_rec) {
                t(in == out, "(e) self-reciprocal asymmetry");
                ++rec;
            } else {
                ++gen;
            }
        }
    }
}

void digits(Tally & t)
{
    DigitReport r = digit_block_analyzer(liouville_digits(720), 10, {frac(1, 2)});
    // zero runs from n!+1 to (n+1)!-1 for n = 2..5
    std::vector<long> want;
    long f = 1;
    for (long n = 2; n <= 5; ++n) {
        f *= n;
        want.push_back(f + 1);
    }
    t(r.per_eps.size() == 1 && r.per_eps[0].positions == want, "Liouville positions");
    t(r.per_eps[0].verdict == "consistent", "Liouville verdict");
    DigitReport th = digit_block_analyzer(std::string(720, '3'), 10, {frac(1, 2), frac(1, 10)});
    for (auto const & e : th.per_eps)
        t(e.positions.empty(), "all-3s has a qualifying run");
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        char const * name;
        std::function<void(Tally &)> run;
        double budget; // seconds
    };
    std::vector<Criterion> crits{{1, "Salem quartic, b = 25: orbit, limit intervals, scatter", salem_b25, 30},
                                 {2, "Salem quartic, b = 29: full residue set, union [0, 1/2]", salem_b29, 30},
                                 {3, "Salem/PV classification golds", classification, 0},
                                 {4, "de Smit optimality", de_smit, 0},
                                 {5, "zero-trace criterion", zero_trace, 0},
                                 {6, "Hardy and Mahler deciders", deciders, 0},
                                 {7, "property suites (a)-(e)", properties, 0},
                                 {8, "digit blocks", digits, 1}};
    int failed = 0;
    for (auto const & c : crits) {
        Tally t;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (std::exception const & e) {
            t(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && secs > c.budget)
            t(false, "over the " + std::to_string(static_cast<int>(c.budget)) + " s budget");
        bool ok = t.failures.empty();
        failed += !ok;
        std::printf("[%s] %d %s (%ld checks, %.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.name, t.checks, secs);
        for (auto const & f : t.failures)
            std::printf("       %s\n", f.c_str());
    }
    std::fflush(stdout);
    return failed ? 1 : 0;
}
