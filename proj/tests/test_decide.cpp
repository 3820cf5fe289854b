#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "algpow/decide.hpp"
#include "algpow/error.hpp"
#include "algpow/spectra.hpp"
#include "fixtures.hpp"

using namespace algpow;
using namespace fx;

namespace {

FieldElement gen(AlgPtr const & a) { return FieldElement::generator(a); }

// least s in 1..16 with a^s PV, by powering and classifying
std::optional<long> brute_pv_power(AlgPtr const & a)
{
    for (long s = 1; s <= 16; ++s) {
        AlgPtr b = power_number(a, s);
        if (classify_number(*b).kind == NumberKind::PV)
            return s;
    }
    return std::nullopt;
}

bool hardy_yes(FieldElement const & lam) { return decide_hardy(lam, false).verdict == Verdict::yes; }

} // namespace

TEST_CASE("root of unity ratios")
{
    auto r = ratio_unity_orders(ip({-1, -1, 1}));
    CHECK(r.orders == std::vector<long>{1});
    CHECK(r.s_candidate == 1);
    CHECK(r.h_lower == 2);

    auto q = ratio_unity_orders(ip({-1, 0, -1, 0, 1}));
    CHECK(q.orders == std::vector<long>{1, 2});
    CHECK(q.s_candidate == 2);

    auto e = ratio_unity_orders(ip({4, 0, -6, 0, 1}));
    CHECK(e.orders == std::vector<long>{1, 2});
    CHECK(e.h_lower == 2);

    // x^3 - 2: ratios are primitive cube roots of unity
    auto c = ratio_unity_orders(ip({-2, 0, 0, 1}));
    CHECK(c.orders == std::vector<long>{1, 3});
    CHECK(c.h_lower == 6);
    for (long m : c.orders) {
        if (m == 1)
            continue;
        RatPoly g = poly_gcd(to_rat(c.ratio_poly), to_rat(cyclotomic(static_cast<unsigned>(m))));
        CHECK(g.degree() >= 1);
    }
}

TEST_CASE("PV powers")
{
    auto p = find_pv_power(phi());
    CHECK(p.success);
    CHECK(p.s == 1);

    auto q = find_pv_power(num({-1, 0, -1, 0, 1}));
    CHECK(q.success);
    CHECK(q.s == 2);
    REQUIRE(q.power_minpoly);
    CHECK(*q.power_minpoly == ip({-1, -1, 1}));

    auto s = find_pv_power(salem());
    CHECK(!s.success);
    CHECK(s.reason_code == "has_unit_modulus_conjugates");

    auto n = find_pv_power(num({-3, 2}));
    CHECK(!n.success);
    CHECK(n.reason_code == "not_algebraic_integer");

    // sqrt(3 + sqrt5): its negative is also expanding, the square is PV
    auto e = find_pv_power(num({4, 0, -6, 0, 1}));
    CHECK(e.success);
    CHECK(e.s == 2);

    // both roots of x^2 - 2 are expanding; the square is 2
    CHECK(find_pv_power(num({-2, 0, 1})).s == 2);
}

TEST_CASE("PV power search agrees with brute force")
{
    std::vector<AlgPtr> cases{phi(),
                              num({-1, 0, -1, 0, 1}),
                              num({4, 0, -6, 0, 1}),
                              num({-1, 0, 0, -1, 0, 0, 1}),
                              num({-1, -1, 0, 1}),
                              num({-2, 0, 1}),
                              num({-2, 0, 0, 1}),
                              num({1, -3, 1}),
                              num({-1, -3, 0, 1}),
                              salem(),
                              num({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})};
    for (auto const & a : cases) {
        auto f = find_pv_power(a);
        auto b = brute_pv_power(a);
        CHECK(f.success == b.has_value());
        if (f.success && b) {
            CHECK(f.s == *b);
            // recheck the power independently
            CHECK(classify_number(*power_number(a, f.s)).kind == NumberKind::PV);
        }
    }
}

TEST_CASE("Hardy decisions")
{
    auto a = phi();
    Decision y = decide_hardy(rat_in(a, 1));
    CHECK(y.verdict == Verdict::yes);
    CHECK(y.k == 0);
    CHECK(y.cross_check.performed);
    CHECK(y.cross_check.passed);
    REQUIRE(y.cross_check.c0);
    CHECK(std::stod(*y.cross_check.c0) < 1);

    Decision n = decide_hardy(rat_in(a, frac(1, 5)));
    CHECK(n.verdict == Verdict::no);
    CHECK(n.reason_code == "module_membership_fails");
    CHECK(n.reason.rfind("module membership fails", 0) == 0);
    CHECK(n.cross_check.passed);
    CHECK(n.cross_check.limit_points == std::vector<Rat>{frac(1, 5), frac(2, 5)});

    Decision s = decide_hardy(rat_in(salem(), 1));
    CHECK(s.verdict == Verdict::no);
    CHECK(s.reason_code == "alpha_not_pv");

    // 1/sqrt5 = 1/P'(phi)
    Decision d = decide_hardy(field_inv(FieldElement::from_coords(a, rv({-1, 2}))));
    CHECK(d.verdict == Verdict::yes);

    // lambda from its own minimal polynomial
    Decision l = decide_hardy(AlgebraicNumber::rational(Rat(3)), a);
    CHECK(l.verdict == Verdict::yes);
    Decision o = decide_hardy(AlgebraicNumber::from_minpoly(ip({-2, 0, 1})), a);
    CHECK(o.verdict == Verdict::no);
    CHECK(o.reason_code == "outside_field");
}

TEST_CASE("Mahler decisions")
{
    Decision y = decide_mahler(rat_in(num({-1, 0, -1, 0, 1}), 1));
    CHECK(y.verdict == Verdict::yes);
    CHECK(y.s == 2);
    CHECK(y.t == 0);
    CHECK(y.cross_check.passed);

    Decision r = decide_mahler(rat_in(num({-3, 2}), 1));
    CHECK(r.verdict == Verdict::no);
    CHECK(r.reason == "not an algebraic integer");

    Decision f = decide_mahler(rat_in(phi(), frac(1, 5)));
    CHECK(f.verdict == Verdict::no);
    CHECK(f.reason == "module membership fails for all t < s=1");

    Decision h = decide_mahler(rat_in(phi(), frac(1, 2)));
    CHECK(h.verdict == Verdict::yes);
    REQUIRE(h.s);
    REQUIRE(h.t);
    // the witnessed class really decays
    ScatterSeries ser = scatter_series(rat_in(phi(), frac(1, 2)), 200, 64, 1);
    DecayFit fit = fit_decay_class(ser, *h.s, *h.t, 20);
    CHECK(fit.decays);

    Decision sal = decide_mahler(rat_in(salem(), 1));
    CHECK(sal.verdict == Verdict::no);
    CHECK(sal.reason_code == "has_unit_modulus_conjugates");
}

TEST_CASE("Hardy membership is stable under passing to powers")
{
    std::vector<FieldElement> fixtures{rat_in(phi(), 1),
                                       rat_in(phi(), frac(1, 5)),
                                       rat_in(phi(), frac(1, 2)),
                                       field_inv(FieldElement::from_coords(phi(), rv({-1, 2}))),
                                       rat_in(num({1, -3, 1}), frac(1, 2)),
                                       rat_in(num({-1, -1, 0, 1}), 1),
                                       rat_in(num({-1, -1, 0, 1}), frac(1, 23)),
                                       rat_in(num({-1, -1, 0, 1}), frac(1, 7))};
    int yes = 0;
    for (auto const & lam : fixtures) {
        bool base = hardy_yes(lam);
        yes += base;
        for (long s = 1; s <= 3; ++s) {
            FieldElement beta = field_pow(gen(lam.base), s);
            AlgPtr sub = subfield_generator(beta);
            bool every_t = true;
            for (long t = 0; t < s; ++t) {
                FieldElement x = field_mul(lam, field_pow(gen(lam.base), t));
                REQUIRE(subfield_membership(x, beta));
                bool y = hardy_yes(restrict_to_subfield(x, beta, sub));
                if (base)
                    CHECK(y);
                every_t = every_t && y;
            }
            CHECK(every_t == base);
        }
    }
    CHECK(yes >= 3);
}

TEST_CASE("roots of Hardy pairs are Mahler pairs")
{
    // beta^s = phi for s = 2, 3
    struct Root {
        AlgPtr beta;
        long s;
    };
    std::vector<Root> roots{{num({-1, 0, -1, 0, 1}), 2}, {num({-1, 0, 0, -1, 0, 0, 1}), 3}};
    for (auto const & r : roots) {
        FieldElement bs = field_pow(gen(r.beta), r.s);
        AlgPtr sub = subfield_generator(bs);
        CHECK(sub->minpoly() == ip({-1, -1, 1}));
        for (Rat lam : {Rat(1), Rat(3)}) {
            REQUIRE(hardy_yes(rat_in(phi(), lam)));
            for (long t = 0; t < r.s; ++t) {
                FieldElement x = field_mul(rat_in(r.beta, lam), field_pow(gen(r.beta), -t));
                Decision d = decide_mahler(x, false);
                CHECK(d.verdict == Verdict::yes);
            }
        }
    }
}

TEST_CASE("zero traces")
{
    auto e = zero_trace_real(num({4, 0, -6, 0, 1}));
    CHECK(e.h == 2);
    CHECK(e.h_exactness == "exact");
    CHECK(e.power_minpoly == ip({4, -6, 1}));
    CHECK(e.h_prime == 2);
    CHECK(e.infinitely_many_zeros);
    CHECK(e.pattern_verified);

    auto q = zero_trace_real(AlgebraicNumber::from_minpoly(ip({-1, 0, 2}), 1));
    CHECK(q.power_minpoly == ip({-1, 2}));
    CHECK(q.h_prime == 2);
    CHECK(q.infinitely_many_zeros);

    auto g = zero_trace_real(phi());
    CHECK(g.power_minpoly == ip({1, -3, 1}));
    CHECK(g.h_prime == 1);
    CHECK(!g.infinitely_many_zeros);
    CHECK(g.zeros.empty());

    // zero positions against companion-matrix traces
    for (IntPoly p : {ip({4, 0, -6, 0, 1}), ip({-1, 0, 2}), ip({-1, -1, 1})}) {
        auto rep = zero_trace_real(AlgebraicNumber::from_minpoly(p), std::nullopt, 60);
        auto tr = oracle::matrix_power_traces(p, 60);
        std::vector<long> want;
        for (long n = 0; n <= 60; ++n)
            if (tr[static_cast<std::size_t>(n)] == 0)
                want.push_back(n);
        CHECK(rep.zeros == want);
    }

    // an override only applies when some root is non-real
    auto ex = zero_trace_real(phi(), 4);
    CHECK(ex.h == 2);
    CHECK(ex.h_exactness == "exact");
    auto ov = zero_trace_real(num({-2, 0, 0, 1}), 12);
    CHECK(ov.h == 12);
    CHECK(ov.h_exactness == "override");

    // non-real roots present: h is only a lower bound
    auto c = zero_trace_real(num({-2, 0, 0, 1}));
    CHECK(c.h_exactness == "lower bound only");
    CHECK(c.h == 6);

    CHECK_THROWS_AS(zero_trace_real(AlgebraicNumber::from_minpoly(ip({-1, -1, 1}), 0)), Error);
}

TEST_CASE("digit blocks")
{
    std::string lv = liouville_digits(720);
    CHECK(lv.size() == 720);
    CHECK(lv.substr(0, 8) == "11000100");
    DigitReport r = digit_block_analyzer(lv, 10, {frac(1, 2)});
    REQUIRE(r.per_eps.size() == 1);
    CHECK(r.per_eps[0].positions == std::vector<long>{3, 7, 25, 121});
    CHECK(r.per_eps[0].verdict == "consistent");

    DigitReport t = digit_block_analyzer(std::string(500, '3'), 10, {frac(1, 2), frac(1, 10), frac(1, 100)});
    for (auto const & e : t.per_eps) {
        CHECK(e.positions.empty());
        CHECK(e.verdict == "no_evidence");
    }

    DigitReport third = digit_block_analyzer("1" + std::string(199, '0'), 3, {frac(1, 2)});
    REQUIRE(third.runs.size() == 1);
    CHECK(third.runs[0].start == 2);
    CHECK(third.runs[0].trailing);
    CHECK(third.per_eps[0].positions == std::vector<long>{2});
    CHECK(third.per_eps[0].verdict == "consistent");

    // base a - 1 digits count too
    DigitReport twos = digit_block_analyzer("1222222220", 3, {frac(1, 2)});
    CHECK(twos.runs.front().digit == '2');

    CHECK_THROWS_AS(digit_block_analyzer("12a4", 10, {frac(1, 2)}), Error);
    CHECK_THROWS_AS(digit_block_analyzer("1234", 3, {frac(1, 2)}), Error);
}

TEST_CASE("digit runs against a direct scan")
{
    std::mt19937 rng(12);
    std::uniform_int_distribution<int> u(0, 9);
    std::string s;
    for (int i = 0; i < 400; ++i) {
        int d = u(rng);
        int reps = d == 0 || d == 9 ? 1 + u(rng) : 1;
        s += std::string(static_cast<std::size_t>(reps), static_cast<char>('0' + d));
    }
    DigitReport r = digit_block_analyzer(s, 10, {frac(1, 3)});
    std::vector<std::pair<long, long>> want;
    for (std::size_t i = 0; i < s.size();) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i])
            ++j;
        if (s[i] == '0' || s[i] == '9')
            want.emplace_back(static_cast<long>(i) + 1, static_cast<long>(j - i));
        i = j;
    }
    REQUIRE(r.runs.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
        CHECK(r.runs[k].start == want[k].first);
        CHECK(r.runs[k].length == want[k].second);
    }
    std::vector<long> q;
    for (auto const & [st, len] : want)
        if (len >= st / 3 + 1)
            q.push_back(st);
    CHECK(r.per_eps[0].positions == q);
}

TEST_CASE("verdict names")
{
    for (auto v : {Verdict::yes, Verdict::no, Verdict::unknown})
        CHECK(verdict_from_string(to_string(v)) == v);
}
