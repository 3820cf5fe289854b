#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "algpow/error.hpp"
#include "algpow/exactalg.hpp"
#include "algpow/rootbox.hpp"
#include "oracles.hpp"

using namespace algpow;

namespace {

IntPoly ip(std::initializer_list<long> c)
{
    std::vector<Int> v;
    for (long x : c)
        v.emplace_back(x);
    return IntPoly(v);
}

bool box_near(RootBox const & b, std::complex<long double> z, long double slop)
{
    long double re = b.re.get_d(), im = b.im.get_d(), r = b.radius.get_d() + slop;
    return std::abs(z.real() - re) <= r && std::abs(z.imag() - im) <= r;
}

// every oracle root sits in exactly one box
void check_against_oracle(RootBoxSet const & set)
{
    auto z = oracle::numeric_roots(set.poly);
    REQUIRE(set.size() == z.size());
    for (auto const & w : z) {
        int hits = 0;
        for (auto const & b : set.boxes)
            hits += box_near(b, w, 1e-12L);
        CHECK(hits == 1);
    }
}

bool disjoint(RootBox const & a, RootBox const & b)
{
    ComplexBox x = a.box(), y = b.box();
    return !overlaps(x.re, y.re) || !overlaps(x.im, y.im);
}

} // namespace

TEST_CASE("golden ratio roots")
{
    RootBoxSet s = isolate_roots(ip({-1, -1, 1}), 64);
    REQUIRE(s.size() == 2);
    CHECK(s.boxes[0].real);
    CHECK(s.boxes[1].real);
    // sign changes certify the real roots
    RatPoly p = to_rat(ip({-1, -1, 1}));
    for (auto const & b : s.boxes) {
        RealInterval iv = b.real_interval();
        CHECK(p.eval(iv.lo) * p.eval(iv.hi) <= 0);
        CHECK(iv.width() <= pow_rat(Rat(2), -64));
    }
    CHECK(s.boxes[0].re < 0);
    CHECK(s.boxes[1].re > 1);
    check_against_oracle(s);
}

TEST_CASE("Salem quartic roots")
{
    RootBoxSet s = isolate_roots(ip({1, -25, 1, -25, 1}), 64);
    REQUIRE(s.size() == 4);
    CHECK(s.real_count() == 2);
    check_against_oracle(s);
    std::vector<double> reals;
    for (auto const & b : s.boxes)
        if (b.real)
            reals.push_back(b.re.get_d());
    REQUIRE(reals.size() == 2);
    // y = x + 1/x satisfies y^2 - 25y - 1 = 0
    double y = (25 + std::sqrt(629.0)) / 2;
    double big = (y + std::sqrt(y * y - 4)) / 2;
    CHECK(reals[0] == doctest::Approx(1 / big).epsilon(1e-12));
    CHECK(reals[1] == doctest::Approx(big).epsilon(1e-12));
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto c = s.conjugate_of(i);
        REQUIRE(c);
        if (!s.boxes[i].real)
            CHECK(s.boxes[*c].im == -s.boxes[i].im);
        for (std::size_t j = i + 1; j < s.size(); ++j)
            CHECK(disjoint(s.boxes[i], s.boxes[j]));
    }
}

TEST_CASE("linear polynomial gives an exact box")
{
    RootBoxSet s = isolate_roots(ip({-7, 1}), 64);
    REQUIRE(s.size() == 1);
    CHECK(s.boxes[0].re == 7);
    CHECK(s.boxes[0].radius == 0);
    CHECK_THROWS_AS(isolate_roots(ip({1, -2, 1}), 64), Error);
}

TEST_CASE("random polynomials isolate consistently")
{
    std::mt19937 rng(77);
    int done = 0;
    while (done < 20) {
        IntPoly p = oracle::random_poly(rng, 2 + done % 6, 6, done % 3 != 0);
        if (p.coeff(0) == 0 || !is_squarefree(to_rat(p)))
            continue;
        ++done;
        RootBoxSet s = isolate_roots(p, 64);
        CHECK(static_cast<int>(s.size()) == p.degree());
        CHECK(static_cast<int>(s.real_count()) == count_real_roots(to_rat(p)));
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                CHECK(disjoint(s.boxes[i], s.boxes[j]));
    }
}

TEST_CASE("refinement keeps root identity")
{
    RootBoxSet s = isolate_roots(ip({1, -25, 1, -25, 1}), 64);
    RootBoxSet f = refine(s, 300);
    REQUIRE(f.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(2 * f.boxes[i].radius <= pow_rat(Rat(2), -300));
        CHECK(f.boxes[i].real == s.boxes[i].real);
        ComplexBox a = s.boxes[i].box(), b = f.boxes[i].box();
        CHECK(overlaps(a.re, b.re));
        CHECK(overlaps(a.im, b.im));
    }
}

TEST_CASE("real root refinement")
{
    IntPoly p = ip({1, -25, 1, -25, 1});
    RootBoxSet s = isolate_roots(p, 64);
    RealInterval iv = s.boxes.back().real_interval();
    RealInterval r = refine_real_root(p, iv, 5000);
    CHECK(r.width() <= pow_rat(Rat(2), -5000));
    RatPoly rp = to_rat(p);
    CHECK(rp.eval(r.lo) * rp.eval(r.hi) <= 0);
    CHECK(iv.contains(r.lo));
    CHECK(iv.contains(r.hi));
}

TEST_CASE("unit circle counts")
{
    auto salem = unit_modulus_count(ip({1, -25, 1, -25, 1}));
    CHECK(salem.count == 2);
    CHECK(salem.chebyshev_transform == monic(to_rat(ip({-1, -25, 1}))));
    CHECK(salem.on_circle.size() == 2);
    CHECK(salem.off_circle_margin > 0);

    auto gold = unit_modulus_count(ip({-1, -1, 1}));
    CHECK(gold.count == 0);
    CHECK(gold.reciprocal_gcd.degree() == 0);

    auto i2 = unit_modulus_count(ip({1, 0, 1}));
    CHECK(i2.count == 2);

    auto c5 = unit_modulus_count(cyclotomic(5));
    CHECK(c5.count == 4);

    // (x - 1)(x^2 - 3x + 1): one root on the circle, one inside, one outside
    auto mixed = unit_modulus_count(ip({-1, 4, -4, 1}));
    CHECK(mixed.count == 1);
    int in = 0, out = 0;
    for (int s : mixed.side) {
        in += s < 0;
        out += s > 0;
    }
    CHECK(in == 1);
    CHECK(out == 1);
}

TEST_CASE("unit circle partition covers every root")
{
    std::mt19937 rng(31337);
    int self_rec = 0, generic = 0;
    while (self_rec < 25 || generic < 25) {
        bool want_rec = self_rec < 25;
        IntPoly p;
        if (want_rec) {
            // palindromic of even degree 2k
            int k = 1 + (self_rec % 4);
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
            p = oracle::random_poly(rng, 2 + generic % 5, 7, false);
        }
        if (p.coeff(0) == 0 || !is_squarefree(to_rat(p)))
            continue;
        auto u = unit_modulus_count(p);
        int in = 0, on = 0, out = 0;
        for (int s : u.side) {
            in += s < 0;
            on += s == 0;
            out += s > 0;
        }
        CHECK(on == u.count);
        CHECK(in + on + out == p.degree());
        if (want_rec) {
            CHECK(in == out);
            ++self_rec;
        } else {
            ++generic;
        }
        // numeric cross-check where the oracle is unambiguous
        auto z = oracle::numeric_roots(p);
        int zi = 0, zo = 0, zon = 0;
        bool clear = true;
        for (auto const & w : z) {
            long double m = std::abs(w);
            if (std::abs(m - 1) < 1e-9L)
                ++zon;
            else if (std::abs(m - 1) < 1e-6L)
                clear = false;
            else if (m < 1)
                ++zi;
            else
                ++zo;
        }
        if (clear) {
            CHECK(zon == on);
            CHECK(zi == in);
            CHECK(zo == out);
        }
    }
}

TEST_CASE("precision cap from the environment")
{
    CHECK(precision_cap() >= 64);
}
