#include "algpow/exactalg.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <mutex>

#include "algpow/error.hpp"
#include "algpow/rootbox.hpp"

namespace algpow {

// ---------------------------------------------------------------------------
// PolyXY

int PolyXY::degree_y() const
{
    int d = static_cast<int>(by_y.size()) - 1;
    while (d >= 0 && by_y[static_cast<std::size_t>(d)].is_zero())
        --d;
    return d;
}

int PolyXY::degree_x() const
{
    int d = -1;
    for (auto const & c : by_y)
        d = std::max(d, c.degree());
    return d;
}

RatPoly PolyXY::specialize_x(Rat const & x) const
{
    std::vector<Rat> c;
    c.reserve(by_y.size());
    for (auto const & p : by_y)
        c.push_back(p.eval(x));
    return RatPoly(std::move(c));
}

PolyXY PolyXY::constant_in_x(RatPoly const & p)
{
    PolyXY r;
    for (auto const & v : p.coeffs())
        r.by_y.push_back(RatPoly::constant(v));
    return r;
}

PolyXY PolyXY::x_minus_y_power(unsigned s)
{
    PolyXY r;
    r.by_y.assign(s + 1, RatPoly());
    r.by_y[0] = RatPoly::x();
    r.by_y[s] -= RatPoly::constant(Rat(1));
    return r;
}

PolyXY PolyXY::scaled_product(RatPoly const & p)
{
    PolyXY r;
    for (int j = 0; j <= p.degree(); ++j)
        r.by_y.push_back(RatPoly::monomial(p.coeff(j), j));
    return r;
}

PolyXY PolyXY::x_minus_poly_of_y(RatPoly const & c)
{
    PolyXY r;
    int d = std::max(c.degree(), 0);
    r.by_y.assign(static_cast<std::size_t>(d) + 1, RatPoly());
    r.by_y[0] = RatPoly::x();
    for (int j = 0; j <= c.degree(); ++j)
        r.by_y[static_cast<std::size_t>(j)] -= RatPoly::constant(c.coeff(j));
    return r;
}

PolyXY PolyXY::shifted(RatPoly const & p, Rat const & j)
{
    // p(X - jY) = sum_i p_i (X - jY)^i, expanded binomially
    int d = p.degree();
    PolyXY r;
    r.by_y.assign(static_cast<std::size_t>(std::max(d, 0)) + 1, RatPoly());
    for (int i = 0; i <= d; ++i) {
        Int binom = 1;
        for (int k = 0; k <= i; ++k) {
            // coefficient of X^(i-k) Y^k in (X - jY)^i
            Rat coef = p.coeff(i) * Rat(binom) * pow_rat(-j, k);
            r.by_y[static_cast<std::size_t>(k)] += RatPoly::monomial(coef, i - k);
            binom = binom * (i - k) / (k + 1);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// gcd

RatPoly poly_gcd(RatPoly const & a, RatPoly const & b)
{
    if (a.is_zero() && b.is_zero())
        throw Error(errc::degenerate_input, "gcd of two zero polynomials");
    RatPoly x = monic(a), y = monic(b);
    while (!y.is_zero()) {
        RatPoly r = monic(x % y);
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

RatPoly poly_xgcd(RatPoly const & a, RatPoly const & b, RatPoly & u, RatPoly & v)
{
    if (a.is_zero() && b.is_zero())
        throw Error(errc::degenerate_input, "gcd of two zero polynomials");
    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(Rat(1)), s1;
    RatPoly t0, t1 = RatPoly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        RatPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        RatPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rat inv = 1 / r0.lead();
    u = s0 * inv;
    v = t0 * inv;
    return r0 * inv;
}

// ---------------------------------------------------------------------------
// subresultant PRS, generic over an integral domain with exact division

namespace {

template <class R> struct Ring;

template <> struct Ring<Rat> {
    static bool zero(Rat const & a) { return a == 0; }
    static Rat one() { return Rat(1); }
    static Rat div(Rat const & a, Rat const & b) { return a / b; }
    static Rat negate(Rat const & a) { return -a; }
};

template <> struct Ring<RatPoly> {
    static bool zero(RatPoly const & a) { return a.is_zero(); }
    static RatPoly one() { return RatPoly::constant(Rat(1)); }
    static RatPoly div(RatPoly const & a, RatPoly const & b) { return exact_quotient(a, b); }
    static RatPoly negate(RatPoly const & a) { return -a; }
};

template <class R> void trim(std::vector<R> & p)
{
    while (!p.empty() && Ring<R>::zero(p.back()))
        p.pop_back();
}

template <class R> int deg(std::vector<R> const & p) { return static_cast<int>(p.size()) - 1; }

template <class R> R rpow(R const & b, int e)
{
    R r = Ring<R>::one();
    for (int i = 0; i < e; ++i)
        r = r * b;
    return r;
}

template <class R> std::vector<R> prem(std::vector<R> a, std::vector<R> const & b)
{
    int db = deg(b);
    int e = deg(a) - db + 1;
    R const & lb = b.back();
    while (deg(a) >= db) {
        int shift = deg(a) - db;
        R la = a.back();
        for (auto & v : a)
            v = v * lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(shift + j)] =
                a[static_cast<std::size_t>(shift + j)] - la * b[static_cast<std::size_t>(j)];
        trim(a);
        --e;
    }
    if (e > 0) {
        R f = rpow(lb, e);
        for (auto & v : a)
            v = v * f;
    }
    return a;
}

template <class R> R subresultant(std::vector<R> A, std::vector<R> B)
{
    trim(A);
    trim(B);
    if (A.empty() || B.empty())
        return R();
    int sign = 1;
    if (deg(A) < deg(B)) {
        std::swap(A, B);
        if ((deg(A) & 1) && (deg(B) & 1))
            sign = -sign;
    }
    if (deg(B) == 0)
        return rpow(B.back(), deg(A));
    R g = Ring<R>::one(), h = Ring<R>::one();
    while (true) {
        int delta = deg(A) - deg(B);
        if ((deg(A) & 1) && (deg(B) & 1))
            sign = -sign;
        std::vector<R> Rm = prem(A, B);
        if (Rm.empty())
            return R();
        A = std::move(B);
        R divisor = g * rpow(h, delta);
        B.clear();
        for (auto const & v : Rm)
            B.push_back(Ring<R>::div(v, divisor));
        g = A.back();
        if (delta >= 1)
            h = Ring<R>::div(rpow(g, delta), rpow(h, delta - 1));
        if (deg(B) <= 0)
            break;
    }
    int da = deg(A);
    R res = Ring<R>::div(rpow(B.back(), da), rpow(h, da - 1));
    if (sign < 0)
        res = Ring<R>::negate(res);
    return res;
}

} // namespace

Rat resultant(RatPoly const & a, RatPoly const & b)
{
    if (a.is_zero() || b.is_zero())
        return 0;
    return subresultant<Rat>(a.coeffs(), b.coeffs());
}

RatPoly resultant(RatPoly const & a_of_y, PolyXY const & b)
{
    if (a_of_y.degree() < 1)
        throw Error(errc::degenerate_input, "resultant: first argument constant in the eliminated variable");
    if (b.degree_y() < 1)
        throw Error(errc::degenerate_input, "resultant: second argument constant in the eliminated variable");
    std::vector<RatPoly> A;
    for (auto const & v : a_of_y.coeffs())
        A.push_back(RatPoly::constant(v));
    std::vector<RatPoly> B(b.by_y.begin(), b.by_y.begin() + b.degree_y() + 1);
    return subresultant<RatPoly>(std::move(A), std::move(B));
}

RatPoly resultant_by_interpolation(RatPoly const & a_of_y, PolyXY const & b)
{
    if (a_of_y.degree() < 1 || b.degree_y() < 1)
        throw Error(errc::degenerate_input, "resultant: degenerate elimination variable");
    int dy = b.degree_y();
    int bound = a_of_y.degree() * std::max(b.degree_x(), 0);
    std::vector<Rat> xs, ys;
    RatPoly const & lead = b.by_y[static_cast<std::size_t>(dy)];
    for (long k = 0; static_cast<int>(xs.size()) <= bound; ++k) {
        // 0, 1, -1, 2, -2, ...
        Rat x = (k % 2) ? Rat((k + 1) / 2) : Rat(-(k / 2));
        if (lead.eval(x) == 0)
            continue;
        xs.push_back(x);
        ys.push_back(resultant(a_of_y, b.specialize_x(x)));
    }
    // Newton divided differences
    std::size_t n = xs.size();
    std::vector<Rat> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j)
                break;
        }
    RatPoly result = RatPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        result = result * RatPoly{Rat(-xs[i]), Rat(1)} + RatPoly::constant(dd[i]);
    return result;
}

// ---------------------------------------------------------------------------

RatPoly squarefree_part(RatPoly const & p)
{
    if (p.is_zero())
        throw Error(errc::degenerate_input, "squarefree part of the zero polynomial");
    if (p.degree() == 0)
        return RatPoly::constant(Rat(1));
    return monic(exact_quotient(p, poly_gcd(p, p.derivative())));
}

bool is_squarefree(RatPoly const & p)
{
    if (p.degree() <= 0)
        return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

unsigned long euler_phi(unsigned long m)
{
    unsigned long r = m;
    for (unsigned long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            r -= r / p;
        }
    if (m > 1)
        r -= r / m;
    return r;
}

IntPoly cyclotomic(unsigned m)
{
    if (m == 0)
        throw Error(errc::precondition, "cyclotomic: m must be positive");
    static std::mutex mu;
    static std::map<unsigned, IntPoly> memo;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = memo.find(m); it != memo.end())
            return it->second;
    }
    RatPoly q = RatPoly::monomial(Rat(1), static_cast<int>(m)) - RatPoly::constant(Rat(1));
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0)
            q = exact_quotient(q, to_rat(cyclotomic(d)));
    IntPoly r = split_denominator(q).first;
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(m, r);
    return r;
}

Rat discriminant(RatPoly const & p)
{
    int d = p.degree();
    if (d < 1)
        throw Error(errc::degenerate_input, "discriminant of a constant");
    Rat r = resultant(p, p.derivative()) / p.lead();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2)
        r = -r;
    return r;
}

// ---------------------------------------------------------------------------
// Sturm sequences

std::vector<RatPoly> sturm_sequence(RatPoly const & p)
{
    std::vector<RatPoly> seq;
    if (p.is_zero())
        return seq;
    seq.push_back(p);
    seq.push_back(p.derivative());
    while (!seq.back().is_zero()) {
        RatPoly r = -(seq[seq.size() - 2] % seq.back());
        seq.push_back(std::move(r));
    }
    seq.pop_back();
    return seq;
}

namespace {

int sign_changes(std::vector<int> const & signs)
{
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

int variations_at(std::vector<RatPoly> const & seq, Rat const & x)
{
    std::vector<int> s;
    for (auto const & q : seq)
        s.push_back(sgn(q.eval(x)));
    return sign_changes(s);
}

int variations_at_infinity(std::vector<RatPoly> const & seq, int direction)
{
    std::vector<int> s;
    for (auto const & q : seq) {
        int sg = sgn(q.lead());
        if (direction < 0 && (q.degree() & 1))
            sg = -sg;
        s.push_back(sg);
    }
    return sign_changes(s);
}

} // namespace

int count_real_roots(RatPoly const & p)
{
    auto seq = sturm_sequence(p);
    if (seq.empty() || p.degree() < 1)
        return 0;
    return variations_at_infinity(seq, -1) - variations_at_infinity(seq, +1);
}

int count_real_roots_in(RatPoly const & p, Rat const & a, Rat const & b)
{
    auto seq = sturm_sequence(p);
    if (seq.empty() || p.degree() < 1)
        return 0;
    return variations_at(seq, a) - variations_at(seq, b);
}

// ---------------------------------------------------------------------------
// arithmetic modulo a word-size prime

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

struct Fp {
    u64 p;
    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
    u64 pow(u64 a, u64 e) const
    {
        u64 r = 1;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    void trim(ModPoly & a) const
    {
        while (!a.empty() && a.back() == 0)
            a.pop_back();
    }
    ModPoly mod(ModPoly a, ModPoly const & f) const
    {
        int df = static_cast<int>(f.size()) - 1;
        u64 il = inv(f.back());
        while (static_cast<int>(a.size()) - 1 >= df) {
            u64 c = mul(a.back(), il);
            std::size_t shift = a.size() - f.size();
            for (std::size_t j = 0; j < f.size(); ++j)
                a[shift + j] = sub(a[shift + j], mul(c, f[j]));
            trim(a);
        }
        return a;
    }
    ModPoly mulmod(ModPoly const & a, ModPoly const & b, ModPoly const & f) const
    {
        if (a.empty() || b.empty())
            return {};
        ModPoly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = add(r[i + j], mul(a[i], b[j]));
        trim(r);
        return mod(std::move(r), f);
    }
    ModPoly powmod(ModPoly base, u64 e, ModPoly const & f) const
    {
        ModPoly r{1};
        base = mod(std::move(base), f);
        while (e) {
            if (e & 1)
                r = mulmod(r, base, f);
            base = mulmod(base, base, f);
            e >>= 1;
        }
        return r;
    }
    ModPoly gcd(ModPoly a, ModPoly b) const
    {
        trim(a);
        trim(b);
        while (!b.empty()) {
            ModPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.empty()) {
            u64 il = inv(a.back());
            for (auto & v : a)
                v = mul(v, il);
        }
        return a;
    }
    ModPoly divexact(ModPoly a, ModPoly const & b) const
    {
        int db = static_cast<int>(b.size()) - 1;
        int da = static_cast<int>(a.size()) - 1;
        if (da < db)
            return {};
        ModPoly q(static_cast<std::size_t>(da - db + 1), 0);
        u64 il = inv(b.back());
        for (int i = da; i >= db; --i) {
            u64 c = mul(a[static_cast<std::size_t>(i)], il);
            q[static_cast<std::size_t>(i - db)] = c;
            for (int j = 0; j <= db; ++j)
                a[static_cast<std::size_t>(i - db + j)] =
                    sub(a[static_cast<std::size_t>(i - db + j)], mul(c, b[static_cast<std::size_t>(j)]));
        }
        return q;
    }
    ModPoly derivative(ModPoly const & a) const
    {
        ModPoly d;
        for (std::size_t i = 1; i < a.size(); ++i)
            d.push_back(mul(a[i], i % p));
        trim(d);
        return d;
    }
};

ModPoly reduce_mod(IntPoly const & f, u64 p)
{
    ModPoly r;
    Int P(static_cast<unsigned long>(p));
    for (auto const & c : f.coeffs()) {
        Int m;
        mpz_fdiv_r(m.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
        r.push_back(m.get_ui());
    }
    return r;
}

std::vector<unsigned long> small_primes(std::size_t count)
{
    std::vector<unsigned long> out;
    for (unsigned long n = 2; out.size() < count; ++n) {
        bool prime = true;
        for (unsigned long q : out) {
            if (q * q > n)
                break;
            if (n % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            out.push_back(n);
    }
    return out;
}

} // namespace

std::vector<int> factor_degrees_mod(IntPoly const & poly, unsigned long prime)
{
    Fp F{prime};
    ModPoly f = reduce_mod(poly, prime);
    F.trim(f);
    if (static_cast<int>(f.size()) - 1 != poly.degree())
        return {};
    ModPoly df = F.derivative(f);
    if (df.empty() || F.gcd(f, df).size() != 1)
        return {};
    u64 il = F.inv(f.back());
    for (auto & v : f)
        v = F.mul(v, il);

    std::vector<int> degrees;
    ModPoly h{0, 1};
    for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
        h = F.powmod(h, prime, f);
        ModPoly hx = h;
        if (hx.size() < 2)
            hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        F.trim(hx);
        ModPoly g = F.gcd(f, hx);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int k = 0; k < dg / i; ++k)
                degrees.push_back(i);
            f = F.divexact(f, g);
            h = F.mod(h, f);
        }
    }
    if (f.size() > 1)
        degrees.push_back(static_cast<int>(f.size()) - 1);
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

std::string to_string(IrreducibilityVerdict::Kind k)
{
    switch (k) {
    case IrreducibilityVerdict::Kind::irreducible:
        return "irreducible";
    case IrreducibilityVerdict::Kind::reducible:
        return "reducible";
    default:
        return "inconclusive";
    }
}

namespace {

constexpr int max_fallback_degree = 24;
using DegreeSet = std::bitset<max_fallback_degree + 1>;

struct RootUnit {
    // a real root, or a conjugate pair represented by its upper member
    long double re, im, radius;
    bool pair;
    int size() const { return pair ? 2 : 1; }
};

enum class SubsetOutcome { not_factor, factor, uncertain };

/* Elementary symmetric expansion of prod (x - r) over the chosen units,
 * with a rigorous coefficient error radius. */
SubsetOutcome test_subset(IntPoly const & p, std::vector<RootUnit> const & units,
                          std::vector<int> const & chosen, std::vector<Int> const & lead_divisors,
                          IntPoly & factor)
{
    int k = 0;
    for (int u : chosen)
        k += units[static_cast<std::size_t>(u)].size();
    // real monic product coefficients, majorant coefficients
    std::vector<long double> c{1.0L}, maj{1.0L};
    long double rho_sum = 0;
    auto mul_linear = [](std::vector<long double> & v, long double a0) {
        // v *= (x + a0)
        v.push_back(0);
        for (std::size_t i = v.size() - 1; i > 0; --i)
            v[i] = v[i - 1] + a0 * v[i];
        v[0] = a0 * v[0];
    };
    auto mul_quadratic = [](std::vector<long double> & v, long double a1, long double a0) {
        // v *= (x^2 + a1 x + a0)
        std::vector<long double> r(v.size() + 2, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            r[i] += a0 * v[i];
            r[i + 1] += a1 * v[i];
            r[i + 2] += v[i];
        }
        v = std::move(r);
    };
    for (int u : chosen) {
        auto const & ru = units[static_cast<std::size_t>(u)];
        long double mod = std::hypot(ru.re, ru.im);
        if (ru.pair) {
            mul_quadratic(c, -2 * ru.re, ru.re * ru.re + ru.im * ru.im);
            mul_linear(maj, mod + ru.radius);
            mul_linear(maj, mod + ru.radius);
            rho_sum += 2 * ru.radius;
        } else {
            mul_linear(c, -ru.re);
            mul_linear(maj, mod + ru.radius);
            rho_sum += ru.radius;
        }
    }
    // maj[i] = e_{k-i}(|r|+rho); error of coefficient i bounded by
    // rho_sum * e_{k-i-1}(|r|+rho) + rounding
    long double const eps = std::numeric_limits<long double>::epsilon();
    std::vector<long double> err(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        long double lower = (i + 1 < maj.size()) ? maj[i + 1] : 0.0L;
        err[i] = 1.01L * (rho_sum * lower + 16.0L * static_cast<long double>(k + 1) * eps * maj[i]) + 1e-300L;
    }
    bool uncertain = false;
    for (auto const & cdiv : lead_divisors) {
        long double cl = static_cast<long double>(cdiv.get_d());
        std::vector<Int> rounded(c.size());
        bool excluded = false, ambiguous = false;
        for (std::size_t i = 0; i < c.size(); ++i) {
            long double v = cl * c[i], e = cl * err[i];
            if (std::fabs(v) + e > 9.0e15L) {
                ambiguous = true;
                break;
            }
            long double lo = std::ceil(v - e), hi = std::floor(v + e);
            if (lo > hi) {
                excluded = true;
                break;
            }
            if (lo != hi) {
                ambiguous = true;
                continue;
            }
            rounded[i] = Int(static_cast<double>(lo));
        }
        if (excluded)
            continue;
        if (ambiguous) {
            uncertain = true;
            continue;
        }
        IntPoly g(std::move(rounded));
        if (g.degree() == k && divides(g, p)) {
            factor = primitive_part(g);
            return SubsetOutcome::factor;
        }
    }
    return uncertain ? SubsetOutcome::uncertain : SubsetOutcome::not_factor;
}

} // namespace

IrreducibilityVerdict irreducibility_check(IntPoly const & p)
{
    if (p.degree() < 1)
        throw Error(errc::precondition, "irreducibility_check: degree must be at least 1");
    if (!is_primitive(p))
        throw Error(errc::precondition, "irreducibility_check: polynomial must be primitive");
    if (!is_squarefree(to_rat(p)))
        throw Error(errc::precondition, "irreducibility_check: polynomial must be squarefree");

    IrreducibilityVerdict v;
    int d = p.degree();
    if (d == 1) {
        v.kind = IrreducibilityVerdict::Kind::irreducible;
        v.method = "degree_one";
        return v;
    }

    // Allowed factor degrees: intersection over good primes of the subset
    // sums of the modular factor degrees.
    std::vector<char> allowed(static_cast<std::size_t>(d) + 1, 1);
    int good_primes = 0;
    for (unsigned long prime : small_primes(120)) {
        auto degs = factor_degrees_mod(p, prime);
        if (degs.empty())
            continue;
        ++good_primes;
        if (degs.size() == 1) {
            v.kind = IrreducibilityVerdict::Kind::irreducible;
            v.method = "irreducible_mod_p";
            v.prime = prime;
            return v;
        }
        std::vector<char> sums(static_cast<std::size_t>(d) + 1, 0);
        sums[0] = 1;
        for (int g : degs)
            for (int s = d; s >= g; --s)
                if (sums[static_cast<std::size_t>(s - g)])
                    sums[static_cast<std::size_t>(s)] = 1;
        for (int s = 0; s <= d; ++s)
            allowed[static_cast<std::size_t>(s)] &= sums[static_cast<std::size_t>(s)];
        bool any = false;
        for (int s = 1; 2 * s <= d; ++s)
            any = any || allowed[static_cast<std::size_t>(s)];
        if (!any) {
            v.kind = IrreducibilityVerdict::Kind::irreducible;
            v.method = "factor_degree_sets";
            return v;
        }
        if (good_primes >= 40)
            break;
    }

    if (d > max_fallback_degree) {
        v.method = "fallback_degree_bound";
        return v;
    }

    // Numerical factor reconstruction over certified root boxes.
    RootBoxSet roots = isolate_roots(p, 96);
    std::vector<RootUnit> units;
    for (auto const & b : roots.boxes) {
        if (!b.real && b.im < 0)
            continue;
        long double rad = static_cast<long double>(b.radius.get_d()) * 1.5L;
        units.push_back({static_cast<long double>(b.re.get_d()), static_cast<long double>(b.im.get_d()), rad,
                         !b.real});
    }
    std::vector<Int> lead_divisors = positive_divisors(p.lead());

    bool uncertain = false;
    std::vector<int> chosen;
    IntPoly factor;
    bool found = false;
    // depth-first over unit subsets whose total size is an allowed degree
    std::function<void(std::size_t, int)> rec = [&](std::size_t next, int size) {
        if (found)
            return;
        if (size >= 1 && 2 * size <= d && allowed[static_cast<std::size_t>(size)]) {
            auto r = test_subset(p, units, chosen, lead_divisors, factor);
            if (r == SubsetOutcome::factor) {
                found = true;
                return;
            }
            if (r == SubsetOutcome::uncertain)
                uncertain = true;
        }
        for (std::size_t u = next; u < units.size(); ++u) {
            int s = size + units[u].size();
            if (2 * s > d)
                continue;
            chosen.push_back(static_cast<int>(u));
            rec(u + 1, s);
            chosen.pop_back();
            if (found)
                return;
        }
    };
    rec(0, 0);

    if (found) {
        v.kind = IrreducibilityVerdict::Kind::reducible;
        v.factor = factor;
        v.method = "numeric_factor_reconstruction";
    } else if (!uncertain) {
        v.kind = IrreducibilityVerdict::Kind::irreducible;
        v.method = "numeric_exhaustive";
    } else {
        v.method = "numeric_inconclusive";
    }
    return v;
}

} // namespace algpow
