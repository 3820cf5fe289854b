#include "algpow/interval.hpp"

#include <algorithm>

#include "algpow/error.hpp"

namespace algpow {

Rat round_dyadic(Rat const & q, long bits, bool up)
{
    if (q == 0)
        return q;
    // grid 2^(e - bits) where 2^e <= |q| < 2^(e+1), approximately
    long e = static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
    long shift = bits - e; // value * 2^shift has ~bits integer bits
    Int num = q.get_num();
    Int den = q.get_den();
    if (shift >= 0)
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    Int m;
    if (up)
        mpz_cdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rat r;
    if (shift >= 0) {
        r = Rat(m);
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        r = Rat(m);
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    return r;
}

RealInterval::RealInterval(Rat l, Rat h)
    : lo(std::move(l))
    , hi(std::move(h))
{
    if (hi < lo)
        throw Error(errc::degenerate_input, "interval with lo > hi");
}

Rat RealInterval::magnitude() const { return std::max(abs(lo), abs(hi)); }

Rat RealInterval::mignitude() const
{
    if (contains_zero())
        return 0;
    return std::min(abs(lo), abs(hi));
}

RealInterval operator+(RealInterval const & a, RealInterval const & b) { return {a.lo + b.lo, a.hi + b.hi}; }
RealInterval operator-(RealInterval const & a, RealInterval const & b) { return {a.lo - b.hi, a.hi - b.lo}; }
RealInterval operator-(RealInterval const & a) { return {-a.hi, -a.lo}; }

RealInterval operator*(RealInterval const & a, RealInterval const & b)
{
    if (a.is_point() && b.is_point())
        return RealInterval(Rat(a.lo * b.lo));
    if (a.lo >= 0 && b.lo >= 0)
        return {a.lo * b.lo, a.hi * b.hi};
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RealInterval operator/(RealInterval const & a, RealInterval const & b)
{
    if (b.contains_zero())
        throw Error(errc::degenerate_input, "interval division by an interval containing zero");
    RealInterval inv(Rat(1 / b.hi), Rat(1 / b.lo));
    return a * inv;
}

RealInterval sqr(RealInterval const & a)
{
    Rat l = a.lo * a.lo, h = a.hi * a.hi;
    if (a.contains_zero())
        return {Rat(0), std::max(l, h)};
    return {std::min(l, h), std::max(l, h)};
}

RealInterval abs(RealInterval const & a)
{
    if (a.lo >= 0)
        return a;
    if (a.hi <= 0)
        return -a;
    return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}

RealInterval hull(RealInterval const & a, RealInterval const & b)
{
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

bool overlaps(RealInterval const & a, RealInterval const & b) { return a.lo <= b.hi && b.lo <= a.hi; }

RealInterval round_outward(RealInterval const & a, long bits)
{
    return {round_dyadic(a.lo, bits, false), round_dyadic(a.hi, bits, true)};
}

namespace {

// floor(sqrt(q) * 2^k) / 2^k  or the ceiling variant
Rat sqrt_bound(Rat const & q, long k, bool up)
{
    if (q <= 0)
        return 0;
    // sqrt(n/d) * 2^k = sqrt(n * d * 4^k) / d
    Int nd = q.get_num() * q.get_den();
    mpz_mul_2exp(nd.get_mpz_t(), nd.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k));
    Int s;
    mpz_sqrt(s.get_mpz_t(), nd.get_mpz_t());
    if (up && s * s != nd)
        s += 1;
    // s/d is floor/ceil of sqrt(...) / d up to the division; divide exactly
    Rat r(s, q.get_den());
    r.canonicalize();
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    return r;
}

} // namespace

RealInterval sqrt(RealInterval const & a, long bits)
{
    if (a.hi < 0)
        throw Error(errc::degenerate_input, "sqrt of a negative interval");
    long k = bits;
    if (a.hi > 0)
        k = std::max<long>(bits - floor_log2(a.hi) / 2, 8);
    Rat lo = sqrt_bound(a.lo, k, false);
    Rat hi = sqrt_bound(a.hi, k, true);
    return {round_dyadic(lo, bits + 2, false), round_dyadic(hi, bits + 2, true)};
}

RealInterval dist_to_nearest_integer(RealInterval const & a)
{
    Int m = round_nearest(a.mid());
    Rat half(1, 2);
    if (a.lo >= Rat(m) - half && a.hi <= Rat(m) + half)
        return abs(a - RealInterval(Rat(m)));
    // straddles a half-integer: the image reaches 1/2
    auto dist = [](Rat const & x) {
        Rat f = x - Rat(floor_of(x));
        return f <= Rat(1, 2) ? f : Rat(1 - f);
    };
    if (a.width() >= 1)
        return {Rat(0), half};
    Rat lo = std::min(dist(a.lo), dist(a.hi));
    // an integer inside pushes the lower end to 0
    if (ceil_of(a.lo) <= floor_of(a.hi))
        lo = 0;
    return {lo, half};
}

std::string to_string(RealInterval const & a) { return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]"; }

Rat ComplexBox::max_width() const { return std::max(re.width(), im.width()); }

ComplexBox operator+(ComplexBox const & a, ComplexBox const & b) { return {a.re + b.re, a.im + b.im}; }
ComplexBox operator-(ComplexBox const & a, ComplexBox const & b) { return {a.re - b.re, a.im - b.im}; }

ComplexBox operator*(ComplexBox const & a, ComplexBox const & b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox operator/(ComplexBox const & a, ComplexBox const & b)
{
    RealInterval n = norm_sq(b);
    ComplexBox conj_b{b.re, -b.im};
    ComplexBox num = a * conj_b;
    return {num.re / n, num.im / n};
}

ComplexBox round_outward(ComplexBox const & a, long bits)
{
    return {round_outward(a.re, bits), round_outward(a.im, bits)};
}

RealInterval norm_sq(ComplexBox const & a) { return sqr(a.re) + sqr(a.im); }

RealInterval modulus(ComplexBox const & a, long bits) { return sqrt(norm_sq(a), bits); }

RealInterval eval(RatPoly const & p, RealInterval const & x, long bits)
{
    if (p.is_zero())
        return RealInterval(Rat(0));
    RealInterval acc(p.lead());
    for (int i = p.degree() - 1; i >= 0; --i)
        acc = round_outward(acc * x + RealInterval(p.coeff(i)), bits);
    return acc;
}

ComplexBox eval(RatPoly const & p, ComplexBox const & z, long bits)
{
    if (p.is_zero())
        return ComplexBox(Rat(0));
    ComplexBox acc(p.lead());
    for (int i = p.degree() - 1; i >= 0; --i)
        acc = round_outward(acc * z + ComplexBox(p.coeff(i)), bits);
    return acc;
}

} // namespace algpow
