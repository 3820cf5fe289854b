#ifndef ALGPOW_INTERVAL_HPP
#define ALGPOW_INTERVAL_HPP

#include <string>

#include "algpow/poly.hpp"
#include "algpow/rational.hpp"

namespace algpow {

/* Round q to a dyadic rational carrying about `bits` significant bits,
 * towards -infinity (up = false) or +infinity (up = true). */
Rat round_dyadic(Rat const & q, long bits, bool up);

/* Closed real interval with exact rational endpoints.  Arithmetic is exact;
 * call round_outward() to bound the endpoint sizes. */
struct RealInterval {
    Rat lo, hi;

    RealInterval() = default;
    RealInterval(Rat const & v) : lo(v), hi(v) {}                        // NOLINT
    RealInterval(Int const & v) : lo(v), hi(v) {}                        // NOLINT
    RealInterval(Rat l, Rat h);

    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
    Rat radius() const { return (hi - lo) / 2; }
    bool contains(Rat const & v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }
    Rat magnitude() const; // max |x|
    Rat mignitude() const; // min |x|
};

RealInterval operator+(RealInterval const & a, RealInterval const & b);
RealInterval operator-(RealInterval const & a, RealInterval const & b);
RealInterval operator-(RealInterval const & a);
RealInterval operator*(RealInterval const & a, RealInterval const & b);
RealInterval operator/(RealInterval const & a, RealInterval const & b); // b must exclude 0
RealInterval sqr(RealInterval const & a);
RealInterval abs(RealInterval const & a);
RealInterval hull(RealInterval const & a, RealInterval const & b);
bool overlaps(RealInterval const & a, RealInterval const & b);
RealInterval round_outward(RealInterval const & a, long bits);
/* Enclosure of sqrt over a non-negative interval, endpoints accurate to
 * about `bits` bits. */
RealInterval sqrt(RealInterval const & a, long bits);

/* Enclosure of {||x|| : x in a}, where ||x|| is the distance to the
 * nearest integer. */
RealInterval dist_to_nearest_integer(RealInterval const & a);

std::string to_string(RealInterval const & a);

/* Rectangle in the complex plane. */
struct ComplexBox {
    RealInterval re, im;

    ComplexBox() = default;
    ComplexBox(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}
    ComplexBox(Rat const & r) : re(r), im(Rat(0)) {}                  // NOLINT
    ComplexBox(Int const & r) : re(r), im(Rat(0)) {}                  // NOLINT

    Rat max_width() const;
};

ComplexBox operator+(ComplexBox const & a, ComplexBox const & b);
ComplexBox operator-(ComplexBox const & a, ComplexBox const & b);
ComplexBox operator*(ComplexBox const & a, ComplexBox const & b);
ComplexBox operator/(ComplexBox const & a, ComplexBox const & b); // |b|^2 must exclude 0
ComplexBox round_outward(ComplexBox const & a, long bits);
RealInterval norm_sq(ComplexBox const & a); // |z|^2
RealInterval modulus(ComplexBox const & a, long bits);

/* Horner evaluation with outward rounding after every step. */
RealInterval eval(RatPoly const & p, RealInterval const & x, long bits);
ComplexBox eval(RatPoly const & p, ComplexBox const & z, long bits);

} // namespace algpow

#endif /* ALGPOW_INTERVAL_HPP */
