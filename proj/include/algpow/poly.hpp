#ifndef ALGPOW_POLY_HPP
#define ALGPOW_POLY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algpow/rational.hpp"

namespace algpow {

/* Dense univariate polynomial, coefficient i multiplies x^i.
 * Trailing zeros are always trimmed, so the zero polynomial has no
 * coefficients and degree -1. */
template <class T> class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<T> coeffs)
        : c_(std::move(coeffs))
    {
        trim();
    }
    Poly(std::initializer_list<T> coeffs)
        : c_(coeffs)
    {
        trim();
    }

    static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
    static Poly monomial(T v, int deg)
    {
        std::vector<T> c(static_cast<std::size_t>(deg) + 1, T(0));
        c.back() = std::move(v);
        return Poly(std::move(c));
    }
    static Poly x() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    T coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return T(0);
        return c_[static_cast<std::size_t>(i)];
    }
    T const & lead() const { return c_.back(); }
    std::vector<T> const & coeffs() const { return c_; }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * T(static_cast<long>(i));
        return Poly(std::move(d));
    }

    /* Horner evaluation in any ring that accepts T on the right. */
    template <class U> U eval(U const & x) const
    {
        if (c_.empty())
            return U(T(0));
        U acc(c_.back());
        for (std::size_t i = c_.size() - 1; i-- > 0;)
            acc = acc * x + U(c_[i]);
        return acc;
    }

    Poly & operator+=(Poly const & o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly & operator-=(Poly const & o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly & operator*=(T const & s)
    {
        for (auto & v : c_)
            v *= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, Poly const & b) { return a += b; }
    friend Poly operator-(Poly a, Poly const & b) { return a -= b; }
    friend Poly operator-(Poly a)
    {
        for (auto & v : a.c_)
            v = -v;
        return a;
    }
    friend Poly operator*(Poly a, T const & s) { return a *= s; }
    friend Poly operator*(T const & s, Poly a) { return a *= s; }
    friend Poly operator*(Poly const & a, Poly const & b)
    {
        if (a.c_.empty() || b.c_.empty())
            return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }
    friend bool operator==(Poly const & a, Poly const & b) { return a.c_ == b.c_; }

    /* x^deg * p(1/x) with deg = degree(p). */
    Poly reversed() const { return Poly(std::vector<T>(c_.rbegin(), c_.rend())); }

    /* p(s*x) */
    Poly scaled_argument(T const & s) const
    {
        std::vector<T> r(c_);
        T pw(1);
        for (auto & v : r) {
            v *= pw;
            pw *= s;
        }
        return Poly(std::move(r));
    }

    /* p(-x) */
    Poly negated_argument() const { return scaled_argument(T(-1)); }

  private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rat(IntPoly const & p);

/* gcd of the coefficients (non-negative; 0 for the zero polynomial). */
Int content(IntPoly const & p);
bool is_primitive(IntPoly const & p);

/* Clears denominators and content; leading coefficient made positive.
 * Defines the canonical integer representative of a rational polynomial
 * up to scalar. */
IntPoly primitive_part(RatPoly const & p);
IntPoly primitive_part(IntPoly const & p);

/* Lossless (IntPoly, denominator) split of a rational polynomial:
 * p = num / den with den > 0 the lcm of coefficient denominators. */
std::pair<IntPoly, Int> split_denominator(RatPoly const & p);

RatPoly monic(RatPoly const & p);

/* Euclidean division over Q.  Throws on division by zero. */
std::pair<RatPoly, RatPoly> divmod(RatPoly const & a, RatPoly const & b);
RatPoly operator%(RatPoly const & a, RatPoly const & b);
RatPoly exact_quotient(RatPoly const & a, RatPoly const & b); // throws if b does not divide a

/* Exact integer division (coefficientwise remainder must vanish). */
bool divides(IntPoly const & d, IntPoly const & p, IntPoly * quotient = nullptr);

/* p(x)^e */
template <class T> Poly<T> power(Poly<T> const & p, unsigned e)
{
    Poly<T> r = Poly<T>::constant(T(1));
    Poly<T> b = p;
    while (e) {
        if (e & 1u)
            r = r * b;
        e >>= 1u;
        if (e)
            b = b * b;
    }
    return r;
}

/* p(q(x)) */
RatPoly compose(RatPoly const & p, RatPoly const & q);

/* Text format "[c0, c1, ..., cd]", ascending degree.  Also accepts a bare
 * rational "p/q" as shorthand for the degree-one polynomial q*x - p. */
RatPoly parse_rat_poly(std::string_view text);
IntPoly parse_int_poly(std::string_view text);
/* Shorthand-aware: bare rational r becomes primitive minimal polynomial. */
IntPoly parse_minpoly(std::string_view text);
std::vector<Rat> parse_rat_vector(std::string_view text);

std::string to_string(RatPoly const & p);
std::string to_string(IntPoly const & p);
std::string to_string(std::vector<Rat> const & v);

} // namespace algpow

#endif /* ALGPOW_POLY_HPP */
