#ifndef ALGPOW_EXACTALG_HPP
#define ALGPOW_EXACTALG_HPP

#include <string>
#include <vector>

#include "algpow/poly.hpp"

namespace algpow {

/* Polynomial in two variables stored as a polynomial in Y whose
 * coefficients are polynomials in X:  b(X, Y) = sum_j by_y[j](X) * Y^j. */
struct PolyXY {
    std::vector<RatPoly> by_y;

    int degree_y() const;
    int degree_x() const;
    RatPoly specialize_x(Rat const & x) const; // b(x, Y) as a polynomial in Y

    static PolyXY constant_in_x(RatPoly const & p_of_y);
    static PolyXY x_minus_y_power(unsigned s);                // X - Y^s
    static PolyXY scaled_product(RatPoly const & p);          // p(X*Y)
    static PolyXY x_minus_poly_of_y(RatPoly const & c);       // X - c(Y)
    static PolyXY shifted(RatPoly const & p, Rat const & j);  // p(X - j*Y)
};

/* Monic gcd over Q.  gcd(0, 0) raises degenerate_input. */
RatPoly poly_gcd(RatPoly const & a, RatPoly const & b);

/* Extended gcd: returns monic g with u*a + v*b = g. */
RatPoly poly_xgcd(RatPoly const & a, RatPoly const & b, RatPoly & u, RatPoly & v);

/* Univariate resultant over Q by the subresultant PRS. */
Rat resultant(RatPoly const & a, RatPoly const & b);

/* Res_Y(a(Y), b(X, Y)) by the subresultant PRS over Q[X]. */
RatPoly resultant(RatPoly const & a_of_y, PolyXY const & b);

/* Same quantity by evaluation at integer points and interpolation. */
RatPoly resultant_by_interpolation(RatPoly const & a_of_y, PolyXY const & b);

/* p / gcd(p, p'), monic. */
RatPoly squarefree_part(RatPoly const & p);
bool is_squarefree(RatPoly const & p);

/* m-th cyclotomic polynomial (memoised, thread-safe). */
IntPoly cyclotomic(unsigned m);
unsigned long euler_phi(unsigned long m);

/* Discriminant up to sign convention: (-1)^(d(d-1)/2) Res(p, p') / lc(p). */
Rat discriminant(RatPoly const & p);

struct IrreducibilityVerdict {
    enum class Kind { irreducible, reducible, inconclusive };
    Kind kind = Kind::inconclusive;
    IntPoly factor;       // a proper factor when reducible
    std::string method;   // how the verdict was reached
    unsigned long prime = 0;

    bool irreducible() const { return kind == Kind::irreducible; }
};

std::string to_string(IrreducibilityVerdict::Kind k);

/* Requires p primitive, degree >= 1 and squarefree. */
IrreducibilityVerdict irreducibility_check(IntPoly const & p);

/* Degrees of the irreducible factors of p modulo a prime (distinct-degree
 * factorisation).  Empty when the prime divides the leading coefficient or
 * p is not squarefree modulo it. */
std::vector<int> factor_degrees_mod(IntPoly const & p, unsigned long prime);

/* Sturm sequence and real root counting over Q. */
std::vector<RatPoly> sturm_sequence(RatPoly const & p);
int count_real_roots(RatPoly const & p);                                   // distinct real roots
int count_real_roots_in(RatPoly const & p, Rat const & a, Rat const & b);  // roots in (a, b]

} // namespace algpow

#endif /* ALGPOW_EXACTALG_HPP */
