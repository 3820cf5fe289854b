#ifndef ALGPOW_ROOTBOX_HPP
#define ALGPOW_ROOTBOX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "algpow/interval.hpp"
#include "algpow/poly.hpp"

namespace algpow {

/* Working precision ceiling in bits: ALGPOW_PRECISION_CAP if set, else 16384. */
long precision_cap();
inline constexpr long default_start_bits = 64;

/* Square box centred at (re, im) with half-width `radius`, certified to
 * contain exactly one root.  For real roots im == 0 and the box degenerates
 * to the real interval [re - radius, re + radius]. */
struct RootBox {
    Rat re, im, radius;
    bool real = false;

    ComplexBox box() const;
    RealInterval real_interval() const; // only meaningful for real roots
};

struct RootBoxSet {
    IntPoly poly;
    std::vector<RootBox> boxes; // sorted by (re, |im|, sign im) of centres
    long precision = 0;         // working precision that certified the set

    std::size_t size() const { return boxes.size(); }
    std::optional<std::size_t> conjugate_of(std::size_t i) const;
    std::size_t real_count() const;
};

/* Certified isolation of all complex roots of a squarefree polynomial.
 * Every box has width <= 2^-target_bits.  Precision starts at start_bits
 * and doubles up to precision_cap(); beyond that a precision_cap error is
 * raised. */
RootBoxSet isolate_roots(IntPoly const & p, long target_bits, long start_bits = default_start_bits);

/* Tighter boxes for the same roots; index i of the result is the root that
 * index i of `set` isolates. */
RootBoxSet refine(RootBoxSet const & set, long target_bits);

/* Isolating interval of a real root shrunk to width <= 2^-bits by
 * Newton steps verified with sign changes (bisection as fallback). */
RealInterval refine_real_root(IntPoly const & p, RealInterval iv, long bits);

struct UnitModulusReport {
    int count = 0;                       // roots with |z| = 1 exactly
    std::vector<std::size_t> on_circle;  // indices into `roots`
    std::vector<int> side;               // per root: -1 (|z|<1), 0 (|z|=1), +1 (|z|>1)
    Rat off_circle_margin;               // lower bound on ||z| - 1| over off-circle roots
    RootBoxSet roots;                    // the box set the indices refer to
    IntPoly reciprocal_gcd;              // gcd(p, x^d p(1/x)), primitive
    RatPoly chebyshev_transform;         // T(y), x^k T(x + 1/x) = self-reciprocal part
};

/* Exact on-circle count via gcd with the reciprocal polynomial, the
 * substitution y = x + 1/x and Sturm sequences; off-circle roots are then
 * separated from the circle by box refinement.  `roots` may supply an
 * existing box set (its index order is preserved). */
UnitModulusReport unit_modulus_count(IntPoly const & p, RootBoxSet const * roots = nullptr);

} // namespace algpow

#endif /* ALGPOW_ROOTBOX_HPP */
