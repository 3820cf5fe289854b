#ifndef ALGPOW_NUMFIELD_HPP
#define ALGPOW_NUMFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algpow/poly.hpp"
#include "algpow/rootbox.hpp"

namespace algpow {

using RatMatrix = std::vector<std::vector<Rat>>; // row-major

/* Solves A x = rhs exactly; nullopt when inconsistent.  A may be
 * rectangular (rows >= cols); `rank` receives the column rank. */
std::optional<std::vector<Rat>> solve_linear(RatMatrix const & a, std::vector<Rat> const & rhs, int * rank = nullptr);
Rat determinant(RatMatrix a);

class AlgebraicNumber;
using AlgPtr = std::shared_ptr<AlgebraicNumber const>;

/* A root of an irreducible primitive integer polynomial (positive leading
 * coefficient), identified by its index in the certified root box set. */
class AlgebraicNumber {
  public:
    /* Validates irreducibility and isolates roots.  Without an index the
     * largest real root > 1 is chosen, else the largest real root, else
     * root 0. */
    static AlgPtr from_minpoly(IntPoly const & p, std::optional<std::size_t> root_index = std::nullopt,
                               long start_bits = default_start_bits);
    static AlgPtr rational(Rat const & q);
    /* Skips the irreducibility check; the caller knows p is irreducible. */
    static AlgPtr from_known_minpoly(IntPoly const & p, std::optional<std::size_t> root_index = std::nullopt,
                                     long start_bits = default_start_bits);
    /* Same polynomial, another designated root. */
    static AlgPtr with_index(AlgPtr const & a, std::size_t root_index);

    IntPoly const & minpoly() const { return minpoly_; }
    RatPoly const & rat_minpoly() const { return rat_minpoly_; }
    int degree() const { return minpoly_.degree(); }
    RootBoxSet const & roots() const { return roots_; }
    std::size_t root_index() const { return index_; }
    RootBox const & box() const { return roots_.boxes[index_]; }
    bool is_real() const { return box().real; }
    bool real_positive() const;
    bool monic() const { return minpoly_.lead() == 1; }

    /* Enclosure of the designated root when real, width <= 2^-bits. */
    RealInterval real_value(long bits) const;

  private:
    IntPoly minpoly_;
    RatPoly rat_minpoly_;
    RootBoxSet roots_;
    std::size_t index_ = 0;
};

/* c0 + c1 a + ... + c_{d-1} a^{d-1} in Q(a). */
struct FieldElement {
    AlgPtr base;
    std::vector<Rat> coords;

    static FieldElement from_poly(AlgPtr const & base, RatPoly const & p); // reduced mod the minpoly
    static FieldElement from_coords(AlgPtr const & base, std::vector<Rat> coords);
    static FieldElement rational(AlgPtr const & base, Rat const & q);
    static FieldElement generator(AlgPtr const & base);

    RatPoly as_poly() const { return RatPoly(coords); }
    bool is_zero() const;
    bool is_rational() const;
    int degree() const { return base->degree(); }
};

bool operator==(FieldElement const & x, FieldElement const & y);

FieldElement field_add(FieldElement const & x, FieldElement const & y);
FieldElement field_sub(FieldElement const & x, FieldElement const & y);
FieldElement field_mul(FieldElement const & x, FieldElement const & y);
FieldElement field_scale(FieldElement const & x, Rat const & q);
FieldElement field_inv(FieldElement const & x);
FieldElement field_pow(FieldElement const & x, long e); // negative e inverts

/* Column j holds the coordinates of x * a^j. */
RatMatrix mult_matrix(FieldElement const & x);
Rat trace(FieldElement const & x);
Rat norm(FieldElement const & x);
RatPoly charpoly(FieldElement const & x); // monic, degree d

struct TraceSeq {
    FieldElement seed;
    std::vector<Rat> values;     // values[n] = Tr(seed * a^n)
    bool used_recurrence = false; // false: matrix powers (non-monic base)
    std::string note;

    Rat const & operator[](std::size_t n) const { return values[n]; }
};

TraceSeq power_trace_seq(FieldElement const & seed, long n_max);

struct ElementMinpoly {
    IntPoly poly; // primitive
    int degree = 0;
};
ElementMinpoly minpoly_of_element(FieldElement const & x);

/* Coordinates of x in 1, b, ..., b^{m-1} when x lies in Q(b). */
std::optional<std::vector<Rat>> subfield_membership(FieldElement const & x, FieldElement const & beta);

/* Q(b) as a field of its own: the designated root of minpoly(b) is the
 * embedding of b under the base's designated root. */
AlgPtr subfield_generator(FieldElement const & beta);
/* x in Q(b) re-expressed over subfield_generator(b); throws outside_field. */
FieldElement restrict_to_subfield(FieldElement const & x, FieldElement const & beta, AlgPtr const & sub);

struct ModuleMembership {
    bool member = false;
    long k = 0;              // least k with b^k x P'_b(b) in Z[b]
    std::string reason_code; // when not a member
    std::string reason;
};

/* Is x in (1/P'_b(b)) Z[b, 1/b]? */
ModuleMembership laurent_module_membership(FieldElement const & x, FieldElement const & beta);

bool algebraic_integer_test(AlgebraicNumber const & a);

struct DeSmitReport {
    int degree = 0;
    long bound = 0;                     // floor(d + d log2 d)
    std::vector<Rat> traces;            // Tr(a^i), i = 1..bound
    std::optional<long> first_failure;  // first i with a non-integral trace
    bool certified = false;
};
DeSmitReport de_smit_check(AlgebraicNumber const & a);

/* Expresses a real algebraic number given by its own minimal polynomial
 * inside Q(a).  The designated root of `lambda` must be real. */
std::optional<FieldElement> lift_to_field(AlgPtr const & lambda, AlgPtr const & base);

/* Certified enclosure of the image of x under the embedding sending the
 * generator to root j of its minpoly; width <= 2^-bits. */
ComplexBox embed_element(FieldElement const & x, std::size_t j, long bits);

std::string to_string(FieldElement const & x);

} // namespace algpow

#endif /* ALGPOW_NUMFIELD_HPP */
