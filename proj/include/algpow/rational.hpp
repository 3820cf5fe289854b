#ifndef ALGPOW_RATIONAL_HPP
#define ALGPOW_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace algpow {

using Int = mpz_class;
using Rat = mpq_class;

/* Exact rational literal: "17", "-3/4", "0.125", "-2.5". */
Rat parse_rational(std::string_view text);
Int parse_integer(std::string_view text);

/* Canonical text: "p/q" in lowest terms, or "p" when q = 1. */
std::string to_string(Rat const & q);
std::string to_string(Int const & z);

Int floor_of(Rat const & q);
Int ceil_of(Rat const & q);
Int round_nearest(Rat const & q); // ties go up

/* Representative of z mod b in {-ceil(b/2)+1, ..., floor(b/2)}. */
Int balanced_residue(Int const & z, Int const & b);
std::int64_t balanced_residue(std::int64_t z, std::int64_t b);

Int lcm_of_denominators(std::vector<Rat> const & v);

/* floor(log2 |q|), q != 0. */
long floor_log2(Rat const & q);

/* Square root of q when q is the square of a rational. */
bool rational_sqrt(Rat const & q, Rat & root);

/* Prime factorisation by trial division; |n| >= 1. */
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);
std::vector<Int> positive_divisors(Int const & n);

Int pow_int(Int const & base, unsigned long e);
Rat pow_rat(Rat const & base, long e);

} // namespace algpow

#endif /* ALGPOW_RATIONAL_HPP */
