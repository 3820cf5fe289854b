#ifndef ALGPOW_CLASSIFY_HPP
#define ALGPOW_CLASSIFY_HPP

#include <string>
#include <vector>

#include "algpow/numfield.hpp"

namespace algpow {

enum class NumberKind { PV, Salem, pseudoPV, algebraic_integer_other, non_integral };

std::string to_string(NumberKind k);
NumberKind number_kind_from_string(std::string const & s);

struct Classification {
    NumberKind kind = NumberKind::non_integral;
    IntPoly minpoly;
    std::size_t designated = 0;
    std::vector<RootBox> boxes;       // roots in index order
    std::vector<std::size_t> inside;  // |z| < 1
    std::vector<std::size_t> on;      // |z| = 1
    std::vector<std::size_t> outside; // |z| > 1
    Rat off_circle_margin;
    Rat trace;                        // Tr(a)
    bool algebraic_integer = false;
    long precision = 0;
};

Classification classify_number(AlgebraicNumber const & a);

} // namespace algpow

#endif /* ALGPOW_CLASSIFY_HPP */
