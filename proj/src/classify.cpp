#include "algpow/classify.hpp"

#include <algorithm>

#include "algpow/error.hpp"

namespace algpow {

std::string to_string(NumberKind k)
{
    switch (k) {
    case NumberKind::PV:
        return "PV";
    case NumberKind::Salem:
        return "Salem";
    case NumberKind::pseudoPV:
        return "pseudoPV";
    case NumberKind::algebraic_integer_other:
        return "algebraic_integer_other";
    case NumberKind::non_integral:
        return "non_integral";
    }
    return "?";
}

NumberKind number_kind_from_string(std::string const & s)
{
    for (auto k : {NumberKind::PV, NumberKind::Salem, NumberKind::pseudoPV, NumberKind::algebraic_integer_other,
                   NumberKind::non_integral})
        if (to_string(k) == s)
            return k;
    throw Error(errc::parse, "unknown number kind: " + s);
}

Classification classify_number(AlgebraicNumber const & a)
{
    Classification c;
    IntPoly const & p = a.minpoly();
    c.minpoly = p;
    c.designated = a.root_index();
    c.algebraic_integer = algebraic_integer_test(a);
    c.trace = Rat(-p.coeff(p.degree() - 1), p.lead());
    c.trace.canonicalize();

    if (p.coeff(0) == 0) {
        // a = 0
        c.boxes = a.roots().boxes;
        c.inside = {0};
        c.precision = a.roots().precision;
        c.kind = NumberKind::algebraic_integer_other;
        return c;
    }

    UnitModulusReport u = unit_modulus_count(p, &a.roots());
    c.boxes = u.roots.boxes;
    c.precision = u.roots.precision;
    c.off_circle_margin = u.off_circle_margin;
    for (std::size_t i = 0; i < u.side.size(); ++i) {
        if (u.side[i] < 0)
            c.inside.push_back(i);
        else if (u.side[i] == 0)
            c.on.push_back(i);
        else
            c.outside.push_back(i);
    }

    std::size_t j = c.designated;
    bool real = a.is_real();
    bool expanding = u.side[j] > 0;
    bool others_inside = c.outside.size() == 1 && c.on.empty();
    bool others_le_one = c.outside.size() == 1 && !c.on.empty();
    bool positive = real && expanding && a.real_positive();

    if (c.algebraic_integer) {
        if (positive && others_inside)
            c.kind = NumberKind::PV;
        else if (positive && others_le_one)
            c.kind = NumberKind::Salem;
        else
            c.kind = NumberKind::algebraic_integer_other;
    } else {
        if (real && expanding && others_inside && c.trace.get_den() == 1)
            c.kind = NumberKind::pseudoPV;
        else
            c.kind = NumberKind::non_integral;
    }
    return c;
}

} // namespace algpow
