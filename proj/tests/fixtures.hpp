#ifndef ALGPOW_TESTS_FIXTURES_HPP
#define ALGPOW_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include "algpow/exactalg.hpp"
#include "algpow/numfield.hpp"
#include "oracles.hpp"

namespace fx {

using namespace algpow;

inline IntPoly ip(std::initializer_list<long> c)
{
    std::vector<Int> v;
    for (long x : c)
        v.emplace_back(x);
    return IntPoly(v);
}

inline std::vector<Rat> rv(std::initializer_list<long> c)
{
    std::vector<Rat> v;
    for (long x : c)
        v.emplace_back(x);
    return v;
}

inline Rat frac(long n, long d)
{
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline AlgPtr phi() { return AlgebraicNumber::from_minpoly(ip({-1, -1, 1})); }
inline AlgPtr salem() { return AlgebraicNumber::from_minpoly(ip({1, -25, 1, -25, 1})); }
inline AlgPtr num(std::initializer_list<long> c) { return AlgebraicNumber::from_minpoly(ip(c)); }

inline FieldElement rat_in(AlgPtr const & a, Rat const & q) { return FieldElement::rational(a, q); }

inline IntPoly random_irreducible(std::mt19937 & rng, int deg, bool monic = true, int bound = 5)
{
    while (true) {
        IntPoly p = oracle::random_poly(rng, deg, bound, monic);
        if (p.coeff(0) == 0 || !is_squarefree(to_rat(p)))
            continue;
        p = primitive_part(p);
        if (p.lead() < 0)
            p = p * Int(-1);
        if (irreducibility_check(p).irreducible())
            return p;
    }
}

} // namespace fx

#endif
