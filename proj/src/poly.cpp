#include "algpow/poly.hpp"

#include <cctype>

#include "algpow/error.hpp"

namespace algpow {

RatPoly to_rat(IntPoly const & p)
{
    std::vector<Rat> c;
    c.reserve(p.coeffs().size());
    for (auto const & v : p.coeffs())
        c.emplace_back(v);
    return RatPoly(std::move(c));
}

Int content(IntPoly const & p)
{
    Int g = 0;
    for (auto const & v : p.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

bool is_primitive(IntPoly const & p) { return content(p) == 1; }

std::pair<IntPoly, Int> split_denominator(RatPoly const & p)
{
    Int den = lcm_of_denominators(p.coeffs());
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (auto const & v : p.coeffs()) {
        Rat s = v * den;
        c.push_back(s.get_num());
    }
    return {IntPoly(std::move(c)), den};
}

IntPoly primitive_part(IntPoly const & p)
{
    if (p.is_zero())
        return p;
    Int g = content(p);
    if (p.lead() < 0)
        g = -g;
    std::vector<Int> c;
    c.reserve(p.coeffs().size());
    for (auto const & v : p.coeffs())
        c.push_back(v / g);
    return IntPoly(std::move(c));
}

IntPoly primitive_part(RatPoly const & p) { return primitive_part(split_denominator(p).first); }

RatPoly monic(RatPoly const & p)
{
    if (p.is_zero())
        return p;
    return p * Rat(1 / p.lead());
}

std::pair<RatPoly, RatPoly> divmod(RatPoly const & a, RatPoly const & b)
{
    if (b.is_zero())
        throw Error(errc::degenerate_input, "polynomial division by zero");
    int db = b.degree();
    std::vector<Rat> r = a.coeffs();
    int dr = a.degree();
    if (dr < db)
        return {RatPoly(), a};
    std::vector<Rat> q(static_cast<std::size_t>(dr - db + 1), Rat(0));
    Rat inv_lead = 1 / b.lead();
    auto const & bc = b.coeffs();
    for (int i = dr; i >= db; --i) {
        Rat f = r[static_cast<std::size_t>(i)] * inv_lead;
        if (f == 0)
            continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator%(RatPoly const & a, RatPoly const & b) { return divmod(a, b).second; }

RatPoly exact_quotient(RatPoly const & a, RatPoly const & b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error(errc::degenerate_input, "inexact polynomial division");
    return q;
}

bool divides(IntPoly const & d, IntPoly const & p, IntPoly * quotient)
{
    if (d.is_zero())
        return p.is_zero();
    auto [q, r] = divmod(to_rat(p), to_rat(d));
    if (!r.is_zero())
        return false;
    for (auto const & c : q.coeffs())
        if (c.get_den() != 1)
            return false;
    if (quotient) {
        std::vector<Int> qc;
        for (auto const & c : q.coeffs())
            qc.push_back(c.get_num());
        *quotient = IntPoly(std::move(qc));
    }
    return true;
}

RatPoly compose(RatPoly const & p, RatPoly const & q)
{
    RatPoly r;
    for (int i = p.degree(); i >= 0; --i)
        r = r * q + RatPoly::constant(p.coeff(i));
    return r;
}

std::vector<Rat> parse_rat_vector(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw Error(errc::parse, "expected '[c0, c1, ...]', got '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<Rat> out;
    bool only_space = true;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            only_space = false;
    if (only_space)
        return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string_view item = s.substr(start, comma == std::string_view::npos ? s.npos : comma - start);
        out.push_back(parse_rational(item));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

RatPoly parse_rat_poly(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    if (!s.empty() && s.front() != '[') {
        // bare rational r: the polynomial den*x - num
        Rat r = parse_rational(s);
        return RatPoly{Rat(-r.get_num()), Rat(r.get_den())};
    }
    return RatPoly(parse_rat_vector(text));
}

IntPoly parse_int_poly(std::string_view text)
{
    RatPoly p = RatPoly(parse_rat_vector(text));
    std::vector<Int> c;
    for (auto const & v : p.coeffs()) {
        if (v.get_den() != 1)
            throw Error(errc::parse, "expected integer coefficients in '" + std::string(text) + "'");
        c.push_back(v.get_num());
    }
    return IntPoly(std::move(c));
}

IntPoly parse_minpoly(std::string_view text) { return primitive_part(parse_rat_poly(text)); }

std::string to_string(std::vector<Rat> const & v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(v[i]);
    }
    return s + "]";
}

std::string to_string(RatPoly const & p) { return to_string(p.coeffs()); }

std::string to_string(IntPoly const & p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(p.coeffs()[i]);
    }
    return s + "]";
}

} // namespace algpow
