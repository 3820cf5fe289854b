#include "algpow/rational.hpp"

#include <algorithm>
#include <cctype>

#include "algpow/error.hpp"

namespace algpow {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

Int parse_signed_digits(std::string_view s, std::string_view whole)
{
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw Error(errc::parse, "malformed number '" + std::string(whole) + "'");
    Int z(std::string(s), 10);
    return neg ? Int(-z) : z;
}

} // namespace

Rat parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        s = trim(s.substr(1, s.size() - 2));
    if (s.empty())
        throw Error(errc::parse, "empty number literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Int num = parse_signed_digits(trim(s.substr(0, slash)), text);
        std::string_view den_text = trim(s.substr(slash + 1));
        if (!all_digits(den_text))
            throw Error(errc::parse, "malformed denominator in '" + std::string(text) + "'");
        Int den(std::string(den_text), 10);
        if (den == 0)
            throw Error(errc::parse, "zero denominator in '" + std::string(text) + "'");
        Rat q(num, den);
        q.canonicalize();
        return q;
    }

    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool neg = false;
        if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) {
            neg = ip.front() == '-';
            ip.remove_prefix(1);
        }
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) ||
            (ip.empty() && fp.empty()))
            throw Error(errc::parse, "malformed decimal '" + std::string(text) + "'");
        std::string digits = std::string(ip) + std::string(fp);
        Int num(digits.empty() ? std::string("0") : digits, 10);
        Int den = pow_int(Int(10), fp.size());
        Rat q(neg ? Int(-num) : num, den);
        q.canonicalize();
        return q;
    }

    return Rat(parse_signed_digits(s, text));
}

Int parse_integer(std::string_view text)
{
    Rat q = parse_rational(text);
    if (q.get_den() != 1)
        throw Error(errc::parse, "expected an integer, got '" + std::string(text) + "'");
    return q.get_num();
}

std::string to_string(Rat const & q) { return q.get_str(10); }
std::string to_string(Int const & z) { return z.get_str(10); }

Int floor_of(Rat const & q)
{
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_of(Rat const & q)
{
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int round_nearest(Rat const & q) { return floor_of(q + Rat(1, 2)); }

Int balanced_residue(Int const & z, Int const & b)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), b.get_mpz_t());
    // r in [0, b); shift the upper part down so r lies in (-ceil(b/2), floor(b/2)]
    Int half;
    mpz_fdiv_q_2exp(half.get_mpz_t(), b.get_mpz_t(), 1);
    if (r > half)
        r -= b;
    return r;
}

std::int64_t balanced_residue(std::int64_t z, std::int64_t b)
{
    std::int64_t r = z % b;
    if (r < 0)
        r += b;
    if (r > b / 2)
        r -= b;
    return r;
}

Int lcm_of_denominators(std::vector<Rat> const & v)
{
    Int l = 1;
    for (auto const & q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

long floor_log2(Rat const & q)
{
    Int n = abs(q.get_num());
    Int const & d = q.get_den();
    long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    // 2^e is within a factor 2 of |q|; correct by one comparison
    Rat a = abs(q);
    Rat p = pow_rat(Rat(2), e);
    if (a < p)
        --e;
    else if (a >= p * 2)
        ++e;
    return e;
}

bool rational_sqrt(Rat const & q, Rat & root)
{
    if (q < 0)
        return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = Rat(n, d);
    root.canonicalize();
    return true;
}

std::vector<std::pair<Int, unsigned>> factor_integer(Int n)
{
    n = abs(n);
    std::vector<std::pair<Int, unsigned>> out;
    if (n <= 1)
        return out;
    auto strip = [&](Int const & p) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e)
            out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p * p <= n; p += 6) {
        strip(p);
        Int q = p + 2;
        strip(q);
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 2)
            break;
    }
    if (n > 1)
        out.emplace_back(n, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> positive_divisors(Int const & n)
{
    std::vector<Int> divs{1};
    for (auto const & [p, e] : factor_integer(n)) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Int pow_int(Int const & base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(Rat const & base, long e)
{
    unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r(pow_int(base.get_num(), m), pow_int(base.get_den(), m));
    r.canonicalize();
    if (e < 0)
        r = 1 / r;
    return r;
}

} // namespace algpow
