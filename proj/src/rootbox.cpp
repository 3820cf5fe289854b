#include "algpow/rootbox.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <string>

#include "algpow/error.hpp"
#include "algpow/exactalg.hpp"

namespace algpow {

long precision_cap()
{
    if (char const * env = std::getenv("ALGPOW_PRECISION_CAP")) {
        char * end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 64)
            return v;
    }
    return 16384;
}

ComplexBox RootBox::box() const
{
    return {RealInterval(Rat(re - radius), Rat(re + radius)),
            real ? RealInterval(Rat(0)) : RealInterval(Rat(im - radius), Rat(im + radius))};
}

RealInterval RootBox::real_interval() const { return {Rat(re - radius), Rat(re + radius)}; }

std::optional<std::size_t> RootBoxSet::conjugate_of(std::size_t i) const
{
    auto const & b = boxes[i];
    if (b.real)
        return i;
    for (std::size_t j = 0; j < boxes.size(); ++j)
        if (j != i && boxes[j].re == b.re && boxes[j].im == -b.im)
            return j;
    return std::nullopt;
}

std::size_t RootBoxSet::real_count() const
{
    return static_cast<std::size_t>(std::count_if(boxes.begin(), boxes.end(), [](auto const & b) { return b.real; }));
}

namespace {

using CLD = std::complex<long double>;

struct Cx {
    Rat re, im;
};

Cx add(Cx const & a, Cx const & b) { return {a.re + b.re, a.im + b.im}; }
Cx sub(Cx const & a, Cx const & b) { return {a.re - b.re, a.im - b.im}; }
Cx mul(Cx const & a, Cx const & b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Rat norm(Cx const & a) { return a.re * a.re + a.im * a.im; }
Cx div(Cx const & a, Cx const & b)
{
    Rat n = norm(b);
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
bool is_zero(Cx const & a) { return a.re == 0 && a.im == 0; }

Cx round_cx(Cx const & z, long bits)
{
    // common absolute grid relative to the larger component
    Rat m = std::max(abs(z.re), abs(z.im));
    if (m == 0)
        return z;
    long e = floor_log2(m);
    auto rnd = [&](Rat const & v) {
        if (v == 0)
            return v;
        long ev = floor_log2(v);
        return round_dyadic(v, std::max<long>(bits - (e - ev), 2), false);
    };
    return {rnd(z.re), rnd(z.im)};
}

// p(z) and p'(z) together, with intermediate rounding to `bits`
void horner2(IntPoly const & p, Cx const & z, Cx & val, Cx & der, long bits)
{
    int d = p.degree();
    val = {Rat(p.lead()), Rat(0)};
    der = {Rat(0), Rat(0)};
    for (int i = d - 1; i >= 0; --i) {
        der = round_cx(add(mul(der, z), val), bits);
        val = round_cx(add(mul(val, z), Cx{Rat(p.coeff(i)), Rat(0)}), bits);
    }
}

Cx eval_exact(IntPoly const & p, Cx const & z)
{
    Cx acc{Rat(p.lead()), Rat(0)};
    for (int i = p.degree() - 1; i >= 0; --i)
        acc = add(mul(acc, z), Cx{Rat(p.coeff(i)), Rat(0)});
    return acc;
}

std::vector<CLD> aberth_long_double(IntPoly const & p)
{
    int d = p.degree();
    std::vector<long double> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        c[static_cast<std::size_t>(i)] = static_cast<long double>(p.coeff(i).get_d());
    long double lead = c.back();
    long double bound = 0;
    for (int k = 1; k <= d; ++k) {
        long double v = std::fabs(c[static_cast<std::size_t>(d - k)] / lead);
        if (v > 0)
            bound = std::max(bound, std::pow(v, 1.0L / k));
    }
    if (!(bound > 0) || !std::isfinite(bound))
        bound = 1;
    std::vector<CLD> z(static_cast<std::size_t>(d));
    long double const two_pi = 6.283185307179586476925286766559L;
    for (int k = 0; k < d; ++k)
        z[static_cast<std::size_t>(k)] =
            std::polar(bound, two_pi * k / d + 0.4L) + CLD(-c[static_cast<std::size_t>(d - 1)] / (d * lead) * 0, 0);
    for (int iter = 0; iter < 800; ++iter) {
        bool done = true;
        for (int i = 0; i < d; ++i) {
            CLD zi = z[static_cast<std::size_t>(i)];
            CLD v = c.back(), dv = 0;
            for (int j = d - 1; j >= 0; --j) {
                dv = dv * zi + v;
                v = v * zi + c[static_cast<std::size_t>(j)];
            }
            if (v == CLD(0))
                continue;
            CLD ratio = (dv == CLD(0)) ? CLD(1e-3L, 1e-3L) : v / dv;
            CLD s = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) {
                    CLD diff = zi - z[static_cast<std::size_t>(j)];
                    if (diff == CLD(0))
                        diff = CLD(1e-20L, 1e-20L);
                    s += CLD(1) / diff;
                }
            CLD w = ratio / (CLD(1) - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                continue;
            z[static_cast<std::size_t>(i)] = zi - w;
            if (std::abs(w) > 1e-17L * (std::abs(zi) + 1e-30L))
                done = false;
        }
        if (done)
            break;
    }
    return z;
}

void aberth_exact(IntPoly const & p, std::vector<Cx> & z, long bits)
{
    std::size_t d = z.size();
    long work = bits + 32;
    for (int iter = 0; iter < 80; ++iter) {
        bool done = true;
        for (std::size_t i = 0; i < d; ++i) {
            Cx v, dv;
            horner2(p, z[i], v, dv, work);
            if (is_zero(v))
                continue;
            if (is_zero(dv)) {
                z[i] = round_cx(add(z[i], Cx{Rat(1, 1 << 20), Rat(1, 1 << 21)}), bits);
                done = false;
                continue;
            }
            Cx ratio = div(v, dv);
            Cx s{Rat(0), Rat(0)};
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) {
                    Cx diff = sub(z[i], z[j]);
                    if (is_zero(diff))
                        diff = {Rat(1, 1 << 30), Rat(1, 1 << 29)};
                    s = round_cx(add(s, div(Cx{Rat(1), Rat(0)}, diff)), work);
                }
            Cx denom = sub(Cx{Rat(1), Rat(0)}, mul(ratio, s));
            if (is_zero(denom))
                continue;
            Cx w = round_cx(div(ratio, denom), work);
            Cx zn = round_cx(sub(z[i], w), bits);
            Rat nw = norm(w);
            Rat nz = norm(z[i]);
            // converged when |w| < 2^-(bits-4) (|z| + 1)
            if (nw != 0) {
                long lw = floor_log2(nw);
                long lz = floor_log2(Rat(nz + 1));
                if (lw > lz - 2 * (bits - 4))
                    done = false;
            }
            z[i] = std::move(zn);
        }
        if (done)
            break;
    }
}

// Force the approximation set to be closed under conjugation with exactly
// `nreal` real members.
bool symmetrize(std::vector<Cx> & z, int nreal)
{
    std::size_t d = z.size();
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return abs(z[a].im) < abs(z[b].im); });
    std::vector<std::size_t> up, down;
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t i = idx[k];
        if (static_cast<int>(k) < nreal)
            z[i].im = 0;
        else if (z[i].im > 0)
            up.push_back(i);
        else if (z[i].im < 0)
            down.push_back(i);
        else
            return false;
    }
    if (up.size() != down.size())
        return false;
    std::vector<char> used(down.size(), 0);
    for (std::size_t u : up) {
        std::size_t best = down.size();
        Rat best_dist;
        for (std::size_t k = 0; k < down.size(); ++k) {
            if (used[k])
                continue;
            Cx diff{z[u].re - z[down[k]].re, z[u].im + z[down[k]].im};
            Rat dist = norm(diff);
            if (best == down.size() || dist < best_dist) {
                best = k;
                best_dist = dist;
            }
        }
        if (best == down.size())
            return false;
        used[best] = 1;
        std::size_t v = down[best];
        Rat re = (z[u].re + z[v].re) / 2;
        Rat im = (z[u].im - z[v].im) / 2;
        z[u] = {re, im};
        z[v] = {re, Rat(-im)};
    }
    return true;
}

Rat sqrt_upper(Rat const & q, long bits)
{
    if (q == 0)
        return 0;
    return sqrt(RealInterval(q), bits).hi;
}

// Smith's inclusion discs: radius n |p(z_i)| / |lc prod_{j != i} (z_i - z_j)|.
// Pairwise disjoint discs each hold exactly one root.
bool certify(IntPoly const & p, std::vector<Cx> const & z, long bits, std::vector<Rat> & radius)
{
    std::size_t d = z.size();
    radius.assign(d, Rat(0));
    Rat n2 = Rat(static_cast<long>(d) * static_cast<long>(d));
    for (std::size_t i = 0; i < d; ++i) {
        Cx v = eval_exact(p, z[i]);
        if (is_zero(v))
            continue;
        Cx den{Rat(p.lead()), Rat(0)};
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) {
                Cx diff = sub(z[i], z[j]);
                if (is_zero(diff))
                    return false;
                den = mul(den, diff);
            }
        Rat r2 = n2 * norm(v) / norm(den);
        radius[i] = sqrt_upper(round_dyadic(r2, 64, true), 64);
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Rat s = radius[i] + radius[j];
            Cx diff = sub(z[i], z[j]);
            if (norm(diff) <= s * s)
                return false;
            if (abs(diff.re) <= s && abs(diff.im) <= s)
                return false;
        }
    (void)bits;
    return true;
}

void sort_boxes(std::vector<RootBox> & boxes)
{
    std::sort(boxes.begin(), boxes.end(), [](RootBox const & a, RootBox const & b) {
        if (a.re != b.re)
            return a.re < b.re;
        Rat aa = abs(a.im), ab = abs(b.im);
        if (aa != ab)
            return aa < ab;
        return a.im < b.im;
    });
}

} // namespace

RootBoxSet isolate_roots(IntPoly const & p, long target_bits, long start_bits)
{
    int d = p.degree();
    if (d < 1)
        throw Error(errc::precondition, "isolate_roots: degree must be at least 1");
    if (!is_squarefree(to_rat(p)))
        throw Error(errc::precondition, "isolate_roots: polynomial must be squarefree");

    RootBoxSet out;
    out.poly = p;
    if (d == 1) {
        Rat r(-p.coeff(0), p.coeff(1));
        r.canonicalize();
        out.boxes.push_back({r, Rat(0), Rat(0), true});
        out.precision = start_bits;
        return out;
    }

    int nreal = count_real_roots(to_rat(p));
    std::vector<Cx> z;
    for (auto const & w : aberth_long_double(p)) {
        Rat re = std::isfinite(w.real()) ? Rat(static_cast<double>(w.real())) : Rat(0);
        Rat im = std::isfinite(w.imag()) ? Rat(static_cast<double>(w.imag())) : Rat(1);
        z.push_back({re, im});
    }

    long const cap = precision_cap();
    long bits = std::max<long>(start_bits, 16);
    Rat const target_width = pow_rat(Rat(2), -target_bits);
    std::string last_failure = "not attempted";
    while (true) {
        aberth_exact(p, z, bits);
        std::vector<Cx> sym = z;
        std::vector<Rat> radius;
        if (!symmetrize(sym, nreal)) {
            last_failure = "approximations not closed under conjugation";
        } else if (!certify(p, sym, bits, radius)) {
            last_failure = "inclusion discs overlap";
        } else {
            bool narrow = std::all_of(radius.begin(), radius.end(),
                                      [&](Rat const & r) { return 2 * r <= target_width; });
            if (narrow) {
                for (std::size_t i = 0; i < sym.size(); ++i)
                    out.boxes.push_back({sym[i].re, sym[i].im, radius[i], sym[i].im == 0});
                sort_boxes(out.boxes);
                out.precision = bits;
                return out;
            }
            last_failure = "boxes wider than requested";
        }
        if (bits >= cap)
            throw Error(errc::precision_cap, "isolate_roots: validation failed at " + std::to_string(bits) +
                                                 " bits (" + last_failure + ") for " + to_string(p));
        bits = std::min(cap, bits * 2);
    }
}

RootBoxSet refine(RootBoxSet const & set, long target_bits)
{
    long tb = target_bits;
    while (true) {
        RootBoxSet fine = isolate_roots(set.poly, tb, std::max<long>(set.precision, default_start_bits));
        RootBoxSet out;
        out.poly = set.poly;
        out.precision = fine.precision;
        bool ok = true;
        for (auto const & old : set.boxes) {
            int hits = 0;
            RootBox pick;
            for (auto const & nb : fine.boxes) {
                if (nb.real != old.real || nb.radius > old.radius)
                    continue;
                Rat gap = old.radius - nb.radius;
                Rat dre = nb.re - old.re, dim = nb.im - old.im;
                if (dre * dre + dim * dim <= gap * gap) {
                    ++hits;
                    pick = nb;
                }
            }
            if (hits != 1) {
                ok = false;
                break;
            }
            out.boxes.push_back(pick);
        }
        if (ok)
            return out;
        if (tb >= precision_cap())
            throw Error(errc::precision_cap, "refine: could not match refined boxes");
        tb = std::min(precision_cap(), tb * 2 + 16);
    }
}

RealInterval refine_real_root(IntPoly const & p, RealInterval iv, long bits)
{
    RatPoly rp = to_rat(p);
    RatPoly dp = rp.derivative();
    Rat const target = pow_rat(Rat(2), -bits);
    if (iv.is_point())
        return iv;
    int slo = sgn(rp.eval(iv.lo));
    int shi = sgn(rp.eval(iv.hi));
    if (slo == 0)
        return RealInterval(iv.lo);
    if (shi == 0)
        return RealInterval(iv.hi);
    if (slo == shi)
        throw Error(errc::precondition, "refine_real_root: no sign change on the isolating interval");

    // returns false when the midpoint is the root
    auto bisect = [&](RealInterval & v) {
        Rat m = v.mid();
        int sm = sgn(rp.eval(m));
        if (sm == 0) {
            v = RealInterval(m);
            return false;
        }
        if (sm == slo)
            v.lo = m;
        else
            v.hi = m;
        return true;
    };

    Rat const coarse = std::max(target, pow_rat(Rat(2), -64));
    while (iv.width() > coarse)
        if (!bisect(iv))
            return iv;
    if (iv.width() <= target)
        return iv;

    // Newton from the midpoint, doubling the working precision
    Rat x = iv.mid();
    for (long prec = 64;;) {
        prec = std::min(2 * prec, bits + 32);
        Rat fx = rp.eval(x), dfx = dp.eval(x);
        if (dfx == 0)
            break;
        Rat nx = x - fx / dfx;
        long e = nx == 0 ? 0 : std::max<long>(floor_log2(nx), 0);
        x = round_dyadic(nx, prec + e + 16, false);
        if (prec >= bits + 32)
            break;
    }
    Rat delta = target / 4;
    Rat a = x - delta, b = x + delta;
    if (iv.contains(a) && iv.contains(b)) {
        int sa = sgn(rp.eval(a)), sb = sgn(rp.eval(b));
        if (sa == 0)
            return RealInterval(a);
        if (sb == 0)
            return RealInterval(b);
        if (sa == slo && sb == shi)
            return RealInterval(a, b);
    }
    while (iv.width() > target)
        if (!bisect(iv))
            return iv;
    return iv;
}

UnitModulusReport unit_modulus_count(IntPoly const & p, RootBoxSet const * roots)
{
    if (p.degree() < 1)
        throw Error(errc::precondition, "unit_modulus_count: degree must be at least 1");
    if (p.coeff(0) == 0)
        throw Error(errc::precondition, "unit_modulus_count: p(0) must be nonzero");

    UnitModulusReport rep;
    RatPoly rp = to_rat(p);
    RatPoly g = poly_gcd(rp, rp.reversed());
    rep.reciprocal_gcd = primitive_part(g);

    int count = 0;
    if (g.degree() >= 1) {
        RatPoly h = g;
        RatPoly xm1{Rat(-1), Rat(1)}, xp1{Rat(1), Rat(1)};
        if (h.eval(Rat(1)) == 0) {
            ++count;
            h = exact_quotient(h, xm1);
        }
        if (h.eval(Rat(-1)) == 0) {
            ++count;
            h = exact_quotient(h, xp1);
        }
        h = monic(h);
        if (h.degree() >= 2) {
            int k = h.degree() / 2;
            if (h.degree() % 2 != 0)
                throw Error(errc::degenerate_input, "unit_modulus_count: reciprocal part has odd degree");
            // V_0 = 2, V_1 = y, V_{j+1} = y V_j - V_{j-1};  x^j + x^-j = V_j(x + 1/x)
            std::vector<RatPoly> V{RatPoly::constant(Rat(2)), RatPoly::x()};
            for (int j = 2; j <= k; ++j)
                V.push_back(RatPoly::x() * V[static_cast<std::size_t>(j - 1)] - V[static_cast<std::size_t>(j - 2)]);
            RatPoly T = RatPoly::constant(h.coeff(k));
            for (int j = 1; j <= k; ++j) {
                if (h.coeff(k + j) != h.coeff(k - j))
                    throw Error(errc::degenerate_input, "unit_modulus_count: reciprocal part is not palindromic");
                T += V[static_cast<std::size_t>(j)] * h.coeff(k + j);
            }
            rep.chebyshev_transform = T;
            count += 2 * count_real_roots_in(T, Rat(-2), Rat(2));
        }
    }
    rep.count = count;

    RootBoxSet set = roots ? *roots : isolate_roots(p, default_start_bits);
    long tb = default_start_bits;
    while (true) {
        std::vector<int> side(set.size(), 0);
        int ambiguous = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            RealInterval n = norm_sq(set.boxes[i].box());
            if (n.hi < 1)
                side[i] = -1;
            else if (n.lo > 1)
                side[i] = +1;
            else
                ++ambiguous;
        }
        if (ambiguous == count) {
            rep.side = side;
            rep.on_circle.clear();
            bool first = true;
            for (std::size_t i = 0; i < set.size(); ++i) {
                if (side[i] == 0) {
                    rep.on_circle.push_back(i);
                    continue;
                }
                RealInterval n = norm_sq(set.boxes[i].box());
                // ||z| - 1| >= |(|z|^2 - 1)| / (|z|^2 + 1)
                Rat m = side[i] < 0 ? Rat((1 - n.hi) / 2) : Rat((n.lo - 1) / (n.lo + 1));
                if (first || m < rep.off_circle_margin)
                    rep.off_circle_margin = m;
                first = false;
            }
            rep.roots = set;
            return rep;
        }
        if (ambiguous < count)
            throw Error(errc::degenerate_input, "unit_modulus_count: box moduli inconsistent with exact count");
        tb = tb * 2;
        if (tb > precision_cap())
            throw Error(errc::precision_cap, "unit_modulus_count: could not separate roots from the unit circle");
        set = refine(set, tb);
    }
}

} // namespace algpow
