#include "algpow/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <thread>
#include <unordered_map>

#include "algpow/classify.hpp"
#include "algpow/error.hpp"

namespace algpow {

// ---------------------------------------------------------------------------
// residue orbits

std::int64_t ResidueOrbit::at(long n) const
{
    if (n < preperiod())
        return prefix[static_cast<std::size_t>(n)];
    return cycle[static_cast<std::size_t>((n - preperiod()) % period())];
}

namespace {

std::int64_t mod_nonneg(Int const & z, std::int64_t b)
{
    Int r = z % Int(static_cast<long>(b));
    if (r < 0)
        r += static_cast<long>(b);
    return r.get_si();
}

struct VecHash {
    std::size_t operator()(std::vector<std::int64_t> const & v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

} // namespace

ResidueOrbit trace_residue_orbit(FieldElement const & seed, std::int64_t b)
{
    if (b < 1 || b > (std::int64_t(1) << 31))
        throw Error(errc::precondition, "orbit modulus must lie in [1, 2^31]");
    AlgPtr const & base = seed.base;
    if (!base->monic())
        throw Error(errc::not_algebraic_integer, "orbit: the base is not an algebraic integer");
    int d = base->degree();
    TraceSeq ts = power_trace_seq(seed, d - 1);
    std::vector<std::int64_t> r;
    for (int n = 0; n < d; ++n) {
        Rat const & t = ts[static_cast<std::size_t>(n)];
        if (t.get_den() != 1)
            throw Error(errc::non_integral_trace,
                        "trace of seed * a^" + std::to_string(n) + " is not an integer (" + to_string(t) + ")");
        r.push_back(mod_nonneg(t.get_num(), b));
    }
    std::vector<std::int64_t> coef(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        coef[static_cast<std::size_t>(i)] = mod_nonneg(-base->minpoly().coeff(i), b);
    auto next = [&](std::size_t n) {
        __int128 acc = 0;
        for (int i = 0; i < d; ++i)
            acc += static_cast<__int128>(coef[static_cast<std::size_t>(i)]) * r[n + static_cast<std::size_t>(i)];
        return static_cast<std::int64_t>(acc % b);
    };

    // state key: the window (r_n, ..., r_{n+d-1}); packed into one word when b^d fits
    bool packed = true;
    {
        __int128 cap = 1;
        for (int i = 0; i < d && packed; ++i) {
            cap *= b;
            if (cap > (static_cast<__int128>(1) << 62))
                packed = false;
        }
    }
    long mu = 0, p = 0;
    if (packed) {
        std::uint64_t top = 1;
        for (int i = 1; i < d; ++i)
            top *= static_cast<std::uint64_t>(b);
        std::uint64_t key = 0;
        for (int i = d - 1; i >= 0; --i)
            key = key * static_cast<std::uint64_t>(b) + static_cast<std::uint64_t>(r[static_cast<std::size_t>(i)]);
        std::unordered_map<std::uint64_t, long> seen;
        for (std::size_t n = 0;; ++n) {
            auto [it, fresh] = seen.emplace(key, static_cast<long>(n));
            if (!fresh) {
                mu = it->second;
                p = static_cast<long>(n) - mu;
                break;
            }
            std::int64_t t = next(n);
            r.push_back(t);
            key = key / static_cast<std::uint64_t>(b) + static_cast<std::uint64_t>(t) * top;
        }
    } else {
        std::unordered_map<std::vector<std::int64_t>, long, VecHash> seen;
        for (std::size_t n = 0;; ++n) {
            std::vector<std::int64_t> key(r.begin() + static_cast<long>(n), r.begin() + static_cast<long>(n) + d);
            auto [it, fresh] = seen.emplace(std::move(key), static_cast<long>(n));
            if (!fresh) {
                mu = it->second;
                p = static_cast<long>(n) - mu;
                break;
            }
            r.push_back(next(n));
        }
    }
    ResidueOrbit o;
    o.b = b;
    for (long n = 0; n < mu; ++n)
        o.prefix.push_back(balanced_residue(r[static_cast<std::size_t>(n)], b));
    for (long n = mu; n < mu + p; ++n)
        o.cycle.push_back(balanced_residue(r[static_cast<std::size_t>(n)], b));
    return o;
}

// ---------------------------------------------------------------------------
// limit sets

std::pair<Rat, Rat> fold_interval(Rat const & lo, Rat const & hi)
{
    Rat half(1, 2);
    if (hi - lo >= 1)
        return {Rat(0), half};
    auto dist = [](Rat const & x) {
        Rat f = x - Rat(floor_of(x));
        return f <= Rat(1, 2) ? f : Rat(1 - f);
    };
    Rat a = dist(lo), c = dist(hi);
    Rat flo = ceil_of(lo) <= floor_of(hi) ? Rat(0) : std::min(a, c);
    // half-integers k + 1/2 inside [lo, hi]
    bool has_half = ceil_of(Rat(lo - half)) <= floor_of(Rat(hi - half));
    Rat fhi = has_half ? half : std::max(a, c);
    return {flo, fhi};
}

namespace {

void finish_limits(LimitSet & ls)
{
    std::vector<std::pair<Rat, Rat>> f;
    for (auto const & pc : ls.pieces)
        f.emplace_back(pc.folded_lo, pc.folded_hi);
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    ls.folded = f;
    ls.union_set.clear();
    for (auto const & iv : f) {
        if (!ls.union_set.empty() && iv.first <= ls.union_set.back().second)
            ls.union_set.back().second = std::max(ls.union_set.back().second, iv.second);
        else
            ls.union_set.push_back(iv);
    }
    ls.measure = 0;
    for (auto const & iv : ls.union_set)
        ls.measure += iv.second - iv.first;
}

FieldElement derivative_at_generator(AlgPtr const & a)
{
    return FieldElement::from_poly(a, a->rat_minpoly().derivative());
}

} // namespace

std::pair<std::int64_t, long> admissible_denominator(FieldElement const & lambda)
{
    AlgPtr const & a = lambda.base;
    if (!a->monic())
        throw Error(errc::not_algebraic_integer, "the base is not an algebraic integer");
    if (lambda.is_zero())
        throw Error(errc::precondition, "lambda must be nonzero");
    FieldElement z = field_mul(lambda, derivative_at_generator(a));
    Int D = lcm_of_denominators(z.coords);
    if (D > Int("4611686018427387904"))
        throw Error(errc::no_denominator, "denominator bound " + to_string(D) + " too large");
    FieldElement alpha = FieldElement::generator(a);
    for (Int const & b : positive_divisors(D)) {
        auto mm = laurent_module_membership(field_scale(lambda, Rat(b)), alpha);
        if (mm.member)
            return {b.get_si(), mm.k};
    }
    throw Error(errc::no_denominator, "no b dividing " + to_string(D) + " makes b*lambda admissible");
}

LimitSet pv_limit_points(FieldElement const & lambda)
{
    Classification c = classify_number(*lambda.base);
    if (c.kind != NumberKind::PV)
        throw Error(errc::wrong_kind, "pv_limit_points: base is " + to_string(c.kind) + ", not PV");
    auto [b, k] = admissible_denominator(lambda);
    FieldElement seed =
        field_mul(field_scale(lambda, Rat(static_cast<long>(b))), field_pow(FieldElement::generator(lambda.base), k));
    LimitSet ls;
    ls.kind = LimitSet::Kind::points;
    ls.b = b;
    ls.shift = k;
    ls.seed = seed.coords;
    ls.orbit = trace_residue_orbit(seed, b);
    Rat bb(static_cast<long>(b));
    for (auto i : ls.orbit.cycle) {
        LimitPiece pc;
        pc.residue = i;
        pc.radius = RealInterval(Rat(0));
        pc.lo = pc.hi = Rat(static_cast<long>(i)) / bb;
        pc.folded_lo = pc.folded_hi = Rat(std::abs(i)) / bb;
        ls.pieces.push_back(pc);
        ls.points.push_back(pc.folded_lo);
    }
    std::sort(ls.points.begin(), ls.points.end());
    ls.points.erase(std::unique(ls.points.begin(), ls.points.end()), ls.points.end());
    ls.zero_is_limit = ls.points.front() == 0;
    ls.zero_unique = ls.points.size() == 1 && ls.zero_is_limit;
    finish_limits(ls);
    return ls;
}

LimitSet salem_limit_intervals(FieldElement const & lambda, std::int64_t b)
{
    AlgPtr const & a = lambda.base;
    Classification c = classify_number(*a);
    if (c.kind != NumberKind::Salem)
        throw Error(errc::wrong_kind, "salem_limit_intervals: base is " + to_string(c.kind) + ", not Salem");
    if (b < 1)
        throw Error(errc::precondition, "b must be positive");
    int d = a->degree();
    TraceSeq ts = power_trace_seq(lambda, d - 1);
    for (int i = 0; i < d; ++i)
        if (ts[static_cast<std::size_t>(i)].get_den() != 1)
            throw Error(errc::outside_module, "lambda is outside the complementary module (Tr(lambda a^" +
                                                  std::to_string(i) + ") = " + to_string(ts[static_cast<std::size_t>(i)]) +
                                                  ")");
    LimitSet ls;
    ls.kind = LimitSet::Kind::intervals;
    ls.b = b;
    ls.seed = lambda.coords;
    ls.orbit = trace_residue_orbit(lambda, b);
    if (ls.orbit.preperiod() != 0)
        throw Error(errc::degenerate_input, "orbit of a unit is not purely periodic");

    FieldElement alpha = FieldElement::generator(a);
    FieldElement alpha_inv = field_inv(alpha);
    Rat bb(static_cast<long>(b));
    FieldElement mu = lambda;
    long const bits = 128;
    for (auto i : ls.orbit.cycle) {
        // nu = mu(a) mu(1/a); on the unit circle conj(a_j) = 1/a_j, so
        // |sigma_j(mu)|^2 = sigma_j(nu)
        FieldElement mu_bar = FieldElement::rational(a, Rat(0));
        for (int k = d - 1; k >= 0; --k)
            mu_bar = field_add(field_mul(mu_bar, alpha_inv), FieldElement::rational(a, mu.coords[static_cast<std::size_t>(k)]));
        FieldElement nu = field_mul(mu, mu_bar);
        LimitPiece pc;
        pc.residue = i;
        Rat count(static_cast<long>(c.on.size()));
        Rat root;
        if (nu.is_rational() && rational_sqrt(nu.coords[0], root)) {
            pc.radius = RealInterval(Rat(count * root / bb));
            pc.radius_exact = true;
        } else if (nu.is_rational()) {
            RealInterval s = sqrt(RealInterval(nu.coords[0]), bits);
            pc.radius = RealInterval(Rat(s.lo * count / bb), Rat(s.hi * count / bb));
            pc.radius_exact = false;
        } else {
            RealInterval sum(Rat(0));
            for (auto j : c.on)
                sum = sum + modulus(embed_element(mu, j, bits), bits);
            pc.radius = RealInterval(Rat(sum.lo / bb), Rat(sum.hi / bb));
            pc.radius_exact = false;
        }
        Rat centre = Rat(static_cast<long>(i)) / bb;
        pc.lo = centre - pc.radius.hi;
        pc.hi = centre + pc.radius.hi;
        auto f = fold_interval(pc.lo, pc.hi);
        pc.folded_lo = f.first;
        pc.folded_hi = f.second;
        ls.pieces.push_back(pc);
        mu = field_mul(mu, alpha);
    }
    for (auto const & pc : ls.pieces)
        if (pc.folded_lo == 0)
            ls.zero_is_limit = true;
    finish_limits(ls);
    return ls;
}

// ---------------------------------------------------------------------------
// scatter

namespace {

double log2_rat(Rat const & q)
{
    long e = floor_log2(q);
    Rat m = abs(q);
    if (e >= 0)
        mpq_div_2exp(m.get_mpq_t(), m.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_mul_2exp(m.get_mpq_t(), m.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return static_cast<double>(e) + std::log2(m.get_d());
}

struct FixedInterval {
    Int lo, hi; // value * 2^F
};

FixedInterval fmul(FixedInterval const & x, FixedInterval const & y, unsigned long F)
{
    FixedInterval r;
    r.lo = x.lo * y.lo;
    r.hi = x.hi * y.hi;
    mpz_fdiv_q_2exp(r.lo.get_mpz_t(), r.lo.get_mpz_t(), F);
    mpz_cdiv_q_2exp(r.hi.get_mpz_t(), r.hi.get_mpz_t(), F);
    return r;
}

Int scaled_floor(Rat const & q, unsigned long F)
{
    Rat s = q;
    mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), F);
    return floor_of(s);
}

Int scaled_ceil(Rat const & q, unsigned long F)
{
    Rat s = q;
    mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), F);
    return ceil_of(s);
}

ScatterEntry make_entry(long n, FixedInterval const & x, unsigned long F, long g)
{
    Int k = x.lo;
    mpz_fdiv_q_2exp(k.get_mpz_t(), k.get_mpz_t(), F);
    Int shift = k;
    mpz_mul_2exp(shift.get_mpz_t(), shift.get_mpz_t(), F);
    Rat lo(Int(x.lo - shift)), hi(Int(x.hi - shift));
    mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), F);
    mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), F);
    RealInterval dist = dist_to_nearest_integer(RealInterval(lo, hi));
    Rat mid = dist.mid();
    Rat scale = pow_rat(Rat(2), g + 8);
    Rat v(round_nearest(mid * scale), scale.get_num());
    v.canonicalize();
    ScatterEntry e;
    e.n = n;
    e.value = v;
    e.error = dist.radius() + abs(Rat(v - mid));
    return e;
}

} // namespace

ScatterSeries scatter_series(FieldElement const & lambda, long n_max, long guard_bits, unsigned threads)
{
    AlgPtr const & a = lambda.base;
    if (n_max < 0)
        throw Error(errc::precondition, "scatter: n_max must be >= 0");
    if (!a->is_real())
        throw Error(errc::precondition, "scatter: the designated root is not real");
    long g = std::max<long>(guard_bits, 64);
    RealInterval A = abs(a->real_value(64));
    if (A.lo <= 1) {
        A = abs(a->real_value(256));
        if (A.lo <= 1)
            throw Error(errc::precondition, "scatter: |a| must exceed 1");
    }
    long la = floor_log2(A.hi) + 1;
    RealInterval L0 = abs(eval(lambda.as_poly(), a->real_value(64), 128));
    long ll = L0.hi > 0 ? std::max<long>(floor_log2(L0.hi) + 1, 0) : 0;
    long nbits = static_cast<long>(mpz_sizeinbase(Int(n_max + 2).get_mpz_t(), 2));
    long F = n_max * la + ll + g + 2 * nbits + 16;
    long cap = precision_cap();
    if (F > cap) {
        long n_bad = (cap - ll - g - 2 * nbits - 16) / std::max<long>(la, 1) + 1;
        throw Error(errc::precision_cap,
                    "scatter: working precision " + std::to_string(F) + " exceeds the cap " + std::to_string(cap) +
                        " (first offending n = " + std::to_string(std::max<long>(n_bad, 0)) + ")");
    }
    unsigned long const uF = static_cast<unsigned long>(F);

    RealInterval Av = a->real_value(F + la + 16);
    bool negative = Av.hi < 0;
    if (negative)
        Av = -Av;
    RealInterval Lv = eval(lambda.as_poly(), negative ? RealInterval(-Av) : Av, F + la + ll + 16);
    Lv = abs(Lv);
    FixedInterval alpha{scaled_floor(Av.lo, uF), scaled_ceil(Av.hi, uF)};
    FixedInterval lam{scaled_floor(Lv.lo, uF), scaled_ceil(Lv.hi, uF)};

    ScatterSeries s;
    s.n_max = n_max;
    s.guard_bits = g;
    s.working_bits = F;
    s.entries.resize(static_cast<std::size_t>(n_max) + 1);

    unsigned T = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    T = static_cast<unsigned>(std::min<long>(T, std::max<long>(1, (n_max + 1) / 64)));
    std::vector<std::exception_ptr> errors(T);
    Rat const max_err = pow_rat(Rat(2), -(g / 2));

    auto work = [&](unsigned t) {
        try {
            long n0 = (n_max + 1) * static_cast<long>(t) / static_cast<long>(T);
            long n1 = (n_max + 1) * static_cast<long>(t + 1) / static_cast<long>(T);
            Int one = 1;
            mpz_mul_2exp(one.get_mpz_t(), one.get_mpz_t(), uF);
            FixedInterval pw{one, one}, base = alpha;
            for (unsigned long e = static_cast<unsigned long>(n0); e; e >>= 1u) {
                if (e & 1u)
                    pw = fmul(pw, base, uF);
                if (e > 1)
                    base = fmul(base, base, uF);
            }
            FixedInterval x = fmul(lam, pw, uF);
            for (long n = n0; n < n1; ++n) {
                ScatterEntry e = make_entry(n, x, uF, g);
                if (e.error > max_err)
                    throw Error(errc::precision_cap, "scatter: error bound exceeded at n = " + std::to_string(n));
                s.entries[static_cast<std::size_t>(n)] = std::move(e);
                x = fmul(x, alpha, uF);
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (T == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < T; ++t)
            pool.emplace_back(work, t);
        for (auto & th : pool)
            th.join();
    }
    for (auto & e : errors)
        if (e)
            std::rethrow_exception(e);
    s.decay = fit_decay(s, std::max<long>(1, std::min<long>(20, n_max / 2)));
    return s;
}

DecayFit fit_decay_class(ScatterSeries const & s, long modulus, long residue, long n_from)
{
    DecayFit f;
    f.modulus = modulus;
    f.residue = residue;
    f.n_from = n_from;
    double worst = -INFINITY;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long m = 0;
    for (auto const & e : s.entries) {
        if (e.n < std::max<long>(n_from, 1) || e.n % modulus != residue)
            continue;
        ++f.count;
        Rat up = e.value + e.error;
        double l = up == 0 ? -INFINITY : log2_rat(up) / static_cast<double>(e.n);
        worst = std::max(worst, l);
        if (e.value > 2 * e.error) {
            double y = log2_rat(e.value);
            double x = static_cast<double>(e.n);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++m;
        }
    }
    f.c_bound = f.count ? std::exp2(worst) : 1.0;
    double den = static_cast<double>(m) * sxx - sx * sx;
    f.c_fit = (m >= 2 && den > 0) ? std::exp2((static_cast<double>(m) * sxy - sx * sy) / den) : f.c_bound;
    // c_bound < 1 alone holds for any bounded sequence; also demand the tail be small
    std::vector<Rat const *> cls;
    for (auto const & e : s.entries)
        if (e.n >= std::max<long>(n_from, 1) && e.n % modulus == residue)
            cls.push_back(&e.value);
    bool tail_small = !cls.empty();
    Rat const tiny(1, 1024);
    for (std::size_t i = cls.size() - cls.size() / 4 - (cls.size() % 4 ? 1 : 0); i < cls.size(); ++i)
        if (*cls[i] + 0 > tiny)
            tail_small = false;
    f.decays = f.count >= 3 && f.c_bound < 1 && f.c_fit < 1 && tail_small;
    return f;
}

DecayFit fit_decay(ScatterSeries const & s, long n_from, long max_modulus)
{
    std::optional<DecayFit> best;
    for (long mod = 1; mod <= max_modulus; ++mod)
        for (long r = 0; r < mod; ++r) {
            DecayFit f = fit_decay_class(s, mod, r, n_from);
            if (f.count < 3)
                continue;
            if (f.decays)
                return f;
            if (!best || f.c_bound < best->c_bound)
                best = f;
        }
    return best.value_or(fit_decay_class(s, 1, 0, n_from));
}

CoverageReport coverage_report(ScatterSeries const & s, LimitSet const & limits, long n_min, Rat const & tol)
{
    CoverageReport r;
    r.n_min = n_min;
    r.tol = tol;
    r.measure = limits.measure;
    r.hits.assign(limits.folded.size(), 0);
    for (auto const & e : s.entries) {
        if (e.n < n_min)
            continue;
        ++r.considered;
        Rat lo = e.value - e.error, hi = e.value + e.error;
        bool in = false;
        for (auto const & u : limits.union_set)
            if (lo >= u.first - tol && hi <= u.second + tol)
                in = true;
        if (in)
            ++r.inside;
        for (std::size_t k = 0; k < limits.folded.size(); ++k)
            if (hi >= limits.folded[k].first - tol && lo <= limits.folded[k].second + tol)
                ++r.hits[k];
    }
    if (r.considered)
        r.fraction = Rat(r.inside, r.considered);
    if (r.fraction)
        r.fraction->canonicalize();
    return r;
}

std::string decimal_string(Rat const & q, int places)
{
    Rat scale = pow_rat(Rat(10), places);
    Int m = round_nearest(Rat(abs(q) * scale));
    std::string digits = m.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(digits.size())), '0');
    std::string out = (q < 0 && m != 0) ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0)
        out += "." + digits.substr(digits.size() - static_cast<std::size_t>(places));
    return out;
}

void write_scatter_csv(ScatterSeries const & s, std::ostream & out)
{
    out << "n,value,error\n";
    Rat scale = pow_rat(Rat(10), 12);
    for (auto const & e : s.entries) {
        std::string v = decimal_string(e.value, 12);
        Rat printed(round_nearest(Rat(e.value * scale)), scale.get_num());
        printed.canonicalize();
        Rat err = e.error + abs(Rat(printed - e.value));
        Rat err_up(ceil_of(Rat(err * scale)), scale.get_num());
        err_up.canonicalize();
        out << e.n << ',' << v << ',' << decimal_string(err_up, 12) << '\n';
    }
}

} // namespace algpow
