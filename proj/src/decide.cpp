#include "algpow/decide.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "algpow/error.hpp"
#include "algpow/exactalg.hpp"
#include "algpow/spectra.hpp"

namespace algpow {

namespace {

long lcm_l(long a, long b) { return std::lcm(a, b); }

bool box_contains_zero(ComplexBox const & z) { return z.re.contains_zero() && z.im.contains_zero(); }

std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

RatioUnityReport ratio_unity_orders(IntPoly const & p)
{
    int d = p.degree();
    if (d < 1 || p.coeff(0) == 0)
        throw Error(errc::precondition, "ratio_unity_orders: need a polynomial with p(0) != 0");
    RatioUnityReport r;
    RatPoly rp = to_rat(p);
    RatPoly q = resultant(rp, PolyXY::scaled_product(rp));
    r.ratio_poly = primitive_part(q);

    unsigned long const d2 = static_cast<unsigned long>(d) * static_cast<unsigned long>(d);
    // phi(m) >= sqrt(m/2), so m <= 2 d^4 covers every m with phi(m) <= d^2
    unsigned long const m_max = 2 * d2 * d2;
    for (unsigned long m = 1; m <= m_max; ++m) {
        if (euler_phi(m) > d2)
            continue;
        RatPoly g = poly_gcd(q, to_rat(cyclotomic(static_cast<unsigned>(m))));
        if (g.degree() >= 1)
            r.orders.push_back(static_cast<long>(m));
    }

    std::vector<long> nontrivial;
    for (long m : r.orders)
        if (m > 1)
            nontrivial.push_back(m);

    UnitModulusReport u = unit_modulus_count(p);
    RootBoxSet roots = u.roots;
    std::size_t n = roots.size();

    if (!nontrivial.empty()) {
        // attribute orders to pairs numerically
        std::vector<RatioPair> found;
        for (long bits = 64;; bits *= 2) {
            roots = refine(u.roots, bits);
            found.clear();
            bool ambiguous = false;
            for (std::size_t i = 0; i < n && !ambiguous; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j)
                        continue;
                    ComplexBox ratio = round_outward(roots.boxes[i].box() / roots.boxes[j].box(), bits + 16);
                    if (!norm_sq(ratio).contains(Rat(1)))
                        continue;
                    std::vector<long> hits;
                    for (long m : nontrivial)
                        if (box_contains_zero(eval(to_rat(cyclotomic(static_cast<unsigned>(m))), ratio, bits + 16)))
                            hits.push_back(m);
                    if (hits.size() > 1) {
                        ambiguous = true;
                        break;
                    }
                    if (hits.size() == 1)
                        found.push_back({i, j, hits[0]});
                }
            bool all_used = true;
            for (long m : nontrivial)
                if (std::none_of(found.begin(), found.end(), [m](auto const & pr) { return pr.order == m; }))
                    all_used = false;
            if (!ambiguous && all_used)
                break;
            if (bits >= 2048)
                throw Error(errc::precision_cap, "ratio_unity_orders: could not attribute root-of-unity ratios");
        }
        r.pairs = found;
    }

    r.s_candidate = 1;
    r.h_lower = 2;
    for (long m : r.orders)
        r.h_lower = lcm_l(r.h_lower, m);
    for (auto const & pr : r.pairs)
        if (u.side[pr.i] > 0 && u.side[pr.j] > 0)
            r.s_candidate = lcm_l(r.s_candidate, pr.order);
    return r;
}

AlgPtr power_number(AlgPtr const & a, long s)
{
    if (s < 1)
        throw Error(errc::precondition, "power_number: s must be positive");
    if (!a->is_real())
        throw Error(errc::precondition, "power_number: designated root must be real");
    RatPoly res = resultant(a->rat_minpoly(), PolyXY::x_minus_y_power(static_cast<unsigned>(s)));
    IntPoly q = primitive_part(squarefree_part(res));
    if (q.lead() < 0)
        q = q * Int(-1);
    AlgPtr base = AlgebraicNumber::from_known_minpoly(q);
    if (q.degree() == 1)
        return base;
    for (long bits = 64;; bits *= 2) {
        RealInterval x = a->real_value(bits);
        RealInterval v(Rat(1));
        for (long e = 0; e < s; ++e)
            v = round_outward(v * x, bits + 32);
        RootBoxSet rs = refine(base->roots(), bits);
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < rs.size(); ++i)
            if (rs.boxes[i].real && overlaps(rs.boxes[i].real_interval(), v))
                hits.push_back(i);
        if (hits.size() == 1)
            return AlgebraicNumber::with_index(base, hits[0]);
        if (bits > precision_cap())
            throw Error(errc::precision_cap, "power_number: cannot separate the root matching a^s");
    }
}

PvPowerResult find_pv_power(AlgPtr const & a)
{
    PvPowerResult res;
    if (!a->is_real())
        throw Error(errc::precondition, "find_pv_power: designated root must be real");
    Classification c = classify_number(*a);
    if (!c.algebraic_integer) {
        res.reason_code = "not_algebraic_integer";
        res.reason = "not an algebraic integer";
        return res;
    }
    if (std::find(c.outside.begin(), c.outside.end(), c.designated) == c.outside.end())
        throw Error(errc::precondition, "find_pv_power: need |a| > 1");
    if (!c.on.empty()) {
        res.reason_code = "has_unit_modulus_conjugates";
        res.reason = "has unit-modulus conjugates";
        return res;
    }
    long s = 1;
    if (c.outside.size() > 1) {
        RatioUnityReport r = ratio_unity_orders(a->minpoly());
        for (std::size_t i : c.outside) {
            if (i == c.designated)
                continue;
            auto it = std::find_if(r.pairs.begin(), r.pairs.end(),
                                   [&](auto const & pr) { return pr.i == i && pr.j == c.designated; });
            if (it == r.pairs.end()) {
                res.reason_code = "non_root_of_unity_expanding_ratios";
                res.reason = "multiple expanding conjugates with non-root-of-unity ratios";
                return res;
            }
        }
        s = r.s_candidate;
    }
    res.s = s;
    AlgPtr pw = s == 1 ? a : power_number(a, s);
    res.power_minpoly = pw->minpoly();
    res.power_root_index = pw->root_index();
    NumberKind k = classify_number(*pw).kind;
    res.power_kind = k;
    if (k == NumberKind::PV) {
        res.success = true;
    } else {
        res.reason_code = "power_not_pv";
        res.reason = "power not PV (a^" + std::to_string(s) + " is " + to_string(k) + ")";
    }
    return res;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::yes:
        return "yes";
    case Verdict::no:
        return "no";
    case Verdict::unknown:
        return "unknown";
    }
    return "unknown";
}

Verdict verdict_from_string(std::string const & s)
{
    if (s == "yes")
        return Verdict::yes;
    if (s == "no")
        return Verdict::no;
    if (s == "unknown")
        return Verdict::unknown;
    throw Error(errc::parse, "unknown verdict: " + s);
}

namespace {

long const cc_n_max = 200;
long const cc_n_from = 20;
long const cc_guard = 256;

void scatter_check(Decision & dec, FieldElement const & lambda, long modulus, long residue)
{
    ScatterSeries sc = scatter_series(lambda, cc_n_max, cc_guard);
    DecayFit f = fit_decay_class(sc, modulus, residue, cc_n_from);
    CrossCheck & cc = dec.cross_check;
    cc.performed = true;
    cc.method = "scatter_decay";
    cc.n_from = cc_n_from;
    cc.n_to = cc_n_max;
    cc.modulus = modulus;
    cc.residue = residue;
    cc.c0 = fixed6(f.c_bound);
    cc.passed = f.decays;
    if (!cc.passed) {
        dec.verdict = Verdict::unknown;
        dec.reason_code = "cross_check_failed";
        dec.reason = "exact verdict yes but the scatter did not decay on n = " + std::to_string(residue) + " mod " +
                     std::to_string(modulus);
    }
}

void check_positive_base(AlgPtr const & a)
{
    if (!a->is_real() || !a->real_positive())
        throw Error(errc::precondition, "alpha must be a real positive algebraic number");
}

} // namespace

Decision decide_hardy(FieldElement const & lambda, bool cross_check)
{
    if (lambda.is_zero())
        throw Error(errc::precondition, "lambda must be nonzero");
    AlgPtr const & a = lambda.base;
    check_positive_base(a);
    Decision dec;
    dec.problem = "hardy";
    Classification c = classify_number(*a);
    if (c.kind != NumberKind::PV) {
        dec.verdict = Verdict::no;
        dec.reason_code = "alpha_not_pv";
        dec.reason = "alpha not PV (" + to_string(c.kind) + ")";
        return dec;
    }
    ModuleMembership mm = laurent_module_membership(lambda, FieldElement::generator(a));
    if (mm.member) {
        dec.verdict = Verdict::yes;
        dec.k = mm.k;
        if (cross_check)
            scatter_check(dec, lambda, 1, 0);
        return dec;
    }
    dec.verdict = Verdict::no;
    dec.reason_code = "module_membership_fails";
    dec.reason = "module membership fails: " + mm.reason;
    if (cross_check) {
        LimitSet ls = pv_limit_points(lambda);
        CrossCheck & cc = dec.cross_check;
        cc.performed = true;
        cc.method = "limit_points";
        cc.limit_points = ls.points;
        cc.passed = !ls.zero_unique;
        dec.b = ls.b;
        if (!cc.passed) {
            dec.verdict = Verdict::unknown;
            dec.reason_code = "cross_check_failed";
            dec.reason = "membership failed but the limit set is {0}";
        }
    }
    return dec;
}

Decision decide_hardy(AlgPtr const & lambda, AlgPtr const & alpha, bool cross_check)
{
    std::optional<FieldElement> l = lift_to_field(lambda, alpha);
    if (!l) {
        check_positive_base(alpha);
        Decision dec;
        dec.problem = "hardy";
        dec.verdict = Verdict::no;
        dec.reason_code = "outside_field";
        dec.reason = "lambda outside Q(alpha)";
        return dec;
    }
    return decide_hardy(*l, cross_check);
}

Decision decide_mahler(FieldElement const & lambda, bool cross_check)
{
    if (lambda.is_zero())
        throw Error(errc::precondition, "lambda must be nonzero");
    AlgPtr const & a = lambda.base;
    check_positive_base(a);
    Decision dec;
    dec.problem = "mahler";

    if (a->degree() == 1 || classify_number(*a).algebraic_integer) {
        // |a| > 1 is needed by find_pv_power; a <= 1 can never be in M
        RealInterval v = a->real_value(32);
        if (v.hi <= 1) {
            dec.verdict = Verdict::no;
            dec.reason_code = "alpha_not_expanding";
            dec.reason = "alpha <= 1";
            return dec;
        }
    }
    PvPowerResult pv = find_pv_power(a);
    if (!pv.success) {
        dec.verdict = Verdict::no;
        dec.reason_code = pv.reason_code;
        dec.reason = pv.reason;
        return dec;
    }
    long const s0 = pv.s;
    FieldElement gen = FieldElement::generator(a);
    FieldElement beta = field_pow(gen, s0);

    auto accept = [&](long s, long t, long k) {
        dec.verdict = Verdict::yes;
        dec.s = s;
        dec.t = t;
        dec.k = k;
        if (cross_check)
            scatter_check(dec, lambda, s, t);
        return dec;
    };

    for (long t = 0; t < s0; ++t) {
        ModuleMembership mm = laurent_module_membership(field_mul(lambda, field_pow(gen, t)), beta);
        if (mm.member)
            return accept(s0, t, mm.k);
    }

    // larger s = p s0: a zero in the residue cycle of lambda a^i over beta
    struct Cand {
        long s, t;
    };
    std::vector<Cand> cands;
    std::vector<Rat> points;
    AlgPtr sub = s0 == 1 ? a : subfield_generator(beta);
    std::optional<std::int64_t> b_seen;
    for (long i = 0; i < s0; ++i) {
        FieldElement x = field_mul(lambda, field_pow(gen, i));
        if (!subfield_membership(x, beta))
            continue;
        FieldElement xs = s0 == 1 ? x : restrict_to_subfield(x, beta, sub);
        LimitSet ls;
        try {
            ls = pv_limit_points(xs);
        } catch (Error const &) {
            continue;
        }
        if (!b_seen)
            b_seen = ls.b;
        points.insert(points.end(), ls.points.begin(), ls.points.end());
        long p = ls.orbit.period();
        for (long c = 0; c < p; ++c) {
            if (ls.orbit.cycle[static_cast<std::size_t>(c)] != 0)
                continue;
            long e = ((ls.shift + ls.orbit.preperiod() + c) % p + p) % p;
            cands.push_back({p * s0, s0 * e + i});
        }
    }
    std::sort(cands.begin(), cands.end(), [](auto const & x, auto const & y) { return x.s != y.s ? x.s < y.s : x.t < y.t; });
    bool verify_failed = false;
    for (auto const & cd : cands) {
        FieldElement bs = field_pow(gen, cd.s);
        FieldElement x = field_mul(lambda, field_pow(gen, cd.t));
        ModuleMembership mm = laurent_module_membership(x, bs);
        if (mm.member)
            return accept(cd.s, cd.t, mm.k);
        verify_failed = true;
    }

    dec.verdict = Verdict::no;
    dec.reason_code = "module_membership_fails";
    dec.reason = "module membership fails for all t < s=" + std::to_string(s0);
    dec.s = s0;
    dec.b = b_seen;
    if (cross_check) {
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());
        CrossCheck & cc = dec.cross_check;
        cc.performed = true;
        cc.method = "limit_points";
        cc.limit_points = points;
        cc.passed = !verify_failed;
        if (verify_failed) {
            dec.verdict = Verdict::unknown;
            dec.reason_code = "cross_check_failed";
            dec.reason = "a zero limit point was found but exact membership failed";
        }
    }
    return dec;
}

Decision decide_mahler(AlgPtr const & lambda, AlgPtr const & alpha, bool cross_check)
{
    std::optional<FieldElement> l = lift_to_field(lambda, alpha);
    if (!l) {
        check_positive_base(alpha);
        Decision dec;
        dec.problem = "mahler";
        dec.verdict = Verdict::no;
        dec.reason_code = "outside_field";
        dec.reason = "lambda outside Q(alpha)";
        return dec;
    }
    return decide_mahler(*l, cross_check);
}

ZeroTraceReport zero_trace_real(AlgPtr const & a, std::optional<long> h_override, long n_max)
{
    if (!a->is_real() || !a->real_positive())
        throw Error(errc::precondition, "zero_trace_real: designated root must be real and positive");
    if (n_max < 1)
        throw Error(errc::precondition, "zero_trace_real: n_max must be positive");
    ZeroTraceReport r;
    r.n_max = n_max;
    int d = a->degree();
    if (static_cast<int>(a->roots().real_count()) == d) {
        r.h = 2;
        r.h_exactness = "exact";
    } else if (h_override) {
        if (*h_override < 1)
            throw Error(errc::precondition, "zero_trace_real: h must be positive");
        r.h = *h_override;
        r.h_exactness = "override";
    } else {
        r.h = ratio_unity_orders(a->minpoly()).h_lower;
        r.h_exactness = "lower bound only";
    }
    ElementMinpoly m = minpoly_of_element(field_pow(FieldElement::generator(a), r.h));
    r.power_minpoly = m.poly;
    r.h_prime = d / m.degree;
    r.infinitely_many_zeros = r.h_prime > 1;

    TraceSeq ts = power_trace_seq(FieldElement::rational(a, Rat(1)), n_max);
    r.pattern_verified = true;
    for (long n = 0; n <= n_max; ++n) {
        bool zero = ts[static_cast<std::size_t>(n)] == 0;
        if (zero)
            r.zeros.push_back(n);
        if (n % r.h_prime != 0 && !zero)
            r.pattern_verified = false;
    }
    return r;
}

DigitReport digit_block_analyzer(std::string const & digits, int base, std::vector<Rat> const & eps_grid)
{
    if (base < 2 || base > 36)
        throw Error(errc::precondition, "digit base must lie in 2..36");
    std::vector<int> v;
    v.reserve(digits.size());
    for (char ch : digits) {
        int x = -1;
        if (ch >= '0' && ch <= '9')
            x = ch - '0';
        else if (ch >= 'a' && ch <= 'z')
            x = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'Z')
            x = ch - 'A' + 10;
        if (x < 0 || x >= base)
            throw Error(errc::parse, std::string("invalid digit '") + ch + "' for base " + std::to_string(base));
        v.push_back(x);
    }
    DigitReport r;
    r.base = base;
    r.length = static_cast<long>(v.size());
    auto digit_char = [](int x) { return static_cast<char>(x < 10 ? '0' + x : 'a' + x - 10); };
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i])
            ++j;
        if (v[i] == 0 || v[i] == base - 1)
            r.runs.push_back({static_cast<long>(i) + 1, static_cast<long>(j - i), digit_char(v[i]), j == v.size()});
        i = j;
    }
    long const half = r.length / 2;
    for (Rat const & eps : eps_grid) {
        if (eps < 0)
            throw Error(errc::precondition, "eps must be non-negative");
        EpsBlocks e;
        e.eps = eps;
        for (auto const & run : r.runs) {
            // block x_n .. x_{n + floor(eps n)} has floor(eps n) + 1 digits
            Int need = floor_of(eps * Rat(run.start)) + 1;
            if (Int(run.length) < need)
                continue;
            e.positions.push_back(run.start);
            if (run.trailing) {
                if (run.length >= half && run.length > 0)
                    e.trailing_long = true;
                continue;
            }
            ++e.completed_full;
            if (run.start + run.length - 1 <= half)
                ++e.completed_half;
        }
        e.verdict = (e.completed_full > e.completed_half || e.trailing_long) ? "consistent" : "no_evidence";
        r.per_eps.push_back(std::move(e));
    }
    return r;
}

std::string liouville_digits(long length, std::vector<int> const & selector)
{
    if (length < 0)
        throw Error(errc::precondition, "length must be non-negative");
    std::string s(static_cast<std::size_t>(length), '0');
    long f = 1;
    for (long n = 1; f <= length; ++n) {
        f *= n;
        if (f > length)
            break;
        bool on = static_cast<std::size_t>(n - 1) >= selector.size() || selector[static_cast<std::size_t>(n - 1)] != 0;
        if (on)
            s[static_cast<std::size_t>(f - 1)] = '1';
    }
    return s;
}

} // namespace algpow
