#include "algpow/numfield.hpp"

#include <algorithm>
#include <functional>

#include "algpow/error.hpp"
#include "algpow/exactalg.hpp"

namespace algpow {

// ---------------------------------------------------------------------------
// linear algebra over Q

std::optional<std::vector<Rat>> solve_linear(RatMatrix const & a, std::vector<Rat> const & rhs, int * rank)
{
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    RatMatrix m(rows, std::vector<Rat>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = a[i][j];
        m[i][cols] = rhs[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[r]);
        Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j <= cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (rank)
        *rank = static_cast<int>(r);
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0)
            return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = m[i][cols];
    return x;
}

Rat determinant(RatMatrix a)
{
    std::size_t n = a.size();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c] == 0)
                continue;
            Rat f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

// ---------------------------------------------------------------------------
// AlgebraicNumber

namespace {

std::size_t default_root(RootBoxSet const & roots)
{
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots.boxes[i].real && (!best || roots.boxes[i].re > roots.boxes[*best].re))
            best = i;
    // boxes are sorted by centre, so the last real box is the largest real root
    return best.value_or(0);
}

} // namespace

AlgPtr AlgebraicNumber::from_known_minpoly(IntPoly const & p, std::optional<std::size_t> root_index, long start_bits)
{
    IntPoly q = primitive_part(p);
    if (q.degree() < 1)
        throw Error(errc::degenerate_input, "minimal polynomial must have degree >= 1");
    auto a = std::make_shared<AlgebraicNumber>();
    a->minpoly_ = q;
    a->rat_minpoly_ = to_rat(q);
    a->roots_ = isolate_roots(q, default_start_bits, start_bits);
    if (root_index) {
        if (*root_index >= a->roots_.size())
            throw Error(errc::precondition, "root index " + std::to_string(*root_index) + " out of range (degree " +
                                                std::to_string(q.degree()) + ")");
        a->index_ = *root_index;
    } else {
        a->index_ = default_root(a->roots_);
    }
    return a;
}

AlgPtr AlgebraicNumber::from_minpoly(IntPoly const & p, std::optional<std::size_t> root_index, long start_bits)
{
    IntPoly q = primitive_part(p);
    if (q.degree() < 1)
        throw Error(errc::degenerate_input, "minimal polynomial must have degree >= 1");
    RatPoly rq = to_rat(q);
    if (!is_squarefree(rq)) {
        IntPoly g = primitive_part(poly_gcd(rq, rq.derivative()));
        throw Error(errc::reducible, "polynomial " + to_string(q) + " is not squarefree; factor " + to_string(g));
    }
    auto v = irreducibility_check(q);
    if (v.kind == IrreducibilityVerdict::Kind::reducible)
        throw Error(errc::reducible, "polynomial " + to_string(q) + " is reducible; factor " + to_string(v.factor));
    if (v.kind == IrreducibilityVerdict::Kind::inconclusive)
        throw Error(errc::irreducibility_inconclusive, "could not decide irreducibility of " + to_string(q));
    return from_known_minpoly(q, root_index, start_bits);
}

AlgPtr AlgebraicNumber::rational(Rat const & q)
{
    return from_known_minpoly(IntPoly{Int(-q.get_num()), Int(q.get_den())});
}

AlgPtr AlgebraicNumber::with_index(AlgPtr const & a, std::size_t root_index)
{
    if (root_index >= a->roots_.size())
        throw Error(errc::precondition, "root index out of range");
    auto b = std::make_shared<AlgebraicNumber>(*a);
    b->index_ = root_index;
    return b;
}

bool AlgebraicNumber::real_positive() const
{
    if (!is_real())
        return false;
    RealInterval v = real_value(default_start_bits);
    for (long bits = 2 * default_start_bits; v.contains_zero() && !v.is_point(); bits *= 2)
        v = real_value(bits);
    return v.lo > 0;
}

RealInterval AlgebraicNumber::real_value(long bits) const
{
    if (!is_real())
        throw Error(errc::precondition, "designated root is not real");
    if (degree() == 1)
        return RealInterval(box().re);
    return refine_real_root(minpoly_, box().real_interval(), bits);
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {

void check_same(FieldElement const & x, FieldElement const & y)
{
    if (x.base != y.base && !(x.base->minpoly() == y.base->minpoly() && x.base->root_index() == y.base->root_index()))
        throw Error(errc::mixed_base, "field elements over different bases");
}

std::vector<Rat> padded(RatPoly const & p, int d)
{
    std::vector<Rat> c(static_cast<std::size_t>(d), Rat(0));
    for (int i = 0; i <= p.degree() && i < d; ++i)
        c[static_cast<std::size_t>(i)] = p.coeff(i);
    return c;
}

} // namespace

FieldElement FieldElement::from_poly(AlgPtr const & base, RatPoly const & p)
{
    RatPoly r = p.degree() >= base->degree() ? p % base->rat_minpoly() : p;
    return {base, padded(r, base->degree())};
}

FieldElement FieldElement::from_coords(AlgPtr const & base, std::vector<Rat> coords)
{
    if (static_cast<int>(coords.size()) > base->degree())
        return from_poly(base, RatPoly(std::move(coords)));
    coords.resize(static_cast<std::size_t>(base->degree()), Rat(0));
    return {base, std::move(coords)};
}

FieldElement FieldElement::rational(AlgPtr const & base, Rat const & q) { return from_coords(base, {q}); }

FieldElement FieldElement::generator(AlgPtr const & base) { return from_poly(base, RatPoly::x()); }

bool FieldElement::is_zero() const
{
    return std::all_of(coords.begin(), coords.end(), [](Rat const & c) { return c == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(coords.begin() + 1, coords.end(), [](Rat const & c) { return c == 0; });
}

bool operator==(FieldElement const & x, FieldElement const & y)
{
    check_same(x, y);
    return x.coords == y.coords;
}

FieldElement field_add(FieldElement const & x, FieldElement const & y)
{
    check_same(x, y);
    FieldElement r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] += y.coords[i];
    return r;
}

FieldElement field_sub(FieldElement const & x, FieldElement const & y)
{
    check_same(x, y);
    FieldElement r = x;
    for (std::size_t i = 0; i < r.coords.size(); ++i)
        r.coords[i] -= y.coords[i];
    return r;
}

FieldElement field_mul(FieldElement const & x, FieldElement const & y)
{
    check_same(x, y);
    return FieldElement::from_poly(x.base, x.as_poly() * y.as_poly());
}

FieldElement field_scale(FieldElement const & x, Rat const & q)
{
    FieldElement r = x;
    for (auto & c : r.coords)
        c *= q;
    return r;
}

FieldElement field_inv(FieldElement const & x)
{
    if (x.is_zero())
        throw Error(errc::not_invertible, "inverse of zero");
    RatPoly u, v;
    RatPoly g = poly_xgcd(x.as_poly(), x.base->rat_minpoly(), u, v);
    if (g.degree() != 0)
        throw Error(errc::not_invertible, "element shares a factor with the minimal polynomial");
    return FieldElement::from_poly(x.base, u * (1 / g.coeff(0)));
}

FieldElement field_pow(FieldElement const & x, long e)
{
    FieldElement b = e < 0 ? field_inv(x) : x;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    FieldElement r = FieldElement::rational(x.base, Rat(1));
    while (n) {
        if (n & 1u)
            r = field_mul(r, b);
        n >>= 1u;
        if (n)
            b = field_mul(b, b);
    }
    return r;
}

RatMatrix mult_matrix(FieldElement const & x)
{
    std::size_t d = static_cast<std::size_t>(x.degree());
    RatMatrix m(d, std::vector<Rat>(d));
    FieldElement alpha = FieldElement::generator(x.base);
    FieldElement col = x;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            m[i][j] = col.coords[i];
        if (j + 1 < d)
            col = field_mul(col, alpha);
    }
    return m;
}

Rat trace(FieldElement const & x)
{
    RatMatrix m = mult_matrix(x);
    Rat t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

Rat norm(FieldElement const & x) { return determinant(mult_matrix(x)); }

RatPoly charpoly(FieldElement const & x)
{
    // Faddeev-LeVerrier
    RatMatrix a = mult_matrix(x);
    std::size_t n = a.size();
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        // m <- a*m + c[n-k+1] I
        RatMatrix next(n, std::vector<Rat>(n, Rat(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (m[l][i] == 0)
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[j][i] += a[j][l] * m[l][i];
            }
        for (std::size_t i = 0; i < n; ++i)
            next[i][i] += c[n - k + 1];
        m = std::move(next);
        Rat tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                tr += a[i][l] * m[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return RatPoly(c);
}

TraceSeq power_trace_seq(FieldElement const & seed, long n_max)
{
    if (n_max < 0)
        throw Error(errc::precondition, "power_trace_seq: n_max must be >= 0");
    AlgPtr const & base = seed.base;
    int d = base->degree();
    TraceSeq ts;
    ts.seed = seed;
    ts.values.reserve(static_cast<std::size_t>(n_max) + 1);

    // Tr(a^i) for i < d; the trace is linear in the coordinates
    std::vector<Rat> power_sums(static_cast<std::size_t>(d));
    {
        FieldElement a = FieldElement::generator(base);
        FieldElement p = FieldElement::rational(base, Rat(1));
        for (int i = 0; i < d; ++i) {
            power_sums[static_cast<std::size_t>(i)] = trace(p);
            p = field_mul(p, a);
        }
    }
    auto lin_trace = [&](FieldElement const & y) {
        Rat t = 0;
        for (int i = 0; i < d; ++i)
            t += y.coords[static_cast<std::size_t>(i)] * power_sums[static_cast<std::size_t>(i)];
        return t;
    };

    FieldElement a = FieldElement::generator(base);
    FieldElement y = seed;
    long direct = base->monic() ? std::min<long>(n_max, d - 1) : n_max;
    for (long n = 0; n <= direct; ++n) {
        ts.values.push_back(lin_trace(y));
        if (n < direct)
            y = field_mul(y, a);
    }
    if (base->monic()) {
        ts.used_recurrence = true;
        IntPoly const & p = base->minpoly();
        std::vector<Int> tail;
        for (long n = d; n <= n_max; ++n) {
            Rat t = 0;
            for (int i = 0; i < d; ++i)
                t -= Rat(p.coeff(i)) * ts.values[static_cast<std::size_t>(n - d + i)];
            ts.values.push_back(t);
        }
    } else {
        ts.note = "non-monic minimal polynomial: traces computed from multiplication matrices";
    }
    return ts;
}

ElementMinpoly minpoly_of_element(FieldElement const & x)
{
    RatPoly cp = charpoly(x);
    RatPoly sf = squarefree_part(cp);
    int m = sf.degree();
    int d = x.degree();
    if (m < 1 || d % m != 0 || power(sf, static_cast<unsigned>(d / m)) != cp)
        throw Error(errc::degenerate_input, "characteristic polynomial is not a power of the minimal polynomial");
    return {primitive_part(sf), m};
}

std::optional<std::vector<Rat>> subfield_membership(FieldElement const & x, FieldElement const & beta)
{
    check_same(x, beta);
    if (beta.is_zero())
        throw Error(errc::singular_basis, "subfield generator is zero");
    int m = minpoly_of_element(beta).degree;
    std::size_t d = static_cast<std::size_t>(x.degree());
    RatMatrix a(d, std::vector<Rat>(static_cast<std::size_t>(m)));
    FieldElement p = FieldElement::rational(x.base, Rat(1));
    for (int j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < d; ++i)
            a[i][static_cast<std::size_t>(j)] = p.coords[i];
        p = field_mul(p, beta);
    }
    int rank = 0;
    auto sol = solve_linear(a, x.coords, &rank);
    if (rank < m)
        throw Error(errc::singular_basis, "powers of the subfield generator are linearly dependent");
    return sol;
}

AlgPtr subfield_generator(FieldElement const & beta)
{
    ElementMinpoly mp = minpoly_of_element(beta);
    AlgPtr sub = AlgebraicNumber::from_known_minpoly(mp.poly);
    if (mp.degree == 1)
        return sub;
    std::size_t j = beta.base->root_index();
    long cap = precision_cap();
    for (long bits = default_start_bits; bits <= cap; bits *= 2) {
        ComplexBox v = embed_element(beta, j, bits);
        RootBoxSet set = refine(sub->roots(), bits);
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < set.size(); ++i) {
            ComplexBox b = set.boxes[i].box();
            if (overlaps(b.re, v.re) && overlaps(b.im, v.im))
                hits.push_back(i);
        }
        if (hits.size() == 1)
            return AlgebraicNumber::with_index(sub, hits[0]);
    }
    throw Error(errc::precision_cap, "could not identify the embedding of the subfield generator");
}

FieldElement restrict_to_subfield(FieldElement const & x, FieldElement const & beta, AlgPtr const & sub)
{
    auto c = subfield_membership(x, beta);
    if (!c)
        throw Error(errc::outside_field, "element is not in the subfield");
    return FieldElement::from_coords(sub, *c);
}

ModuleMembership laurent_module_membership(FieldElement const & x, FieldElement const & beta)
{
    ModuleMembership r;
    if (beta.is_zero())
        throw Error(errc::precondition, "laurent_module_membership: beta is zero");
    ElementMinpoly mp = minpoly_of_element(beta);
    if (mp.poly.lead() != 1)
        throw Error(errc::not_algebraic_integer, "laurent_module_membership: beta is not an algebraic integer");
    if (x.is_zero()) {
        r.member = true;
        return r;
    }
    auto y = subfield_membership(x, beta);
    if (!y) {
        r.reason_code = "outside_subfield";
        r.reason = "outside subfield";
        return r;
    }
    RatPoly P = to_rat(mp.poly);
    int m = mp.degree;
    RatPoly z = (RatPoly(*y) * P.derivative()) % P;

    auto denominator = [&](RatPoly const & q) {
        return lcm_of_denominators(q.coeffs());
    };
    Int D = denominator(z);
    if (D == 1) {
        r.member = true;
        return r;
    }
    Int N = mp.poly.coeff(0);
    if (m % 2)
        N = -N;
    unsigned maxval = 0;
    for (auto const & [q, e] : factor_integer(D)) {
        if (N % q != 0) {
            r.reason_code = "module_membership_fails";
            r.reason = "denominator prime " + to_string(q) + " does not divide Norm(beta)=" + to_string(N);
            return r;
        }
        maxval = std::max(maxval, e);
    }
    long kmax = static_cast<long>(m) * maxval + m;
    RatPoly Y = RatPoly::x();
    for (long k = 1; k <= kmax; ++k) {
        z = (z * Y) % P;
        if (denominator(z) == 1) {
            r.member = true;
            r.k = k;
            return r;
        }
    }
    r.reason_code = "module_membership_fails";
    r.reason = "no power of beta up to " + std::to_string(kmax) + " clears the denominators";
    return r;
}

bool algebraic_integer_test(AlgebraicNumber const & a) { return a.minpoly().lead() == 1; }

DeSmitReport de_smit_check(AlgebraicNumber const & a)
{
    DeSmitReport rep;
    int d = a.degree();
    rep.degree = d;
    Int dd = pow_int(Int(d), static_cast<unsigned long>(d));
    rep.bound = d + static_cast<long>(mpz_sizeinbase(dd.get_mpz_t(), 2)) - 1;
    AlgPtr base = std::make_shared<AlgebraicNumber>(a);
    TraceSeq ts = power_trace_seq(FieldElement::rational(base, Rat(1)), rep.bound);
    for (long i = 1; i <= rep.bound; ++i) {
        Rat const & t = ts[static_cast<std::size_t>(i)];
        rep.traces.push_back(t);
        if (!rep.first_failure && t.get_den() != 1)
            rep.first_failure = i;
    }
    rep.certified = !rep.first_failure;
    if (rep.certified && !algebraic_integer_test(a))
        throw Error(errc::degenerate_input, "trace test certified a non-monic minimal polynomial");
    return rep;
}

// ---------------------------------------------------------------------------
// embeddings

ComplexBox embed_element(FieldElement const & x, std::size_t j, long bits)
{
    if (x.is_rational())
        return ComplexBox(x.coords[0]);
    RootBoxSet const & base_set = x.base->roots();
    if (j >= base_set.size())
        throw Error(errc::precondition, "embed_element: root index out of range");
    Rat const target = pow_rat(Rat(2), -bits);
    long cap = precision_cap();
    RatPoly p = x.as_poly();
    for (long tb = bits + 16; ; tb *= 2) {
        RootBoxSet set = refine(base_set, std::min(tb, cap));
        RootBox const & rb = set.boxes[j];
        ComplexBox z = rb.box();
        if (rb.real)
            z.im = RealInterval(Rat(0));
        ComplexBox v = eval(p, z, tb + 32);
        if (v.re.width() <= target && v.im.width() <= target)
            return v;
        if (tb >= cap)
            throw Error(errc::precision_cap, "embed_element: requested width not reached");
    }
}

// ---------------------------------------------------------------------------
// lifting an algebraic number into Q(a)

namespace {

struct Cq {
    Rat re, im;
};
Cq operator-(Cq const & a, Cq const & b) { return {a.re - b.re, a.im - b.im}; }
Cq operator*(Cq const & a, Cq const & b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cq operator/(Cq const & a, Cq const & b)
{
    Rat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
bool is_zero(Cq const & a) { return a.re == 0 && a.im == 0; }

// Gaussian elimination on a square complex system; false if singular.
bool solve_complex(std::vector<std::vector<Cq>> a, std::vector<Cq> b, std::vector<Cq> & x)
{
    std::size_t n = a.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(a[piv][c]))
            ++piv;
        if (piv == n)
            return false;
        std::swap(a[piv], a[c]);
        std::swap(b[piv], b[c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a[i][c]))
                continue;
            Cq f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[i][j] = a[i][j] - f * a[c][j];
            b[i] = b[i] - f * b[c];
        }
    }
    x.assign(n, Cq{});
    for (std::size_t i = n; i-- > 0;) {
        Cq s = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            s = s - a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return true;
}

} // namespace

std::optional<FieldElement> lift_to_field(AlgPtr const & lambda, AlgPtr const & base)
{
    int e = lambda->degree();
    int d = base->degree();
    if (d % e != 0)
        return std::nullopt;
    if (e == 1)
        return FieldElement::rational(base, lambda->box().re);

    // a' = lc * a is integral with monic minpoly P'(x) = lc^(d-1) P(x / lc),
    // so lambda = sum c_i a^i with c_i * disc(P') * lc(lambda) integral.
    IntPoly const & P = base->minpoly();
    Int lc = P.lead();
    std::vector<Rat> pm(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        pm[static_cast<std::size_t>(i)] = Rat(P.coeff(i) * pow_int(lc, static_cast<unsigned long>(d - i))) / Rat(lc);
    Rat disc = discriminant(RatPoly(pm));
    Int D = abs(disc.get_num()) * lambda->minpoly().lead();
    long need = static_cast<long>(mpz_sizeinbase(D.get_mpz_t(), 2));

    std::size_t const max_assignments = 20000;
    std::size_t count = 1;
    for (int k = 1; k < d; ++k) {
        count *= static_cast<std::size_t>(e);
        if (count > max_assignments)
            throw Error(errc::precondition, "lift_to_field: too many conjugate assignments to enumerate");
    }

    for (long bits = 2 * need + 64 * d + 64; bits <= precision_cap(); bits *= 2) {
        RootBoxSet as = refine(base->roots(), bits);
        RootBoxSet ls = refine(lambda->roots(), bits);
        std::vector<std::vector<Cq>> vand(static_cast<std::size_t>(d), std::vector<Cq>(static_cast<std::size_t>(d)));
        for (int k = 0; k < d; ++k) {
            Cq z{as.boxes[static_cast<std::size_t>(k)].re, as.boxes[static_cast<std::size_t>(k)].im};
            Cq pw{Rat(1), Rat(0)};
            for (int i = 0; i < d; ++i) {
                vand[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = pw;
                pw = pw * z;
            }
        }
        std::vector<std::size_t> assign(static_cast<std::size_t>(d), 0);
        std::size_t fixed = base->root_index();
        assign[fixed] = lambda->root_index();
        std::vector<std::size_t> free_slots;
        for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k)
            if (k != fixed)
                free_slots.push_back(k);

        std::function<std::optional<FieldElement>(std::size_t)> rec = [&](std::size_t pos) -> std::optional<FieldElement> {
            if (pos < free_slots.size()) {
                for (std::size_t r = 0; r < static_cast<std::size_t>(e); ++r) {
                    assign[free_slots[pos]] = r;
                    if (auto hit = rec(pos + 1))
                        return hit;
                }
                return std::nullopt;
            }
            std::vector<Cq> rhs;
            for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k)
                rhs.push_back({ls.boxes[assign[k]].re, ls.boxes[assign[k]].im});
            std::vector<Cq> c;
            if (!solve_complex(vand, rhs, c))
                return std::nullopt;
            std::vector<Rat> coords;
            for (auto const & ci : c) {
                Rat v(round_nearest(ci.re * Rat(D)), D);
                v.canonicalize();
                coords.push_back(v);
            }
            FieldElement cand = FieldElement::from_coords(base, coords);
            // exact check: P_lambda(cand) = 0 in Q(a)
            RatPoly pl = lambda->rat_minpoly();
            FieldElement acc = FieldElement::rational(base, pl.lead());
            for (int i = pl.degree() - 1; i >= 0; --i)
                acc = field_add(field_mul(acc, cand), FieldElement::rational(base, pl.coeff(i)));
            if (!acc.is_zero())
                return std::nullopt;
            // right conjugate of lambda under the designated embedding
            ComplexBox v = embed_element(cand, fixed, 96);
            ComplexBox want = ls.boxes[lambda->root_index()].box();
            for (std::size_t i = 0; i < ls.size(); ++i) {
                ComplexBox other = ls.boxes[i].box();
                bool hit = overlaps(v.re, other.re) && overlaps(v.im, other.im);
                if (hit && i != lambda->root_index())
                    return std::nullopt;
            }
            if (overlaps(v.re, want.re) && overlaps(v.im, want.im))
                return cand;
            return std::nullopt;
        };
        if (auto hit = rec(0))
            return hit;
        // the rounding is exact once the approximation error drops below
        // 1/(2D); one doubling past the first attempt is enough in practice
        if (bits > 4 * need + 256 * d)
            break;
    }
    return std::nullopt;
}

std::string to_string(FieldElement const & x) { return to_string(x.coords); }

} // namespace algpow
