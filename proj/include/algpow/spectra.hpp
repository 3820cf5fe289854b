#ifndef ALGPOW_SPECTRA_HPP
#define ALGPOW_SPECTRA_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "algpow/numfield.hpp"

namespace algpow {

/* Tr(seed * a^n) mod b as a preperiod followed by a repeating cycle, both in
 * balanced residues {-ceil(b/2)+1, ..., floor(b/2)}. */
struct ResidueOrbit {
    std::int64_t b = 1;
    std::vector<std::int64_t> prefix; // n = 0 .. preperiod-1
    std::vector<std::int64_t> cycle;  // starts at n = preperiod

    long preperiod() const { return static_cast<long>(prefix.size()); }
    long period() const { return static_cast<long>(cycle.size()); }
    std::int64_t at(long n) const;
};

ResidueOrbit trace_residue_orbit(FieldElement const & seed, std::int64_t b);

/* Image of [lo, hi] under x -> ||x||. */
std::pair<Rat, Rat> fold_interval(Rat const & lo, Rat const & hi);

struct LimitPiece {
    std::int64_t residue = 0; // i_l
    RealInterval radius;      // R_l (zero for PV points)
    bool radius_exact = true;
    Rat lo, hi;               // i_l/b -/+ R_l (outer bound when inexact)
    Rat folded_lo, folded_hi;
};

struct LimitSet {
    enum class Kind { points, intervals };
    Kind kind = Kind::points;
    std::int64_t b = 1;
    long shift = 0;                 // seed is b * lambda * a^shift
    std::vector<Rat> seed;          // coordinates of the orbit seed
    ResidueOrbit orbit;
    std::vector<LimitPiece> pieces; // one per cycle position
    std::vector<Rat> points;        // distinct |i_l|/b, sorted (points kind)
    std::vector<std::pair<Rat, Rat>> folded;     // distinct folded pieces, sorted
    std::vector<std::pair<Rat, Rat>> union_set;  // merged
    Rat measure;
    bool zero_is_limit = false;
    bool zero_unique = false;
};

/* The least b with b*lambda in (1/P'(a)) Z[a, 1/a] and the limit points of
 * ||lambda a^n||.  Requires a PV base. */
LimitSet pv_limit_points(FieldElement const & lambda);

/* Limit intervals of ||(lambda/b) a^n|| for a Salem base and lambda in the
 * complementary module of Z[a]. */
LimitSet salem_limit_intervals(FieldElement const & lambda, std::int64_t b);

/* Least b (with the witness exponent) such that b*lambda*a^k lies in the
 * complementary module; throws no_admissible_denominator. */
std::pair<std::int64_t, long> admissible_denominator(FieldElement const & lambda);

struct ScatterEntry {
    long n = 0;
    Rat value; // ||lambda a^n||, dyadic
    Rat error; // certified bound on |value - true value|
};

struct DecayFit {
    long modulus = 1; // subsequence n = residue mod modulus, n >= n_from
    long residue = 0;
    long n_from = 1;
    long count = 0;
    double c_bound = 1; // max (value + error)^(1/n)
    double c_fit = 1;   // least-squares slope of log ||.|| against n
    bool decays = false;
};

struct ScatterSeries {
    long n_max = 0;
    long guard_bits = 64;
    long working_bits = 0;
    std::vector<ScatterEntry> entries;
    DecayFit decay;
};

/* ||lambda a^n|| for n = 0..n_max with a real, |a| > 1.  `threads` = 0
 * picks the hardware concurrency. */
ScatterSeries scatter_series(FieldElement const & lambda, long n_max, long guard_bits = 64, unsigned threads = 0);

DecayFit fit_decay_class(ScatterSeries const & s, long modulus, long residue, long n_from);
/* Best class over moduli 1..max_modulus (smallest c_bound, then smallest modulus). */
DecayFit fit_decay(ScatterSeries const & s, long n_from, long max_modulus = 6);

struct CoverageReport {
    long n_min = 0;
    Rat tol;
    long considered = 0;
    long inside = 0;
    std::optional<Rat> fraction;  // undefined for an empty selection
    std::vector<long> hits;       // per entry of limits.folded
    Rat measure;
};

CoverageReport coverage_report(ScatterSeries const & s, LimitSet const & limits, long n_min, Rat const & tol);

void write_scatter_csv(ScatterSeries const & s, std::ostream & out);
std::string decimal_string(Rat const & q, int places); // rounded half up

} // namespace algpow

#endif /* ALGPOW_SPECTRA_HPP */
