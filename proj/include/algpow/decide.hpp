#ifndef ALGPOW_DECIDE_HPP
#define ALGPOW_DECIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "algpow/classify.hpp"
#include "algpow/numfield.hpp"

namespace algpow {

struct RatioPair {
    std::size_t i = 0, j = 0; // root indices, ratio root_i / root_j
    long order = 1;
};

struct RatioUnityReport {
    IntPoly ratio_poly;          // Res_Y(p(Y), p(XY)), primitive
    std::vector<long> orders;    // sorted, always contains 1
    std::vector<RatioPair> pairs; // off-diagonal pairs whose ratio is a root of unity
    long s_candidate = 1;        // lcm over pairs of expanding conjugates
    long h_lower = 2;            // lcm(2, orders)
};

RatioUnityReport ratio_unity_orders(IntPoly const & p);

struct PvPowerResult {
    bool success = false;
    long s = 0;
    std::optional<IntPoly> power_minpoly; // minpoly of a^s
    std::optional<std::size_t> power_root_index;
    std::optional<NumberKind> power_kind;
    std::string reason_code; // on failure
    std::string reason;
};

PvPowerResult find_pv_power(AlgPtr const & a);

/* a^s as a number of its own (designated root = the real value of a^s). */
AlgPtr power_number(AlgPtr const & a, long s);

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);
Verdict verdict_from_string(std::string const & s);

struct CrossCheck {
    bool performed = false;
    bool passed = false;
    std::string method;             // "scatter_decay" or "limit_points"
    std::optional<std::string> c0;  // measured decay rate, 6 decimals
    long n_from = 0, n_to = 0;
    long modulus = 1, residue = 0;
    std::vector<Rat> limit_points;
};

struct Decision {
    std::string problem; // "hardy" or "mahler"
    Verdict verdict = Verdict::unknown;
    std::optional<long> s, t, k;
    std::optional<std::int64_t> b; // orbit denominator when a limit set was consulted
    std::string reason_code;
    std::string reason;
    CrossCheck cross_check;
};

/* lambda must live in Q(alpha) (lambda.base is alpha). */
Decision decide_hardy(FieldElement const & lambda, bool cross_check = true);
/* lambda given by its own minimal polynomial; lifted into Q(alpha) first. */
Decision decide_hardy(AlgPtr const & lambda, AlgPtr const & alpha, bool cross_check = true);

Decision decide_mahler(FieldElement const & lambda, bool cross_check = true);
Decision decide_mahler(AlgPtr const & lambda, AlgPtr const & alpha, bool cross_check = true);

struct ZeroTraceReport {
    long h = 2;
    std::string h_exactness; // "exact", "override" or "lower bound only"
    IntPoly power_minpoly;   // minpoly(a^h)
    long h_prime = 1;        // d / deg minpoly(a^h)
    bool infinitely_many_zeros = false;
    long n_max = 200;
    std::vector<long> zeros;     // n <= n_max with Tr(a^n) = 0
    bool pattern_verified = false; // Tr(a^n) = 0 for every n not divisible by h'
};

ZeroTraceReport zero_trace_real(AlgPtr const & a, std::optional<long> h_override = std::nullopt, long n_max = 200);

struct DigitRun {
    long start = 0; // 1-based position
    long length = 0;
    char digit = '0';
    bool trailing = false; // reaches the end of the prefix
};

struct EpsBlocks {
    Rat eps;
    std::vector<long> positions; // starts of qualifying runs
    long completed_half = 0;     // qualifying runs finished inside the first half
    long completed_full = 0;
    bool trailing_long = false;  // qualifying trailing run covering half the prefix
    std::string verdict;         // "consistent" or "no_evidence"
};

struct DigitReport {
    int base = 10;
    long length = 0;
    std::vector<DigitRun> runs;
    std::vector<EpsBlocks> per_eps;
};

DigitReport digit_block_analyzer(std::string const & digits, int base, std::vector<Rat> const & eps_grid);

/* First `length` decimal digits of sum_{n>=1} e_n 10^{-n!}; a missing
 * e_n counts as 1. */
std::string liouville_digits(long length, std::vector<int> const & selector = {});

} // namespace algpow

#endif /* ALGPOW_DECIDE_HPP */
