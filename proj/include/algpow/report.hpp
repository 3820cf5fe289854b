#ifndef ALGPOW_REPORT_HPP
#define ALGPOW_REPORT_HPP

#include <json.hpp>

#include "algpow/classify.hpp"
#include "algpow/decide.hpp"
#include "algpow/spectra.hpp"

// Rationals travel as "p/q" strings; integers as JSON numbers when they fit
// in 64 bits and as decimal strings otherwise.
namespace nlohmann {
template <> struct adl_serializer<algpow::Rat> {
    static void to_json(json & j, algpow::Rat const & q);
    static void from_json(json const & j, algpow::Rat & q);
};
template <> struct adl_serializer<algpow::Int> {
    static void to_json(json & j, algpow::Int const & z);
    static void from_json(json const & j, algpow::Int & z);
};
} // namespace nlohmann

namespace algpow {

using json = nlohmann::json;

void to_json(json & j, IntPoly const & p);
void from_json(json const & j, IntPoly & p);
void to_json(json & j, RealInterval const & v);
void from_json(json const & j, RealInterval & v);

#define ALGPOW_JSON_PAIR(T)                                                                                            \
    void to_json(json & j, T const & v);                                                                               \
    void from_json(json const & j, T & v);

ALGPOW_JSON_PAIR(RootBox)
ALGPOW_JSON_PAIR(Classification)
ALGPOW_JSON_PAIR(ResidueOrbit)
ALGPOW_JSON_PAIR(LimitPiece)
ALGPOW_JSON_PAIR(LimitSet)
ALGPOW_JSON_PAIR(DecayFit)
ALGPOW_JSON_PAIR(CoverageReport)
ALGPOW_JSON_PAIR(RatioPair)
ALGPOW_JSON_PAIR(RatioUnityReport)
ALGPOW_JSON_PAIR(PvPowerResult)
ALGPOW_JSON_PAIR(CrossCheck)
ALGPOW_JSON_PAIR(Decision)
ALGPOW_JSON_PAIR(ZeroTraceReport)
ALGPOW_JSON_PAIR(DigitRun)
ALGPOW_JSON_PAIR(EpsBlocks)
ALGPOW_JSON_PAIR(DigitReport)
ALGPOW_JSON_PAIR(DeSmitReport)

#undef ALGPOW_JSON_PAIR

/* Summary of a scatter run without the per-n entries (those go to CSV). */
json scatter_summary(ScatterSeries const & s);

/* Pretty-printed with two-space indentation and a trailing newline. */
std::string dump_report(json const & j);

} // namespace algpow

#endif /* ALGPOW_REPORT_HPP */
