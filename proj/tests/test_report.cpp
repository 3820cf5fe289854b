#include <doctest.h>

#include "algpow/error.hpp"
#include "algpow/report.hpp"
#include "fixtures.hpp"

using namespace algpow;
using namespace fx;

namespace {

// x -> json -> T -> json must reproduce the same bytes
template <class T> void round_trip(T const & x)
{
    json a = x;
    T y = a.get<T>();
    json b = y;
    CHECK(a == b);
    CHECK(dump_report(a) == dump_report(b));
}

} // namespace

TEST_CASE("scalars")
{
    json r = frac(-3, 7);
    CHECK(r == "-3/7");
    CHECK(json(Rat(4)) == "4");
    CHECK(json(Rat(4)).get<Rat>() == 4);
    CHECK(json("1/5").get<Rat>() == frac(1, 5));
    CHECK(json(Int(42)) == 42);
    Int big("123456789012345678901234567890");
    CHECK(json(big) == "123456789012345678901234567890");
    CHECK(json(big).get<Int>() == big);
    CHECK(json(17).get<Int>() == 17);
    CHECK(json(ip({-1, -1, 1})).dump() == "[-1,-1,1]");
}

TEST_CASE("round trips")
{
    auto s = salem();
    round_trip(ip({1, -25, 1, -25, 1}));
    round_trip(s->box());
    round_trip(classify_number(*s));
    round_trip(trace_residue_orbit(rat_in(s, 1), 25));
    round_trip(salem_limit_intervals(rat_in(s, 1), 25));
    round_trip(pv_limit_points(rat_in(phi(), frac(1, 5))));
    ScatterSeries ser = scatter_series(rat_in(phi(), 1), 40, 64, 1);
    round_trip(fit_decay(ser, 10));
    round_trip(coverage_report(ser, pv_limit_points(rat_in(phi(), 1)), 10, frac(1, 1000)));
    round_trip(ratio_unity_orders(ip({-1, 0, -1, 0, 1})));
    round_trip(find_pv_power(num({-1, 0, -1, 0, 1})));
    round_trip(find_pv_power(salem()));
    round_trip(decide_hardy(rat_in(phi(), 1)));
    round_trip(decide_hardy(rat_in(phi(), frac(1, 5))));
    round_trip(decide_mahler(rat_in(num({-1, 0, -1, 0, 1}), 1)));
    round_trip(zero_trace_real(num({4, 0, -6, 0, 1})));
    round_trip(digit_block_analyzer(liouville_digits(200), 10, {frac(1, 2), frac(1, 4)}));
    round_trip(de_smit_check(*phi()));
}

TEST_CASE("decision schema")
{
    json j = decide_hardy(rat_in(phi(), 1));
    for (char const * key : {"verdict", "s", "t", "k", "reason_code", "cross_check"})
        CHECK(j.contains(key));
    CHECK(j["verdict"] == "yes");
    CHECK(j["k"] == 0);
    CHECK(j["s"].is_null());
    CHECK(j["cross_check"]["c0"].is_string());
    CHECK(j["cross_check"]["n_range"] == json::array({20, 200}));

    json l = salem_limit_intervals(rat_in(salem(), 1), 25);
    CHECK(l["union"] == json::parse(R"([["0","6/25"]])"));
    CHECK(l["measure"] == "6/25");
    json o = trace_residue_orbit(rat_in(salem(), 1), 25);
    CHECK(o["cycle"] == json::array({4, 0, -2, 0, -2, 0}));
    CHECK(o["period"] == 6);
}

TEST_CASE("scatter summary omits entries")
{
    ScatterSeries ser = scatter_series(rat_in(phi(), 1), 30, 64, 1);
    json j = scatter_summary(ser);
    CHECK(j["n_max"] == 30);
    CHECK(!j.contains("entries"));
    CHECK(dump_report(j).back() == '\n');
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS(json("1/x").get<Rat>());
    CHECK_THROWS(json::parse(R"({"b": 5})").get<ResidueOrbit>());
}
