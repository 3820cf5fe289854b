#include "algpow/report.hpp"

#include "algpow/error.hpp"

namespace nlohmann {

void adl_serializer<algpow::Rat>::to_json(json & j, algpow::Rat const & q) { j = algpow::to_string(q); }

void adl_serializer<algpow::Rat>::from_json(json const & j, algpow::Rat & q)
{
    if (j.is_string())
        q = algpow::parse_rational(j.get<std::string>());
    else if (j.is_number_integer())
        q = algpow::Rat(j.get<long>());
    else
        throw algpow::Error(algpow::errc::parse, "expected a rational, got " + j.dump());
}

void adl_serializer<algpow::Int>::to_json(json & j, algpow::Int const & z)
{
    if (z.fits_slong_p())
        j = z.get_si();
    else
        j = z.get_str();
}

void adl_serializer<algpow::Int>::from_json(json const & j, algpow::Int & z)
{
    if (j.is_string())
        z = algpow::parse_integer(j.get<std::string>());
    else if (j.is_number_integer())
        z = algpow::Int(j.get<long>());
    else
        throw algpow::Error(algpow::errc::parse, "expected an integer, got " + j.dump());
}

} // namespace nlohmann

namespace algpow {

namespace {

template <class T> void put_opt(json & j, char const * key, std::optional<T> const & v)
{
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

template <class T> void get_opt(json const & j, char const * key, std::optional<T> & v)
{
    if (!j.contains(key) || j.at(key).is_null())
        v.reset();
    else
        v = j.at(key).get<T>();
}

std::string kind_name(LimitSet::Kind k) { return k == LimitSet::Kind::points ? "points" : "intervals"; }

LimitSet::Kind kind_from(std::string const & s)
{
    if (s == "points")
        return LimitSet::Kind::points;
    if (s == "intervals")
        return LimitSet::Kind::intervals;
    throw Error(errc::parse, "unknown limit set kind: " + s);
}

json pair_list(std::vector<std::pair<Rat, Rat>> const & v)
{
    json a = json::array();
    for (auto const & [lo, hi] : v)
        a.push_back(json::array({lo, hi}));
    return a;
}

std::vector<std::pair<Rat, Rat>> pair_list_from(json const & j)
{
    std::vector<std::pair<Rat, Rat>> v;
    for (auto const & e : j)
        v.emplace_back(e.at(0).get<Rat>(), e.at(1).get<Rat>());
    return v;
}

} // namespace

void to_json(json & j, IntPoly const & p) { j = p.coeffs(); }

void from_json(json const & j, IntPoly & p)
{
    if (!j.is_array())
        throw Error(errc::parse, "polynomial must be a JSON array");
    p = IntPoly(j.get<std::vector<Int>>());
}

void to_json(json & j, RealInterval const & v) { j = json::array({v.lo, v.hi}); }

void from_json(json const & j, RealInterval & v) { v = RealInterval(j.at(0).get<Rat>(), j.at(1).get<Rat>()); }

void to_json(json & j, RootBox const & v)
{
    j = json{{"re", v.re}, {"im", v.im}, {"radius", v.radius}, {"real", v.real}};
}

void from_json(json const & j, RootBox & v)
{
    j.at("re").get_to(v.re);
    j.at("im").get_to(v.im);
    j.at("radius").get_to(v.radius);
    j.at("real").get_to(v.real);
}

void to_json(json & j, Classification const & v)
{
    j = json{{"kind", to_string(v.kind)},
             {"minpoly", v.minpoly},
             {"designated", v.designated},
             {"boxes", v.boxes},
             {"inside", v.inside},
             {"on", v.on},
             {"outside", v.outside},
             {"off_circle_margin", v.off_circle_margin},
             {"trace", v.trace},
             {"algebraic_integer", v.algebraic_integer},
             {"precision", v.precision}};
}

void from_json(json const & j, Classification & v)
{
    v.kind = number_kind_from_string(j.at("kind").get<std::string>());
    j.at("minpoly").get_to(v.minpoly);
    j.at("designated").get_to(v.designated);
    j.at("boxes").get_to(v.boxes);
    j.at("inside").get_to(v.inside);
    j.at("on").get_to(v.on);
    j.at("outside").get_to(v.outside);
    j.at("off_circle_margin").get_to(v.off_circle_margin);
    j.at("trace").get_to(v.trace);
    j.at("algebraic_integer").get_to(v.algebraic_integer);
    j.at("precision").get_to(v.precision);
}

void to_json(json & j, ResidueOrbit const & v)
{
    j = json{{"b", v.b},
             {"prefix", v.prefix},
             {"cycle", v.cycle},
             {"preperiod", v.preperiod()},
             {"period", v.period()}};
}

void from_json(json const & j, ResidueOrbit & v)
{
    j.at("b").get_to(v.b);
    j.at("prefix").get_to(v.prefix);
    j.at("cycle").get_to(v.cycle);
}

void to_json(json & j, LimitPiece const & v)
{
    j = json{{"residue", v.residue},   {"radius", v.radius},       {"radius_exact", v.radius_exact}, {"lo", v.lo},
             {"hi", v.hi},             {"folded_lo", v.folded_lo}, {"folded_hi", v.folded_hi}};
}

void from_json(json const & j, LimitPiece & v)
{
    j.at("residue").get_to(v.residue);
    j.at("radius").get_to(v.radius);
    j.at("radius_exact").get_to(v.radius_exact);
    j.at("lo").get_to(v.lo);
    j.at("hi").get_to(v.hi);
    j.at("folded_lo").get_to(v.folded_lo);
    j.at("folded_hi").get_to(v.folded_hi);
}

void to_json(json & j, LimitSet const & v)
{
    j = json{{"kind", kind_name(v.kind)},
             {"b", v.b},
             {"shift", v.shift},
             {"seed", v.seed},
             {"orbit", v.orbit},
             {"pieces", v.pieces},
             {"points", v.points},
             {"folded", pair_list(v.folded)},
             {"union", pair_list(v.union_set)},
             {"measure", v.measure},
             {"zero_is_limit", v.zero_is_limit},
             {"zero_unique", v.zero_unique}};
}

void from_json(json const & j, LimitSet & v)
{
    v.kind = kind_from(j.at("kind").get<std::string>());
    j.at("b").get_to(v.b);
    j.at("shift").get_to(v.shift);
    j.at("seed").get_to(v.seed);
    j.at("orbit").get_to(v.orbit);
    j.at("pieces").get_to(v.pieces);
    j.at("points").get_to(v.points);
    v.folded = pair_list_from(j.at("folded"));
    v.union_set = pair_list_from(j.at("union"));
    j.at("measure").get_to(v.measure);
    j.at("zero_is_limit").get_to(v.zero_is_limit);
    j.at("zero_unique").get_to(v.zero_unique);
}

void to_json(json & j, DecayFit const & v)
{
    j = json{{"modulus", v.modulus}, {"residue", v.residue}, {"n_from", v.n_from}, {"count", v.count},
             {"c_bound", v.c_bound}, {"c_fit", v.c_fit},     {"decays", v.decays}};
}

void from_json(json const & j, DecayFit & v)
{
    j.at("modulus").get_to(v.modulus);
    j.at("residue").get_to(v.residue);
    j.at("n_from").get_to(v.n_from);
    j.at("count").get_to(v.count);
    j.at("c_bound").get_to(v.c_bound);
    j.at("c_fit").get_to(v.c_fit);
    j.at("decays").get_to(v.decays);
}

void to_json(json & j, CoverageReport const & v)
{
    j = json{{"n_min", v.n_min},   {"tol", v.tol},   {"considered", v.considered}, {"inside", v.inside},
             {"hits", v.hits},     {"measure", v.measure}};
    put_opt(j, "fraction", v.fraction);
}

void from_json(json const & j, CoverageReport & v)
{
    j.at("n_min").get_to(v.n_min);
    j.at("tol").get_to(v.tol);
    j.at("considered").get_to(v.considered);
    j.at("inside").get_to(v.inside);
    j.at("hits").get_to(v.hits);
    j.at("measure").get_to(v.measure);
    get_opt(j, "fraction", v.fraction);
}

void to_json(json & j, RatioPair const & v) { j = json{{"i", v.i}, {"j", v.j}, {"order", v.order}}; }

void from_json(json const & j, RatioPair & v)
{
    j.at("i").get_to(v.i);
    j.at("j").get_to(v.j);
    j.at("order").get_to(v.order);
}

void to_json(json & j, RatioUnityReport const & v)
{
    j = json{{"ratio_poly", v.ratio_poly}, {"orders", v.orders},   {"pairs", v.pairs},
             {"s_candidate", v.s_candidate}, {"h_lower", v.h_lower}};
}

void from_json(json const & j, RatioUnityReport & v)
{
    j.at("ratio_poly").get_to(v.ratio_poly);
    j.at("orders").get_to(v.orders);
    j.at("pairs").get_to(v.pairs);
    j.at("s_candidate").get_to(v.s_candidate);
    j.at("h_lower").get_to(v.h_lower);
}

void to_json(json & j, PvPowerResult const & v)
{
    j = json{{"success", v.success}, {"s", v.s}, {"reason_code", v.reason_code}, {"reason", v.reason}};
    put_opt(j, "power_minpoly", v.power_minpoly);
    put_opt(j, "power_root_index", v.power_root_index);
    if (v.power_kind)
        j["power_kind"] = to_string(*v.power_kind);
    else
        j["power_kind"] = nullptr;
}

void from_json(json const & j, PvPowerResult & v)
{
    j.at("success").get_to(v.success);
    j.at("s").get_to(v.s);
    j.at("reason_code").get_to(v.reason_code);
    j.at("reason").get_to(v.reason);
    get_opt(j, "power_minpoly", v.power_minpoly);
    get_opt(j, "power_root_index", v.power_root_index);
    std::optional<std::string> k;
    get_opt(j, "power_kind", k);
    v.power_kind = k ? std::optional<NumberKind>(number_kind_from_string(*k)) : std::nullopt;
}

void to_json(json & j, CrossCheck const & v)
{
    j = json{{"performed", v.performed},
             {"passed", v.passed},
             {"method", v.method},
             {"n_range", json::array({v.n_from, v.n_to})},
             {"modulus", v.modulus},
             {"residue", v.residue},
             {"limit_points", v.limit_points}};
    put_opt(j, "c0", v.c0);
}

void from_json(json const & j, CrossCheck & v)
{
    j.at("performed").get_to(v.performed);
    j.at("passed").get_to(v.passed);
    j.at("method").get_to(v.method);
    v.n_from = j.at("n_range").at(0).get<long>();
    v.n_to = j.at("n_range").at(1).get<long>();
    j.at("modulus").get_to(v.modulus);
    j.at("residue").get_to(v.residue);
    j.at("limit_points").get_to(v.limit_points);
    get_opt(j, "c0", v.c0);
}

void to_json(json & j, Decision const & v)
{
    j = json{{"problem", v.problem},
             {"verdict", to_string(v.verdict)},
             {"reason_code", v.reason_code},
             {"reason", v.reason},
             {"cross_check", v.cross_check}};
    put_opt(j, "s", v.s);
    put_opt(j, "t", v.t);
    put_opt(j, "k", v.k);
    put_opt(j, "b", v.b);
}

void from_json(json const & j, Decision & v)
{
    j.at("problem").get_to(v.problem);
    v.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    j.at("reason_code").get_to(v.reason_code);
    j.at("reason").get_to(v.reason);
    j.at("cross_check").get_to(v.cross_check);
    get_opt(j, "s", v.s);
    get_opt(j, "t", v.t);
    get_opt(j, "k", v.k);
    get_opt(j, "b", v.b);
}

void to_json(json & j, ZeroTraceReport const & v)
{
    j = json{{"h", v.h},
             {"h_exactness", v.h_exactness},
             {"power_minpoly", v.power_minpoly},
             {"h_prime", v.h_prime},
             {"infinitely_many_zeros", v.infinitely_many_zeros},
             {"n_max", v.n_max},
             {"zeros", v.zeros},
             {"pattern_verified", v.pattern_verified}};
}

void from_json(json const & j, ZeroTraceReport & v)
{
    j.at("h").get_to(v.h);
    j.at("h_exactness").get_to(v.h_exactness);
    j.at("power_minpoly").get_to(v.power_minpoly);
    j.at("h_prime").get_to(v.h_prime);
    j.at("infinitely_many_zeros").get_to(v.infinitely_many_zeros);
    j.at("n_max").get_to(v.n_max);
    j.at("zeros").get_to(v.zeros);
    j.at("pattern_verified").get_to(v.pattern_verified);
}

void to_json(json & j, DigitRun const & v)
{
    j = json{{"start", v.start}, {"length", v.length}, {"digit", std::string(1, v.digit)}, {"trailing", v.trailing}};
}

void from_json(json const & j, DigitRun & v)
{
    j.at("start").get_to(v.start);
    j.at("length").get_to(v.length);
    auto d = j.at("digit").get<std::string>();
    if (d.size() != 1)
        throw Error(errc::parse, "digit must be a single character");
    v.digit = d[0];
    j.at("trailing").get_to(v.trailing);
}

void to_json(json & j, EpsBlocks const & v)
{
    j = json{{"eps", v.eps},
             {"positions", v.positions},
             {"completed_half", v.completed_half},
             {"completed_full", v.completed_full},
             {"trailing_long", v.trailing_long},
             {"verdict", v.verdict}};
}

void from_json(json const & j, EpsBlocks & v)
{
    j.at("eps").get_to(v.eps);
    j.at("positions").get_to(v.positions);
    j.at("completed_half").get_to(v.completed_half);
    j.at("completed_full").get_to(v.completed_full);
    j.at("trailing_long").get_to(v.trailing_long);
    j.at("verdict").get_to(v.verdict);
}

void to_json(json & j, DigitReport const & v)
{
    j = json{{"base", v.base}, {"length", v.length}, {"runs", v.runs}, {"per_eps", v.per_eps}};
}

void from_json(json const & j, DigitReport & v)
{
    j.at("base").get_to(v.base);
    j.at("length").get_to(v.length);
    j.at("runs").get_to(v.runs);
    j.at("per_eps").get_to(v.per_eps);
}

void to_json(json & j, DeSmitReport const & v)
{
    j = json{{"degree", v.degree}, {"bound", v.bound}, {"traces", v.traces}, {"certified", v.certified}};
    put_opt(j, "first_failure", v.first_failure);
}

void from_json(json const & j, DeSmitReport & v)
{
    j.at("degree").get_to(v.degree);
    j.at("bound").get_to(v.bound);
    j.at("traces").get_to(v.traces);
    j.at("certified").get_to(v.certified);
    get_opt(j, "first_failure", v.first_failure);
}

json scatter_summary(ScatterSeries const & s)
{
    return json{{"n_max", s.n_max},
                {"guard_bits", s.guard_bits},
                {"working_bits", s.working_bits},
                {"rows", s.entries.size()},
                {"decay", s.decay}};
}

std::string dump_report(json const & j) { return j.dump(2) + "\n"; }

} // namespace algpow
