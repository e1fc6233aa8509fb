#include "twinec/verifier/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "twinec/verifier/evidence.hpp"

namespace twinec {

namespace {

void require_sigma(int sigma) {
    if (sigma != 1 && sigma != -1) {
        throw std::invalid_argument("sigma must be +1 or -1");
    }
}

int mod8(const Integer& p) { return static_cast<int>(Integer(p % 8).get_si()); }

// Inconsistent dominates, then consistent; verified-at-bound dominates verified.
Status combine(Status a, Status b) {
    auto rank = [](Status s) {
        switch (s) {
            case Status::Inconsistent: return 4;
            case Status::Consistent: return 3;
            case Status::VerifiedAtBound: return 2;
            case Status::Verified: return 1;
            case Status::OutOfScope: return 0;
        }
        return 0;
    };
    return rank(a) >= rank(b) ? a : b;
}

struct Claims {
    Json list = Json::array();
    Status overall = Status::OutOfScope;

    void add(const std::string& id, const std::string& statement, Status s, Json detail = Json::object()) {
        Json entry{{"id", id}, {"statement", statement}, {"status", to_string(s)}};
        if (!detail.empty()) entry["detail"] = std::move(detail);
        list.push_back(std::move(entry));
        overall = combine(overall, s);
    }
};

Json witness_json(const ConditionBWitness& w) {
    return Json{{"a", to_string(w.a)},
                {"b", to_string(w.b)},
                {"c", to_string(w.c)},
                {"eps", sigma_string(w.eps)},
                {"delta", sigma_string(w.delta)}};
}

Json classification_json(const PairClassification& c) {
    Json j{{"p_mod_8", std::to_string(c.p_mod_8)}, {"case", c.case_label}};
    j["witness"] = c.witness ? witness_json(*c.witness) : Json(nullptr);
    return j;
}

bool full_torsion(const TorsionReport& t) { return t.complete && t.structure == std::vector<int>{2, 2}; }

}  // namespace

std::string to_string(Status s) {
    switch (s) {
        case Status::Verified: return "verified";
        case Status::VerifiedAtBound: return "verified-at-bound";
        case Status::Consistent: return "consistent";
        case Status::Inconsistent: return "inconsistent";
        case Status::OutOfScope: return "out-of-scope";
    }
    return "out-of-scope";
}

Integer default_witness_bound(const TwinPrimePair& pair) { return isqrt_floor(100 * pair.q()); }

PairClassification classify_pair(const TwinPrimePair& pair, const std::optional<Integer>& witness_bound) {
    PairClassification out{pair, mod8(pair.p()), std::nullopt, ""};
    const Integer& q = pair.q();
    const Integer c_max = witness_bound ? *witness_bound : default_witness_bound(pair);
    for (Integer a = 1; 2 * a * a <= q && !out.witness; ++a) {
        auto b = integer_sqrt(q - a * a);
        if (!b) continue;
        const std::pair<Integer, Integer> orders[2] = {{a, *b}, {*b, a}};
        for (const auto& [u, v] : orders) {
            for (auto [eps, delta] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
                Integer s = (u + eps) * (u + eps) + (v + delta) * (v + delta);
                auto c = integer_sqrt(s);
                if (c && *c <= c_max) {
                    out.witness = ConditionBWitness{u, v, *c, eps, delta};
                    break;
                }
            }
            if (out.witness) break;
        }
    }
    switch (out.p_mod_8) {
        case 5: out.case_label = "a"; break;
        case 3: out.case_label = out.witness ? "b" : "out-of-theorem"; break;
        default: out.case_label = "c-only"; break;
    }
    return out;
}

TheoremReport verify_theorem1(const TwinPrimePair& pair, int sigma, const Integer& height_bound) {
    require_sigma(sigma);
    const PairClassification cls = classify_pair(pair);
    const Curve e(pair, sigma), plus(pair, 1), minus(pair, -1);
    const TorsionReport tq_plus = torsion_over_Q(plus);
    const TorsionReport tq_minus = torsion_over_Q(minus);
    const TorsionReport tk = torsion_over_K(e);
    DescentOptions options;
    options.height_bound = height_bound;
    const KRankReport rk = rank_over_K(pair, sigma, options);
    const DescentReport& dp = rk.rank_plus_Q;
    const DescentReport& dm = rk.rank_minus_Q;
    const bool torsion_ok = full_torsion(tq_plus) && full_torsion(tq_minus) && full_torsion(tk);

    TheoremReport r{pair, 1, sigma, "", Status::OutOfScope, Json::object(), Json::object()};
    r.sub_case = cls.case_label == "out-of-theorem" ? "b-hypothesis-unmet" : cls.case_label;
    r.bounds = Json{{"height_bound", to_string(height_bound)},
                    {"torsor_bound", std::to_string(options.torsor_bound)},
                    {"witness_bound", to_string(default_witness_bound(pair))}};

    Claims claims;
    if (cls.case_label == "a") {
        Status s = rk.rank_lower > 0                    ? Status::Inconsistent
                   : rk.rank_upper == 0 && torsion_ok ? Status::Verified
                                                        : Status::Consistent;
        claims.add("1(a)", "rank E(K) = 0 and E(K) = Z/2 + Z/2", s);
    }
    if (cls.case_label == "b") {
        Status sb = rk.rank_lower > 1                                   ? Status::Inconsistent
                    : rk.resolved() && rk.rank_upper == 1 && torsion_ok ? Status::Verified
                                                                         : Status::Consistent;
        claims.add("1(b)", "rank E(K) = 1 and E(K) = Z/2 + Z/2 + Z", sb);
        Status sd = dp.rank_lower > 1 ? Status::Inconsistent
                    : dp.resolved && dp.rank_upper == 1 && !dp.generators_found.empty() && full_torsion(tq_plus)
                        ? Status::Verified
                        : Status::Consistent;
        Json detail{{"generator", dp.generators_found.empty() ? Json(nullptr) : point_json(dp.generators_found[0])},
                    {"rank_E_minus_Q", dm.resolved ? Json(std::to_string(dm.rank_upper)) : Json(nullptr)}};
        claims.add("1(d)", "rank E_+(Q) = 1 and E_+(Q) = Z/2 + Z/2 + Z", sd, detail);
    }
    if (cls.case_label == "out-of-theorem") {
        claims.add("1(b)", "hypothesis unmet: no witness with c <= " + to_string(default_witness_bound(pair)),
                   Status::OutOfScope);
    }
    // The Selmer bound is an upper bound only: a large one contradicts nothing.
    Status sc = rk.rank_lower > 3 ? Status::Inconsistent : rk.rank_upper <= 3 ? Status::Verified : Status::Consistent;
    claims.add("1(c)", "rank E(K) <= 3", sc,
               Json{{"rank_lower", std::to_string(rk.rank_lower)}, {"rank_upper", std::to_string(rk.rank_upper)}});

    r.status = claims.overall;
    r.evidence = Json{{"classification", classification_json(cls)},
                      {"claims", claims.list},
                      {"rank_K",
                       {{"lower", std::to_string(rk.rank_lower)},
                        {"upper", std::to_string(rk.rank_upper)},
                        {"resolved", rk.resolved()}}},
                      {"torsion", {{"Q_plus", torsion_json(tq_plus)}, {"Q_minus", torsion_json(tq_minus)}, {"K", torsion_json(tk)}}},
                      {"descent", {{"E_plus", descent_json(dp)}, {"E_minus", descent_json(dm)}}},
                      {"point_search",
                       {{"E_plus", search_json(point_search(plus, height_bound), height_bound)},
                        {"E_minus", search_json(point_search(minus, height_bound), height_bound)}}}};
    return r;
}

TheoremReport verify_theorem2(const TwinPrimePair& pair, const Integer& xy_bound) {
    const bool applicable = mod8(pair.p()) == 5;
    TheoremReport r{pair, 2, 0, applicable ? "p=5 mod 8" : "hypothesis-unmet", Status::OutOfScope,
                    Json{{"xy_bound", to_string(xy_bound)}}, Json::object()};
    Json systems = Json::object();
    bool any = false;
    bool all_reverified = true;
    for (ConcordantSystem sys : {ConcordantSystem::I, ConcordantSystem::II}) {
        auto sols = search_concordant(pair, sys, xy_bound);
        Json list = Json::array();
        for (const auto& s : sols) {
            Json entry = solution_json(s);
            bool ok = satisfies_system(s, pair) && is_primary(s);
            entry["reverified"] = ok;
            all_reverified = all_reverified && ok;
            list.push_back(entry);
        }
        any = any || !sols.empty();
        systems[to_string(sys)] = Json{{"count", std::to_string(sols.size())}, {"solutions", list}};
    }
    if (applicable) {
        r.status = !any ? Status::VerifiedAtBound : all_reverified ? Status::Inconsistent : Status::Consistent;
    }
    r.evidence = Json{{"p_mod_8", std::to_string(mod8(pair.p()))}, {"informational", !applicable}, {"systems", systems}};
    return r;
}

TheoremReport verify_theorem3(const TwinPrimePair& pair, const Integer& height_bound, long multiple_bound,
                              const Integer& xy_bound) {
    const Curve plus(pair, 1);
    DescentOptions options;
    options.height_bound = height_bound;
    const DescentReport d = two_descent(plus, options);
    const CensusReport census = n2k_census(plus, d.generators_found, multiple_bound);

    std::vector<ConcordantSolution> produced;
    Json mapped = Json::array();
    std::size_t n_I = 0, n_II = 0, n_unclassified = 0;
    bool bad_solution = false;
    for (const auto& P : census.census_points) {
        Json entry{{"point", point_json(P)}};
        std::optional<ConcordantSolution> sol;
        try {
            sol = point_to_solution(P, pair);
        } catch (const std::invalid_argument& e) {
            entry["error"] = e.what();
        }
        if (!sol) {
            ++n_unclassified;
            entry["classification"] = "unclassified";
        } else {
            bool ok = satisfies_system(*sol, pair) && is_primary(*sol);
            bad_solution = bad_solution || !ok;
            entry["classification"] = to_string(sol->system);
            entry["solution"] = solution_json(*sol);
            entry["reverified"] = ok;
            if (sol->system == ConcordantSystem::I) {
                ++n_I;
                ConcordantSolution c = canonical_positive(*sol);
                if (std::find(produced.begin(), produced.end(), c) == produced.end()) produced.push_back(c);
            } else {
                ++n_II;
            }
        }
        mapped.push_back(entry);
    }
    const auto found = search_concordant(pair, ConcordantSystem::I, xy_bound);
    std::vector<ConcordantSolution> distinct = produced;
    for (const auto& s : found) {
        if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
    }
    const bool rank_zero = d.resolved && d.rank_upper == 0;

    Claims claims;
    Status s31;
    if (census.count == 0) {
        s31 = rank_zero ? Status::Verified : Status::VerifiedAtBound;
    } else {
        s31 = !produced.empty() || !found.empty() ? Status::Verified : Status::Consistent;
    }
    if (bad_solution) s31 = Status::Inconsistent;
    claims.add("3.1", "n_2K^- != 0 implies (I) has a primary solution", s31,
               Json{{"census_count", std::to_string(census.count)}, {"solutions_produced", std::to_string(produced.size())}});
    Status s32 = n_I > distinct.size() ? Status::Inconsistent : rank_zero ? Status::Verified : Status::VerifiedAtBound;
    claims.add("3.2", "n_2K^- <= n(I)", s32,
               Json{{"census_I_count", std::to_string(n_I)}, {"distinct_I_solutions", std::to_string(distinct.size())}});
    if (n_II + n_unclassified > 0) {
        claims.add("split", "census points outside system (I)", Status::Consistent,
                   Json{{"II", std::to_string(n_II)}, {"unclassified", std::to_string(n_unclassified)}});
    }

    Json found_json = Json::array();
    for (const auto& s : found) found_json.push_back(solution_json(s));
    TheoremReport r{pair, 3, 1, "3.1+3.2", claims.overall,
                    Json{{"height_bound", to_string(height_bound)},
                         {"torsor_bound", std::to_string(options.torsor_bound)},
                         {"multiple_bound", std::to_string(multiple_bound)},
                         {"xy_bound", to_string(xy_bound)}},
                    Json::object()};
    r.evidence = Json{{"claims", claims.list},
                      {"generators", descent_json(d)["generators"]},
                      {"rank_E_plus_Q", {{"lower", std::to_string(d.rank_lower)}, {"upper", std::to_string(d.rank_upper)}}},
                      {"census", census_json(census)},
                      {"split", {{"I", std::to_string(n_I)}, {"II", std::to_string(n_II)}, {"unclassified", std::to_string(n_unclassified)}}},
                      {"mapped", mapped},
                      {"system_I_search", {{"count", std::to_string(found.size())}, {"solutions", found_json}}}};
    return r;
}

TheoremReport verify_theorem4(const TwinPrimePair& pair, int sigma, const Integer& y_bound) {
    require_sigma(sigma);
    const int m = mod8(pair.p());
    const bool case_a = m == 5;
    const bool case_b = (m == 3 || m == 5) && sigma == -1;
    std::string label = case_a && case_b ? "a+b" : case_a ? "a" : case_b ? "b" : "none";

    const auto sols = solve_simultaneous(pair, sigma, y_bound);
    Json list = Json::array();
    bool all_reverified = true;
    for (const auto& s : sols) {
        Json entry = simpell_json(s);
        bool ok = s.x * s.x - pair.p() * s.y * s.y == sigma && s.z * s.z - pair.q() * s.y * s.y == sigma;
        all_reverified = all_reverified && ok;
        entry["reverified"] = ok;
        entry["point"] = point_json(simpell_to_point(s));
        list.push_back(entry);
    }

    Json obstruction = nullptr;
    if (sigma == -1) {
        for (const Integer& ell : {pair.p(), pair.q()}) {
            if (auto o = minus_one_obstruction(ell)) {
                obstruction = Json{{"equation", "x^2 - " + to_string(ell) + " y^2 = -1"},
                                   {"reason", "-1 is a non-residue mod " + to_string(*o)}};
                break;
            }
        }
    }
    const DescentReport d = two_descent(Curve(pair, sigma));
    const bool rank_zero = d.resolved && d.rank_upper == 0;

    TheoremReport r{pair, 4, sigma, label + ", sigma=" + sigma_string(sigma), Status::OutOfScope,
                    Json{{"y_bound", to_string(y_bound)}}, Json::object()};
    if (case_a || case_b) {
        if (!sols.empty()) {
            r.status = all_reverified ? Status::Inconsistent : Status::Consistent;
        } else {
            r.status = obstruction.is_null() ? Status::VerifiedAtBound : Status::Verified;
        }
    }
    r.evidence = Json{{"p_mod_8", std::to_string(m)},
                      {"informational", !(case_a || case_b)},
                      {"solutions", list},
                      {"single_equation_obstruction", obstruction},
                      {"rank_E_sigma_Q_zero", rank_zero},
                      {"rank_zero_forces_empty", rank_zero}};
    return r;
}

Json to_json(const TheoremReport& r) {
    return Json{{"p", to_string(r.pair.p())},
                {"q", to_string(r.pair.q())},
                {"theorem", std::to_string(r.theorem)},
                {"sigma", r.sigma == 0 ? Json(nullptr) : Json(sigma_string(r.sigma))},
                {"sub_case", r.sub_case},
                {"status", to_string(r.status)},
                {"bounds", r.bounds},
                {"evidence", r.evidence}};
}

TheoremReport report_from_json(const Json& j) {
    try {
        TheoremReport r{TwinPrimePair::from_p(parse_integer(j.at("p").get<std::string>())),
                        std::stoi(j.at("theorem").get<std::string>()),
                        0,
                        j.at("sub_case").get<std::string>(),
                        Status::OutOfScope,
                        j.at("bounds"),
                        j.at("evidence")};
        const Json& s = j.at("sigma");
        if (!s.is_null()) r.sigma = s.get<std::string>() == "+1" ? 1 : -1;
        const std::string status = j.at("status").get<std::string>();
        bool known = false;
        for (Status cand : {Status::Verified, Status::VerifiedAtBound, Status::Consistent, Status::Inconsistent,
                            Status::OutOfScope}) {
            if (to_string(cand) == status) {
                r.status = cand;
                known = true;
            }
        }
        if (!known) throw std::invalid_argument("unknown status " + status);
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

}  // namespace twinec
