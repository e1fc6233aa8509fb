#include "twinec/verifier/evidence.hpp"

#include <stdexcept>

namespace twinec {

using Json = nlohmann::ordered_json;

namespace {

std::string place_name(Place v) { return v == 0 ? "R" : std::to_string(v); }

}  // namespace

std::string sigma_string(int sigma) { return sigma > 0 ? "+1" : "-1"; }

Json point_json(const RationalPoint& P) {
    if (P.is_infinity()) return "O";
    return Json{{"x", P.x().str()}, {"y", P.y().str()}};
}

RationalPoint point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "O") return RationalPoint::infinity();
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        throw std::invalid_argument("malformed point");
    }
    return RationalPoint::affine(parse_rational(j.at("x").get<std::string>()),
                                 parse_rational(j.at("y").get<std::string>()));
}

Json torsion_json(const TorsionReport& t) {
    Json points = Json::array();
    for (const auto& P : t.points) points.push_back(point_json(P));
    Json structure = Json::array();
    for (int n : t.structure) structure.push_back(std::to_string(n));
    Json reductions = Json::array();
    for (const auto& r : t.reductions) {
        reductions.push_back({{"ell", std::to_string(r.ell)},
                              {"degree", std::to_string(r.residue_degree)},
                              {"count", to_string(r.count)}});
    }
    Json halving = Json::array();
    for (const auto& h : t.halving) {
        halving.push_back({{"point", point_json(h.point)}, {"halvable", h.halvable}});
    }
    return Json{{"curve", t.curve.equation()},
                {"field", t.field_label},
                {"points", points},
                {"structure", structure},
                {"reductions", reductions},
                {"odd_part_bound", to_string(t.odd_part_bound)},
                {"halving", halving},
                {"complete", t.complete}};
}

Json descent_json(const DescentReport& d) {
    Json pairs = Json::array();
    for (const auto& e : d.surviving_pairs) {
        Json entry{{"d1", to_string(e.pair.d1)}, {"d2", to_string(e.pair.d2)}, {"image_member", e.image_member}};
        if (e.witness) entry["witness"] = point_json(*e.witness);
        pairs.push_back(entry);
    }
    Json gens = Json::array();
    for (const auto& g : d.generators_found) gens.push_back(point_json(g));
    Json locals = Json::array();
    for (const auto& li : d.local_images) {
        locals.push_back({{"place", place_name(li.place)},
                          {"size", std::to_string(li.size())},
                          {"expected", std::to_string(li.expected_size)},
                          {"complete", li.complete()}});
    }
    return Json{{"curve", d.curve.equation()},
                {"candidate_pairs", std::to_string(d.candidate_pairs)},
                {"selmer_size", std::to_string(d.surviving_pairs.size())},
                {"rank_lower", std::to_string(d.rank_lower)},
                {"rank_upper", std::to_string(d.rank_upper)},
                {"resolved", d.resolved},
                {"surviving_pairs", pairs},
                {"generators", gens},
                {"local_images", locals},
                {"height_bound", to_string(d.options.height_bound)},
                {"torsor_bound", std::to_string(d.options.torsor_bound)}};
}

Json census_json(const CensusReport& c) {
    Json points = Json::array();
    for (const auto& P : c.census_points) points.push_back(point_json(P));
    return Json{{"curve", c.curve.equation()},
                {"multiple_bound", std::to_string(c.multiple_bound)},
                {"count", std::to_string(c.count)},
                {"unbounded_hint", c.unbounded_hint},
                {"enumerated", std::to_string(c.enumerated)},
                {"points", points}};
}

Json search_json(const std::vector<SearchHit>& hits, const Integer& height_bound) {
    Json nontorsion = Json::array();
    std::size_t torsion = 0;
    for (const auto& h : hits) {
        if (h.torsion) {
            ++torsion;
        } else {
            nontorsion.push_back(point_json(h.point));
        }
    }
    return Json{{"height_bound", to_string(height_bound)},
                {"points_found", std::to_string(hits.size())},
                {"torsion_found", std::to_string(torsion)},
                {"nontorsion", nontorsion}};
}

Json solution_json(const ConcordantSolution& s) {
    return Json{{"system", to_string(s.system)},
                {"X", to_string(s.X)},
                {"Y", to_string(s.Y)},
                {"S", to_string(s.S)},
                {"T", to_string(s.T)}};
}

Json pell_json(const PellSolution& s) {
    return Json{{"d", to_string(s.d)}, {"sigma", sigma_string(s.sigma)}, {"x", to_string(s.x)}, {"y", to_string(s.y)}};
}

Json simpell_json(const SimPellSolution& s) {
    return Json{{"sigma", sigma_string(s.sigma)}, {"x", to_string(s.x)}, {"y", to_string(s.y)}, {"z", to_string(s.z)}};
}

}  // namespace twinec
