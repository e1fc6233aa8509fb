#pragma once

// JSON views of the lower-level reports. Numbers are decimal strings.

#include "json.hpp"
#include "twinec/diophantine/concordant.hpp"
#include "twinec/diophantine/pell.hpp"
#include "twinec/rank/census.hpp"
#include "twinec/rank/descent.hpp"
#include "twinec/rank/point_search.hpp"
#include "twinec/rank/torsion.hpp"

namespace twinec {

nlohmann::ordered_json point_json(const RationalPoint& P);
RationalPoint point_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json torsion_json(const TorsionReport& t);
nlohmann::ordered_json descent_json(const DescentReport& d);
nlohmann::ordered_json census_json(const CensusReport& c);
nlohmann::ordered_json search_json(const std::vector<SearchHit>& hits, const Integer& height_bound);
nlohmann::ordered_json solution_json(const ConcordantSolution& s);
nlohmann::ordered_json pell_json(const PellSolution& s);
nlohmann::ordered_json simpell_json(const SimPellSolution& s);

std::string sigma_string(int sigma);

}  // namespace twinec
