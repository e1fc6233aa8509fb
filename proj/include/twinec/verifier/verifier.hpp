#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "twinec/curve/curve.hpp"

namespace twinec {

using Json = nlohmann::ordered_json;

/// q = a^2 + b^2 and (a + eps)^2 + (b + delta)^2 = c^2.
struct ConditionBWitness {
    Integer a, b, c;
    int eps = 1;
    int delta = 1;

    friend bool operator==(const ConditionBWitness&, const ConditionBWitness&) = default;
};

struct PairClassification {
    TwinPrimePair pair;
    int p_mod_8 = 0;
    std::optional<ConditionBWitness> witness;
    /// "a", "b", "c-only", or "out-of-theorem" (p = 3 mod 8 with no witness found).
    std::string case_label;
};

enum class Status { Verified, VerifiedAtBound, Consistent, Inconsistent, OutOfScope };

std::string to_string(Status s);

struct TheoremReport {
    TwinPrimePair pair;
    int theorem = 0;
    /// +1 or -1 for statements about E_sigma or system (III); 0 otherwise.
    int sigma = 0;
    std::string sub_case;
    Status status = Status::OutOfScope;
    Json bounds = Json::object();
    Json evidence = Json::object();
};

/// Default witness bound: c <= floor(10 sqrt(q)).
Integer default_witness_bound(const TwinPrimePair& pair);

/**
 * Searches q = a^2 + b^2 (0 < a <= b), both orderings of (a, b), and the sign
 * pairs (+,+), (+,-), (-,+), (-,-) in that order for a Pythagorean hit with
 * c <= witness_bound. The first hit is kept.
 */
PairClassification classify_pair(const TwinPrimePair& pair, const std::optional<Integer>& witness_bound = {});

TheoremReport verify_theorem1(const TwinPrimePair& pair, int sigma, const Integer& height_bound);

TheoremReport verify_theorem2(const TwinPrimePair& pair, const Integer& xy_bound);

/// Census over generators of E_+(Q); xy_bound sizes the independent system (I) search.
TheoremReport verify_theorem3(const TwinPrimePair& pair, const Integer& height_bound, long multiple_bound,
                              const Integer& xy_bound);

TheoremReport verify_theorem4(const TwinPrimePair& pair, int sigma, const Integer& y_bound);

/// {p, q, theorem, sigma, sub_case, status, bounds, evidence}; every number a decimal string.
Json to_json(const TheoremReport& report);

/// Inverse of to_json; throws std::invalid_argument on malformed input.
TheoremReport report_from_json(const Json& j);

}  // namespace twinec
