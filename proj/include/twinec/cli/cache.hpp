#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twinec/verifier/verifier.hpp"

namespace twinec {

/**
 * Append-only cache of theorem reports, one JSON record per line.
 *
 * A record answers a request for the same (p, theorem, sigma) when each
 * requested bound is at most the bound the record was computed with; an
 * exact match is preferred. Unreadable lines are skipped with a warning.
 */
class ResultCache {
public:
    ResultCache(std::string path, std::ostream& warnings);

    std::optional<TheoremReport> lookup(const TwinPrimePair& pair, int theorem, int sigma,
                                        const Json& requested_bounds) const;

    /// Appends to the file and to the in-memory index.
    void store(const TheoremReport& report);

    std::size_t size() const { return records_.size(); }
    std::size_t skipped() const { return skipped_; }

private:
    std::string path_;
    std::ostream& warnings_;
    std::vector<TheoremReport> records_;
    std::size_t skipped_ = 0;
};

}  // namespace twinec
