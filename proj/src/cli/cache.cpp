#include "twinec/cli/cache.hpp"

#include <fstream>
#include <ostream>

namespace twinec {

namespace {

// Every requested bound is covered by the record's bound of the same name.
bool covers(const Json& have, const Json& want) {
    for (const auto& [key, value] : want.items()) {
        if (!have.contains(key)) return false;
        try {
            if (parse_integer(have.at(key).get<std::string>()) < parse_integer(value.get<std::string>())) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    return true;
}

bool same_bounds(const Json& have, const Json& want) {
    for (const auto& [key, value] : want.items()) {
        if (!have.contains(key) || have.at(key) != value) return false;
    }
    return true;
}

}  // namespace

ResultCache::ResultCache(std::string path, std::ostream& warnings) : path_(std::move(path)), warnings_(warnings) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        try {
            records_.push_back(report_from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            ++skipped_;
            warnings_ << "warning: cache " << path_ << ": skipping corrupt record at line " << number << "\n";
        }
    }
}

std::optional<TheoremReport> ResultCache::lookup(const TwinPrimePair& pair, int theorem, int sigma,
                                                 const Json& requested_bounds) const {
    const TheoremReport* best = nullptr;
    for (const auto& r : records_) {
        if (!(r.pair == pair) || r.theorem != theorem || r.sigma != sigma) continue;
        if (!covers(r.bounds, requested_bounds)) continue;
        if (same_bounds(r.bounds, requested_bounds)) return r;
        if (!best) best = &r;
    }
    if (best) return *best;
    return std::nullopt;
}

void ResultCache::store(const TheoremReport& report) {
    bool needs_newline = false;
    {
        std::ifstream in(path_, std::ios::binary | std::ios::ate);
        if (in && in.tellg() > 0) {
            in.seekg(-1, std::ios::end);
            needs_newline = in.get() != '\n';
        }
    }
    std::ofstream out(path_, std::ios::app);
    if (!out) {
        warnings_ << "warning: cache " << path_ << " is not writable\n";
        return;
    }
    if (needs_newline) out << "\n";
    out << to_json(report).dump() << "\n";
    records_.push_back(report);
}

}  // namespace twinec
