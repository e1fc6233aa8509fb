#include "twinec/cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "twinec/arith/squarefree.hpp"
#include "twinec/cli/cache.hpp"
#include "twinec/diophantine/pell.hpp"
#include "twinec/verifier/evidence.hpp"

namespace twinec {

namespace {

struct Task {
    TwinPrimePair pair;
    int theorem;
    int sigma;
};

std::string str(const Integer& n) { return to_string(n); }

void add_pair_tasks(std::vector<Task>& tasks, const TwinPrimePair& pair, const RunConfig& config) {
    tasks.push_back({pair, 1, config.sigma});
    tasks.push_back({pair, 2, 0});
    tasks.push_back({pair, 3, 1});
    tasks.push_back({pair, 4, 1});
    tasks.push_back({pair, 4, -1});
}

TwinPrimePair require_pair(const Integer& p) {
    if (!is_twin_prime_p(p)) {
        throw std::invalid_argument(str(p) + " is not the smaller member of a twin-prime pair");
    }
    return TwinPrimePair::from_p(p);
}

// Cache lookups first, then the misses on a pool of config.jobs workers.
ReportEnvelope execute(const RunConfig& config, const std::vector<Task>& tasks, std::ostream& warnings) {
    std::optional<ResultCache> cache;
    if (config.cache_path) cache.emplace(*config.cache_path, warnings);

    std::vector<std::optional<TheoremReport>> slots(tasks.size());
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (cache) {
            slots[i] = cache->lookup(tasks[i].pair, tasks[i].theorem, tasks[i].sigma,
                                     requested_bounds(tasks[i].theorem, config));
        }
        if (!slots[i]) todo.push_back(i);
    }

    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < todo.size(); k = next++) {
            const Task& t = tasks[todo[k]];
            try {
                slots[todo[k]] = run_theorem(t.pair, t.theorem, t.sigma, config);
            } catch (...) {
                errors[todo[k]] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(todo.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    ReportEnvelope env;
    env.config = config_json(config);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (cache && std::find(todo.begin(), todo.end(), i) != todo.end()) cache->store(*slots[i]);
        env.reports.push_back(std::move(*slots[i]));
    }
    return env;
}

// One-line summary of a report for the table view.
std::string note(const TheoremReport& r) {
    const Json& e = r.evidence;
    std::ostringstream os;
    auto points = [](const Json& list) {
        std::string s;
        for (const auto& P : list) {
            if (!s.empty()) s += " ";
            s += P.is_string() ? P.get<std::string>() : "(" + P["x"].get<std::string>() + ", " + P["y"].get<std::string>() + ")";
        }
        return s.empty() ? std::string("none") : s;
    };
    switch (r.theorem) {
        case 1:
            os << "rank E(K) in [" << e["rank_K"]["lower"].get<std::string>() << ", "
               << e["rank_K"]["upper"].get<std::string>() << "]; E+ generators: "
               << points(e["descent"]["E_plus"]["generators"]) << "; E- generators: "
               << points(e["descent"]["E_minus"]["generators"]);
            break;
        case 2:
            os << "primary solutions (I): " << e["systems"]["I"]["count"].get<std::string>()
               << ", (II): " << e["systems"]["II"]["count"].get<std::string>();
            break;
        case 3:
            os << "census " << e["census"]["count"].get<std::string>()
               << (e["census"]["unbounded_hint"].get<bool>() ? " (unbounded)" : "") << "; split I/II/unclassified "
               << e["split"]["I"].get<std::string>() << "/" << e["split"]["II"].get<std::string>() << "/"
               << e["split"]["unclassified"].get<std::string>();
            break;
        case 4: {
            os << "solutions: " << e["solutions"].size();
            if (!e["single_equation_obstruction"].is_null()) {
                os << "; " << e["single_equation_obstruction"]["reason"].get<std::string>();
            }
            if (!e["solutions"].empty()) os << "; first maps to " << points(Json::array({e["solutions"][0]["point"]}));
            break;
        }
        default: break;
    }
    return os.str();
}

void print_table(const ReportEnvelope& env, std::ostream& out) {
    Json j = envelope_json(env);
    out << std::left << std::setw(7) << "p" << std::setw(7) << "q" << std::setw(5) << "thm" << std::setw(7) << "sigma"
        << std::setw(22) << "sub_case" << std::setw(19) << "status" << "note\n";
    std::vector<TheoremReport> sorted = env.reports;
    std::sort(sorted.begin(), sorted.end(), [](const TheoremReport& a, const TheoremReport& b) {
        return std::tie(a.pair.p(), a.theorem, a.sub_case) < std::tie(b.pair.p(), b.theorem, b.sub_case);
    });
    for (const auto& r : sorted) {
        out << std::left << std::setw(7) << str(r.pair.p()) << std::setw(7) << str(r.pair.q()) << std::setw(5)
            << r.theorem << std::setw(7) << (r.sigma == 0 ? "-" : sigma_string(r.sigma)) << std::setw(22)
            << r.sub_case << std::setw(19) << to_string(r.status) << note(r) << "\n";
    }
    out << "summary: " << j["summary"]["reports"].get<std::string>() << " reports;";
    for (const char* k : {"verified", "verified-at-bound", "consistent", "inconsistent", "out-of-scope"}) {
        out << " " << k << " " << j["summary"][k].get<std::string>();
    }
    out << "\n";
}

Json small_envelope(const RunConfig& config, Json result) {
    return Json{{"version", kToolVersion}, {"config", config_json(config)}, {"result", std::move(result)}};
}

void cmd_pell(const RunConfig& config, std::ostream& out) {
    const Integer& d = *config.d;
    ContinuedFraction cf = cf_sqrt(d);
    auto fundamental = pell_fundamental(d, config.sigma);
    auto sols = pell_enumerate(d, config.sigma, config.y_bound);
    if (config.json) {
        Json period = Json::array();
        for (const auto& a : cf.period) period.push_back(str(a));
        Json list = Json::array();
        for (const auto& s : sols) list.push_back(pell_json(s));
        Json result{{"d", str(d)},
                    {"sigma", sigma_string(config.sigma)},
                    {"continued_fraction", {{"a0", str(cf.a0)}, {"period", period}}},
                    {"fundamental", fundamental ? pell_json(*fundamental) : Json(nullptr)},
                    {"y_bound", str(config.y_bound)},
                    {"solutions", list}};
        out << small_envelope(config, result).dump(2) << "\n";
        return;
    }
    out << "sqrt(" << str(d) << ") = [" << str(cf.a0) << ";";
    for (std::size_t i = 0; i < cf.period.size(); ++i) out << (i ? ", " : " ") << str(cf.period[i]);
    out << "]\n";
    out << "x^2 - " << str(d) << " y^2 = " << config.sigma << ": ";
    if (!fundamental) {
        out << "no solution (even period)\n";
        return;
    }
    out << "fundamental solution (" << str(fundamental->x) << ", " << str(fundamental->y) << ")\n";
    out << "solutions with y <= " << str(config.y_bound) << ":\n";
    for (const auto& s : sols) out << "  (" << str(s.x) << ", " << str(s.y) << ")\n";
}

void cmd_search_points(const RunConfig& config, std::ostream& out) {
    Curve c(require_pair(*config.p), config.sigma);
    auto hits = point_search(c, config.height_bound, config.negative_x ? SearchRegion::NegativeX : SearchRegion::All);
    if (config.json) {
        Json list = Json::array();
        for (const auto& h : hits) {
            list.push_back({{"point", point_json(h.point)}, {"height", str(h.height)}, {"torsion", h.torsion}});
        }
        out << small_envelope(config, Json{{"curve", c.equation()}, {"points", list}}).dump(2) << "\n";
        return;
    }
    out << c.equation() << ", naive height <= " << str(config.height_bound)
        << (config.negative_x ? ", x < 0" : "") << ": " << hits.size() << " points (one per +-y)\n";
    for (const auto& h : hits) {
        out << "  " << std::left << std::setw(40) << h.point.str() << " height " << std::setw(12) << str(h.height)
            << (h.torsion ? "torsion" : "") << "\n";
    }
}

void cmd_descent(const RunConfig& config, std::ostream& out) {
    Curve c(require_pair(*config.p), config.sigma);
    DescentOptions options;
    options.height_bound = config.height_bound;
    DescentReport d = two_descent(c, options);
    if (config.json) {
        out << small_envelope(config, descent_json(d)).dump(2) << "\n";
        return;
    }
    out << c.equation() << "\n";
    out << "2-Selmer group: " << d.surviving_pairs.size() << " of " << d.candidate_pairs << " candidate pairs\n";
    for (const auto& e : d.surviving_pairs) {
        out << "  (" << str(e.pair.d1) << ", " << str(e.pair.d2) << ")" << (e.image_member ? "  image" : "  selmer-only");
        if (e.witness) out << "  " << e.witness->str();
        out << "\n";
    }
    out << "rank in [" << d.rank_lower << ", " << d.rank_upper << "]" << (d.resolved ? " (resolved)" : "") << "\n";
    for (const auto& g : d.generators_found) out << "generator " << g.str() << "\n";
}

Integer parse_bound(const std::string& text, const char* name) {
    Integer n = parse_integer(text);
    if (n < 1) throw std::invalid_argument(std::string(name) + " must be positive");
    return n;
}

}  // namespace

Json config_json(const RunConfig& c) {
    auto opt = [](const std::optional<Integer>& v) { return v ? Json(str(*v)) : Json(nullptr); };
    return Json{{"command", c.command},
                {"p", opt(c.p)},
                {"max_p", opt(c.max_p)},
                {"d", opt(c.d)},
                {"theorem", c.theorem ? Json(std::to_string(*c.theorem)) : Json(nullptr)},
                {"sigma", sigma_string(c.sigma)},
                {"height_bound", str(c.height_bound)},
                {"xy_bound", str(c.xy_bound)},
                {"y_bound", str(c.y_bound)},
                {"multiple_bound", std::to_string(c.multiple_bound)},
                {"negative_x", c.negative_x}};
}

Json envelope_json(const ReportEnvelope& env) {
    std::vector<const TheoremReport*> sorted;
    for (const auto& r : env.reports) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(), [](const TheoremReport* a, const TheoremReport* b) {
        return std::tie(a->pair.p(), a->theorem, a->sub_case) < std::tie(b->pair.p(), b->theorem, b->sub_case);
    });
    Json reports = Json::array();
    Json summary{{"reports", std::to_string(env.reports.size())}};
    std::map<Status, std::size_t> counts;
    for (const auto* r : sorted) {
        reports.push_back(to_json(*r));
        ++counts[r->status];
    }
    for (Status s : {Status::Verified, Status::VerifiedAtBound, Status::Consistent, Status::Inconsistent,
                     Status::OutOfScope}) {
        summary[to_string(s)] = std::to_string(counts[s]);
    }
    return Json{{"version", env.version}, {"config", env.config}, {"reports", reports}, {"summary", summary}};
}

bool has_inconsistent(const ReportEnvelope& env) {
    return std::any_of(env.reports.begin(), env.reports.end(),
                       [](const TheoremReport& r) { return r.status == Status::Inconsistent; });
}

std::vector<Integer> twin_primes_up_to(const Integer& max_p) {
    std::vector<Integer> out;
    for (Integer p = 3; p <= max_p; p += 2) {
        if (is_twin_prime_p(p)) out.push_back(p);
    }
    return out;
}

Json requested_bounds(int theorem, const RunConfig& c) {
    switch (theorem) {
        case 1: return Json{{"height_bound", str(c.height_bound)}};
        case 2: return Json{{"xy_bound", str(c.xy_bound)}};
        case 3:
            return Json{{"height_bound", str(c.height_bound)},
                        {"multiple_bound", std::to_string(c.multiple_bound)},
                        {"xy_bound", str(c.xy_bound)}};
        case 4: return Json{{"y_bound", str(c.y_bound)}};
        default: throw std::invalid_argument("theorem must be 1, 2, 3 or 4");
    }
}

TheoremReport run_theorem(const TwinPrimePair& pair, int theorem, int sigma, const RunConfig& c) {
    switch (theorem) {
        case 1: return verify_theorem1(pair, sigma, c.height_bound);
        case 2: return verify_theorem2(pair, c.xy_bound);
        case 3: return verify_theorem3(pair, c.height_bound, c.multiple_bound, c.xy_bound);
        case 4: return verify_theorem4(pair, sigma, c.y_bound);
        default: throw std::invalid_argument("theorem must be 1, 2, 3 or 4");
    }
}

ReportEnvelope cmd_analyze(const RunConfig& config, std::ostream& warnings) {
    if (!config.p) throw std::invalid_argument("analyze requires --p");
    std::vector<Task> tasks;
    add_pair_tasks(tasks, require_pair(*config.p), config);
    return execute(config, tasks, warnings);
}

ReportEnvelope cmd_scan(const RunConfig& config, std::ostream& warnings) {
    if (!config.max_p) throw std::invalid_argument("scan requires --max-p");
    std::vector<Task> tasks;
    for (const auto& p : twin_primes_up_to(*config.max_p)) add_pair_tasks(tasks, TwinPrimePair::from_p(p), config);
    return execute(config, tasks, warnings);
}

ReportEnvelope cmd_verify(const RunConfig& config, std::ostream& warnings) {
    if (!config.theorem) throw std::invalid_argument("verify requires --theorem");
    if (config.p.has_value() == config.max_p.has_value()) {
        throw std::invalid_argument("verify requires exactly one of --p and --max-p");
    }
    std::vector<Integer> ps = config.p ? std::vector<Integer>{require_pair(*config.p).p()}
                                       : twin_primes_up_to(*config.max_p);
    std::vector<Task> tasks;
    for (const auto& p : ps) {
        auto pair = TwinPrimePair::from_p(p);
        switch (*config.theorem) {
            case 1: tasks.push_back({pair, 1, config.sigma}); break;
            case 2: tasks.push_back({pair, 2, 0}); break;
            case 3: tasks.push_back({pair, 3, 1}); break;
            case 4:
                if (config.sigma_given) {
                    tasks.push_back({pair, 4, config.sigma});
                } else {
                    tasks.push_back({pair, 4, 1});
                    tasks.push_back({pair, 4, -1});
                }
                break;
            default: throw std::invalid_argument("theorem must be 1, 2, 3 or 4");
        }
    }
    return execute(config, tasks, warnings);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twin-prime elliptic curves: ranks, concordant systems and Pell equations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    RunConfig config;
    std::string p_text, max_p_text, d_text;
    std::string height_text = "10000", xy_text = "2000", y_text = "1000000";
    int theorem = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--sigma", config.sigma, "Sign of the curve or equation, 1 or -1")
            ->check(CLI::IsMember({1, -1}))
            ->each([&](const std::string&) { config.sigma_given = true; });
        sub->add_option("--height-bound", height_text, "Naive-height bound for point searches");
        sub->add_option("--xy-bound", xy_text, "Bound on X and Y for systems (I) and (II)");
        sub->add_option("--y-bound", y_text, "Bound on y for Pell searches");
        sub->add_option("--multiple-bound", config.multiple_bound, "Bound on generator multiples in the census");
        sub->add_option("--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--json", config.json, "Emit JSON");
        sub->add_option("--cache", config.cache_path, "Line-delimited JSON result cache");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "All theorem checks for one twin-prime pair");
    analyze->add_option("--p", p_text, "Smaller prime of the pair")->required();
    common(analyze);
    CLI::App* scan = app.add_subcommand("scan", "All theorem checks for every twin-prime pair with p <= max-p");
    scan->add_option("--max-p", max_p_text, "Largest p to include")->required();
    common(scan);
    CLI::App* verify = app.add_subcommand("verify", "One theorem for one pair or a range");
    verify->add_option("--theorem", theorem, "Theorem number")->required()->check(CLI::IsMember({1, 2, 3, 4}));
    auto* vp = verify->add_option("--p", p_text, "Smaller prime of the pair");
    auto* vm = verify->add_option("--max-p", max_p_text, "Largest p to include");
    vp->excludes(vm);
    common(verify);
    CLI::App* pell = app.add_subcommand("pell", "Continued fraction and solutions of x^2 - d y^2 = sigma");
    pell->add_option("--d", d_text, "Non-square d >= 2")->required();
    common(pell);
    CLI::App* search = app.add_subcommand("search-points", "Rational points of bounded naive height");
    search->add_option("--p", p_text, "Smaller prime of the pair")->required();
    search->add_flag("--negative-x", config.negative_x, "Only x < 0");
    common(search);
    CLI::App* descent = app.add_subcommand("descent", "Complete 2-descent on E_sigma over Q");
    descent->add_option("--p", p_text, "Smaller prime of the pair")->required();
    common(descent);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        if (!p_text.empty()) config.p = parse_integer(p_text);
        if (!max_p_text.empty()) config.max_p = parse_integer(max_p_text);
        if (!d_text.empty()) config.d = parse_integer(d_text);
        if (theorem != 0) config.theorem = theorem;
        config.height_bound = parse_bound(height_text, "--height-bound");
        config.xy_bound = parse_bound(xy_text, "--xy-bound");
        config.y_bound = parse_bound(y_text, "--y-bound");
        if (config.multiple_bound < 1) throw std::invalid_argument("--multiple-bound must be positive");

        ReportEnvelope env;
        if (config.command == "pell") {
            cmd_pell(config, out);
            return 0;
        }
        if (config.command == "search-points") {
            cmd_search_points(config, out);
            return 0;
        }
        if (config.command == "descent") {
            cmd_descent(config, out);
            return 0;
        }
        if (config.command == "analyze") env = cmd_analyze(config, err);
        if (config.command == "scan") env = cmd_scan(config, err);
        if (config.command == "verify") env = cmd_verify(config, err);
        if (config.json) {
            out << envelope_json(env).dump(2) << "\n";
        } else {
            print_table(env, out);
        }
        return has_inconsistent(env) ? 2 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twinec
