#include "btconv/verify.hpp"

#include "btconv/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

namespace btconv {

namespace {

std::uint64_t fnv1a64(std::string_view text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

nlohmann::json param_value(const Rat& v)
{
    if (v.is_integer()) {
        return v.to_long();
    }
    return v.str();
}

struct Task {
    const IdentityCheck* check;
    Params params;
};

std::vector<Report> evaluate(const Task& task, std::uint64_t base_seed)
{
    const IdentityCheck& check = *task.check;
    std::optional<std::uint64_t> seed;
    if (check.randomized) {
        seed = instance_seed(base_seed, check.id, task.params);
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<SideReport> sides;
    std::optional<std::string> error;
    try {
        sides = check.evaluate(task.params, seed.value_or(0));
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::vector<Report> out;
    if (error) {
        out.push_back({check.id, task.params, Rat(), Rat(), false, seed, ms, error});
        return out;
    }
    if (sides.empty()) {
        out.push_back({check.id, task.params, Rat(), Rat(), false, seed, ms, "evaluator produced no sides"});
        return out;
    }
    const double share = ms / static_cast<double>(sides.size());
    for (SideReport& s : sides) {
        Params params = task.params;
        params.insert(s.params.begin(), s.params.end());
        const bool pass = s.equal();
        out.push_back({check.id, std::move(params), std::move(s.lhs), std::move(s.rhs), pass, seed, share, {}});
    }
    return out;
}

} // namespace

std::vector<Params> IdentityCheck::instances(long nmax) const
{
    std::vector<Params> out = domain(nmax);
    if (guard) {
        out.erase(std::remove_if(out.begin(), out.end(), [&](const Params& p) { return !guard(p); }), out.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t instance_seed(std::uint64_t base, std::string_view id, const Params& params)
{
    auto it = params.find("pair");
    const std::uint64_t pair = it == params.end() ? 0 : static_cast<std::uint64_t>(it->second.to_long());
    return splitmix64(splitmix64(base ^ fnv1a64(id)) + pair);
}

std::vector<Report> run(const RunOptions& options)
{
    if (options.nmax < 0) {
        throw DomainError("nmax must be >= 0");
    }
    std::vector<const IdentityCheck*> selected;
    if (options.ids.empty()) {
        for (const IdentityCheck& c : registry()) {
            selected.push_back(&c);
        }
    } else {
        for (const std::string& id : options.ids) {
            selected.push_back(&find_identity(id));
        }
        std::sort(selected.begin(), selected.end(), [](auto* a, auto* b) { return a->id < b->id; });
        selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    }

    std::vector<Task> tasks;
    for (const IdentityCheck* c : selected) {
        for (Params& p : c->instances(options.nmax)) {
            tasks.push_back({c, std::move(p)});
        }
    }

    std::vector<std::vector<Report>> results(tasks.size());
    const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            results[i] = evaluate(tasks[i], options.seed);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) {
                    results[i] = evaluate(tasks[i], options.seed);
                }
            });
        }
        for (auto& t : workers) {
            t.join();
        }
    }

    std::vector<Report> out;
    for (auto& r : results) {
        std::move(r.begin(), r.end(), std::back_inserter(out));
    }
    std::stable_sort(out.begin(), out.end(), [](const Report& a, const Report& b) {
        if (a.id != b.id) {
            return a.id < b.id;
        }
        return a.params < b.params;
    });
    return out;
}

std::string to_jsonl(const Report& report)
{
    nlohmann::ordered_json j;
    j["id"] = report.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) {
        params[key] = param_value(value);
    }
    j["params"] = std::move(params);
    j["lhs"] = report.lhs.str();
    j["rhs"] = report.rhs.str();
    j["pass"] = report.pass;
    if (report.seed) {
        j["seed"] = *report.seed;
    } else {
        j["seed"] = nullptr;
    }
    j["duration_ms"] = report.duration_ms;
    if (report.error) {
        j["error"] = *report.error;
    }
    return j.dump();
}

void write_jsonl(std::ostream& os, const std::vector<Report>& reports)
{
    for (const Report& r : reports) {
        os << to_jsonl(r) << '\n';
    }
}

void write_summary(std::ostream& os, const std::vector<Report>& reports)
{
    struct Tally {
        long pass = 0;
        long fail = 0;
        double ms = 0;
    };
    std::map<std::string, Tally> by_id;
    for (const Report& r : reports) {
        Tally& t = by_id[r.id];
        (r.pass ? t.pass : t.fail) += 1;
        t.ms += r.duration_ms;
    }
    long pass = 0;
    long fail = 0;
    for (const auto& [id, t] : by_id) {
        os << (t.fail ? "FAIL " : "ok   ") << id << "  " << t.pass << "/" << (t.pass + t.fail) << "  "
           << static_cast<long>(t.ms) << " ms\n";
        pass += t.pass;
        fail += t.fail;
    }
    os << by_id.size() << " identities, " << pass + fail << " instances, " << fail << " failed\n";
    for (const Report& r : reports) {
        if (!r.pass) {
            os << "  " << to_jsonl(r) << '\n';
        }
    }
}

bool all_pass(const std::vector<Report>& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.pass; });
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot read config '" + path + "'");
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("config '" + path + "': " + e.what());
    }
    if (!j.is_object()) {
        throw Error("config '" + path + "': top level must be an object");
    }
    RunConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "nmax") {
            if (!value.is_number_integer() || value.get<long>() < 0) {
                throw Error("config: nmax must be a nonnegative integer");
            }
            cfg.nmax = value.get<long>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long>() >= 0)) {
                throw Error("config: seed must be a nonnegative integer");
            }
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "identities") {
            if (!value.is_array()) {
                throw Error("config: identities must be an array of strings");
            }
            std::vector<std::string> ids;
            for (const auto& v : value) {
                if (!v.is_string()) {
                    throw Error("config: identities must be an array of strings");
                }
                ids.push_back(v.get<std::string>());
            }
            cfg.identities = std::move(ids);
        } else {
            throw Error("config: unknown key '" + key + "'");
        }
    }
    return cfg;
}

} // namespace btconv
