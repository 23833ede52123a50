#pragma once

#include "btconv/convolve.hpp"
#include "btconv/pairs.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btconv {

/// One registered identity: a parameter domain plus an evaluator for both sides.
struct IdentityCheck {
    std::string id;
    std::string anchor;
    /// Parameter tuples for a sweep up to nmax, before guards.
    std::function<std::vector<Params>(long nmax)> domain;
    /// Keeps a tuple when true; empty means no guard.
    std::function<bool(const Params&)> guard;
    /// One SideReport per checked equality; polynomial identities return one
    /// per coefficient. seed is meaningful only when randomized.
    std::function<std::vector<SideReport>(const Params&, std::uint64_t seed)> evaluate;
    bool randomized = false;

    std::vector<Params> instances(long nmax) const;
};

struct Report {
    std::string id;
    Params params;
    Rat lhs;
    Rat rhs;
    bool pass = false;
    std::optional<std::uint64_t> seed;
    double duration_ms = 0.0;
    // set when the evaluator threw instead of producing sides
    std::optional<std::string> error;
};

const std::vector<IdentityCheck>& registry();

/// Throws UnknownNameError.
const IdentityCheck& find_identity(std::string_view id);

/// Per-instance seed for randomized identities.
std::uint64_t instance_seed(std::uint64_t base, std::string_view id, const Params& params);

struct RunOptions {
    std::vector<std::string> ids; // empty means all
    long nmax = 10;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/// Reports sorted by id, then parameter tuple. Unknown ids throw before any work.
std::vector<Report> run(const RunOptions& options);

std::string to_jsonl(const Report& report);
void write_jsonl(std::ostream& os, const std::vector<Report>& reports);
void write_summary(std::ostream& os, const std::vector<Report>& reports);

bool all_pass(const std::vector<Report>& reports);

/// Optional JSON config: {"nmax": int, "seed": int, "identities": [string]}.
struct RunConfig {
    std::optional<long> nmax;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<std::string>> identities;
};

/// Throws Error on unreadable files, bad JSON, or wrongly typed keys.
RunConfig load_config(const std::string& path);

} // namespace btconv
