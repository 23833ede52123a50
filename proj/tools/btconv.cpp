#include "btconv/errors.hpp"
#include "btconv/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_fail = 1;
constexpr int exit_config = 2;

std::vector<std::string> split_ids(const std::vector<std::string>& raw)
{
    std::vector<std::string> ids;
    for (const std::string& chunk : raw) {
        std::stringstream ss(chunk);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (!id.empty()) {
                ids.push_back(id);
            }
        }
    }
    return ids;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"binomial-transform identity verifier"};
    app.require_subcommand(1);

    auto* list = app.add_subcommand("list", "print registered identities with anchors");

    auto* verify = app.add_subcommand("verify", "sweep identities and report both sides exactly");
    std::vector<std::string> identity_args;
    long nmax = 10;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "jsonl";
    std::string config_path;
    unsigned jobs = 1;
    auto* identity_opt =
        verify->add_option("--identity", identity_args, "comma-separated ids, or 'all'")->delimiter(',');
    auto* nmax_opt = verify->add_option("--nmax", nmax, "largest n in every sweep")->check(CLI::NonNegativeNumber);
    auto* seed_opt = verify->add_option("--seed", seed, "base seed for randomized pairs");
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_option("--format", format, "jsonl or summary")->check(CLI::IsMember({"jsonl", "summary"}));
    verify->add_option("--config", config_path, "JSON file with nmax, seed, identities");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    if (list->parsed()) {
        for (const auto& check : btconv::registry()) {
            std::cout << check.id << '\t' << check.anchor << '\n';
        }
        return 0;
    }

    btconv::RunOptions options;
    try {
        if (!config_path.empty()) {
            const btconv::RunConfig cfg = btconv::load_config(config_path);
            if (cfg.nmax && nmax_opt->count() == 0) {
                nmax = *cfg.nmax;
            }
            if (cfg.seed && seed_opt->count() == 0) {
                seed = *cfg.seed;
            }
            if (cfg.identities && identity_opt->count() == 0) {
                identity_args = *cfg.identities;
            }
        }
        std::vector<std::string> ids = split_ids(identity_args);
        const bool all = ids.empty() || std::find(ids.begin(), ids.end(), "all") != ids.end();
        if (!all) {
            for (const std::string& id : ids) {
                btconv::find_identity(id);
            }
            options.ids = ids;
        }
    } catch (const btconv::Error& e) {
        std::cerr << "btconv: " << e.what() << '\n';
        return exit_config;
    }
    options.nmax = nmax;
    options.seed = seed;
    options.jobs = jobs;

    const std::vector<btconv::Report> reports = btconv::run(options);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "btconv: cannot write '" << out_path << "'\n";
            return exit_config;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    if (format == "summary") {
        btconv::write_summary(os, reports);
    } else {
        btconv::write_jsonl(os, reports);
    }
    return btconv::all_pass(reports) ? 0 : exit_fail;
}
