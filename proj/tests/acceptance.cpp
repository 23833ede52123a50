// One line per acceptance criterion; exit status is nonzero if any line fails.

#include "btconv/convolve.hpp"
#include "btconv/errors.hpp"
#include "btconv/polyring.hpp"
#include "btconv/verify.hpp"

#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef BTCONV_CLI
#error "BTCONV_CLI must name the btconv executable"
#endif

using namespace btconv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_ms, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms <= budget_ms;
    const bool ok = out.pass && in_time;
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS " : "FAIL ") << number << ". " << title << "  (" << ms << " ms, budget " << budget_ms
              << " ms)";
    if (!out.detail.empty()) {
        std::cout << "  " << out.detail;
    }
    if (!in_time) {
        std::cout << "  over budget";
    }
    std::cout << std::endl;
}

Outcome expect(bool cond, const std::string& what)
{
    return cond ? Outcome{} : Outcome{false, what};
}

Outcome reports_pass(const std::vector<Report>& reports, std::size_t expected_min)
{
    if (reports.size() < expected_min) {
        return {false, "only " + std::to_string(reports.size()) + " reports"};
    }
    for (const Report& r : reports) {
        if (!r.pass) {
            return {false, "failed: " + to_jsonl(r)};
        }
    }
    return {true, std::to_string(reports.size()) + " reports"};
}

} // namespace

int main()
{
    criterion(1, "Bernoulli numbers B_0..B_7", 1.0, [] {
        const std::vector<Rat> want = {Rat(1), Rat(-1, 2), Rat(1, 6), Rat(0), Rat(-1, 30), Rat(0), Rat(1, 42), Rat(0)};
        for (long n = 0; n < 8; ++n) {
            if (bernoulli_number(n) != want[static_cast<std::size_t>(n)]) {
                return Outcome{false, "B_" + std::to_string(n) + " = " + bernoulli_number(n).str()};
            }
        }
        return Outcome{};
    });

    criterion(2, "Dixon's identity, n = 0..12", 10.0, [] {
        const auto reports = run({{"dixon"}, 12, 0, 1});
        Outcome o = reports_pass(reports, 13);
        if (o.pass && (reports[2].lhs != Rat(-6) || reports[4].lhs != Rat(90))) {
            o = {false, "n=2 gives " + reports[2].lhs.str() + ", n=4 gives " + reports[4].lhs.str()};
        }
        return o;
    });

    criterion(3, "Catalan convolutions, n = 0..14, zero at odd n", 50.0, [] {
        const auto reports = run({{"catalan_mikic", "catalan_floor"}, 14, 0, 1});
        Outcome o = reports_pass(reports, 15 * 3);
        for (const Report& r : reports) {
            if (r.params.at("n").to_long() % 2 == 1 && (!r.lhs.is_zero() || !r.rhs.is_zero())) {
                return Outcome{false, "nonzero odd side: " + to_jsonl(r)};
            }
        }
        return o;
    });

    criterion(4, "Fibonacci-Bernoulli (even n <= 20) and Lucas-Bernoulli (odd n <= 19) vanish", 20.0, [] {
        const auto reports = run({{"fib_bernoulli_even", "lucas_bernoulli_odd"}, 20, 0, 1});
        Outcome o = reports_pass(reports, 21);
        for (const Report& r : reports) {
            if (!r.lhs.is_zero()) {
                return Outcome{false, "nonzero: " + to_jsonl(r)};
            }
        }
        return o;
    });

    criterion(5, "first-kind transform is an involution on 200 random sequences", 1000.0, [] {
        for (std::uint64_t i = 0; i < 200; ++i) {
            if (!involution_check(random_seq(splitmix64(i), 12))) {
                return Outcome{false, "sequence " + std::to_string(i)};
            }
        }
        return Outcome{};
    });

    criterion(6, "convolution theorems and extensions on 50 random pairs, n <= 8", 30000.0, [] {
        long checks = 0;
        for (std::uint64_t i = 0; i < 50; ++i) {
            const Pair p = random_first_pair(splitmix64(i), 20);
            const Pair q = random_first_pair(splitmix64(i + 1000), 20);
            const Pair a = random_second_pair(splitmix64(i + 2000), 20);
            const Pair b = random_second_pair(splitmix64(i + 3000), 20);
            auto need = [&](const SideReport& r, const char* what, long n) {
                ++checks;
                if (!r.equal()) {
                    throw ValidationError(std::string(what) + " pair " + std::to_string(i) + " n=" + std::to_string(n));
                }
            };
            for (long n = 0; n <= 8; ++n) {
                need(check_main1(p, q, n), "main1", n);
                need(check_main2(a, b, n), "main2", n);
                need(check_swap(a, b, n), "swap", n);
                need(check_mixed(p, a, n), "mixed", n);
                for (long m = 0; m <= 3; ++m) {
                    for (long r = 0; r <= 3; ++r) {
                        need(check_gen1(p, q, m, r, n), "gen1", n);
                        need(check_nested_shift(p, m, r, n), "nested_shift", n);
                    }
                }
                for (long m = 0; m <= 2; ++m) {
                    for (long r = 0; r <= 2; ++r) {
                        for (long u = 0; u <= 2; ++u) {
                            for (long v = 0; v <= 2; ++v) {
                                need(check_gen2(p, q, m, n, r, u, v), "gen2", n);
                            }
                        }
                    }
                }
                for (long j = 0; j <= n; ++j) {
                    need(check_extension(Extension::PowerOfTwo, p, j, n), "ext i", n);
                    need(check_extension(Extension::DoubleBinomial, p, j, n), "ext ii", n);
                }
                need(check_extension(Extension::HalfWeight, a, b, 0, 0, n), "ext iii", n);
                need(check_extension(Extension::Shifted, p, q, 0, 0, n), "ext iv", n);
                for (long m = 0; m <= 3; ++m) {
                    need(check_extension(Extension::KPower, p, q, 0, m, n), "ext v", n);
                }
            }
        }
        return Outcome{true, std::to_string(checks) + " equalities"};
    });

    criterion(7, "btconv verify --identity all --nmax 10 --seed 0", 300000.0, [] {
        const std::string cmd = std::string("\"") + BTCONV_CLI + "\" verify --identity all --nmax 10 --seed 0";
        FILE* pipe = popen(cmd.c_str(), "r");
        if (!pipe) {
            return Outcome{false, "cannot start " + cmd};
        }
        std::string line;
        std::ostringstream buffer;
        char chunk[4096];
        while (std::fgets(chunk, sizeof chunk, pipe)) {
            buffer << chunk;
        }
        const int status = pclose(pipe);
        const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        std::istringstream lines(buffer.str());
        long count = 0;
        std::set<std::string> ids;
        while (std::getline(lines, line)) {
            const auto j = nlohmann::json::parse(line);
            ++count;
            ids.insert(j.at("id").get<std::string>());
            if (!j.at("pass").get<bool>() || j.at("lhs") != j.at("rhs")) {
                return Outcome{false, "failing report: " + line};
            }
        }
        if (code != 0) {
            return Outcome{false, "exit status " + std::to_string(code)};
        }
        if (ids.size() != registry().size()) {
            return Outcome{false, "reports cover " + std::to_string(ids.size()) + " of " +
                                      std::to_string(registry().size()) + " identities"};
        }
        return Outcome{true, std::to_string(count) + " reports over " + std::to_string(ids.size()) + " identities"};
    });

    criterion(8, "polynomial identities: pairs, Sun's lemma, named identities", 30000.0, [] {
        long checks = 0;
        for (std::uint64_t i = 0; i < 50; ++i) {
            const Pair p = random_first_pair(splitmix64(i + 5000), 16);
            const Pair a = random_second_pair(splitmix64(i + 6000), 16);
            for (long n = 0; n <= 8; ++n) {
                checks += 2;
                if (!check_poly_first(p, n) || !check_poly_second(a, n)) {
                    return Outcome{false, "pair " + std::to_string(i) + " n=" + std::to_string(n)};
                }
            }
        }
        for (long m = 0; m <= 5; ++m) {
            for (long n = 0; n <= 5; ++n) {
                for (long r = 0; r <= 10; ++r) {
                    if (sun_lemma_admissible(m, n, r)) {
                        ++checks;
                        if (!check_sun_lemma(m, n, r)) {
                            return Outcome{false, "Sun's lemma at " + std::to_string(m) + "," + std::to_string(n) +
                                                      "," + std::to_string(r)};
                        }
                    }
                }
            }
        }
        RunOptions named;
        named.ids = named_poly_ids();
        named.nmax = 8;
        const auto reports = run(named);
        Outcome o = reports_pass(reports, named.ids.size());
        if (!o.pass) {
            return o;
        }
        return Outcome{true, std::to_string(checks) + " pair/lemma checks, " + std::to_string(reports.size()) +
                                 " named coefficient reports"};
    });

    criterion(9, "classification of Lucas, Fibonacci, k F_{k-1}, binom(2k,k)/4^k", 10.0, [] {
        const bool ok = classify(Seq::generate(15, [](long k) { return lucas(k); })) == Symmetry::Invariant &&
                        classify(Seq::generate(15, [](long k) { return fibonacci(k); })) == Symmetry::InverseInvariant &&
                        classify(Seq::generate(15, [](long k) { return Rat(k) * fibonacci(k - 1); })) ==
                            Symmetry::Invariant &&
                        classify(Seq::generate(15, [](long k) {
                            return binom_int(2 * k, k) / pow(Rat(2), 2 * k);
                        })) == Symmetry::Invariant;
        return expect(ok, "unexpected classification");
    });

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
