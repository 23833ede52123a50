#include "btconv/errors.hpp"
#include "btconv/polyring.hpp"
#include "btconv/seqlib.hpp"
#include "btconv/verify.hpp"

#include <algorithm>
#include <set>

namespace btconv {

namespace {

using Sides = std::vector<SideReport>;
using Domain = std::vector<Params>;

// ---------------------------------------------------------------------------
// domain construction

struct Axis {
    std::string name;
    std::vector<Rat> values;
};

Axis ints(std::string name, long lo, long hi)
{
    Axis a{std::move(name), {}};
    for (long v = lo; v <= hi; ++v) {
        a.values.emplace_back(v);
    }
    return a;
}

const std::vector<Rat>& rational_grid()
{
    static const std::vector<Rat> grid = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(3), Rat(-5, 7)};
    return grid;
}

Axis grid(std::string name)
{
    return {std::move(name), rational_grid()};
}

Axis grid_nonzero(std::string name)
{
    Axis a{std::move(name), {}};
    for (const Rat& v : rational_grid()) {
        if (!v.is_zero()) {
            a.values.push_back(v);
        }
    }
    return a;
}

Axis values(std::string name, std::vector<Rat> vs)
{
    return {std::move(name), std::move(vs)};
}

Domain product(const std::vector<Axis>& axes)
{
    Domain out{Params{}};
    for (const Axis& axis : axes) {
        Domain next;
        next.reserve(out.size() * axis.values.size());
        for (const Params& p : out) {
            for (const Rat& v : axis.values) {
                Params q = p;
                q[axis.name] = v;
                next.push_back(std::move(q));
            }
        }
        out = std::move(next);
    }
    return out;
}

Domain with(Domain base, const std::string& key, long value)
{
    for (Params& p : base) {
        p[key] = Rat(value);
    }
    return base;
}

Domain concat(std::initializer_list<Domain> parts)
{
    Domain out;
    for (const Domain& d : parts) {
        out.insert(out.end(), d.begin(), d.end());
    }
    return out;
}

Domain cross(const Domain& a, const Domain& b)
{
    Domain out;
    for (const Params& p : a) {
        for (const Params& q : b) {
            Params r = p;
            r.insert(q.begin(), q.end());
            out.push_back(std::move(r));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// evaluation helpers

struct Get {
    const Params& p;

    Rat r(const std::string& key) const
    {
        auto it = p.find(key);
        if (it == p.end()) {
            throw DomainError("registry: missing parameter '" + key + "'");
        }
        return it->second;
    }
    long i(const std::string& key) const { return r(key).to_long(); }
    long i_or(const std::string& key, long fallback) const { return p.count(key) ? i(key) : fallback; }
};

template <typename F>
Rat sum(long lo, long hi, F&& f)
{
    Rat acc;
    for (long k = lo; k <= hi; ++k) {
        acc += f(k);
    }
    return acc;
}

Rat sg(long e)
{
    return sign_power(e);
}
Rat bn(long n, long k)
{
    return binom_int(n, k);
}
Rat br(const Rat& r, long k)
{
    return binom_rat(r, k);
}
Rat ib(const Rat& r, long k)
{
    return inv_binom(r, k);
}
Rat H(long n)
{
    return harmonic(n);
}
Rat O(long n)
{
    return odd_harmonic(n);
}
Rat B(long n)
{
    return bernoulli_number(n);
}
Rat Bp(long n, const Rat& x)
{
    return bernoulli_poly(n, x);
}
Rat F(long n)
{
    return fibonacci(n);
}
Rat L(long n)
{
    return lucas(n);
}
Rat two_pow(long e)
{
    return pow(Rat(2), e);
}

Sides one(Rat lhs, Rat rhs)
{
    return {SideReport{std::move(lhs), std::move(rhs), {}}};
}

Sides one(SideReport s)
{
    s.params.clear();
    return {std::move(s)};
}

// one report per coefficient index, at least the constant term
Sides coefficients(const PolySides& sides)
{
    const long deg = std::max({sides.lhs.degree(), sides.rhs.degree(), 0L});
    Sides out;
    for (long i = 0; i <= deg; ++i) {
        out.push_back({sides.lhs.coeff(i), sides.rhs.coeff(i), Params{{"coeff", Rat(i)}}});
    }
    return out;
}

// random sequences are prefix-stable, so the length only has to cover the
// largest index an instance touches
long random_length(const Params& p)
{
    long total = 16;
    for (const auto& [key, value] : p) {
        if (key != "pair" && key != "display" && value.is_integer()) {
            total += std::abs(value.to_long());
        }
    }
    return total;
}

Pair rand_first(std::uint64_t seed, long salt, const Params& p)
{
    return random_first_pair(splitmix64(seed + static_cast<std::uint64_t>(salt)), random_length(p));
}

Pair rand_second(std::uint64_t seed, long salt, const Params& p)
{
    return random_second_pair(splitmix64(seed + static_cast<std::uint64_t>(salt)), random_length(p));
}

Params without(const Params& p, std::initializer_list<const char*> keys)
{
    Params out = p;
    for (const char* k : keys) {
        out.erase(k);
    }
    return out;
}

// c * f(idx), skipping terms whose coefficient vanishes (their index may be
// outside the sequence)
template <typename G>
Rat term(const Rat& c, G&& f, long idx)
{
    return c.is_zero() ? Rat(0) : c * f(idx);
}

Domain n_only(long nmax, long lo = 0)
{
    return product({ints("n", lo, nmax)});
}

bool is_even(long n)
{
    return n % 2 == 0;
}

// ---------------------------------------------------------------------------
// catalog sweeps

Domain catalog_params(const std::string& name)
{
    if (name == "binom_upper") {
        return product({ints("x", 0, 3), grid("y")});
    }
    if (name == "harmonic_shift_frac") {
        return product({ints("m", 1, 3)});
    }
    if (name == "gibonacci_ratio") {
        Domain out;
        const std::vector<std::pair<Rat, Rat>> seeds = {
            {Rat(0), Rat(1)}, {Rat(2), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1, 2), Rat(-3)}};
        for (const auto& [g0, g1] : seeds) {
            for (const Params& p : product({values("t", {Rat(1), Rat(2), Rat(-1)}), ints("r", -1, 1)})) {
                Params q = p;
                q["g0"] = g0;
                q["g1"] = g1;
                out.push_back(std::move(q));
            }
        }
        return out;
    }
    if (name == "binom_ratio") {
        return product({grid("x"), values("y", {Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(-5, 7), Rat(3)})});
    }
    if (name == "harmonic_plus_m") {
        return product({ints("m", 0, 3)});
    }
    if (name == "delta_binom" || name == "binom_2k_j" || name == "binom_2k_j_up") {
        return product({ints("j", 0, 3)});
    }
    if (name == "power" || name == "power2" || name == "binom_x") {
        return product({grid("x")});
    }
    if (name == "bernoulli_poly_shift") {
        return product({grid("x"), grid_nonzero("y")});
    }
    if (name == "binom_xz") {
        return product({grid("x"), ints("z", -2, 2)});
    }
    if (name == "harmonic_binom_m") {
        return product({ints("m", 0, 4)});
    }
    if (name == "inv_binom_trif") {
        return product({values("m", {Rat(2), Rat(5), Rat(9), Rat(12), Rat(1, 2), Rat(-1, 2), Rat(-5, 7)}),
                        ints("p", 0, 2)});
    }
    return {Params{}};
}

Pair catalog_instance(const std::string& name, const Params& p)
{
    // the invariant display re-checks the closed form, so skip construction-time validation
    return catalog_pair(name, without(p, {"n", "display"}), -1);
}

// ---------------------------------------------------------------------------
// registry assembly

class Builder {
public:
    IdentityCheck& add(std::string id, std::string anchor, std::function<Domain(long)> domain,
                       std::function<Sides(const Params&, std::uint64_t)> evaluate, bool randomized = false)
    {
        if (!ids_.insert(id).second) {
            throw Error("duplicate identity id '" + id + "'");
        }
        checks_.push_back({std::move(id), std::move(anchor), std::move(domain), {}, std::move(evaluate), randomized});
        return checks_.back();
    }

    std::vector<IdentityCheck> take() { return std::move(checks_); }

private:
    std::vector<IdentityCheck> checks_;
    std::set<std::string> ids_;
};

void add_catalog_checks(Builder& b)
{
    for (const std::string& name : catalog_names()) {
        const Kind kind = catalog_kind(name);
        const bool first = kind == Kind::First;
        const std::string id = (first ? "main1_catalog_" : "main2_catalog_") + name;
        const std::string anchor = first ? "sec 2: convolution theorem for first-kind pairs, catalog pair " + name
                                         : "sec 3: convolution theorem for second-kind pairs, catalog pair " + name;
        auto& check = b.add(
            id, anchor,
            [name](long nmax) {
                return cross(catalog_params(name),
                             product({ints("display", 0, 2), ints("n", 0, nmax)}));
            },
            [name, first](const Params& p, std::uint64_t) -> Sides {
                Get g{p};
                const long n = g.i("n");
                const Pair pair = catalog_instance(name, p);
                switch (g.i("display")) {
                case 0: {
                    // against a fixed partner of the same kind
                    const Pair partner = first ? catalog_pair("lucas") : catalog_pair("bernoulli");
                    return one(first ? check_main1(pair, partner, n) : check_main2(pair, partner, n));
                }
                case 1:
                    return one(first ? check_main1(pair, pair, n) : check_main2(pair, pair, n));
                default: {
                    Rat lhs = sum(0, n, [&](long k) { return (first ? sg(k) : Rat(1)) * bn(n, k) * pair.s(k); });
                    return one(std::move(lhs), pair.sigma(n));
                }
                }
            });
        check.guard = [name](const Params& p) {
            return catalog_instance(name, p).covers(Get{p}.i("n"));
        };
    }
}

void add_random_theorems(Builder& b)
{
    b.add(
        "main1_random", "sec 2: convolution theorem for first-kind pairs",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            return one(check_main1(rand_first(seed, 0, p), rand_first(seed, 1, p), Get{p}.i("n")));
        },
        true);
    b.add(
        "main2_random", "sec 3: convolution theorem for second-kind pairs",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            return one(check_main2(rand_second(seed, 0, p), rand_second(seed, 1, p), Get{p}.i("n")));
        },
        true);
    b.add(
        "swap_second", "sec 3: swapped convolution for two second-kind pairs",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            return one(check_swap(rand_second(seed, 0, p), rand_second(seed, 1, p), Get{p}.i("n")));
        },
        true);
    b.add(
        "mixed", "sec 4: convolution of a first-kind with a second-kind pair",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            return one(check_mixed(rand_first(seed, 0, p), rand_second(seed, 1, p), Get{p}.i("n")));
        },
        true);
    b.add(
        "symmetry_first", "sec 5: symmetry of shifted first-kind transforms",
        [](long nmax) { return product({ints("pair", 0, 1), ints("m", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            return one(check_symmetry_first(rand_first(seed, 0, p), g.i("m"), g.i("n")));
        },
        true);
    b.add(
        "symmetry_second", "sec 5: symmetry of shifted second-kind transforms",
        [](long nmax) { return product({ints("pair", 0, 1), ints("m", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            return one(check_symmetry_second(rand_second(seed, 0, p), g.i("m"), g.i("n")));
        },
        true);
    b.add(
        "gen1", "sec 5: generalized convolution with two shifts",
        [](long nmax) {
            Domain random = with(product({ints("pair", 0, 1), ints("m", 0, 2), ints("r", 0, 2), ints("n", 0, nmax)}),
                                 "display", 0);
            Domain delta = with(
                product({ints("m", 0, 2), ints("r", 0, 2), ints("u", 0, 2), ints("j", 0, 2), ints("n", 0, nmax)}),
                "display", 1);
            return concat({random, delta});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long m = g.i("m");
            const long r = g.i("r");
            const long n = g.i("n");
            if (g.i("display") == 0) {
                return one(check_gen1(rand_first(seed, 0, p), rand_first(seed, 1, p), m, r, n));
            }
            // the delta_binom instance, in closed form
            const long u = g.i("u");
            const long j = g.i("j");
            return one(sum(0, n, [&](long k) { return bn(n, k) * bn(n - k + m, u) * bn(r, j - k); }),
                       sum(0, n, [&](long k) { return bn(n, k) * bn(n - k + r, j) * bn(m, u - k); }));
        },
        true);
    b.add(
        "gen2", "sec 5: five-index generalized convolution",
        [](long nmax) {
            return product({ints("pair", 0, 1), ints("m", 0, 2), ints("r", 0, 2), ints("u", 0, 2), ints("v", 0, 2),
                            ints("n", 0, nmax)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            return one(check_gen2(rand_first(seed, 0, p), rand_first(seed, 1, p), g.i("m"), g.i("n"), g.i("r"),
                                  g.i("u"), g.i("v")));
        },
        true);
    b.add(
        "nested_shift", "sec 5: nested shift of a first-kind pair",
        [](long nmax) { return product({ints("pair", 0, 1), ints("m", 0, 3), ints("r", 0, 2), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            return one(check_nested_shift(rand_first(seed, 0, p), g.i("m"), g.i("r"), g.i("n")));
        },
        true);
}

void add_section2(Builder& b)
{
    auto& upper = b.add(
        "binom_upper_conv", "sec 2: convolution with binom(y-k, x)",
        [](long nmax) { return product({ints("pair", 0, 1), ints("x", 0, 3), grid("y"), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long x = g.i("x");
            const Rat y = g.r("y");
            const Pair t = rand_first(seed, 0, p);
            return one(sum(0, n, [&](long k) { return sg(n - k) * bn(n, k) * br(y - Rat(k), x) * t.s(n - k); }),
                       sum(0, n, [&](long k) { return sg(k) * bn(n, k) * br(y - Rat(k), x - k) * t.sigma(n - k); }));
        },
        true);
    (void)upper;

    b.add(
        "harmonic_frac_conv", "sec 2: convolution with H_{k+m}/(k+m)",
        [](long nmax) { return product({ints("pair", 0, 1), ints("m", 1, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long m = g.i("m");
            const Pair t = rand_first(seed, 0, p);
            return one(
                sum(0, n, [&](long k) { return sg(n - k) * bn(n, k) * Rat(m) * H(k + m) / Rat(k + m) * t.s(n - k); }),
                sum(0, n, [&](long k) {
                    return sg(k) * bn(n, k) * ib(Rat(k + m), m) * (H(k + m) - H(k)) * t.sigma(n - k);
                }));
        },
        true);

    b.add(
        "gibonacci_harmonic", "sec 2: general Fibonacci-harmonic identity and its Fibonacci cases",
        [](long nmax) {
            Domain general;
            const std::vector<std::pair<Rat, Rat>> seeds = {
                {Rat(0), Rat(1)}, {Rat(2), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1, 2), Rat(-3)}};
            for (const auto& [g0, g1] : seeds) {
                for (Params q : product({values("t", {Rat(1), Rat(2), Rat(-1)}), ints("r", -1, 1), ints("m", 1, 2)})) {
                    q["g0"] = g0;
                    q["g1"] = g1;
                    general.push_back(std::move(q));
                }
            }
            general = with(cross(general, n_only(nmax)), "display", 0);
            Domain fib = with(product({ints("m", 1, 3), ints("n", 0, nmax)}), "display", 1);
            Domain special = with(n_only(nmax), "display", 2);
            return concat({general, fib, special});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            switch (g.i("display")) {
            case 0: {
                const Rat g0 = g.r("g0");
                const Rat g1 = g.r("g1");
                const long t = g.i("t");
                const long r = g.i("r");
                const long m = g.i("m");
                const Rat lt = L(t);
                auto G = [&](long i) { return gibonacci(g0, g1, i); };
                Rat lhs = sum(0, n, [&](long k) {
                    return sg(n - k) * bn(n, k) * Rat(m) * H(k + m) / Rat(k + m) * pow(lt, k) * G(t * (n - k) + r);
                });
                // carries the (-1)^r of the transform of G_{tk+r}/L_t^k
                Rat rhs = sg(r) * sum(0, n, [&](long k) {
                              return sg(k) * bn(n, k) * ib(Rat(k + m), m) * (H(k + m) - H(k)) * pow(lt, k) *
                                     (g0 * L(t * (n - k) - r) - G(t * (n - k) - r));
                          });
                return one(std::move(lhs), std::move(rhs));
            }
            case 1: {
                const long m = g.i("m");
                return one(
                    sum(0, n, [&](long k) { return sg(n - k) * bn(n, k) * Rat(m, k + m) * H(k + m) * F(n - k); }),
                    sum(0, n, [&](long k) {
                        return sg(k - 1) * bn(n, k) * ib(Rat(k + m), m) * (H(k + m) - H(k)) * F(n - k);
                    }));
            }
            default:
                return one(sum(0, n, [&](long k) { return sg(n - k) * bn(n, k) * H(k + 1) * F(n - k) / Rat(k + 1); }),
                           sum(0, n, [&](long k) {
                               return sg(k - 1) * bn(n, k) * F(n - k) / Rat((k + 1) * (k + 1));
                           }));
            }
        });

    auto& ratio = b.add(
        "binom_ratio_conv", "sec 2: convolution of binom(y-k,x) with binom(u,k)/binom(v,k)",
        [](long nmax) {
            Domain general = with(product({ints("x", 0, 2), grid("y"), grid("u"),
                                           values("v", {Rat(1, 2), Rat(-1, 2), Rat(-5, 7), Rat(7)}), ints("n", 0, nmax)}),
                                  "display", 0);
            Domain v_is_n = with(product({ints("x", 0, 2), grid("y"), grid("u"), ints("n", 0, nmax)}), "display", 1);
            Domain special = with(product({ints("x", 0, 3), grid("y"), ints("n", 0, nmax)}), "display", 2);
            return concat({general, v_is_n, special});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const long x = g.i("x");
            const Rat y = g.r("y");
            switch (g.i("display")) {
            case 0: {
                const Rat u = g.r("u");
                const Rat v = g.r("v");
                return one(sum(0, n,
                               [&](long k) {
                                   return sg(n - k) * bn(n, k) * br(y - Rat(k), x) * br(u, n - k) * ib(v, n - k);
                               }),
                           sum(0, n, [&](long k) {
                               return sg(k) * bn(n, k) * br(y - Rat(k), x - k) * br(v - u, n - k) * ib(v, n - k);
                           }));
            }
            case 1: {
                const Rat u = g.r("u");
                return one(sum(0, n, [&](long k) { return sg(n - k) * br(y - Rat(k), x) * br(u, n - k); }),
                           sum(0, n, [&](long k) { return sg(k) * br(y - Rat(k), x - k) * br(Rat(n) - u, n - k); }));
            }
            default:
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * br(y - Rat(k), x - k); }),
                           br(y - Rat(n), x));
            }
        });
    ratio.guard = [](const Params& p) {
        // v - n must not be a negative integer
        Get g{p};
        if (!p.count("v")) {
            return true;
        }
        const Rat v = g.r("v");
        return !v.is_integer() || v >= Rat(g.i("n"));
    };

    b.add(
        "harm_odd_conv", "sec 2: alternating convolution of harmonic and odd harmonic numbers",
        [](long nmax) {
            return concat({with(product({ints("m", 0, 3), ints("n", 1, nmax)}), "display", 0),
                           with(n_only(nmax, 1), "display", 1)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const long m = g.i("display") == 0 ? g.i("m") : 0;
            Rat lhs = sum(0, n, [&](long k) { return sg(n - k) * bn(n, k) * H(k + m) * O(n - k); });
            Rat tail = sum(1, n - 1, [&](long k) {
                return sg(k) * bn(n, k) * two_pow(2 * (n - k) - 1) / Rat(k * (n - k)) * ib(Rat(k + m), m) *
                       ib(Rat(2 * (n - k)), n - k);
            });
            Rat head = -H(m) / Rat(n) * ib(Rat(2 * n), n) * two_pow(2 * n - 1);
            return one(std::move(lhs), g.i("display") == 0 ? head + tail : tail);
        });

    auto& self = b.add(
        "self_conv_pt7l41w", "sec 2: self-convolution of a first-kind pair, zero at odd n",
        [](long nmax) {
            return concat({with(product({ints("pair", 0, 3), ints("n", 0, nmax)}), "display", 0),
                           with(product({ints("pair", 0, 3), ints("n", 0, nmax)}), "display", 1)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const Pair s = rand_first(seed, 0, p);
            Rat lhs = sum(0, n, [&](long k) { return sg(k) * bn(n, k) * s.s(k) * s.s(n - k); });
            if (g.i("display") == 1) {
                return one(std::move(lhs), Rat(0));
            }
            return one(std::move(lhs), sum(0, n, [&](long k) { return sg(k) * bn(n, k) * s.sigma(k) * s.sigma(n - k); }));
        },
        true);
    self.guard = [](const Params& p) {
        Get g{p};
        return g.i("display") == 0 || !is_even(g.i("n"));
    };

    auto mikic = [](long n) {
        return is_even(n) ? catalan(n / 2) * bn(n, n / 2) : Rat(0);
    };
    b.add(
        "catalan_mikic", "sec 2: alternating convolution of Catalan numbers",
        [](long nmax) { return n_only(nmax); },
        [mikic](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * catalan(k) * catalan(n - k); }), mikic(n));
        });
    b.add(
        "catalan_floor", "sec 2: alternating convolution of central floor binomials",
        [](long nmax) { return concat({with(n_only(nmax), "display", 0), with(n_only(nmax), "display", 1)}); },
        [mikic](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            Rat lhs = sum(0, n, [&](long k) { return sg(k) * bn(n, k) * bn(k, k / 2) * bn(n - k, (n - k) / 2); });
            if (g.i("display") == 0) {
                return one(std::move(lhs), mikic(n));
            }
            return one(std::move(lhs), sum(0, n, [&](long k) { return sg(k) * bn(n, k) * catalan(k) * catalan(n - k); }));
        });

    b.add(
        "harm_sq_conv", "sec 2: self-convolution of H_{k+m}/(k+m)",
        [](long nmax) {
            return concat({with(product({ints("m", 1, 3), ints("n", 0, nmax)}), "display", 0),
                           with(n_only(nmax), "display", 1)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            if (g.i("display") == 1) {
                return one(sum(0, n,
                               [&](long k) {
                                   return sg(k) * bn(n, k) * H(k + 1) * H(n - k + 1) / Rat((k + 1) * (n - k + 1));
                               }),
                           sum(0, n, [&](long k) {
                               return sg(k) * bn(n, k) / Rat((k + 1) * (k + 1) * (n - k + 1) * (n - k + 1));
                           }));
            }
            const long m = g.i("m");
            return one(sum(0, n,
                           [&](long k) {
                               return sg(k) * bn(n, k) * Rat(m * m) * H(k + m) * H(n - k + m) /
                                      Rat((k + m) * (n - k + m));
                           }),
                       sum(0, n, [&](long k) {
                           return sg(k) * bn(n, k) * ib(Rat(k + m), k) * ib(Rat(n - k + m), n - k) * (H(k + m) - H(k)) *
                                  (H(n - k + m) - H(n - k));
                       }));
        });

    auto& hiez = b.add(
        "hiez2vp", "sec 2: cubed binomial sum against binom(y-n, .) at x = n",
        [](long nmax) { return product({grid("y"), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const Rat y = g.r("y");
            return one(sum(0, n,
                           [&](long k) {
                               const Rat c = bn(n, k);
                               return sg(k) * c * c * c * ib(y, k) * ib(y, n - k);
                           }),
                       sum(0, n, [&](long k) {
                           return sg(k) * bn(n, k) * br(y - Rat(n), k) * br(y - Rat(n), n - k) * ib(y, k) * ib(y, n - k);
                       }));
        });
    hiez.guard = [](const Params& p) {
        Get g{p};
        const Rat y = g.r("y");
        return !(y.is_integer() && y.sign() >= 0) || y >= Rat(g.i("n"));
    };

    b.add(
        "u00e6qz", "sec 2: reciprocal binomial sum at y = n",
        [](long nmax) { return product({grid("x"), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const Rat x = g.r("x");
            const Rat nx = Rat(n) - x;
            return one(sum(0, n, [&](long k) { return sg(k) * br(x, k) * br(x, n - k) * ib(Rat(n), k); }),
                       sum(0, n, [&](long k) { return sg(k) * br(nx, k) * br(nx, n - k) * ib(Rat(n), k); }));
        });

    auto dixon_value = [](long n) {
        return is_even(n) ? sg(n / 2) * bn(n, n / 2) * bn(3 * n / 2, n) : Rat(0);
    };
    b.add(
        "dixon", "sec 2: Dixon's identity",
        [](long nmax) { return n_only(nmax); },
        [dixon_value](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            return one(sum(0, n,
                           [&](long k) {
                               const Rat c = bn(n, k);
                               return sg(k) * c * c * c;
                           }),
                       dixon_value(n));
        });
    b.add(
        "dixon_dual", "sec 2: dual form of Dixon's identity",
        [](long nmax) { return n_only(nmax); },
        [dixon_value](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            return one(sum(0, n, [&](long k) { return sg(n - k) * bn(n, k) * bn(n + k, k) * bn(2 * n - k, n - k); }),
                       dixon_value(n));
        });

    b.add(
        "sury_corollary", "sec 2: alternating reciprocal binomial sums",
        [](long nmax) {
            return concat({with(n_only(nmax), "display", 0), with(n_only(nmax), "display", 1),
                           with(n_only(nmax), "display", 2)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const Rat even = Rat(1) + sg(n);
            switch (g.i("display")) {
            case 0:
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) / Rat((n - k + 1) * (k + 1)); }),
                           even / Rat((n + 1) * (n + 2)));
            case 1:
                return one(sum(0, n, [&](long k) { return sg(k) * ib(Rat(n), k); }), even * Rat(n + 1, n + 2));
            default:
                return one(sum(0, n, [&](long k) { return sg(n - k) * ib(Rat(n), k); }),
                           sum(0, n, [&](long k) {
                               return sg(k) * bn(n, k) * Rat((n + 1) * (n + 1), (n - k + 1) * (k + 1));
                           }));
            }
        });

    // invariant: Lucas, k F_{k-1}, binom(2k,k)/4^k, binom(x/2,k)/binom(x,k) at x = 1/2;
    // inverse invariant: Fibonacci, H_k/(k+1)
    static const std::vector<std::pair<bool, std::function<Rat(long)>>> symmetric = {
        {true, [](long k) { return L(k); }},
        {true, [](long k) { return Rat(k) * F(k - 1); }},
        {true, [](long k) { return bn(2 * k, k) / two_pow(2 * k); }},
        {true, [](long k) { return br(Rat(1, 4), k) * ib(Rat(1, 2), k); }},
        {false, [](long k) { return F(k); }},
        {false, [](long k) { return H(k) / Rat(k + 1); }},
    };
    auto& parity = b.add(
        "rgyk46r_parity", "sec 2: parity law for invariant and inverse invariant sequences",
        [](long nmax) {
            const long last = static_cast<long>(symmetric.size()) - 1;
            return product({ints("a", 0, last), ints("b", 0, last), ints("n", 0, nmax)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const auto& a = symmetric[static_cast<std::size_t>(g.i("a"))].second;
            const auto& c = symmetric[static_cast<std::size_t>(g.i("b"))].second;
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * a(k) * c(n - k); }), Rat(0));
        });
    parity.guard = [](const Params& p) {
        Get g{p};
        const bool like = symmetric[static_cast<std::size_t>(g.i("a"))].first ==
                          symmetric[static_cast<std::size_t>(g.i("b"))].first;
        return like ? !is_even(g.i("n")) : is_even(g.i("n"));
    };

    auto& lx2 = b.add(
        "lucas_x2_odd", "sec 2: Lucas convolution with binom(x/2,k)/binom(x,k), odd n",
        [](long nmax) {
            std::vector<Rat> xs = rational_grid();
            xs.insert(xs.end(), {Rat(5), Rat(11), Rat(-7, 3)});
            return product({values("x", xs), ints("n", 0, nmax)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const Rat x = g.r("x");
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * br(x / Rat(2), k) * ib(x, k) * L(n - k); }),
                       Rat(0));
        });
    lx2.guard = [](const Params& p) {
        Get g{p};
        const long n = g.i("n");
        const Rat x = g.r("x");
        // binom(x, k) must not vanish for k <= n
        return !is_even(n) && !(x.is_integer() && x.sign() >= 0 && x < Rat(n));
    };
}

void add_section3(Builder& b)
{
    b.add(
        "bernoulli_poly_shift_conv", "sec 3: Bernoulli polynomial convolutions from the shift recurrence",
        [](long nmax) {
            Domain general = with(product({ints("pair", 0, 1), grid("x"), grid_nonzero("y"), ints("n", 0, nmax)}),
                                  "display", 0);
            Domain two = with(product({grid("x"), grid_nonzero("y"), values("z", {Rat(0), Rat(1, 2)}),
                                       values("w", {Rat(1), Rat(-1, 2), Rat(3)}), ints("n", 0, nmax)}),
                              "display", 1);
            Domain shifted = with(product({grid("x"), values("z", {Rat(0), Rat(1, 2)}),
                                           values("w", {Rat(1), Rat(-1, 2), Rat(3)}), ints("n", 0, nmax)}),
                                  "display", 2);
            Domain reduced = with(product({grid_nonzero("y"), grid_nonzero("w"), ints("n", 0, nmax)}), "display", 3);
            return concat({general, two, shifted, reduced});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            switch (g.i("display")) {
            case 0: {
                const Rat x = g.r("x");
                const Rat y = g.r("y");
                const Pair t = rand_second(seed, 0, p);
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * pow(y, k) * Bp(n - k, x) * t.s(k); }),
                           sum(0, n, [&](long k) {
                               return sg(k) * bn(n, k) * pow(y, k) * Bp(n - k, x + y) * t.sigma(k);
                           }));
            }
            case 1: {
                const Rat x = g.r("x");
                const Rat y = g.r("y");
                const Rat z = g.r("z");
                const Rat w = g.r("w");
                const Rat q = y / w;
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * pow(q, k) * Bp(n - k, x) * Bp(k, z); }),
                           sum(0, n, [&](long k) {
                               return sg(k) * bn(n, k) * pow(q, k) * Bp(n - k, x + y) * Bp(k, z + w);
                           }));
            }
            case 2: {
                const Rat x = g.r("x");
                const Rat z = g.r("z");
                const Rat w = g.r("w");
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * Bp(n - k, x) * Bp(k, z); }),
                           sum(0, n, [&](long k) { return sg(k) * bn(n, k) * Bp(n - k, x + w) * Bp(k, z + w); }));
            }
            default: {
                const Rat y = g.r("y");
                const Rat w = g.r("w");
                const Rat q = y / w;
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * pow(q, k) * Bp(n - k, y) * Bp(k, w); }),
                           sum(0, n, [&](long k) { return sg(k) * bn(n, k) * pow(q, k) * B(n - k) * B(k); }));
            }
            }
        },
        true);

    auto& zc4 = b.add(
        "zc4ufo6_prop", "sec 3: Bernoulli polynomial convolution at odd n",
        [](long nmax) { return product({grid_nonzero("y"), grid_nonzero("w"), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const Rat y = g.r("y");
            const Rat w = g.r("w");
            const Rat q = y / w;
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * pow(q, k) * Bp(n - k, y) * Bp(k, w); }),
                       Rat(n) * y / (Rat(2) * w) * (Rat(1) - pow(q, n - 2)) * B(n - 1));
        });
    zc4.guard = [](const Params& p) { return !is_even(Get{p}.i("n")); };

    b.add(
        "zc3ejk3", "sec 3: binom(x,k) against Bernoulli numbers",
        [](long nmax) { return product({grid("x"), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const Rat x = g.r("x");
            return one(sum(0, n, [&](long k) { return sg(n - k) * bn(n, k) * br(x, k) * B(n - k); }),
                       sum(0, n, [&](long k) { return bn(n, k) * br(x + Rat(k), k) * B(n - k); }));
        });

    b.add(
        "numg9mq", "sec 3: x-derivative of the binom(x,k) Bernoulli identity",
        [](long nmax) {
            Domain out;
            for (long n = 0; n <= nmax; ++n) {
                for (long off : {0L, 1L, 4L}) {
                    out.push_back({{"n", Rat(n)}, {"x", Rat(n + off)}});
                }
            }
            return out;
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const long x = g.i("x");
            return one(sum(0, n,
                           [&](long k) {
                               return sg(n - k) * bn(n, k) * bn(x, k) * (H(x) - H(x - k)) * B(n - k);
                           }),
                       sum(0, n, [&](long k) { return bn(n, k) * bn(x + k, k) * (H(x + k) - H(x)) * B(n - k); }));
        });

    auto& s8x = b.add(
        "s8xzyeq", "sec 3: central binomial and odd harmonic numbers against Bernoulli numbers, even n",
        [](long nmax) { return n_only(nmax); },
        [](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            return one(sum(0, n, [&](long k) { return bn(n, k) * bn(2 * k, k) * two_pow(-2 * k) * O(k) * B(n - k); }),
                       Rat(0));
        });
    s8x.guard = [](const Params& p) { return is_even(Get{p}.i("n")); };

    b.add(
        "binom_x_self", "sec 3: self-convolution of binom(x,k)",
        [](long nmax) { return product({grid("x"), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const Rat x = g.r("x");
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * br(x, k) * br(x, n - k); }),
                       sum(0, n, [&](long k) {
                           return sg(k) * bn(n, k) * br(x + Rat(k), k) * br(x + Rat(n - k), n - k);
                       }));
        });

    b.add(
        "harm_binom_self", "sec 3: self-convolution of binom(m,k) H_k",
        [](long nmax) { return product({ints("m", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const long m = g.i("m");
            auto hb = [&](long k) { return H(m) + H(k) - H(k + m); };
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * bn(m, k) * bn(m, n - k) * H(k) * H(n - k); }),
                       sum(0, n, [&](long k) {
                           return sg(k) * bn(n, k) * bn(k + m, m) * bn(n - k + m, m) * hb(k) * hb(n - k);
                       }));
        });

    b.add(
        "zrnqrxn", "sec 3: swapped convolution of binom(m,k) H_k with binom(x,k)",
        [](long nmax) { return product({ints("m", 0, 3), grid("x"), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const long m = g.i("m");
            const Rat x = g.r("x");
            return one(sum(0, n, [&](long k) { return bn(n, k) * bn(m, k) * br(x + Rat(n - k), n - k) * H(k); }),
                       sum(0, n, [&](long k) {
                           return bn(n, k) * br(x, n - k) * bn(k + m, m) * (H(m) + H(k) - H(k + m));
                       }));
        });

    b.add(
        "trif_swap", "sec 3: reciprocal binomial pair in the swapped convolution",
        [](long nmax) {
            Domain out;
            for (long pair = 0; pair <= 1; ++pair) {
                for (long n = 0; n <= nmax; ++n) {
                    for (long pp = 0; pp <= 2; ++pp) {
                        std::vector<Rat> ms = {Rat(n + pp), Rat(n + pp + 1), Rat(n + pp + 3), Rat(1, 2), Rat(-1, 2),
                                               Rat(-5, 7)};
                        for (const Rat& m : ms) {
                            out.push_back({{"pair", Rat(pair)}, {"n", Rat(n)}, {"p", Rat(pp)}, {"m", m}});
                        }
                    }
                }
            }
            return out;
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long pp = g.i("p");
            const Rat m = g.r("m");
            const Pair t = rand_second(seed, 0, p);
            return one(sum(0, n, [&](long k) { return bn(n, k) * ib(m, pp + n - k) * t.sigma(k); }),
                       sum(0, n, [&](long k) {
                           return bn(n, k) * (m + Rat(1)) / (m - Rat(n - k - 1)) * ib(m - Rat(n - k), pp) * t.s(k);
                       }));
        },
        true);

    b.add(
        "evuuti7", "sec 3: m-derivative of the reciprocal binomial sum at p = 0",
        [](long nmax) {
            Domain out;
            for (long display = 0; display <= 1; ++display) {
                for (long n = 0; n <= nmax; ++n) {
                    for (long off : {0L, 1L, 3L}) {
                        out.push_back({{"display", Rat(display)}, {"n", Rat(n)}, {"m", Rat(n + off)}});
                    }
                }
            }
            return out;
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const long m = g.i("m");
            const Rat d = Rat(m - n + 1);
            if (g.i("display") == 0) {
                return one(sum(0, n, [&](long k) { return bn(n, k) * ib(Rat(m), k) * (H(m - k) - H(m)); }),
                           Rat(-n) / (d * d));
            }
            return one(sum(0, n, [&](long k) { return bn(n, k) * ib(Rat(m), k) * H(m - k); }),
                       Rat(m + 1) / d * H(m) - Rat(n) / (d * d));
        });

    b.add(
        "harm_partial_wellknown", "sec 3: partial sums of harmonic numbers",
        [](long nmax) { return n_only(nmax); },
        [](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            return one(sum(0, n, [](long k) { return H(k); }), Rat(n + 1) * H(n) - Rat(n));
        });

    b.add(
        "okprop", "sec 3: alternating sum of odd harmonic numbers with reciprocal central binomials",
        [](long nmax) { return n_only(nmax); },
        [](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            const Rat d = Rat(2 * n - 1);
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * ib(Rat(2 * k), k) * two_pow(2 * k) * O(k); }),
                       Rat(-2 * n) / (d * d));
        });

    b.add(
        "v4unj46", "sec 3: p-derivative form for an arbitrary second-kind pair",
        [](long nmax) {
            Domain out;
            for (long pair = 0; pair <= 1; ++pair) {
                for (long n = 0; n <= nmax; ++n) {
                    for (long pp = 0; pp <= 2; ++pp) {
                        for (long off : {0L, 1L, 3L}) {
                            out.push_back({{"pair", Rat(pair)}, {"n", Rat(n)}, {"p", Rat(pp)}, {"m", Rat(n + pp + off)}});
                        }
                    }
                }
            }
            return out;
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long pp = g.i("p");
            const long m = g.i("m");
            const Pair t = rand_second(seed, 0, p);
            return one(sum(0, n,
                           [&](long k) {
                               return bn(n, k) * ib(Rat(m), pp + n - k) * (H(m - pp - n + k) - H(pp + n - k)) *
                                      t.sigma(k);
                           }),
                       sum(0, n, [&](long k) {
                           return bn(n, k) * ib(Rat(m - n + k), pp) * Rat(m + 1, m - n + k + 1) *
                                  (H(m - pp - n + k) - H(pp)) * t.s(k);
                       }));
        },
        true);

    b.add(
        "h_partial_prop", "sec 3: binom(n+1,k+1) H_k against a second-kind pair",
        [](long nmax) {
            return concat({with(product({ints("pair", 0, 1), ints("n", 0, nmax)}), "display", 0),
                           with(n_only(nmax), "display", 1),
                           with(product({grid("x"), ints("n", 0, nmax)}), "display", 2)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            switch (g.i("display")) {
            case 0: {
                const Pair t = rand_second(seed, 0, p);
                return one(sum(0, n, [&](long k) { return bn(n + 1, k + 1) * H(k) * t.s(k); }),
                           sum(0, n, [&](long k) { return (H(k) - H(n - k)) * t.sigma(k); }));
            }
            case 1:
                return one(sum(0, n, [&](long k) { return bn(n + 1, k + 1) * H(k) * B(k); }),
                           sum(0, n, [&](long k) { return sg(k) * (H(k) - H(n - k)) * B(k); }));
            default: {
                const Rat x = g.r("x");
                return one(sum(0, n, [&](long k) { return bn(n + 1, k + 1) * H(k) * pow(x, k); }),
                           sum(0, n, [&](long k) { return (H(k) - H(n - k)) * pow(Rat(1) + x, k); }));
            }
            }
        },
        true);
}

void add_section4(Builder& b)
{
    auto& fb = b.add(
        "fib_bernoulli_even", "sec 4: Fibonacci against Bernoulli numbers, even n",
        [](long nmax) { return n_only(nmax); },
        [](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            return one(sum(0, n, [&](long k) { return bn(n, k) * F(k) * B(n - k); }), Rat(0));
        });
    fb.guard = [](const Params& p) { return is_even(Get{p}.i("n")); };

    auto& lb = b.add(
        "lucas_bernoulli_odd", "sec 4: Lucas against Bernoulli numbers, odd n",
        [](long nmax) { return n_only(nmax); },
        [](const Params& p, std::uint64_t) {
            const long n = Get{p}.i("n");
            return one(sum(0, n, [&](long k) { return bn(n, k) * L(k) * B(n - k); }), Rat(0));
        });
    lb.guard = [](const Params& p) { return !is_even(Get{p}.i("n")); };

    b.add(
        "jy2d3um", "sec 4: H_{k+m} against an arbitrary second-kind pair",
        [](long nmax) { return product({ints("pair", 0, 1), ints("m", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long m = g.i("m");
            const Pair t = rand_second(seed, 0, p);
            return one(sum(0, n, [&](long k) { return bn(n, k) * H(k + m) * t.s(n - k); }),
                       H(m) * t.sigma(n) - sum(1, n, [&](long k) {
                           return sg(k) * bn(n, k) * ib(Rat(k + m), m) / Rat(k) * t.sigma(n - k);
                       }));
        },
        true);

    b.add(
        "t7tu7xu_special", "sec 4: harmonic and odd harmonic polynomial identities and their values at t = 1",
        [](long nmax) {
            return concat({with(n_only(nmax), "display", 0), with(n_only(nmax), "display", 1),
                           with(n_only(nmax), "display", 2), with(n_only(nmax), "display", 3)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            switch (g.i("display")) {
            case 0:
                return coefficients(named_poly_sides("harmonic_poly", {{"n", Rat(n)}, {"m", Rat(0)}}));
            case 1:
                return coefficients(named_poly_sides("odd_harmonic_poly", {{"n", Rat(n)}}));
            case 2:
                return one(sum(0, n, [&](long k) { return bn(n, k) * H(k); }),
                           sum(1, n, [&](long k) { return sg(k - 1) * two_pow(n - k) * bn(n, k) / Rat(k); }));
            default:
                return one(sum(0, n, [&](long k) { return bn(n, k) * O(k); }), sum(1, n, [&](long k) {
                               return sg(k - 1) * two_pow(n + k - 1) * bn(n, k) * ib(Rat(2 * k), k) / Rat(k);
                           }));
            }
        });
}

void add_section6(Builder& b)
{
    b.add(
        "ps67scn", "sec 6: partial sums of a second-kind transform",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            const long n = Get{p}.i("n");
            const Pair t = rand_second(seed, 0, p);
            return one(sum(0, n, [&](long k) { return t.sigma(k); }),
                       sum(0, n, [&](long k) { return bn(n + 1, k + 1) * t.s(k); }));
        },
        true);
    b.add(
        "oy8uhm0", "sec 6: shifted partial sums of a second-kind transform",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            const long n = Get{p}.i("n");
            const Pair t = rand_second(seed, 0, p);
            return one(sum(1, n, [&](long k) { return t.sigma(k - 1); }),
                       sum(1, n, [&](long k) { return bn(n, k) * t.s(k - 1); }));
        },
        true);
    b.add(
        "xc556tq", "sec 6: shifted partial sums of a first-kind transform",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            const long n = Get{p}.i("n");
            const Pair t = rand_first(seed, 0, p);
            return one(sum(1, n, [&](long k) { return t.sigma(k - 1); }),
                       sum(1, n, [&](long k) { return sg(k - 1) * bn(n, k) * t.s(k - 1); }));
        },
        true);

    b.add(
        "hq03eji_pairs", "sec 6: Lucas and Fibonacci partial-sum pairs",
        [](long nmax) { return concat({with(n_only(nmax), "display", 0), with(n_only(nmax), "display", 1)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            if (g.i("display") == 0) {
                Rat lhs = sum(0, n, [&](long k) { return sg(k) * bn(n, k) * (L(k + 1) - Rat(1)); });
                return one(std::move(lhs), n == 0 ? Rat(0) : -L(n - 1));
            }
            Rat lhs = sum(0, n, [&](long k) { return sg(k) * bn(n, k) * (F(k + 1) - Rat(1)); });
            return one(std::move(lhs), n == 0 ? Rat(0) : F(n - 1));
        });

    auto& qp = b.add(
        "qpev64c", "sec 6: lagged partial sums of a first-kind pair",
        [](long nmax) {
            return concat({with(product({ints("pair", 0, 3), ints("n", 1, nmax)}), "display", 0),
                           with(n_only(nmax), "display", 1)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            if (g.i("display") == 0) {
                const Pair t = rand_first(seed, 0, p);
                return one(sum(1, n,
                               [&](long k) {
                                   return sg(k) * bn(n, k) * sum(1, k - 1, [&](long j) { return t.s(j - 1); });
                               }),
                           sum(1, n - 1, [&](long k) { return t.sigma(k - 1); }));
            }
            // partial sums of an invariant sequence stay invariant
            auto u = [](long k) { return sum(1, k - 1 + (k == 0), [](long j) { return L(j - 1); }); };
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * u(k); }), u(n));
        },
        true);
    (void)qp;

    b.add(
        "abwtmhn_lucas", "sec 6: averaged Lucas partial sums form an invariant sequence",
        [](long nmax) {
            return concat({with(n_only(nmax), "display", 0), with(n_only(nmax), "display", 1),
                           with(n_only(nmax), "display", 2)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            auto w = [](long k) { return (L(k + 2) - Rat(1)) / Rat((k + 1) * (k + 2)); };
            switch (g.i("display")) {
            case 0:
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * w(k); }), w(n));
            case 1:
                return one(sum(0, n, [](long k) { return L(k); }), L(n + 2) - Rat(1));
            default:
                return one(partial_sum_pair(catalog_pair("lucas"), PartialSum::AveragedSums).s(n), w(n));
            }
        });

    b.add(
        "pop9ybt", "sec 6: transform of a second-kind transform",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            const long n = Get{p}.i("n");
            const Pair t = rand_second(seed, 0, p);
            return one(sum(0, n, [&](long k) { return bn(n, k) * t.sigma(k); }),
                       sum(0, n, [&](long k) { return bn(n, k) * two_pow(n - k) * t.s(k); }));
        },
        true);

    b.add(
        "binom_xz_2k", "sec 6: binom(k+x, k+z) against binom(x, k+z) 2^{n-k}",
        [](long nmax) { return product({grid("x"), ints("z", -2, 2), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            const long z = g.i("z");
            const Rat x = g.r("x");
            return one(sum(0, n, [&](long k) { return bn(n, k) * br(x + Rat(k), k + z); }),
                       sum(0, n, [&](long k) { return bn(n, k) * br(x, k + z) * two_pow(n - k); }));
        });

    auto& s4j = b.add(
        "s4jiizc", "sec 6: shifted inversion of a first-kind pair",
        [](long nmax) { return product({ints("pair", 0, 1), ints("j", 0, nmax), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long j = g.i("j");
            const Pair t = rand_first(seed, 0, p);
            return one(sum(0, n, [&](long k) { return sg(n - k) * bn(n - j, k - j) * t.s(n - k); }), t.sigma(n - j));
        },
        true);
    s4j.guard = [](const Params& p) {
        Get g{p};
        return g.i("j") <= g.i("n");
    };

    auto& kb = b.add(
        "k_bernoulli", "sec 6: sum of binom(n,k) k B_k",
        [](long nmax) {
            return concat({with(n_only(nmax), "display", 0), with(n_only(nmax, 1), "display", 1),
                           with(n_only(nmax), "display", 2)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            const long n = g.i("n");
            Rat lhs = sum(0, n, [&](long k) { return bn(n, k) * Rat(k) * B(k); });
            switch (g.i("display")) {
            case 0: {
                // at n = 2 the B_{n-1} term survives, so the even case only holds from n = 4
                Rat rhs = (is_even(n) && n != 2) ? Rat(n) * B(n)
                          : n == 1             ? Rat(-1, 2)
                          : n == 2             ? Rat(2) * (B(2) + B(1))
                                               : -Rat(n) * B(n - 1);
                return one(std::move(lhs), std::move(rhs));
            }
            case 1:
                return one(std::move(lhs), sg(n) * Rat(n) * (B(n) + B(n - 1)));
            default: {
                // through the times-k constructor on ((-1)^k B_k, (-1)^k B_k)
                const Pair base = convert_kind(catalog_pair("bernoulli"));
                return one(std::move(lhs), times_k_pair(base).sigma(n));
            }
            }
        });
    (void)kb;

    b.add(
        "l9mldgr_m2_m3", "sec 6: k^2 and k^3 weighted transforms",
        [](long nmax) { return product({ints("pair", 0, 1), ints("m", 2, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long m = g.i("m");
            const Pair s = rand_first(seed, 0, p);
            auto sigma = [&](long i) { return s.sigma(i); };
            auto diff = [&](const Rat& c, long i) { return term(c, sigma, i) - term(c, sigma, i - 1); };
            Rat lhs = sum(0, n, [&](long k) { return sg(k) * bn(n, k) * pow(Rat(k), m) * s.s(k); });
            const Rat nn(n);
            if (m == 2) {
                return one(std::move(lhs), diff(nn * nn, n) - diff(nn * (nn - Rat(1)), n - 1));
            }
            return one(std::move(lhs), diff(nn * nn * nn, n) -
                                           diff(nn * (nn - Rat(1)) * (Rat(2) * nn - Rat(1)), n - 1) +
                                           diff(nn * (nn - Rat(1)) * (nn - Rat(2)), n - 2));
        },
        true);
}

void add_section7(Builder& b)
{
    auto& b0c = b.add(
        "ext_b0c9iwa", "sec 7: 2^{n-k} weighted transform with j <= n",
        [](long nmax) { return product({ints("pair", 0, 1), ints("j", 0, nmax), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            return one(check_extension(Extension::PowerOfTwo, rand_first(seed, 0, p), g.i("j"), g.i("n")));
        },
        true);
    b0c.guard = [](const Params& p) {
        Get g{p};
        return g.i("j") <= g.i("n");
    };

    // index 0.. in the invariant list, then the inverse invariant list
    static const std::vector<std::function<Rat(long)>> invariant = {
        [](long k) { return L(k); },
        [](long k) { return Rat(k) * F(k - 1); },
        [](long k) { return bn(2 * k, k) / two_pow(2 * k); },
    };
    static const std::vector<std::function<Rat(long)>> inverse = {
        [](long k) { return F(k); },
        [](long k) { return H(k) / Rat(k + 1); },
    };
    auto& ajk = b.add(
        "ext_ajkcgco", "sec 7: double binomial 2^k transform and its parity corollaries",
        [](long nmax) {
            return concat({
                with(product({ints("pair", 0, 1), ints("j", 0, nmax + 1), ints("n", 0, nmax)}), "display", 0),
                with(product({ints("seq", 0, 2), ints("j", 0, nmax), ints("n", 0, nmax)}), "display", 1),
                with(product({ints("seq", 0, 2), ints("n", 0, nmax)}), "display", 2),
                with(product({ints("seq", 0, 1), ints("j", 0, nmax), ints("n", 0, nmax)}), "display", 3),
                with(product({ints("seq", 0, 1), ints("n", 0, nmax)}), "display", 4),
            });
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const long display = g.i("display");
            if (display == 0) {
                return one(check_extension(Extension::DoubleBinomial, rand_first(seed, 0, p), g.i("j"), n));
            }
            const auto& s = (display <= 2 ? invariant : inverse)[static_cast<std::size_t>(g.i("seq"))];
            if (display == 1 || display == 3) {
                const long j = g.i("j");
                return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * bn(n - k, j) * two_pow(k) * s(k); }),
                           Rat(0));
            }
            return one(sum(0, n, [&](long k) { return sg(k) * bn(n, k) * two_pow(k) * s(k); }), Rat(0));
        },
        true);
    ajk.guard = [](const Params& p) {
        Get g{p};
        const long n = g.i("n");
        switch (g.i("display")) {
        case 1:
            return (n - g.i("j")) % 2 != 0;
        case 2:
            return !is_even(n);
        case 3:
            return (n - g.i("j")) % 2 == 0;
        case 4:
            return is_even(n);
        default:
            return true;
        }
    };

    b.add(
        "ext_2negk", "sec 7: 2^{-k} weighted swapped convolution",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            return one(check_extension(Extension::HalfWeight, rand_second(seed, 0, p), rand_second(seed, 1, p), 0, 0,
                                       Get{p}.i("n")));
        },
        true);
    b.add(
        "ext_shifted", "sec 7: convolution of a shifted sequence",
        [](long nmax) { return product({ints("pair", 0, 3), ints("n", 0, nmax)}); },
        [](const Params& p, std::uint64_t seed) {
            return one(check_extension(Extension::Shifted, rand_first(seed, 0, p), rand_first(seed, 1, p), 0, 0,
                                       Get{p}.i("n")));
        },
        true);
    b.add(
        "ext_km", "sec 7: k^m weighted convolution",
        [](long nmax) {
            return concat({with(product({ints("pair", 0, 1), ints("m", 0, 3), ints("n", 0, nmax)}), "display", 0),
                           with(product({ints("pair", 0, 1), ints("n", 0, nmax)}), "display", 1),
                           with(product({ints("pair", 0, 1), ints("n", 0, nmax)}), "display", 2),
                           with(product({ints("pair", 0, 1), ints("n", 0, nmax)}), "display", 3)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            const Pair s = rand_first(seed, 0, p);
            const Pair t = rand_first(seed, 1, p);
            switch (g.i("display")) {
            case 0:
                return one(check_extension(Extension::KPower, s, t, 0, g.i("m"), n));
            case 1:
                return one(sum(1, n, [&](long k) { return sg(n - k) * bn(n, k) * Rat(k) * s.s(k) * t.s(n - k); }),
                           sum(1, n, [&](long k) {
                               return sg(k) * bn(n, k) * Rat(k) * (s.sigma(k) - s.sigma(k - 1)) * t.sigma(n - k);
                           }));
            case 2: {
                // s_k = -1/k (s_0 = 0) with sigma_k = H_k
                Pair recip;
                recip.kind = Kind::First;
                recip.left = [](long k) { return k == 0 ? Rat(0) : Rat(-1, k); };
                recip.right = [](long k) { return H(k); };
                recip.label = "neg_reciprocal";
                return one(check_extension(Extension::KPower, recip, t, 0, 1, n));
            }
            default:
                return one(sum(1, n, [&](long k) { return sg(n - k - 1) * bn(n, k) * t.s(n - k); }),
                           sum(1, n, [&](long k) { return sg(k) * bn(n, k) * t.sigma(n - k); }));
            }
        },
        true);
}

void add_polynomial(Builder& b)
{
    b.add(
        "poly_first", "sec 8: polynomial identity attached to a first-kind pair",
        [](long nmax) {
            return concat({with(product({ints("pair", 0, 2), ints("n", 0, nmax)}), "display", 0),
                           with(n_only(nmax), "display", 1), with(n_only(nmax), "display", 2)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            switch (g.i("display")) {
            case 0:
                return coefficients(poly_sides_first(rand_first(seed, 0, p), n));
            case 1:
                return coefficients(poly_sides_first(catalog_pair("fibonacci"), n));
            default:
                return coefficients(poly_sides_first(catalog_pair("lucas"), n));
            }
        },
        true);
    b.add(
        "poly_second", "sec 8: polynomial identity attached to a second-kind pair",
        [](long nmax) {
            return concat({with(product({ints("pair", 0, 2), ints("n", 0, nmax)}), "display", 0),
                           with(n_only(nmax), "display", 1), with(n_only(nmax), "display", 2)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long n = g.i("n");
            switch (g.i("display")) {
            case 0:
                return coefficients(poly_sides_second(rand_second(seed, 0, p), n));
            case 1:
                return coefficients(poly_sides_second(catalog_pair("bernoulli"), n));
            default:
                return coefficients(poly_sides_second(catalog_pair("binom_x", {{"x", Rat(7, 2)}}), n));
            }
        },
        true);

    auto& sun = b.add(
        "sun_lemma", "sec 9: Sun's lemma, coefficientwise in t",
        [](long nmax) {
            const long top = std::min(nmax, 6L);
            return product({ints("m", 0, top), ints("n", 0, top), ints("r", 0, top)});
        },
        [](const Params& p, std::uint64_t) {
            Get g{p};
            return coefficients(sun_lemma_sides(g.i("m"), g.i("n"), g.i("r")));
        });
    sun.guard = [](const Params& p) {
        Get g{p};
        return sun_lemma_admissible(g.i("m"), g.i("n"), g.i("r"));
    };

    auto& chen = b.add(
        "chen_transfer", "sec 9: Sun's lemma transferred to binomial-transform pairs",
        [](long nmax) {
            const long top = std::min(nmax, 4L);
            return product({ints("display", 0, 2), ints("pair", 0, 1), ints("m", 0, top), ints("n", 0, top),
                            ints("r", 0, top)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const PolyIdentityForm form = sun_lemma_form(g.i("m"), g.i("n"), g.i("r"));
            switch (g.i("display")) {
            case 0:
                return one(transfer_identity(form, rand_first(seed, 0, p)));
            case 1:
                return one(transfer_identity(form, rand_second(seed, 0, p)));
            default:
                return one(transfer_identity(form, convert_kind(catalog_pair("bernoulli"))));
            }
        },
        true);
    chen.guard = [](const Params& p) {
        Get g{p};
        return sun_lemma_admissible(g.i("m"), g.i("n"), g.i("r")) && (g.i("display") != 2 || g.i("pair") == 0);
    };

    b.add(
        "chen_main_second", "sec 10: Chen's main result for a second-kind pair",
        [](long nmax) {
            return product({ints("pair", 0, 1), ints("m", 0, 3), ints("s", 0, 3), ints("n", 0, nmax)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long m = g.i("m");
            const long n = g.i("n");
            const long s = g.i("s");
            const Pair t = rand_second(seed, 0, p);
            Rat tail = sum(0, s - 1, [&](long k) {
                return sg(n + s - k) * Rat(s, m + n + s - k) * bn(s - 1, k) * ib(Rat(m + n + s - k - 1), n) * t.sigma(k);
            });
            return one(sum(0, m, [&](long k) { return bn(m, k) * ib(Rat(n + k + s), s) * t.s(n + k + s); }),
                       sum(0, n, [&](long k) {
                           return sg(n - k) * bn(n, k) * ib(Rat(m + k + s), s) * t.sigma(m + k + s);
                       }) + tail);
        },
        true);
    b.add(
        "chen_main_first", "sec 10: Chen's main result converted to a first-kind pair",
        [](long nmax) {
            return product({ints("pair", 0, 1), ints("m", 0, 3), ints("s", 0, 3), ints("n", 0, nmax)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long m = g.i("m");
            const long n = g.i("n");
            const long s = g.i("s");
            const Pair t = rand_first(seed, 0, p);
            Rat tail = sum(0, s - 1, [&](long k) {
                return sg(k) * Rat(s, m + n + s - k) * bn(s - 1, k) * ib(Rat(m + n + s - k - 1), n) * t.sigma(k);
            });
            return one(sum(0, m, [&](long k) { return sg(k) * bn(m, k) * ib(Rat(n + k + s), s) * t.s(n + k + s); }),
                       sg(s) * sum(0, n, [&](long k) {
                           return sg(k) * bn(n, k) * ib(Rat(m + k + s), s) * t.sigma(m + k + s);
                       }) + tail);
        },
        true);
    b.add(
        "chen_thm32_both", "sec 10: Chen's second theorem in both kinds",
        [](long nmax) {
            return product({ints("display", 0, 1), ints("pair", 0, 1), ints("m", 0, 3), ints("s", 0, 3),
                            ints("n", 0, nmax)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long m = g.i("m");
            const long n = g.i("n");
            const long s = g.i("s");
            if (g.i("display") == 0) {
                const Pair t = rand_second(seed, 0, p);
                auto tb = [&](long i) { return t.s(i); };
                auto tau = [&](long i) { return t.sigma(i); };
                return one(sum(0, m, [&](long k) { return term(bn(m, k) * bn(n + k, s), tb, n + k - s); }),
                           sum(0, n, [&](long k) {
                               return term(sg(n - k) * bn(n, k) * bn(m + k, s), tau, m + k - s);
                           }));
            }
            const Pair t = rand_first(seed, 0, p);
            auto ts = [&](long i) { return t.s(i); };
            auto tau = [&](long i) { return t.sigma(i); };
            return one(sum(0, m, [&](long k) { return term(sg(s - k) * bn(m, k) * bn(n + k, s), ts, n + k - s); }),
                       sum(0, n, [&](long k) { return term(sg(k) * bn(n, k) * bn(m + k, s), tau, m + k - s); }));
        },
        true);
    b.add(
        "gq_thm3_both", "sec 10: Gould-Quaintance identity in both kinds",
        [](long nmax) {
            return product({ints("display", 0, 1), ints("pair", 0, 1), ints("m", 0, 3), ints("n", 0, 3),
                            ints("s", 0, nmax)});
        },
        [](const Params& p, std::uint64_t seed) {
            Get g{p};
            const long m = g.i("m");
            const long n = g.i("n");
            const long s = g.i("s");
            const bool second = g.i("display") == 0;
            const Pair t = second ? rand_second(seed, 0, p) : rand_first(seed, 0, p);
            return one(sum(0, s,
                           [&](long k) {
                               return (second ? Rat(1) : sg(k)) * bn(s, k) * ib(Rat(m + n + s - k), m) * t.s(k) /
                                      Rat(m + n + s + 1 - k);
                           }),
                       sum(0, s, [&](long k) {
                           return bn(s, k) * ib(Rat(m + n + s - k), n) * sg(s - k) * t.sigma(k) / Rat(m + n + s + 1 - k);
                       }));
        },
        true);

    struct Named {
        const char* id;
        const char* anchor;
        std::function<Domain(long)> domain;
    };
    const std::vector<Named> named = {
        {"harmonic_poly", "sec 4: H_{k+m} polynomial identity",
         [](long nmax) { return product({ints("m", 0, 3), ints("n", 0, nmax)}); }},
        {"odd_harmonic_poly", "sec 4: odd harmonic polynomial identity", [](long nmax) { return n_only(nmax); }},
        {"bernoulli_poly_identity", "sec 3: Bernoulli polynomial identity in t",
         [](long nmax) { return product({grid("x"), grid("y"), ints("n", 0, nmax)}); }},
        {"binom_poly", "sec 2: binom(y-k, x) polynomial identity, both forms",
         [](long nmax) {
             return product({ints("display", 0, 1), ints("x", 0, 3), grid("y"), ints("n", 0, nmax)});
         }},
        {"jy2d3um_poly", "sec 4: H_{k+m} polynomial identity in t^{n-k}",
         [](long nmax) { return product({ints("m", 0, 3), ints("n", 0, nmax)}); }},
        {"partial_sum_poly", "sec 3: binom(n+1,k+1) H_k polynomial identity",
         [](long nmax) { return n_only(nmax); }},
        {"ps67scn_poly", "sec 6: geometric sum of (1+t)^k", [](long nmax) { return n_only(nmax); }},
    };
    for (const Named& entry : named) {
        const std::string id = entry.id;
        b.add(id, entry.anchor, entry.domain,
              [id](const Params& p, std::uint64_t) { return coefficients(named_poly_sides(id, p)); });
    }
}

} // namespace

const std::vector<IdentityCheck>& registry()
{
    static const std::vector<IdentityCheck> checks = [] {
        Builder b;
        add_random_theorems(b);
        add_catalog_checks(b);
        add_section2(b);
        add_section3(b);
        add_section4(b);
        add_section6(b);
        add_section7(b);
        add_polynomial(b);
        auto out = b.take();
        std::sort(out.begin(), out.end(), [](const IdentityCheck& a, const IdentityCheck& c) { return a.id < c.id; });
        return out;
    }();
    return checks;
}

const IdentityCheck& find_identity(std::string_view id)
{
    const auto& checks = registry();
    auto it = std::lower_bound(checks.begin(), checks.end(), id,
                               [](const IdentityCheck& c, std::string_view key) { return c.id < key; });
    if (it == checks.end() || it->id != id) {
        throw UnknownNameError("unknown identity '" + std::string(id) + "'");
    }
    return *it;
}

} // namespace btconv
