#include "btconv/pairs.hpp"

#include "btconv/errors.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>

namespace btconv {

std::string_view kind_name(Kind kind)
{
    return kind == Kind::First ? "first" : "second";
}

std::string_view symmetry_name(Symmetry s)
{
    switch (s) {
    case Symmetry::Invariant:
        return "invariant";
    case Symmetry::InverseInvariant:
        return "inverse-invariant";
    case Symmetry::Neither:
        break;
    }
    return "neither";
}

namespace {

void check_index(const Pair& p, long k, const char* side)
{
    if (!p.covers(k)) {
        std::string msg = "pair '" + p.label + "': " + side + " index " + std::to_string(k);
        msg += k < 0 ? " is negative" : " exceeds limit " + std::to_string(*p.limit);
        throw RangeError(msg);
    }
}

// sum_{k=0}^{n} w(n,k) v_k for every n, with w = binom(n,k) times an optional sign.
Seq transform(const Seq& s, bool alternate_k, bool alternate_n_minus_k, const char* label)
{
    std::vector<Rat> out;
    out.reserve(s.size());
    for (long n = 0; n <= s.last(); ++n) {
        Rat acc;
        for (long k = 0; k <= n; ++k) {
            Rat term = binom_int(n, k) * s[k];
            if ((alternate_k && k % 2 == 1) || (alternate_n_minus_k && (n - k) % 2 == 1)) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        out.push_back(std::move(acc));
    }
    return Seq(std::move(out), s.label().empty() ? label : s.label() + "." + label);
}

} // namespace

Rat Pair::s(long k) const
{
    check_index(*this, k, "left");
    return left(k);
}

Rat Pair::sigma(long k) const
{
    check_index(*this, k, "right");
    return right(k);
}

Seq Pair::left_seq(long last) const
{
    check_index(*this, last, "left");
    return Seq::generate(last, left, label + ".left");
}

Seq Pair::right_seq(long last) const
{
    check_index(*this, last, "right");
    return Seq::generate(last, right, label + ".right");
}

Seq bt_first(const Seq& s)
{
    return transform(s, true, false, "bt1");
}

Seq bt_second(const Seq& s)
{
    return transform(s, false, false, "bt2");
}

Seq bt_second_inverse(const Seq& sigma)
{
    return transform(sigma, false, true, "bt2inv");
}

bool involution_check(const Seq& s)
{
    return bt_first(bt_first(s)) == s;
}

Pair convert_kind(const Pair& p)
{
    Pair out = p;
    out.kind = p.kind == Kind::First ? Kind::Second : Kind::First;
    out.left = [left = p.left](long k) { return sign_power(k) * left(k); };
    out.label = p.label + ".converted";
    return out;
}

Symmetry classify(const Seq& s)
{
    if (s.size() < 2) {
        throw DomainError("classify needs at least two terms");
    }
    const Seq sigma = bt_first(s);
    if (sigma.values() == s.values()) {
        return Symmetry::Invariant;
    }
    bool inverse = true;
    for (long k = 0; k <= s.last() && inverse; ++k) {
        inverse = sigma[k] == -s[k];
    }
    return inverse ? Symmetry::InverseInvariant : Symmetry::Neither;
}

namespace {

std::optional<std::string> first_violation(const Pair& p, long depth)
{
    long last = depth;
    if (p.limit) {
        last = std::min(last, *p.limit);
    }
    if (last < 0) {
        return std::nullopt;
    }
    const Seq left = p.left_seq(last);
    const Seq expected = p.kind == Kind::First ? bt_first(left) : bt_second(left);
    for (long n = 0; n <= last; ++n) {
        Rat got = p.right(n);
        if (got != expected[n]) {
            return "pair '" + p.label + "' (" + std::string(kind_name(p.kind)) + " kind) fails at n=" +
                   std::to_string(n) + ": closed form " + got.str() + ", transform " + expected[n].str();
        }
    }
    return std::nullopt;
}

} // namespace

void validate(const Pair& p, long depth)
{
    if (auto err = first_violation(p, depth)) {
        throw ValidationError(*err);
    }
}

bool holds(const Pair& p, long depth)
{
    return !first_violation(p, depth).has_value();
}

// ---------------------------------------------------------------------------
// catalog

namespace {

class ParamReader {
public:
    ParamReader(std::string_view entry, const Params& params) : entry_(entry), params_(params) {}

    Rat rat(const std::string& key)
    {
        used_.insert(key);
        auto it = params_.find(key);
        if (it == params_.end()) {
            throw DomainError(entry_ + ": missing parameter '" + key + "'");
        }
        return it->second;
    }

    long integer(const std::string& key)
    {
        Rat v = rat(key);
        if (!v.is_integer()) {
            throw DomainError(entry_ + ": parameter '" + key + "' must be an integer, got " + v.str());
        }
        return v.to_long();
    }

    long integer_at_least(const std::string& key, long lo)
    {
        long v = integer(key);
        if (v < lo) {
            throw DomainError(entry_ + ": parameter '" + key + "' must be >= " + std::to_string(lo) + ", got " +
                              std::to_string(v));
        }
        return v;
    }

    void finish() const
    {
        for (const auto& [key, value] : params_) {
            if (!used_.count(key)) {
                throw DomainError(entry_ + ": unexpected parameter '" + key + "'");
            }
        }
    }

    [[noreturn]] void fail(const std::string& why) const { throw DomainError(entry_ + ": " + why); }

private:
    std::string entry_;
    const Params& params_;
    std::set<std::string> used_;
};

using Builder = std::function<Pair(ParamReader&)>;

struct Entry {
    Kind kind;
    Builder build;
};

Pair make(Kind kind, Generator left, Generator right)
{
    Pair p;
    p.kind = kind;
    p.left = std::move(left);
    p.right = std::move(right);
    return p;
}

const std::map<std::string, Entry, std::less<>>& catalog()
{
    static const std::map<std::string, Entry, std::less<>> table = [] {
        std::map<std::string, Entry, std::less<>> t;
        const Kind F = Kind::First;
        const Kind S = Kind::Second;

        // transform printed as binom(y-n, y-x); the reflected lower index x-n keeps
        // the coefficient in falling-factorial range for rational y
        t["binom_upper"] = {F, [F](ParamReader& in) {
                                const long x = in.integer_at_least("x", 0);
                                const Rat y = in.rat("y");
                                return make(
                                    F, [=](long k) { return binom_rat(y - Rat(k), x); },
                                    [=](long n) { return binom_rat(y - Rat(n), x - n); });
                            }};
        t["harmonic_shift_frac"] = {F, [F](ParamReader& in) {
                                        const long m = in.integer_at_least("m", 1);
                                        return make(
                                            F, [=](long k) { return harmonic(k + m) / Rat(k + m); },
                                            [=](long n) {
                                                return (harmonic(n + m) - harmonic(n)) / Rat(m) * inv_binom(Rat(n + m), n);
                                            });
                                    }};
        t["gibonacci_ratio"] = {F, [F](ParamReader& in) {
                                    const Rat g0 = in.rat("g0");
                                    const Rat g1 = in.rat("g1");
                                    const long tt = in.integer("t");
                                    const long r = in.integer("r");
                                    if (tt == 0) {
                                        in.fail("t must be nonzero");
                                    }
                                    const Rat lt = lucas(tt);
                                    return make(
                                        F, [=](long k) { return gibonacci(g0, g1, tt * k + r) / pow(lt, k); },
                                        [=](long n) {
                                            return sign_power(r) / pow(lt, n) *
                                                   (g0 * lucas(tt * n - r) - gibonacci(g0, g1, tt * n - r));
                                        });
                                }};
        t["binom_ratio"] = {F, [F](ParamReader& in) {
                                const Rat x = in.rat("x");
                                const Rat y = in.rat("y");
                                Pair p = make(
                                    F, [=](long k) { return binom_rat(x, k) * inv_binom(y, k); },
                                    [=](long n) { return binom_rat(y - x, n) * inv_binom(y, n); });
                                if (y.is_integer() && y.sign() >= 0) {
                                    p.limit = y.to_long();
                                }
                                return p;
                            }};
        t["harmonic_plus_m"] = {F, [F](ParamReader& in) {
                                    const long m = in.integer_at_least("m", 0);
                                    return make(
                                        F, [=](long k) { return harmonic(k + m); },
                                        [=](long n) {
                                            const Rat d = kron_delta(n, 0);
                                            return (d * (Rat(1) + harmonic(m)) - Rat(1)) / (Rat(n) + d) *
                                                   inv_binom(Rat(n + m), m);
                                        });
                                }};
        t["odd_harmonic"] = {F, [F](ParamReader&) {
                                 return make(
                                     F, [](long k) { return odd_harmonic(k); },
                                     [](long n) {
                                         const Rat d = kron_delta(n, 0);
                                         return -(Rat(1) - d) / (Rat(n) + d) * inv_binom(Rat(2 * n), n) *
                                                pow(Rat(2), 2 * n - 1);
                                     });
                             }};
        t["central_floor"] = {F, [F](ParamReader&) {
                                  return make(
                                      F, [](long k) { return pow(Rat(2), -k) * binom_int(k, k / 2); },
                                      [](long n) { return pow(Rat(2), -n) * catalan(n); });
                              }};
        t["delta_binom"] = {F, [F](ParamReader& in) {
                                const long j = in.integer_at_least("j", 0);
                                return make(
                                    F, [=](long k) { return binom_int(k, j); },
                                    [=](long n) { return sign_power(j) * kron_delta(n, j); });
                            }};
        t["power"] = {F, [F](ParamReader& in) {
                          const Rat x = in.rat("x");
                          return make(
                              F, [=](long k) { return pow(x, k); }, [=](long n) { return pow(Rat(1) - x, n); });
                      }};
        t["bernoulli"] = {S, [S](ParamReader&) {
                              return make(
                                  S, [](long k) { return bernoulli_number(k); },
                                  [](long n) { return sign_power(n) * bernoulli_number(n); });
                          }};
        t["bernoulli_poly_shift"] = {S, [S](ParamReader& in) {
                                         const Rat x = in.rat("x");
                                         const Rat y = in.rat("y");
                                         if (y.is_zero()) {
                                             in.fail("y must be nonzero");
                                         }
                                         return make(
                                             S, [=](long k) { return bernoulli_poly(k, x) / pow(y, k); },
                                             [=](long n) { return bernoulli_poly(n, x + y) / pow(y, n); });
                                     }};
        t["binom_x"] = {S, [S](ParamReader& in) {
                            const Rat x = in.rat("x");
                            return make(
                                S, [=](long k) { return binom_rat(x, k); },
                                [=](long n) { return binom_rat(Rat(n) + x, n); });
                        }};
        t["binom_xz"] = {S, [S](ParamReader& in) {
                             const Rat x = in.rat("x");
                             const long z = in.integer("z");
                             return make(
                                 S, [=](long k) { return binom_rat(x, k + z); },
                                 [=](long n) { return binom_rat(Rat(n) + x, n + z); });
                         }};
        t["harmonic_binom_m"] = {S, [S](ParamReader& in) {
                                     const long m = in.integer_at_least("m", 0);
                                     return make(
                                         S, [=](long k) { return binom_int(m, k) * harmonic(k); },
                                         [=](long n) {
                                             return binom_int(n + m, m) * (harmonic(m) + harmonic(n) - harmonic(m + n));
                                         });
                                 }};
        t["inv_binom_trif"] = {S, [S](ParamReader& in) {
                                   const Rat m = in.rat("m");
                                   const long p = in.integer_at_least("p", 0);
                                   std::optional<long> limit;
                                   if (m.is_integer()) {
                                       // m - n - p must not be a negative integer
                                       const long mi = m.to_long();
                                       if (mi - p < 0) {
                                           in.fail("m - p must be >= 0 for integer m");
                                       }
                                       limit = mi - p;
                                   }
                                   Pair out = make(
                                       S, [=](long k) { return inv_binom(m, p + k); },
                                       [=](long n) {
                                           return (m + Rat(1)) / (m - Rat(n) + Rat(1)) * inv_binom(m - Rat(n), p);
                                       });
                                   out.limit = limit;
                                   return out;
                               }};
        t["power2"] = {S, [S](ParamReader& in) {
                           const Rat x = in.rat("x");
                           return make(
                               S, [=](long k) { return pow(x, k); }, [=](long n) { return pow(Rat(1) + x, n); });
                       }};
        t["binom_2k_j"] = {F, [F](ParamReader& in) {
                               const long j = in.integer_at_least("j", 0);
                               return make(
                                   F, [=](long k) { return pow(Rat(2), -k) * binom_int(k, j); },
                                   [=](long n) { return sign_power(j) * pow(Rat(2), -n) * binom_int(n, j); });
                           }};
        t["binom_2k_j_up"] = {F, [F](ParamReader& in) {
                                  const long j = in.integer_at_least("j", 0);
                                  return make(
                                      F, [=](long k) { return binom_int(k, j) * pow(Rat(2), k); },
                                      [=](long n) { return sign_power(n) * binom_int(n, j) * pow(Rat(2), j); });
                              }};
        t["fibonacci"] = {F, [F](ParamReader&) {
                              return make(
                                  F, [](long k) { return fibonacci(k); }, [](long n) { return -fibonacci(n); });
                          }};
        t["lucas"] = {F, [F](ParamReader&) {
                          return make(
                              F, [](long k) { return lucas(k); }, [](long n) { return lucas(n); });
                      }};
        return t;
    }();
    return table;
}

const Entry& find_entry(std::string_view name)
{
    auto it = catalog().find(name);
    if (it == catalog().end()) {
        throw UnknownNameError("unknown catalog pair '" + std::string(name) + "'");
    }
    return it->second;
}

std::string describe(std::string_view name, const Params& params)
{
    std::string out(name);
    if (params.empty()) {
        return out;
    }
    out += '(';
    bool first = true;
    for (const auto& [key, value] : params) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += key + "=" + value.str();
    }
    out += ')';
    return out;
}

} // namespace

Pair catalog_pair(std::string_view name, const Params& params, long depth)
{
    const Entry& entry = find_entry(name);
    ParamReader reader(name, params);
    Pair p = entry.build(reader);
    reader.finish();
    p.params = params;
    p.label = describe(name, params);
    validate(p, depth);
    return p;
}

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, entry] : catalog()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

Kind catalog_kind(std::string_view name)
{
    return find_entry(name).kind;
}

Pair pair_from_seq(Kind kind, const Seq& left, std::string label)
{
    auto lhs = std::make_shared<const Seq>(left);
    auto rhs = std::make_shared<const Seq>(kind == Kind::First ? bt_first(left) : bt_second(left));
    Pair p = make(
        kind, [lhs](long k) { return lhs->at(k); }, [rhs](long n) { return rhs->at(n); });
    p.label = label.empty() ? left.label() : std::move(label);
    p.limit = left.last();
    return p;
}

// ---------------------------------------------------------------------------
// constructors

namespace {

void require_first(const Pair& p, const char* op)
{
    if (p.kind != Kind::First) {
        throw KindMismatchError(std::string(op) + " needs a first-kind pair, got '" + p.label + "'");
    }
}

std::optional<long> shifted_limit(const Pair& p, long delta)
{
    if (!p.limit) {
        return std::nullopt;
    }
    return *p.limit + delta;
}

} // namespace

Pair shift_pair(const Pair& p, long m)
{
    require_first(p, "shift_pair");
    if (m < 0) {
        throw DomainError("shift_pair: m must be >= 0");
    }
    Pair out = p;
    out.left = [p, m](long k) { return p.s(k + m); };
    out.right = [p, m](long k) {
        Rat acc;
        for (long q = 0; q <= m; ++q) {
            acc += sign_power(q) * binom_int(m, q) * p.sigma(k + q);
        }
        return acc;
    };
    out.limit = shifted_limit(p, -m);
    out.label = p.label + ".shift" + std::to_string(m);
    return out;
}

Pair times_k_pair(const Pair& p)
{
    require_first(p, "times_k_pair");
    Pair out = p;
    out.left = [p](long k) { return Rat(k) * p.s(k); };
    out.right = [p](long n) { return n == 0 ? Rat(0) : Rat(n) * (p.sigma(n) - p.sigma(n - 1)); };
    out.label = p.label + ".times_k";
    return out;
}

Rat s_m_value(const Pair& p, long m, long k)
{
    if (m == 0) {
        return p.sigma(k);
    }
    if (k == 0) {
        return Rat(0);
    }
    return Rat(k) * (s_m_value(p, m - 1, k) - s_m_value(p, m - 1, k - 1));
}

Pair s_m_pair(const Pair& p, long m)
{
    require_first(p, "s_m_pair");
    if (m < 0) {
        throw DomainError("s_m_pair: m must be >= 0");
    }
    if (m == 0) {
        return p;
    }
    Pair out = p;
    out.left = [p, m](long k) { return pow(Rat(k), m) * p.s(k); };
    out.right = [p, m](long n) { return s_m_value(p, m, n); };
    out.label = p.label + ".S" + std::to_string(m);
    return out;
}

PartialSum parse_partial_sum(std::string_view which)
{
    static const std::map<std::string, PartialSum, std::less<>> names = {
        {"a", PartialSum::NegTauSum},     {"neg_tau_sum", PartialSum::NegTauSum},
        {"b", PartialSum::LaggedSums},    {"lagged_sums", PartialSum::LaggedSums},
        {"c", PartialSum::AveragedSums},  {"averaged_sums", PartialSum::AveragedSums},
        {"d", PartialSum::TauMean},       {"tau_mean", PartialSum::TauMean},
        {"e", PartialSum::ShiftedMeans},  {"shifted_means", PartialSum::ShiftedMeans},
        {"f", PartialSum::WeightedMeans}, {"weighted_means", PartialSum::WeightedMeans},
    };
    auto it = names.find(which);
    if (it == names.end()) {
        throw UnknownNameError("unknown partial-sum selector '" + std::string(which) + "'");
    }
    return it->second;
}

namespace {

// sum_{j=lo}^{hi} f(j); empty when hi < lo
template <typename F>
Rat range_sum(long lo, long hi, F&& f)
{
    Rat acc;
    for (long j = lo; j <= hi; ++j) {
        acc += f(j);
    }
    return acc;
}

} // namespace

Pair partial_sum_pair(const Pair& p, PartialSum which)
{
    require_first(p, "partial_sum_pair");
    Pair out = p;
    auto t = [p](long k) { return p.s(k); };
    auto tau = [p](long k) { return p.sigma(k); };
    switch (which) {
    case PartialSum::NegTauSum:
        out.left = [tau](long k) { return -range_sum(1, k, [&](long j) { return tau(j - 1); }); };
        out.right = [t](long k) { return k == 0 ? Rat(0) : t(k - 1); };
        out.limit = shifted_limit(p, 1);
        out.label = p.label + ".ps_a";
        break;
    case PartialSum::LaggedSums:
        out.left = [t](long k) { return range_sum(1, k - 1 + (k == 0), [&](long j) { return t(j - 1); }); };
        out.right = [tau](long k) { return range_sum(1, k - 1 + (k == 0), [&](long j) { return tau(j - 1); }); };
        out.limit = shifted_limit(p, 1);
        out.label = p.label + ".ps_b";
        break;
    case PartialSum::AveragedSums:
        out.left = [t](long k) { return range_sum(0, k, t) / Rat((k + 1) * (k + 2)); };
        out.right = [tau](long k) { return range_sum(0, k, tau) / Rat((k + 1) * (k + 2)); };
        out.label = p.label + ".ps_c";
        break;
    case PartialSum::TauMean:
        out.left = [tau](long k) { return range_sum(0, k, tau) / Rat(k + 1); };
        out.right = [t](long k) { return t(k) / Rat(k + 1); };
        out.label = p.label + ".ps_d";
        break;
    case PartialSum::ShiftedMeans:
        out.left = [tau](long k) { return -range_sum(1, k, [&](long j) { return tau(j - 1); }) / Rat(k + 1); };
        out.right = [t](long k) { return range_sum(1, k, [&](long j) { return t(j - 1); }) / Rat(k + 1); };
        out.limit = shifted_limit(p, 1);
        out.label = p.label + ".ps_e";
        break;
    case PartialSum::WeightedMeans:
        out.left = [t](long k) { return range_sum(0, k, [&](long j) { return t(j) / Rat(j + 1); }) / Rat(k + 1); };
        out.right = [tau](long k) { return range_sum(0, k, tau) / Rat((k + 1) * (k + 1)); };
        out.label = p.label + ".ps_f";
        break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// random pairs

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Seq random_seq(std::uint64_t seed, long length)
{
    if (length < 1) {
        throw DomainError("random_seq: length must be >= 1");
    }
    // modulo mapping rather than a distribution object keeps streams identical
    // across standard library implementations
    std::mt19937_64 rng(seed);
    std::vector<Rat> values;
    values.reserve(static_cast<std::size_t>(length));
    for (long i = 0; i < length; ++i) {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 12) + 1;
        values.emplace_back(num, den);
    }
    return Seq(std::move(values), "random#" + std::to_string(seed));
}

Pair random_first_pair(std::uint64_t seed, long length)
{
    return pair_from_seq(Kind::First, random_seq(seed, length));
}

Pair random_second_pair(std::uint64_t seed, long length)
{
    return pair_from_seq(Kind::Second, random_seq(seed, length));
}

} // namespace btconv
