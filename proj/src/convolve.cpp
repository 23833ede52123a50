#include "btconv/convolve.hpp"

#include "btconv/errors.hpp"

#include <map>

namespace btconv {

namespace {

template <typename F>
Rat sum(long lo, long hi, F&& f)
{
    Rat acc;
    for (long k = lo; k <= hi; ++k) {
        acc += f(k);
    }
    return acc;
}

Rat alt(long e)
{
    return sign_power(e);
}

Rat bn(long n, long k)
{
    return binom_int(n, k);
}

void require_kind(const Pair& p, Kind kind, const char* op)
{
    if (p.kind != kind) {
        throw KindMismatchError(std::string(op) + ": pair '" + p.label + "' is " + std::string(kind_name(p.kind)) +
                                " kind, expected " + std::string(kind_name(kind)));
    }
}

void require_nonnegative(const char* op, std::initializer_list<std::pair<const char*, long>> indices)
{
    for (const auto& [name, value] : indices) {
        if (value < 0) {
            throw DomainError(std::string(op) + ": " + name + " must be >= 0, got " + std::to_string(value));
        }
    }
}

Params index_params(std::initializer_list<std::pair<const char*, long>> indices)
{
    Params out;
    for (const auto& [name, value] : indices) {
        out.emplace(name, Rat(value));
    }
    return out;
}

void check_conv_range(const Seq& a, const Seq& b, long n, const char* op)
{
    if (n < 0 || n > a.last() || n > b.last()) {
        throw RangeError(std::string(op) + ": n=" + std::to_string(n) + " outside the common range 0.." +
                         std::to_string(std::min(a.last(), b.last())));
    }
}

} // namespace

Rat conv_alt(const Seq& a, const Seq& b, long n)
{
    check_conv_range(a, b, n, "conv_alt");
    return sum(0, n, [&](long k) { return alt(k) * bn(n, k) * a[k] * b[n - k]; });
}

Rat conv_plain(const Seq& a, const Seq& b, long n)
{
    check_conv_range(a, b, n, "conv_plain");
    return sum(0, n, [&](long k) { return bn(n, k) * a[k] * b[n - k]; });
}

SideReport check_main1(const Pair& p, const Pair& q, long n)
{
    require_kind(p, Kind::First, "check_main1");
    require_kind(q, Kind::First, "check_main1");
    require_nonnegative("check_main1", {{"n", n}});
    return {sum(0, n, [&](long k) { return alt(n - k) * bn(n, k) * p.s(k) * q.s(n - k); }),
            sum(0, n, [&](long k) { return alt(k) * bn(n, k) * p.sigma(k) * q.sigma(n - k); }),
            index_params({{"n", n}})};
}

SideReport check_main2(const Pair& p, const Pair& q, long n)
{
    require_kind(p, Kind::Second, "check_main2");
    require_kind(q, Kind::Second, "check_main2");
    require_nonnegative("check_main2", {{"n", n}});
    return {sum(0, n, [&](long k) { return alt(k) * bn(n, k) * p.s(k) * q.s(n - k); }),
            sum(0, n, [&](long k) { return alt(k) * bn(n, k) * p.sigma(k) * q.sigma(n - k); }),
            index_params({{"n", n}})};
}

SideReport check_swap(const Pair& p, const Pair& q, long n)
{
    require_kind(p, Kind::Second, "check_swap");
    require_kind(q, Kind::Second, "check_swap");
    require_nonnegative("check_swap", {{"n", n}});
    return {sum(0, n, [&](long k) { return bn(n, k) * p.s(k) * q.sigma(n - k); }),
            sum(0, n, [&](long k) { return bn(n, k) * p.sigma(k) * q.s(n - k); }), index_params({{"n", n}})};
}

SideReport check_mixed(const Pair& p, const Pair& q, long n)
{
    require_kind(p, Kind::First, "check_mixed");
    require_kind(q, Kind::Second, "check_mixed");
    require_nonnegative("check_mixed", {{"n", n}});
    return {sum(0, n, [&](long k) { return bn(n, k) * p.s(k) * q.s(n - k); }),
            sum(0, n, [&](long k) { return alt(k) * bn(n, k) * p.sigma(k) * q.sigma(n - k); }),
            index_params({{"n", n}})};
}

SideReport check_symmetry_first(const Pair& p, long m, long n)
{
    require_kind(p, Kind::First, "check_symmetry_first");
    require_nonnegative("check_symmetry_first", {{"m", m}, {"n", n}});
    return {sum(0, n, [&](long k) { return alt(k) * bn(n, k) * p.s(k + m); }),
            sum(0, m, [&](long k) { return alt(k) * bn(m, k) * p.sigma(k + n); }),
            index_params({{"m", m}, {"n", n}})};
}

SideReport check_symmetry_second(const Pair& p, long m, long n)
{
    require_kind(p, Kind::Second, "check_symmetry_second");
    require_nonnegative("check_symmetry_second", {{"m", m}, {"n", n}});
    return {sum(0, n, [&](long k) { return bn(n, k) * p.s(k + m); }),
            sum(0, m, [&](long k) { return alt(k + m) * bn(m, k) * p.sigma(k + n); }),
            index_params({{"m", m}, {"n", n}})};
}

namespace {

// sum_{q=0}^{r} (-1)^q binom(r,q) f(base + q)
template <typename F>
Rat difference(long r, long base, F&& f)
{
    return sum(0, r, [&](long q) { return alt(q) * bn(r, q) * f(base + q); });
}

} // namespace

SideReport check_gen1(const Pair& p, const Pair& q, long m, long r, long n)
{
    require_kind(p, Kind::First, "check_gen1");
    require_kind(q, Kind::First, "check_gen1");
    require_nonnegative("check_gen1", {{"m", m}, {"r", r}, {"n", n}});
    auto tau = [&](long i) { return q.sigma(i); };
    auto sigma = [&](long i) { return p.sigma(i); };
    return {sum(0, n, [&](long k) { return alt(k) * bn(n, k) * p.s(n - k + m) * difference(r, k, tau); }),
            sum(0, n, [&](long k) { return alt(k) * bn(n, k) * q.s(n - k + r) * difference(m, k, sigma); }),
            index_params({{"m", m}, {"r", r}, {"n", n}})};
}

SideReport check_gen2(const Pair& p, const Pair& q, long m, long n, long r, long u, long v)
{
    require_kind(p, Kind::First, "check_gen2");
    require_kind(q, Kind::First, "check_gen2");
    require_nonnegative("check_gen2", {{"m", m}, {"n", n}, {"r", r}, {"u", u}, {"v", v}});
    auto s = [&](long i) { return p.s(i); };
    auto t = [&](long i) { return q.s(i); };
    auto sigma = [&](long i) { return p.sigma(i); };
    auto tau = [&](long i) { return q.sigma(i); };
    return {sum(0, n,
                [&](long k) {
                    return alt(k) * bn(n, k) * difference(r, n - k + m, s) * difference(u, k + v, t);
                }),
            sum(0, n,
                [&](long k) {
                    return alt(k) * bn(n, k) * difference(m, k + r, sigma) * difference(v, n - k + u, tau);
                }),
            index_params({{"m", m}, {"n", n}, {"r", r}, {"u", u}, {"v", v}})};
}

SideReport check_nested_shift(const Pair& p, long m, long r, long n)
{
    require_kind(p, Kind::First, "check_nested_shift");
    require_nonnegative("check_nested_shift", {{"m", m}, {"r", r}, {"n", n}});
    auto s = [&](long i) { return p.s(i); };
    return {sum(0, n, [&](long k) { return alt(k) * bn(n, k) * difference(r, k + m, s); }),
            sum(0, m, [&](long k) { return alt(k) * bn(m, k) * p.sigma(n + k + r); }),
            index_params({{"m", m}, {"r", r}, {"n", n}})};
}

Extension parse_extension(std::string_view name)
{
    static const std::map<std::string, Extension, std::less<>> names = {
        {"i", Extension::PowerOfTwo},       {"power_of_two", Extension::PowerOfTwo},
        {"ii", Extension::DoubleBinomial},  {"double_binomial", Extension::DoubleBinomial},
        {"iii", Extension::HalfWeight},     {"half_weight", Extension::HalfWeight},
        {"iv", Extension::Shifted},         {"shifted", Extension::Shifted},
        {"v", Extension::KPower},           {"k_power", Extension::KPower},
    };
    auto it = names.find(name);
    if (it == names.end()) {
        throw UnknownNameError("unknown extension variant '" + std::string(name) + "'");
    }
    return it->second;
}

std::string_view extension_name(Extension e)
{
    switch (e) {
    case Extension::PowerOfTwo:
        return "power_of_two";
    case Extension::DoubleBinomial:
        return "double_binomial";
    case Extension::HalfWeight:
        return "half_weight";
    case Extension::Shifted:
        return "shifted";
    case Extension::KPower:
        break;
    }
    return "k_power";
}

bool extension_needs_partner(Extension e)
{
    return e == Extension::HalfWeight || e == Extension::Shifted || e == Extension::KPower;
}

SideReport check_extension(Extension variant, const Pair& p, const Pair& q, long j, long m, long n)
{
    const char* op = "check_extension";
    require_nonnegative(op, {{"n", n}});
    const Rat two(2);
    switch (variant) {
    case Extension::PowerOfTwo: {
        require_kind(p, Kind::First, op);
        if (j < 0 || j > n) {
            throw DomainError("check_extension(i): need 0 <= j <= n, got j=" + std::to_string(j) +
                              ", n=" + std::to_string(n));
        }
        return {sum(0, n, [&](long k) { return alt(k) * bn(n - j, k) * pow(two, n - k) * p.s(k); }),
                pow(two, j) * sum(0, n, [&](long k) { return bn(n - j, k) * p.sigma(k); }),
                index_params({{"j", j}, {"n", n}})};
    }
    case Extension::DoubleBinomial: {
        require_kind(p, Kind::First, op);
        require_nonnegative(op, {{"j", j}});
        return {sum(0, n, [&](long k) { return alt(n - k) * bn(n, k) * bn(n - k, j) * pow(two, k) * p.s(k); }),
                sum(0, n, [&](long k) { return alt(j - k) * bn(n, k) * bn(n - k, j) * pow(two, k) * p.sigma(k); }),
                index_params({{"j", j}, {"n", n}})};
    }
    case Extension::HalfWeight: {
        require_kind(p, Kind::Second, op);
        require_kind(q, Kind::Second, op);
        return {sum(0, n, [&](long k) { return bn(n, k) * pow(two, -k) * p.s(k) * q.sigma(n - k); }),
                sum(0, n,
                    [&](long k) {
                        return bn(n, k) * pow(two, -k) * q.s(n - k) *
                               sum(0, k, [&](long i) { return bn(k, i) * p.sigma(i); });
                    }),
                index_params({{"n", n}})};
    }
    case Extension::Shifted: {
        require_kind(p, Kind::First, op);
        require_kind(q, Kind::First, op);
        return {sum(1, n, [&](long k) { return alt(n - k - 1) * bn(n, k) * p.s(k - 1) * q.s(n - k); }),
                sum(1, n,
                    [&](long k) {
                        return alt(k) * bn(n, k) * q.sigma(n - k) * sum(1, k, [&](long i) { return p.sigma(i - 1); });
                    }),
                index_params({{"n", n}})};
    }
    case Extension::KPower: {
        require_kind(p, Kind::First, op);
        require_kind(q, Kind::First, op);
        require_nonnegative(op, {{"m", m}});
        return {sum(0, n, [&](long k) { return alt(n - k) * bn(n, k) * pow(Rat(k), m) * p.s(k) * q.s(n - k); }),
                sum(0, n, [&](long k) { return alt(k) * bn(n, k) * s_m_value(p, m, k) * q.sigma(n - k); }),
                index_params({{"m", m}, {"n", n}})};
    }
    }
    throw DomainError("check_extension: unhandled variant");
}

SideReport check_extension(Extension variant, const Pair& p, long j, long n)
{
    if (extension_needs_partner(variant)) {
        throw DomainError("check_extension(" + std::string(extension_name(variant)) + ") needs a second pair");
    }
    return check_extension(variant, p, p, j, 0, n);
}

} // namespace btconv
