#pragma once

// Test-only reference computations. Deliberately naive and independent of
// the library kernels: Pascal's rule instead of factorials, Akiyama-Tanigawa
// instead of the Bernoulli recurrence, plain loops instead of memo tables.

#include "btconv/exact.hpp"

#include <random>
#include <vector>

namespace oracle {

using btconv::Rat;

inline Rat pascal(long n, long k)
{
    if (k < 0 || k > n) {
        return Rat(0);
    }
    std::vector<Rat> row{Rat(1)};
    for (long i = 1; i <= n; ++i) {
        std::vector<Rat> next(static_cast<std::size_t>(i + 1), Rat(1));
        for (long j = 1; j < i; ++j) {
            next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

inline Rat falling_binom(const Rat& r, long k)
{
    if (k < 0) {
        return Rat(0);
    }
    Rat v(1);
    for (long i = 0; i < k; ++i) {
        v = v * (r - Rat(i)) / Rat(i + 1);
    }
    return v;
}

// Akiyama-Tanigawa yields B_1 = +1/2; flip it to the B_1 = -1/2 convention.
inline Rat bernoulli(long n)
{
    std::vector<Rat> a;
    for (long m = 0; m <= n; ++m) {
        a.push_back(Rat(1) / Rat(m + 1));
        for (long j = m; j >= 1; --j) {
            const auto ju = static_cast<std::size_t>(j);
            a[ju - 1] = Rat(j) * (a[ju - 1] - a[ju]);
        }
    }
    return n == 1 ? -a[0] : a[0];
}

inline Rat fib(long n)
{
    Rat a(0), b(1);
    for (long i = 0; i < n; ++i) {
        Rat c = a + b;
        a = b;
        b = c;
    }
    return a;
}

inline Rat luc(long n)
{
    Rat a(2), b(1);
    for (long i = 0; i < n; ++i) {
        Rat c = a + b;
        a = b;
        b = c;
    }
    return a;
}

inline Rat harm(long n)
{
    Rat v;
    for (long j = 1; j <= n; ++j) {
        v += Rat(1, j);
    }
    return v;
}

template <typename S>
Rat first_at(S&& s, long n)
{
    Rat v;
    for (long k = 0; k <= n; ++k) {
        v += ((k % 2) ? Rat(-1) : Rat(1)) * pascal(n, k) * s(k);
    }
    return v;
}

template <typename S>
Rat second_at(S&& s, long n)
{
    Rat v;
    for (long k = 0; k <= n; ++k) {
        v += pascal(n, k) * s(k);
    }
    return v;
}

inline std::vector<Rat> random_rats(std::mt19937_64& rng, std::size_t count)
{
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<Rat> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(num(rng), den(rng));
    }
    return out;
}

} // namespace oracle
