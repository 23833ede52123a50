#pragma once

#include "btconv/exact.hpp"

#include <functional>
#include <string>
#include <vector>

namespace btconv {

/// Finite prefix s_0..s_N of a rational sequence. Never empty.
class Seq {
public:
    explicit Seq(std::vector<Rat> values, std::string label = {});

    /// Evaluates gen(0..last) into a prefix.
    static Seq generate(long last, const std::function<Rat(long)>& gen, std::string label = {});

    const Rat& at(long k) const;
    const Rat& operator[](long k) const { return at(k); }

    /// Highest stored index N.
    long last() const { return static_cast<long>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }

    const std::vector<Rat>& values() const { return values_; }
    const std::string& label() const { return label_; }

    friend bool operator==(const Seq& a, const Seq& b) { return a.values_ == b.values_; }

private:
    std::vector<Rat> values_;
    std::string label_;
};

/// F_n for every integer n, with F_{-n} = (-1)^{n-1} F_n.
Rat fibonacci(long n);

/// L_n for every integer n, with L_{-n} = (-1)^n L_n.
Rat lucas(long n);

/// G_n with G_0 = g0, G_1 = g1, G_n = G_{n-1} + G_{n-2} forward and
/// G_{-n} = G_{-n+2} - G_{-n+1} backward.
Rat gibonacci(const Rat& g0, const Rat& g1, long n);

/// Bernoulli number B_n (B_1 = -1/2). Memoized.
Rat bernoulli_number(long n);

/// B_n(x) = sum_k binom(n,k) B_k x^{n-k}.
Rat bernoulli_poly(long n, const Rat& x);

/// C_n = binom(2n, n) / (n + 1).
Rat catalan(long n);

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0. Memoized.
Rat harmonic(long n);

/// O_n = 1 + 1/3 + ... + 1/(2n-1), O_0 = 0. Memoized.
Rat odd_harmonic(long n);

} // namespace btconv
