#include "btconv/seqlib.hpp"

#include "btconv/errors.hpp"

#include <mutex>
#include <shared_mutex>

namespace btconv {

Seq::Seq(std::vector<Rat> values, std::string label) : values_(std::move(values)), label_(std::move(label))
{
    if (values_.empty()) {
        throw DomainError("Seq must hold at least index 0");
    }
}

Seq Seq::generate(long last, const std::function<Rat(long)>& gen, std::string label)
{
    if (last < 0) {
        throw DomainError("Seq::generate: negative last index");
    }
    std::vector<Rat> values;
    values.reserve(static_cast<std::size_t>(last) + 1);
    for (long k = 0; k <= last; ++k) {
        values.push_back(gen(k));
    }
    return Seq(std::move(values), std::move(label));
}

const Rat& Seq::at(long k) const
{
    if (k < 0 || k > last()) {
        throw RangeError("Seq '" + label_ + "': index " + std::to_string(k) + " outside 0.." +
                         std::to_string(last()));
    }
    return values_[static_cast<std::size_t>(k)];
}

Rat gibonacci(const Rat& g0, const Rat& g1, long n)
{
    Rat a = g0;
    Rat b = g1;
    if (n >= 0) {
        for (long i = 0; i < n; ++i) {
            Rat next = a + b;
            a = std::move(b);
            b = std::move(next);
        }
        return a;
    }
    // (a, b) = (G_j, G_{j+1}) stepping j downward
    for (long i = 0; i < -n; ++i) {
        Rat prev = b - a;
        b = std::move(a);
        a = std::move(prev);
    }
    return a;
}

Rat fibonacci(long n)
{
    if (n < 0) {
        return sign_power(-n - 1) * fibonacci(-n);
    }
    return gibonacci(Rat(0), Rat(1), n);
}

Rat lucas(long n)
{
    if (n < 0) {
        return sign_power(-n) * lucas(-n);
    }
    return gibonacci(Rat(2), Rat(1), n);
}

namespace {

// Grow-only prefix cache; extend(k) fills entries up to k from the previous ones.
template <typename Extend>
class PrefixMemo {
public:
    PrefixMemo(Rat first, Extend extend) : extend_(extend) { values_.push_back(std::move(first)); }

    Rat get(long n)
    {
        const auto idx = static_cast<std::size_t>(n);
        {
            std::shared_lock lock(mutex_);
            if (idx < values_.size()) {
                return values_[idx];
            }
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= idx) {
            values_.push_back(extend_(values_));
        }
        return values_[idx];
    }

private:
    std::shared_mutex mutex_;
    std::vector<Rat> values_;
    Extend extend_;
};

template <typename Extend>
PrefixMemo<Extend> make_memo(Rat first, Extend extend)
{
    return PrefixMemo<Extend>(std::move(first), extend);
}

void require_nonnegative(long n, const char* what)
{
    if (n < 0) {
        throw DomainError(std::string(what) + ": negative index " + std::to_string(n));
    }
}

} // namespace

Rat bernoulli_number(long n)
{
    require_nonnegative(n, "bernoulli_number");
    // sum_{k<m} binom(m+1, k) B_k = -(m+1) B_m
    static auto memo = make_memo(Rat(1), [](const std::vector<Rat>& prev) {
        const long m = static_cast<long>(prev.size());
        if (m > 1 && m % 2 == 1) {
            return Rat(0);
        }
        Rat acc;
        for (long k = 0; k < m; ++k) {
            if (!prev[static_cast<std::size_t>(k)].is_zero()) {
                acc += binom_int(m + 1, k) * prev[static_cast<std::size_t>(k)];
            }
        }
        return -acc / Rat(m + 1);
    });
    return memo.get(n);
}

Rat bernoulli_poly(long n, const Rat& x)
{
    require_nonnegative(n, "bernoulli_poly");
    // Horner in x over coefficients binom(n,k) B_k, highest power first
    Rat acc;
    for (long k = 0; k <= n; ++k) {
        acc = acc * x + binom_int(n, k) * bernoulli_number(k);
    }
    return acc;
}

Rat catalan(long n)
{
    require_nonnegative(n, "catalan");
    return binom_int(2 * n, n) / Rat(n + 1);
}

Rat harmonic(long n)
{
    require_nonnegative(n, "harmonic");
    static auto memo = make_memo(Rat(0), [](const std::vector<Rat>& prev) {
        const long k = static_cast<long>(prev.size());
        return prev.back() + Rat(1, k);
    });
    return memo.get(n);
}

Rat odd_harmonic(long n)
{
    require_nonnegative(n, "odd_harmonic");
    static auto memo = make_memo(Rat(0), [](const std::vector<Rat>& prev) {
        const long k = static_cast<long>(prev.size());
        return prev.back() + Rat(1, 2 * k - 1);
    });
    return memo.get(n);
}

} // namespace btconv
