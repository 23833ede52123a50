#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace btconv {

// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;

    template <std::integral I>
    Rat(I value) // NOLINT(google-explicit-constructor): integers are rationals
    {
        if constexpr (std::is_signed_v<I>) {
            value_ = static_cast<long>(value);
        } else {
            value_ = static_cast<unsigned long>(value);
        }
    }

    Rat(long numerator, long denominator);
    explicit Rat(mpq_class value);
    explicit Rat(const mpz_class& integer);

    /// Parses "p", "-p" or "p/q" (q != 0). The result is canonicalized.
    static Rat parse(std::string_view text);

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Integer value; throws DomainError when not an integer or out of range.
    long to_long() const;

    /// Canonical "num/den", with the denominator omitted when it is 1.
    std::string str() const;

    Rat& operator+=(const Rat& rhs);
    Rat& operator-=(const Rat& rhs);
    Rat& operator*=(const Rat& rhs);
    Rat& operator/=(const Rat& rhs);
    Rat operator-() const;

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& lhs, const Rat& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs)
    {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& value);

/// base^exponent; negative exponents require a nonzero base.
Rat pow(const Rat& base, long exponent);

/// (-1)^e as a Rat.
inline Rat sign_power(long e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

// ---------------------------------------------------------------------------
// Binomial kernels

/// n! for n >= 0. Values below the factorial cap are memoized.
mpz_class factorial(long n);

/// Memo cap for factorial (default 256). Safe to call concurrently with lookups.
void set_factorial_cap(std::size_t cap);
std::size_t factorial_cap();

/// Ordinary binomial coefficient for n >= 0; zero when k < 0 or k > n.
Rat binom_int(long n, long k);

/// Falling-factorial binomial r(r-1)...(r-k+1)/k! for integer k >= 0, zero for k < 0.
Rat binom_rat(const Rat& r, long k);

/// 1 / binom_rat(r, k); throws ZeroCoefficientError naming (r, k) when the coefficient vanishes.
Rat inv_binom(const Rat& r, long k);

Rat kron_delta(long i, long j);

} // namespace btconv
