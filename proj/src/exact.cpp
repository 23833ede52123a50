#include "btconv/exact.hpp"

#include "btconv/errors.hpp"

#include <atomic>
#include <climits>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <vector>

namespace btconv {

Rat::Rat(long numerator, long denominator)
{
    if (denominator == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_.canonicalize();
}

Rat::Rat(const mpz_class& integer) : value_(integer) {}

Rat Rat::parse(std::string_view text)
{
    std::string s(text);
    const auto slash = s.find('/');
    const auto valid_int = [](const std::string& part) {
        std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i >= part.size()) {
            return false;
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || (slash != std::string::npos && den[0] == '+')) {
        throw DomainError("malformed rational: '" + s + "'");
    }
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
        throw DomainError("rational with zero denominator: '" + s + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(std::move(q));
}

long Rat::to_long() const
{
    if (!is_integer()) {
        throw DomainError("expected an integer, got " + str());
    }
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) {
        throw DomainError("integer out of range: " + str());
    }
    return n.get_si();
}

std::string Rat::str() const
{
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& rhs)
{
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rat Rat::operator-() const
{
    Rat out;
    out.value_ = -value_;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rat& value)
{
    return os << value.str();
}

Rat pow(const Rat& base, long exponent)
{
    if (exponent < 0) {
        if (base.is_zero()) {
            throw DomainError("zero raised to a negative power");
        }
        return Rat(1) / pow(base, -exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(mpq_class(num, den));
}

namespace {

class FactorialTable {
public:
    mpz_class get(long n)
    {
        const auto idx = static_cast<std::size_t>(n);
        {
            std::shared_lock lock(mutex_);
            if (idx < table_.size()) {
                return table_[idx];
            }
        }
        const std::size_t cap = cap_.load();
        if (idx < cap) {
            std::unique_lock lock(mutex_);
            while (table_.size() <= idx) {
                table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
            }
            return table_[idx];
        }
        mpz_class start;
        std::size_t from = 0;
        {
            std::shared_lock lock(mutex_);
            from = table_.size() - 1;
            start = table_.back();
        }
        for (std::size_t i = from + 1; i <= idx; ++i) {
            start *= static_cast<unsigned long>(i);
        }
        return start;
    }

    void set_cap(std::size_t cap)
    {
        std::unique_lock lock(mutex_);
        cap_ = cap == 0 ? 1 : cap;
        if (table_.size() > cap_) {
            table_.resize(cap_);
        }
    }

    std::size_t cap() const { return cap_.load(); }

private:
    std::shared_mutex mutex_;
    std::vector<mpz_class> table_{mpz_class(1)};
    std::atomic<std::size_t> cap_{256};
};

FactorialTable& factorials()
{
    static FactorialTable table;
    return table;
}

} // namespace

mpz_class factorial(long n)
{
    if (n < 0) {
        throw DomainError("factorial of negative integer " + std::to_string(n));
    }
    return factorials().get(n);
}

void set_factorial_cap(std::size_t cap)
{
    factorials().set_cap(cap);
}

std::size_t factorial_cap()
{
    return factorials().cap();
}

Rat binom_int(long n, long k)
{
    if (n < 0) {
        throw DomainError("binom_int: negative upper index " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return Rat(0);
    }
    mpz_class denom = factorial(k) * factorial(n - k);
    mpz_class value = factorial(n) / denom;
    return Rat(value);
}

Rat binom_rat(const Rat& r, long k)
{
    if (k < 0) {
        return Rat(0);
    }
    if (r.is_integer() && r.sign() >= 0 && r.numerator().fits_slong_p()) {
        return binom_int(r.numerator().get_si(), k);
    }
    mpq_class product(1);
    mpq_class term = r.raw();
    for (long i = 0; i < k; ++i) {
        product *= term;
        term -= 1;
    }
    product /= mpq_class(factorial(k));
    return Rat(std::move(product));
}

Rat inv_binom(const Rat& r, long k)
{
    Rat b = binom_rat(r, k);
    if (b.is_zero()) {
        throw ZeroCoefficientError("inverse of vanishing binomial coefficient binom(" + r.str() + ", " +
                                   std::to_string(k) + ")");
    }
    return Rat(1) / b;
}

Rat kron_delta(long i, long j)
{
    return i == j ? Rat(1) : Rat(0);
}

} // namespace btconv
