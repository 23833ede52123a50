#pragma once

#include "btconv/convolve.hpp"
#include "btconv/exact.hpp"
#include "btconv/pairs.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace btconv {

/// Dense polynomial over Q in one indeterminate t; coefficient i multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, long degree);
    /// (a + b t)^e
    static Poly affine_power(const Rat& a, const Rat& b, long e);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^i, zero past the degree.
    Rat coeff(long i) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    std::string str() const;

private:
    void trim();

    std::vector<Rat> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& p, const Rat& c);
Rat poly_eval(const Poly& p, const Rat& x);

/// p(a + b t)
Poly shift_compose(const Poly& p, const Rat& a, const Rat& b);

struct PolySides {
    Poly lhs;
    Poly rhs;

    bool equal() const { return lhs == rhs; }
};

/// sum binom(n,k) s_{n-k} y^k  vs  sum (-1)^{n-k} binom(n,k) sigma_{n-k} (1+y)^k
PolySides poly_sides_first(const Pair& p, long n);
/// sum (-1)^k binom(n,k) s_{n-k} y^k  vs  sum (-1)^k binom(n,k) sigma_{n-k} (1+y)^k
PolySides poly_sides_second(const Pair& p, long n);

bool check_poly_first(const Pair& p, long n);
bool check_poly_second(const Pair& p, long n);

/// Both sides of Sun's lemma in t; DomainError when an exponent would be negative.
PolySides sun_lemma_sides(long m, long n, long r);
bool check_sun_lemma(long m, long n, long r);

/// True when every exponent of Sun's lemma at (m, n, r) is nonnegative.
bool sun_lemma_admissible(long m, long n, long r);

struct PolyTerm {
    Rat coeff;
    long exponent = 0;
};

/// sum left.coeff t^{left.exponent} = sum right.coeff (1-t)^{right.exponent},
/// checked on construction.
class PolyIdentityForm {
public:
    PolyIdentityForm(std::vector<PolyTerm> left, std::vector<PolyTerm> right);

    const std::vector<PolyTerm>& left() const { return left_; }
    const std::vector<PolyTerm>& right() const { return right_; }

private:
    std::vector<PolyTerm> left_;
    std::vector<PolyTerm> right_;
};

PolyIdentityForm sun_lemma_form(long m, long n, long r);
/// t^n = sum_k (-1)^k binom(n,k) (1-t)^k
PolyIdentityForm binomial_theorem_form(long n);

/// First kind: sum f s_p vs sum g sigma_q. Second kind weights the left by (-1)^p.
SideReport transfer_identity(const PolyIdentityForm& form, const Pair& p);

const std::vector<std::string>& named_poly_ids();

/// Both sides of a named polynomial identity; every id takes n, some take more.
PolySides named_poly_sides(std::string_view id, const Params& params);
bool check_named_poly(std::string_view id, const Params& params);

} // namespace btconv
