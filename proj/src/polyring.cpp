#include "btconv/polyring.hpp"

#include "btconv/errors.hpp"
#include "btconv/seqlib.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace btconv {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly Poly::constant(const Rat& c)
{
    return Poly({c});
}

Poly Poly::monomial(const Rat& c, long degree)
{
    if (degree < 0) {
        throw DomainError("Poly::monomial: negative degree " + std::to_string(degree));
    }
    std::vector<Rat> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return Poly(std::move(coeffs));
}

Poly Poly::affine_power(const Rat& a, const Rat& b, long e)
{
    if (e < 0) {
        throw DomainError("Poly::affine_power: negative exponent " + std::to_string(e));
    }
    // binomial expansion, term k is binom(e,k) a^{e-k} b^k t^k
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(e) + 1);
    for (long k = 0; k <= e; ++k) {
        coeffs.push_back(binom_int(e, k) * pow(a, e - k) * pow(b, k));
    }
    return Poly(std::move(coeffs));
}

Rat Poly::coeff(long i) const
{
    if (i < 0 || i > degree()) {
        return Rat(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(o.coeffs_.size());
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c)
{
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

std::string Poly::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (long i = 0; i <= degree(); ++i) {
        const Rat& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        if (!first) {
            os << (c.sign() < 0 ? " - " : " + ");
        } else if (c.sign() < 0) {
            os << "-";
        }
        first = false;
        const Rat mag = c.sign() < 0 ? -c : c;
        if (i == 0 || mag != Rat(1)) {
            os << mag;
        }
        if (i >= 1) {
            os << "t";
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_add(const Poly& a, const Poly& b)
{
    return a + b;
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    return a * b;
}

Poly poly_scale(const Poly& p, const Rat& c)
{
    return p * c;
}

Rat poly_eval(const Poly& p, const Rat& x)
{
    Rat acc;
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * x + p.coeff(i);
    }
    return acc;
}

Poly shift_compose(const Poly& p, const Rat& a, const Rat& b)
{
    // Horner with the affine map as the variable
    const Poly lin({a, b});
    Poly acc;
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * lin + Poly::constant(p.coeff(i));
    }
    return acc;
}

namespace {

template <typename F>
Poly poly_sum(long lo, long hi, F&& f)
{
    Poly acc;
    for (long k = lo; k <= hi; ++k) {
        acc += f(k);
    }
    return acc;
}

// c t^e
Poly mono(const Rat& c, long e)
{
    return Poly::monomial(c, e);
}

// c (1 + t)^e
Poly one_plus(const Rat& c, long e)
{
    return Poly::affine_power(Rat(1), Rat(1), e) * c;
}

// c (1 - t)^e
Poly one_minus(const Rat& c, long e)
{
    return Poly::affine_power(Rat(1), Rat(-1), e) * c;
}

void require_n(long n, const char* op)
{
    if (n < 0) {
        throw DomainError(std::string(op) + ": n must be >= 0");
    }
}

} // namespace

PolySides poly_sides_first(const Pair& p, long n)
{
    if (p.kind != Kind::First) {
        throw KindMismatchError("poly_sides_first needs a first-kind pair, got '" + p.label + "'");
    }
    require_n(n, "poly_sides_first");
    return {poly_sum(0, n, [&](long k) { return mono(binom_int(n, k) * p.s(n - k), k); }),
            poly_sum(0, n, [&](long k) { return one_plus(sign_power(n - k) * binom_int(n, k) * p.sigma(n - k), k); })};
}

PolySides poly_sides_second(const Pair& p, long n)
{
    if (p.kind != Kind::Second) {
        throw KindMismatchError("poly_sides_second needs a second-kind pair, got '" + p.label + "'");
    }
    require_n(n, "poly_sides_second");
    return {poly_sum(0, n, [&](long k) { return mono(sign_power(k) * binom_int(n, k) * p.s(n - k), k); }),
            poly_sum(0, n, [&](long k) { return one_plus(sign_power(k) * binom_int(n, k) * p.sigma(n - k), k); })};
}

bool check_poly_first(const Pair& p, long n)
{
    return poly_sides_first(p, n).equal();
}

bool check_poly_second(const Pair& p, long n)
{
    return poly_sides_second(p, n).equal();
}

bool sun_lemma_admissible(long m, long n, long r)
{
    // smallest exponents are m - r (left, k=0) and n - r (right, k=0)
    return m >= 0 && n >= 0 && r >= 0 && m - r >= 0 && n - r >= 0;
}

PolySides sun_lemma_sides(long m, long n, long r)
{
    if (m < 0 || n < 0 || r < 0) {
        throw DomainError("sun lemma: m, n, r must be nonnegative");
    }
    if (!sun_lemma_admissible(m, n, r)) {
        throw DomainError("sun lemma: negative exponent at (m,n,r)=(" + std::to_string(m) + "," + std::to_string(n) +
                          "," + std::to_string(r) + ")");
    }
    return {poly_sum(0, n,
                     [&](long k) { return mono(sign_power(k - r) * binom_int(n, k) * binom_int(k + m, r), k + m - r); }),
            poly_sum(0, m,
                     [&](long k) { return one_minus(sign_power(k) * binom_int(m, k) * binom_int(k + n, r), n + k - r); })};
}

bool check_sun_lemma(long m, long n, long r)
{
    return sun_lemma_sides(m, n, r).equal();
}

PolyIdentityForm::PolyIdentityForm(std::vector<PolyTerm> left, std::vector<PolyTerm> right)
    : left_(std::move(left)), right_(std::move(right))
{
    Poly lhs;
    for (const auto& term : left_) {
        if (term.exponent < 0) {
            throw DomainError("PolyIdentityForm: negative exponent on the left");
        }
        lhs += mono(term.coeff, term.exponent);
    }
    Poly rhs;
    for (const auto& term : right_) {
        if (term.exponent < 0) {
            throw DomainError("PolyIdentityForm: negative exponent on the right");
        }
        rhs += one_minus(term.coeff, term.exponent);
    }
    if (lhs != rhs) {
        throw ValidationError("PolyIdentityForm: sides differ, " + lhs.str() + " vs " + rhs.str());
    }
}

PolyIdentityForm sun_lemma_form(long m, long n, long r)
{
    if (!sun_lemma_admissible(m, n, r)) {
        throw DomainError("sun_lemma_form: inadmissible (m,n,r)");
    }
    std::vector<PolyTerm> left;
    for (long k = 0; k <= n; ++k) {
        left.push_back({sign_power(k - r) * binom_int(n, k) * binom_int(k + m, r), k + m - r});
    }
    std::vector<PolyTerm> right;
    for (long k = 0; k <= m; ++k) {
        right.push_back({sign_power(k) * binom_int(m, k) * binom_int(k + n, r), n + k - r});
    }
    return PolyIdentityForm(std::move(left), std::move(right));
}

PolyIdentityForm binomial_theorem_form(long n)
{
    require_n(n, "binomial_theorem_form");
    std::vector<PolyTerm> right;
    for (long k = 0; k <= n; ++k) {
        right.push_back({sign_power(k) * binom_int(n, k), k});
    }
    return PolyIdentityForm({{Rat(1), n}}, std::move(right));
}

SideReport transfer_identity(const PolyIdentityForm& form, const Pair& p)
{
    SideReport out;
    for (const auto& term : form.left()) {
        if (term.coeff.is_zero()) {
            continue;
        }
        Rat weight = p.kind == Kind::Second ? sign_power(term.exponent) : Rat(1);
        out.lhs += weight * term.coeff * p.s(term.exponent);
    }
    for (const auto& term : form.right()) {
        if (!term.coeff.is_zero()) {
            out.rhs += term.coeff * p.sigma(term.exponent);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// named identities

namespace {

struct Args {
    std::string id;
    const Params& params;
    std::set<std::string> used;

    Rat rat(const std::string& key)
    {
        used.insert(key);
        auto it = params.find(key);
        if (it == params.end()) {
            throw DomainError(id + ": missing parameter '" + key + "'");
        }
        return it->second;
    }

    long integer(const std::string& key, long lo)
    {
        Rat v = rat(key);
        if (!v.is_integer() || v < Rat(lo)) {
            throw DomainError(id + ": parameter '" + key + "' must be an integer >= " + std::to_string(lo) +
                              ", got " + v.str());
        }
        return v.to_long();
    }

    long integer_or(const std::string& key, long lo, long fallback)
    {
        if (!params.count(key)) {
            return fallback;
        }
        return integer(key, lo);
    }

    void finish() const
    {
        for (const auto& [key, value] : params) {
            if (!used.count(key)) {
                throw DomainError(id + ": unexpected parameter '" + key + "'");
            }
        }
    }
};

PolySides harmonic_poly(Args& a)
{
    const long n = a.integer("n", 0);
    const long m = a.integer("m", 0);
    return {poly_sum(0, n, [&](long k) { return mono(binom_int(n, k) * harmonic(k + m), k); }),
            one_plus(harmonic(m), n) + poly_sum(1, n, [&](long k) {
                return mono(sign_power(k - 1) * binom_int(n, k) * inv_binom(Rat(k + m), m) / Rat(k), k) *
                       one_plus(Rat(1), n - k);
            })};
}

PolySides odd_harmonic_poly(Args& a)
{
    const long n = a.integer("n", 0);
    return {poly_sum(0, n, [&](long k) { return mono(binom_int(n, k) * odd_harmonic(k), k); }),
            poly_sum(1, n, [&](long k) {
                Rat c = sign_power(k - 1) * binom_int(n, k) * pow(Rat(2), 2 * k - 1) * inv_binom(Rat(2 * k), k) / Rat(k);
                return mono(c, k) * one_plus(Rat(1), n - k);
            })};
}

PolySides bernoulli_poly_identity(Args& a)
{
    const long n = a.integer("n", 0);
    const Rat x = a.rat("x");
    const Rat y = a.rat("y");
    return {poly_sum(0, n,
                     [&](long k) {
                         return mono(sign_power(k) * binom_int(n, k) * pow(y, k) * bernoulli_poly(n - k, x), k);
                     }),
            poly_sum(0, n, [&](long k) {
                return one_plus(sign_power(k) * binom_int(n, k) * pow(y, k) * bernoulli_poly(n - k, x + y), k);
            })};
}

// binom(y-k, y-x) is carried as binom(y-k, x-k) so the lower index stays an integer
PolySides binom_poly(Args& a)
{
    const long n = a.integer("n", 0);
    const long x = a.integer("x", 0);
    const Rat y = a.rat("y");
    const long display = a.integer_or("display", 0, 0);
    if (display == 0) {
        return {poly_sum(0, n,
                         [&](long k) {
                             return mono(sign_power(n - k) * binom_int(n, k) * binom_rat(y - Rat(k), x), n - k);
                         }),
                poly_sum(0, n, [&](long k) {
                    return one_minus(sign_power(k) * binom_int(n, k) * binom_rat(y - Rat(k), x - k), n - k);
                })};
    }
    if (display == 1) {
        return {poly_sum(0, n,
                         [&](long k) { return mono(sign_power(k) * binom_int(n, k) * binom_rat(y + Rat(k), x), k); }),
                poly_sum(0, n, [&](long k) {
                    return one_minus(sign_power(n - k) * binom_int(n, k) * binom_rat(y + Rat(k), x + k - n), k);
                })};
    }
    throw DomainError("binom_poly: display must be 0 or 1");
}

PolySides jy2d3um_poly(Args& a)
{
    const long n = a.integer("n", 0);
    const long m = a.integer("m", 0);
    return {poly_sum(0, n, [&](long k) { return mono(binom_int(n, k) * harmonic(k + m), n - k); }),
            one_plus(harmonic(m), n) - poly_sum(1, n, [&](long k) {
                return one_plus(sign_power(k) * binom_int(n, k) * inv_binom(Rat(k + m), m) / Rat(k), n - k);
            })};
}

PolySides partial_sum_poly(Args& a)
{
    const long n = a.integer("n", 0);
    return {poly_sum(0, n, [&](long k) { return mono(binom_int(n + 1, k + 1) * harmonic(k), k); }),
            poly_sum(0, n, [&](long k) { return one_plus(harmonic(k) - harmonic(n - k), k); })};
}

PolySides ps67scn_poly(Args& a)
{
    const long n = a.integer("n", 0);
    return {poly_sum(0, n, [&](long k) { return one_plus(Rat(1), k); }),
            poly_sum(0, n, [&](long k) { return mono(binom_int(n + 1, k + 1), k); })};
}

using NamedPoly = PolySides (*)(Args&);

const std::map<std::string, NamedPoly, std::less<>>& named_table()
{
    static const std::map<std::string, NamedPoly, std::less<>> table = {
        {"harmonic_poly", harmonic_poly},
        {"odd_harmonic_poly", odd_harmonic_poly},
        {"bernoulli_poly_identity", bernoulli_poly_identity},
        {"binom_poly", binom_poly},
        {"jy2d3um_poly", jy2d3um_poly},
        {"partial_sum_poly", partial_sum_poly},
        {"ps67scn_poly", ps67scn_poly},
    };
    return table;
}

} // namespace

const std::vector<std::string>& named_poly_ids()
{
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : named_table()) {
            out.push_back(id);
        }
        return out;
    }();
    return ids;
}

PolySides named_poly_sides(std::string_view id, const Params& params)
{
    auto it = named_table().find(id);
    if (it == named_table().end()) {
        throw UnknownNameError("unknown polynomial identity '" + std::string(id) + "'");
    }
    Args args{std::string(id), params, {}};
    PolySides sides = it->second(args);
    args.finish();
    return sides;
}

bool check_named_poly(std::string_view id, const Params& params)
{
    return named_poly_sides(id, params).equal();
}

} // namespace btconv
