#pragma once

#include "btconv/exact.hpp"
#include "btconv/pairs.hpp"
#include "btconv/seqlib.hpp"

#include <string_view>

namespace btconv {

/// Both sides of one identity instance; equality is for the caller to decide.
struct SideReport {
    Rat lhs;
    Rat rhs;
    Params params;

    bool equal() const { return lhs == rhs; }
};

/// sum_k (-1)^k binom(n,k) a_k b_{n-k}
Rat conv_alt(const Seq& a, const Seq& b, long n);

/// sum_k binom(n,k) a_k b_{n-k}
Rat conv_plain(const Seq& a, const Seq& b, long n);

SideReport check_main1(const Pair& p, const Pair& q, long n);
SideReport check_main2(const Pair& p, const Pair& q, long n);
SideReport check_swap(const Pair& p, const Pair& q, long n);
/// p first kind, q second kind.
SideReport check_mixed(const Pair& p, const Pair& q, long n);

SideReport check_symmetry_first(const Pair& p, long m, long n);
SideReport check_symmetry_second(const Pair& p, long m, long n);

SideReport check_gen1(const Pair& p, const Pair& q, long m, long r, long n);
SideReport check_gen2(const Pair& p, const Pair& q, long m, long n, long r, long u, long v);
SideReport check_nested_shift(const Pair& p, long m, long r, long n);

enum class Extension {
    PowerOfTwo,     // (i)   2^{n-k} weights, 0 <= j <= n
    DoubleBinomial, // (ii)  binom(n,k) binom(n-k,j) 2^k
    HalfWeight,     // (iii) 2^{-k} weights on second-kind pairs
    Shifted,        // (iv)  s_{k-1} against partial sums of sigma
    KPower,         // (v)   k^m s_k against S_m(k)
};

Extension parse_extension(std::string_view name);
std::string_view extension_name(Extension e);

/// True for the variants that take a second pair.
bool extension_needs_partner(Extension e);

/// q is read only by (iii), (iv) and (v); j by (i) and (ii); m by (v).
SideReport check_extension(Extension variant, const Pair& p, const Pair& q, long j, long m, long n);
SideReport check_extension(Extension variant, const Pair& p, long j, long n);

} // namespace btconv
