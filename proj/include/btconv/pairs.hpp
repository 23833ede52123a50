#pragma once

#include "btconv/exact.hpp"
#include "btconv/seqlib.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace btconv {

enum class Kind { First, Second };

std::string_view kind_name(Kind kind);

using Generator = std::function<Rat(long)>;
using Params = std::map<std::string, Rat>;

inline constexpr long default_check_depth = 8;

/// {(s_k),(sigma_k)} or {(s-bar_k),(sigma-bar_k)}: two generators tied by the
/// transform of the given kind.
struct Pair {
    Kind kind = Kind::First;
    Generator left;
    Generator right;
    Params params;
    std::string label;
    // Highest index at which the closed forms are defined, if finite.
    std::optional<long> limit;

    /// left(k); throws RangeError for k < 0 or k beyond limit.
    Rat s(long k) const;
    /// right(k); same range rules as s().
    Rat sigma(long k) const;

    bool covers(long k) const { return k >= 0 && (!limit || k <= *limit); }

    Seq left_seq(long last) const;
    Seq right_seq(long last) const;
};

Seq bt_first(const Seq& s);
Seq bt_second(const Seq& s);
Seq bt_second_inverse(const Seq& sigma);

/// bt_first(bt_first(s)) == s.
bool involution_check(const Seq& s);

/// s_k -> (-1)^k s_k, right side unchanged; flips the kind.
Pair convert_kind(const Pair& p);

enum class Symmetry { Invariant, InverseInvariant, Neither };

std::string_view symmetry_name(Symmetry s);

/// Needs at least two terms.
Symmetry classify(const Seq& s);

/// Throws ValidationError unless the kind invariant holds for n <= depth
/// (clipped to the pair's limit).
void validate(const Pair& p, long depth = default_check_depth);

/// Non-throwing form of validate.
bool holds(const Pair& p, long depth = default_check_depth);

/// Closed-form pair by catalog name. Parameters outside the entry's domain
/// raise DomainError, unknown names UnknownNameError.
Pair catalog_pair(std::string_view name, const Params& params = {}, long depth = default_check_depth);

const std::vector<std::string>& catalog_names();
Kind catalog_kind(std::string_view name);

/// Pair built from explicit left values; the right side is the transform.
Pair pair_from_seq(Kind kind, const Seq& left, std::string label = {});

/// (s_{k+m}, sum_q (-1)^q binom(m,q) sigma_{k+q}).
Pair shift_pair(const Pair& p, long m);

/// (k s_k, n(sigma_n - sigma_{n-1})), right side 0 at n = 0.
Pair times_k_pair(const Pair& p);

/// (k^m s_k, S_m(n)) with S_0 = sigma, S_m(k) = k(S_{m-1}(k) - S_{m-1}(k-1)).
Pair s_m_pair(const Pair& p, long m);

/// S_m(k) for the right side of p.
Rat s_m_value(const Pair& p, long m, long k);

enum class PartialSum {
    NegTauSum,      // (a) (-sum_{j=1}^k tau_{j-1}, (1-delta_k0) t_{k-1+delta_k0})
    LaggedSums,     // (b) sums to k-1+delta_k0 on both sides
    AveragedSums,   // (c) both sums over (k+1)(k+2)
    TauMean,        // (d) ((1/(k+1)) sum tau_j, t_k/(k+1))
    ShiftedMeans,   // (e)
    WeightedMeans,  // (f)
};

/// Accepts "a".."f" or the enumerator spelled in snake case.
PartialSum parse_partial_sum(std::string_view which);

Pair partial_sum_pair(const Pair& p, PartialSum which);

/// splitmix64 step, used to derive per-instance seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Numerators uniform in [-20, 20], denominators in [1, 12].
Seq random_seq(std::uint64_t seed, long length);

Pair random_first_pair(std::uint64_t seed, long length = 16);
Pair random_second_pair(std::uint64_t seed, long length = 16);

} // namespace btconv
