#pragma once

// Exact sequence terms, the golden string, and integer-only golden-ratio floors.
//
// Sequence terms are 0-based (L_0 = 2). Golden string characters are 1-based,
// so golden_char(1) is the first character of S = BABBABABBABBA...

#include <cstdint>
#include <string>
#include <vector>

namespace lucaszeck {

using Int = std::int64_t;
using u128 = unsigned __int128;

/// a_n = p * a_{n-1} + q * a_{n-2}, seeded with a_0 and a_1.
struct RecurrenceSpec {
    Int p = 1;
    Int q = 1;
    Int a0 = 0;
    Int a1 = 1;

    static constexpr RecurrenceSpec lucas() { return {1, 1, 2, 1}; }
    static constexpr RecurrenceSpec fibonacci() { return {1, 1, 0, 1}; }

    friend constexpr bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// Largest index whose Lucas / Fibonacci term fits in Int.
inline constexpr int kMaxLucasIndex = 90;
inline constexpr int kMaxFibonacciIndex = 92;

/// Longest golden string prefix golden_prefix() will materialise.
inline constexpr Int kGoldenPrefixCap = 100'000'000;

/// a_index under `spec`. Throws OverflowError when any term up to `index`
/// leaves the Int range, ValidationError for a negative index.
Int term(const RecurrenceSpec& spec, int index);

/// a_0 .. a_last, same errors as term().
std::vector<Int> terms_through(const RecurrenceSpec& spec, int last_index);

inline Int lucas(int index) { return term(RecurrenceSpec::lucas(), index); }
inline Int fibonacci(int index) { return term(RecurrenceSpec::fibonacci(), index); }

/// floor(sqrt(n)), exact.
std::uint64_t isqrt(u128 n);

/// Largest m accepted by floor_div_phi (5*m*m must fit in 128 bits).
Int max_floor_div_phi_argument();

/// floor(m / phi) = floor((isqrt(5 m^2) - m) / 2). No floating point involved.
Int floor_div_phi(Int m);

/// Number of B's among the first n characters of the golden string,
/// floor((n + 1) / phi).
Int b_count(Int n);

/// Number of A's among the first n characters.
inline Int a_count(Int n) { return n - b_count(n); }

/// The jth character ('A' or 'B') of the golden string, j >= 1.
char golden_char(Int j);

/// First n characters of S, built by S_k = S_{k-1} S_{k-2}.
/// Throws CapacityError past kGoldenPrefixCap.
std::string golden_prefix(Int n);

}  // namespace lucaszeck
