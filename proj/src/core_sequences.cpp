#include "lucaszeck/core_sequences.hpp"

#include <limits>

#include "lucaszeck/errors.hpp"

namespace lucaszeck {

namespace {

using i128 = __int128;

Int narrow_checked(i128 value, int index) {
    if (value > std::numeric_limits<Int>::max() || value < std::numeric_limits<Int>::min()) {
        throw OverflowError("sequence term a_" + std::to_string(index) + " exceeds 64-bit range");
    }
    return static_cast<Int>(value);
}

Int next_term(const RecurrenceSpec& spec, Int prev, Int prev2, int index) {
    // Each product of two Int fits in i128, and so does their sum.
    const i128 value = static_cast<i128>(spec.p) * prev + static_cast<i128>(spec.q) * prev2;
    return narrow_checked(value, index);
}

}  // namespace

Int term(const RecurrenceSpec& spec, int index) {
    if (index < 0) throw ValidationError("sequence index must be >= 0");
    if (index == 0) return spec.a0;
    Int prev2 = spec.a0;
    Int prev = spec.a1;
    for (int i = 2; i <= index; ++i) {
        const Int next = next_term(spec, prev, prev2, i);
        prev2 = prev;
        prev = next;
    }
    return prev;
}

std::vector<Int> terms_through(const RecurrenceSpec& spec, int last_index) {
    if (last_index < 0) throw ValidationError("sequence index must be >= 0");
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(last_index) + 1);
    out.push_back(spec.a0);
    if (last_index >= 1) out.push_back(spec.a1);
    for (int i = 2; i <= last_index; ++i) {
        out.push_back(next_term(spec, out[i - 1], out[i - 2], i));
    }
    return out;
}

std::uint64_t isqrt(u128 n) {
    if (n < 2) return static_cast<std::uint64_t>(n);
    // Newton from above: x0 = 2^ceil(bits/2) >= sqrt(n).
    int bits = 0;
    for (u128 t = n; t != 0; t >>= 1) ++bits;
    u128 x = u128{1} << ((bits + 1) / 2);
    for (;;) {
        const u128 y = (x + n / x) >> 1;
        if (y >= x) break;
        x = y;
    }
    return static_cast<std::uint64_t>(x);
}

Int max_floor_div_phi_argument() {
    static const Int limit = [] {
        const u128 max128 = ~u128{0};
        const std::uint64_t root = isqrt(max128 / 5);
        return root > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())
                   ? std::numeric_limits<Int>::max()
                   : static_cast<Int>(root);
    }();
    return limit;
}

Int floor_div_phi(Int m) {
    if (m < 0) throw ValidationError("floor_div_phi requires m >= 0");
    if (m > max_floor_div_phi_argument()) {
        throw OverflowError("floor_div_phi: 5*m^2 exceeds 128-bit range");
    }
    const u128 mm = static_cast<u128>(m);
    // sqrt(5) is irrational, so floor((sqrt(5m^2) - m)/2) = floor((isqrt(5m^2) - m)/2).
    const u128 root = isqrt(5 * mm * mm);
    return static_cast<Int>((root - mm) / 2);
}

Int b_count(Int n) {
    if (n < 0) throw ValidationError("b_count requires n >= 0");
    if (n == std::numeric_limits<Int>::max()) throw OverflowError("b_count: n + 1 overflows");
    return floor_div_phi(n + 1);
}

char golden_char(Int j) {
    if (j < 1) throw ValidationError("golden string positions start at 1");
    return b_count(j) - b_count(j - 1) == 1 ? 'B' : 'A';
}

std::string golden_prefix(Int n) {
    if (n < 0) throw ValidationError("prefix length must be >= 0");
    if (n > kGoldenPrefixCap) {
        throw CapacityError("golden_prefix: length " + std::to_string(n) + " exceeds cap of " +
                            std::to_string(kGoldenPrefixCap));
    }
    const auto want = static_cast<std::size_t>(n);
    if (want == 0) return {};
    // S_3 = "BA"; for k >= 4 S_{k-2} is a prefix of S_{k-1}, so S_k extends in place.
    std::string s = "BA";
    std::size_t previous_len = 1;  // |S_2|
    while (s.size() < want) {
        const std::size_t current_len = s.size();
        s.append(s, 0, previous_len);
        previous_len = current_len;
    }
    s.resize(want);
    return s;
}

}  // namespace lucaszeck
