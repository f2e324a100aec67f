#include "lucaszeck/fixed_term_sets.hpp"

#include "lucaszeck/errors.hpp"
#include "lucaszeck/partition_engine.hpp"

namespace lucaszeck {

namespace {

Int add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("fixed-term value exceeds 64-bit range");
    return out;
}

Int mul(Int a, Int b) {
    Int out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("fixed-term value exceeds 64-bit range");
    return out;
}

void check_k(int k) {
    // Z(k) and the gap alphabet for k reach up to L_{k+2}.
    if (k < 0 || k > kMaxLucasIndex - 2) {
        throw ValidationError("summand index k must lie in [0, " +
                              std::to_string(kMaxLucasIndex - 2) + "]");
    }
}

// Calls emit(value) for Z(k) in ascending order until emit returns false.
template <class Emit>
void generate_z(int k, Emit&& emit) {
    check_k(k);
    if (k == 0) {
        for (Int n = 0;; ++n) {
            if (!emit(add(add(2, mul(3, n)), b_count(n)))) return;
        }
    }
    if (k == 1) {
        for (Int n = 0;; ++n) {
            if (!emit(add(mul(3, n), b_count(n) + 1))) return;
        }
    }
    const Int lk = lucas(k);
    const Int lk_next = lucas(k + 1);
    const Int block = lucas(k - 1);
    // Consecutive bases differ by at least L_{k+1} > L_{k-1} - 1, so the
    // blocks base(n) + [0, L_{k-1}) never interleave.
    for (Int n = 0;; ++n) {
        const Int base = add(mul(lk, b_count(n) + 1), mul(n, lk_next));
        for (Int j = 0; j < block; ++j) {
            if (!emit(add(base, j))) return;
        }
    }
}

QSequence build_by_gaps(int k, Int start, GapAlphabet gaps, std::size_t count) {
    QSequence out;
    out.k = k;
    out.values.reserve(count);
    if (count == 0) return out;
    out.values.push_back(start);
    for (std::size_t j = 1; j < count; ++j) {
        const Int gap = golden_char(static_cast<Int>(j)) == 'A' ? gaps.on_a : gaps.on_b;
        out.values.push_back(add(out.values.back(), gap));
    }
    return out;
}

bool steps_match(const std::vector<Int>& values, GapAlphabet gaps) {
    for (std::size_t j = 1; j < values.size(); ++j) {
        const Int expected = golden_char(static_cast<Int>(j)) == 'A' ? gaps.on_a : gaps.on_b;
        if (values[j] - values[j - 1] != expected) return false;
    }
    return true;
}

}  // namespace

GapAlphabet q_gap_alphabet(int k) {
    check_k(k);
    if (k == 0) return {lucas(2), lucas(3)};
    return {lucas(k + 1), lucas(k + 2)};
}

GapAlphabet k_gap_alphabet() { return {lucas(3), lucas(4)}; }

std::vector<Int> z_set(const FixedTermQuery& query) {
    std::vector<Int> out;
    out.reserve(query.count);
    if (query.count == 0) {
        check_k(query.k);
        return out;
    }
    generate_z(query.k, [&](Int v) {
        out.push_back(v);
        return out.size() < query.count;
    });
    return out;
}

std::vector<Int> z_set_up_to(int k, Int max_value) {
    std::vector<Int> out;
    if (max_value < 1) {
        check_k(k);
        return out;
    }
    generate_z(k, [&](Int v) {
        if (v > max_value) return false;
        out.push_back(v);
        return true;
    });
    return out;
}

QSequence q_sequence(int k, std::size_t count) {
    return build_by_gaps(k, lucas(k), q_gap_alphabet(k), count);
}

KSet k_set(std::size_t count) {
    KSet out;
    out.values.reserve(count);
    for (Int n = 0; static_cast<std::size_t>(n) < count; ++n) {
        out.values.push_back(add(add(5, mul(4, n)), mul(3, b_count(n))));
    }
    return out;
}

KSet k_set_up_to(Int max_value) {
    KSet out;
    for (Int n = 0;; ++n) {
        const Int v = add(add(5, mul(4, n)), mul(3, b_count(n)));
        if (v > max_value) break;
        out.values.push_back(v);
    }
    return out;
}

KSet k_set_by_gaps(std::size_t count) {
    return KSet{build_by_gaps(0, lucas(0) + lucas(2), k_gap_alphabet(), count).values};
}

bool contains_summand(Int n, int k) {
    if (k < 0) throw ValidationError("summand index must be >= 0");
    return canonical_partition(n).contains(k);
}

std::vector<Int> scan_smallest_summand(int k, std::size_t count) {
    check_k(k);
    std::vector<Int> out;
    out.reserve(count);
    for (Int n = 1; out.size() < count; ++n) {
        if (canonical_partition(n).smallest() == k) out.push_back(n);
    }
    return out;
}

std::vector<Int> scan_two_partition_numbers(std::size_t count) {
    std::vector<Int> out;
    out.reserve(count);
    // K has density about 0.171, so 6 * count + 8 usually suffices.
    Int bound = 6 * static_cast<Int>(count) + 8;
    Int next = 1;
    while (out.size() < count) {
        const PartitionEnumerator enumerator(RecurrenceSpec::lucas(), bound);
        for (; next <= bound && out.size() < count; ++next) {
            if (enumerator.count(next) == 2) out.push_back(next);
        }
        bound = mul(bound, 2);
    }
    return out;
}

bool verify_gap_lemma(int k, std::size_t count) {
    if (count < 2) throw ValidationError("verify_gap_lemma needs count >= 2");
    return steps_match(scan_smallest_summand(k, count), q_gap_alphabet(k));
}

bool verify_k_gap_lemma(std::size_t count) {
    if (count < 2) throw ValidationError("verify_k_gap_lemma needs count >= 2");
    const auto values = scan_two_partition_numbers(count);
    return steps_match(values, k_gap_alphabet());
}

}  // namespace lucaszeck
