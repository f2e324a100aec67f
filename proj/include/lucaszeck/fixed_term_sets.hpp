#pragma once

// Integers whose canonical Lucas partition holds a given summand.
//
// Three ascending sequences share one construction (a start value plus gaps
// chosen by the golden string) and are kept apart by name:
//   q0 - smallest canonical summand L_0 (start 2, gaps L_2 / L_3)
//   qk - smallest canonical summand L_k, k >= 1 (start L_k, gaps L_{k+1} / L_{k+2})
//   qK - the two-partition set K (start L_0 + L_2 = 5, gaps L_3 / L_4)
// The jth gap is the first option when the jth golden character is 'A' and
// the second when it is 'B'.

#include <cstddef>
#include <vector>

#include "lucaszeck/core_sequences.hpp"

namespace lucaszeck {

struct FixedTermQuery {
    int k = 0;
    std::size_t count = 0;
};

/// Strictly increasing values built from a start and golden-keyed gaps.
struct QSequence {
    int k = 0;
    std::vector<Int> values;
};

/// Integers with exactly two non-consecutive Lucas partitions, ascending.
struct KSet {
    std::vector<Int> values;
};

/// The two gap options (A-gap, B-gap) for q_sequence(k).
struct GapAlphabet {
    Int on_a = 0;
    Int on_b = 0;
};
GapAlphabet q_gap_alphabet(int k);
GapAlphabet k_gap_alphabet();

/// First `count` members of Z(k), the integers whose canonical partition
/// contains L_k, from the closed forms:
///   k = 0:  2 + 3n + floor((n+1)/phi)
///   k = 1:  3n + floor((n+phi^2)/phi)
///   k >= 2: L_k floor((n+phi^2)/phi) + n L_{k+1} + j,  0 <= j < L_{k-1}
/// with floor((n+phi^2)/phi) = b_count(n) + 1.
std::vector<Int> z_set(const FixedTermQuery& query);
inline std::vector<Int> z_set(int k, std::size_t count) { return z_set(FixedTermQuery{k, count}); }

/// Members of Z(k) that are <= max_value, ascending.
std::vector<Int> z_set_up_to(int k, Int max_value);

/// First `count` terms of the smallest-summand sequence for L_k, built from
/// L_k and the golden-keyed gaps.
QSequence q_sequence(int k, std::size_t count);

/// First `count` members of K = {5 + 4n + 3 floor((n+1)/phi)}.
KSet k_set(std::size_t count);

/// Members of K that are <= max_value.
KSet k_set_up_to(Int max_value);

/// K rebuilt from 5 and the L_3 / L_4 gaps; must equal k_set(count).
KSet k_set_by_gaps(std::size_t count);

/// True iff canonical_partition(n) contains index k.
bool contains_summand(Int n, int k);

/// Ascending integers whose canonical partition has smallest index k,
/// found by scanning n = 1, 2, ... (the enumeration side of q_sequence).
std::vector<Int> scan_smallest_summand(int k, std::size_t count);

/// Ascending integers with exactly two Lucas partitions, found by enumeration.
std::vector<Int> scan_two_partition_numbers(std::size_t count);

/// True iff the first `count` elements of scan_smallest_summand(k, count)
/// step by the gap alphabet keyed on the golden string.
bool verify_gap_lemma(int k, std::size_t count);

/// Same check for K, with the values taken from scan_two_partition_numbers.
bool verify_k_gap_lemma(std::size_t count);

}  // namespace lucaszeck
