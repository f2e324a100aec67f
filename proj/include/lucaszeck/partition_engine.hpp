#pragma once

// Non-consecutive partitions over second-order recurrences.
//
// "Non-consecutive" is about sequence *indices*, not values: L_0 = 2 and
// L_2 = 3 may appear together, while L_1 = 1 and L_2 = 3 may not. Because
// L_1 < L_0, ordering Lucas terms by value does not match index order.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lucaszeck/core_sequences.hpp"

namespace lucaszeck {

/// Ascending sequence indices with pairwise gap >= 2.
struct IndexPartition {
    std::vector<int> indices;

    bool empty() const noexcept { return indices.empty(); }
    /// Largest index, or -1 for the empty partition.
    int largest() const noexcept { return indices.empty() ? -1 : indices.back(); }
    /// Smallest index, or -1 for the empty partition.
    int smallest() const noexcept { return indices.empty() ? -1 : indices.front(); }
    bool contains(int index) const noexcept;

    friend auto operator<=>(const IndexPartition&, const IndexPartition&) = default;
};

/// True iff indices are strictly ascending with every gap >= 2.
bool is_non_consecutive(const IndexPartition& partition) noexcept;

/// Sum of the partition's terms under `spec` (checked).
Int partition_value(const IndexPartition& partition, const RecurrenceSpec& spec);

/// Deterministic output order: descending largest index, then ascending
/// lexicographic order of the index lists.
bool partition_order(const IndexPartition& a, const IndexPartition& b) noexcept;

/// Every non-consecutive partition of one integer.
struct PartitionSet {
    Int n = 0;
    std::vector<IndexPartition> partitions;

    std::size_t size() const noexcept { return partitions.size(); }
};

/// Throws ValidationError unless p >= 1, q >= 1, a0 >= 0 and a1 >= 1. Those
/// constraints make the sequence non-decreasing from index 1 and strictly
/// increasing from index 2, which bounds the candidate indices for any n.
void validate_for_enumeration(const RecurrenceSpec& spec);

/// Depth-first enumerator with the sequence terms precomputed up to `max_n`.
/// Reuse one instance for scans over many n.
class PartitionEnumerator {
public:
    PartitionEnumerator(const RecurrenceSpec& spec, Int max_n);

    /// All partitions of n whose indices are >= min_index, in partition_order.
    PartitionSet enumerate(Int n, int min_index = 0) const;

    /// Same as enumerate(n, min_index).size() without materialising members.
    std::size_t count(Int n, int min_index = 0) const;

    const RecurrenceSpec& spec() const noexcept { return spec_; }
    Int max_n() const noexcept { return max_n_; }
    /// Terms a_0 .. a_t where a_t is the last term <= max_n (index >= 1).
    const std::vector<Int>& terms() const noexcept { return terms_; }

private:
    template <class Visit>
    void search(Int n, int min_index, Visit&& visit) const;

    RecurrenceSpec spec_;
    Int max_n_;
    std::vector<Int> terms_;
};

PartitionSet enumerate_partitions(Int n, const RecurrenceSpec& spec);

/// Greedy Lucas partition: repeatedly take the largest Lucas value <= residual.
/// Never holds both L_0 and L_2. Requires n >= 1.
IndexPartition canonical_partition(Int n);

/// Greedy Zeckendorf partition over F_2, F_3, ... Requires n >= 1.
IndexPartition fibonacci_zeckendorf(Int n);

/// Largest m accepted by achievable_sums / verify_lemma3. The number of
/// non-consecutive subsets of A_m is F_{m+3}.
inline constexpr int kMaxAchievableSumsIndex = 32;

/// Distinct non-consecutive sums of A_m = {L_0, ..., L_m}.
struct SumRangeReport {
    int m = 0;
    std::vector<Int> achievable;       // sorted, duplicate-free, includes 0
    std::string expected_description;  // the closed range predicted for m
};

SumRangeReport achievable_sums(int m);

/// The predicted sum set for A_m: [0, L_{m+1} - 1] for odd m and
/// [0, L_{m+1} + 1] without L_{m+1} for even m.
std::vector<Int> predicted_sums(int m);

bool verify_lemma3(int m);

/// Largest m with L_{2m+1} + 1 representable.
inline constexpr int kMaxLemma5Index = (kMaxLucasIndex - 1) / 2;

/// True iff L_{2m+1} + 1 has exactly two non-consecutive Lucas partitions.
bool verify_lemma5(int m);

/// Lucas partition counts over 1..bound.
struct PartitionCountScan {
    Int bound = 0;
    std::size_t min_count = 0;
    std::size_t max_count = 0;
    Int two_partition_count = 0;          // how many n have exactly two
    std::optional<Int> first_violation;   // smallest n with count outside [1, 2]
};

/// Scans 1..bound on up to `workers` threads (0 = worker_count()).
PartitionCountScan scan_lucas_partition_counts(Int bound, unsigned workers = 0);

/// max over 1 <= n <= bound of |enumerate_partitions(n, Lucas)|.
std::size_t max_partition_count(Int bound);

}  // namespace lucaszeck
