#include "lucaszeck/partition_engine.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "lucaszeck/errors.hpp"
#include "lucaszeck/parallel.hpp"

namespace lucaszeck {

namespace {

// Terms of a validated recurrence grow at least like Fibonacci numbers, so
// fewer than this many ever fit in Int.
constexpr std::size_t kMaxTerms = 96;

const std::vector<Int>& lucas_table() {
    static const std::vector<Int> table = terms_through(RecurrenceSpec::lucas(), kMaxLucasIndex);
    return table;
}

const std::vector<Int>& fibonacci_table() {
    static const std::vector<Int> table =
        terms_through(RecurrenceSpec::fibonacci(), kMaxFibonacciIndex);
    return table;
}

Int checked_add(Int a, Int b) {
    Int out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("partition sum exceeds 64-bit range");
    return out;
}

}  // namespace

bool IndexPartition::contains(int index) const noexcept {
    return std::binary_search(indices.begin(), indices.end(), index);
}

bool is_non_consecutive(const IndexPartition& partition) noexcept {
    const auto& ix = partition.indices;
    if (!ix.empty() && ix.front() < 0) return false;
    for (std::size_t i = 1; i < ix.size(); ++i) {
        if (ix[i] - ix[i - 1] < 2) return false;
    }
    return true;
}

Int partition_value(const IndexPartition& partition, const RecurrenceSpec& spec) {
    Int total = 0;
    for (int index : partition.indices) total = checked_add(total, term(spec, index));
    return total;
}

bool partition_order(const IndexPartition& a, const IndexPartition& b) noexcept {
    if (a.largest() != b.largest()) return a.largest() > b.largest();
    return a.indices < b.indices;
}

void validate_for_enumeration(const RecurrenceSpec& spec) {
    if (spec.p < 1 || spec.q < 1 || spec.a0 < 0 || spec.a1 < 1) {
        throw ValidationError(
            "enumeration needs p >= 1, q >= 1, a0 >= 0, a1 >= 1 so the sequence grows");
    }
}

PartitionEnumerator::PartitionEnumerator(const RecurrenceSpec& spec, Int max_n)
    : spec_(spec), max_n_(max_n) {
    validate_for_enumeration(spec);
    if (max_n < 0) throw ValidationError("partitioned integer must be >= 0");
    terms_.push_back(spec.a0);
    terms_.push_back(spec.a1);
    // Non-decreasing from index 1 on: stop at the first term past max_n.
    while (terms_.back() <= max_n) {
        const auto i = terms_.size();
        const __int128 next = static_cast<__int128>(spec.p) * terms_[i - 1] +
                              static_cast<__int128>(spec.q) * terms_[i - 2];
        if (next > max_n) break;
        terms_.push_back(static_cast<Int>(next));
    }
    if (terms_.back() > max_n) terms_.pop_back();
}

template <class Visit>
void PartitionEnumerator::search(Int n, int min_index, Visit&& visit) const {
    if (n < 0) throw ValidationError("partitioned integer must be >= 0");
    if (n > max_n_) {
        throw ValidationError("n = " + std::to_string(n) + " exceeds enumerator bound " +
                              std::to_string(max_n_));
    }
    min_index = std::max(min_index, 0);

    // Highest candidate: last index >= 1 whose term is <= n (index 0 is checked
    // against the residual during the search like every other index).
    int top = static_cast<int>(terms_.size()) - 1;
    while (top >= 1 && terms_[static_cast<std::size_t>(top)] > n) --top;

    // best[i + 2]: maximum non-consecutive sum over indices in [min_index, i].
    // This bounds every branch; the per-parity tail sum L_i + L_{i-2} + ...
    // is not an upper bound here because L_0 > L_1.
    std::array<Int, kMaxTerms + 2> best{};
    for (int i = min_index; i <= top; ++i) {
        const auto k = static_cast<std::size_t>(i) + 2;
        Int with = 0;
        if (__builtin_add_overflow(terms_[static_cast<std::size_t>(i)], best[k - 2], &with)) {
            with = std::numeric_limits<Int>::max();  // saturates; still a valid bound
        }
        best[k] = std::max(best[k - 1], with);
    }

    std::array<int, kMaxTerms> chosen{};
    std::size_t depth = 0;

    auto recurse = [&](auto&& self, int i, Int residual) -> void {
        if (i < min_index) {
            if (residual == 0) visit(chosen.data(), depth);
            return;
        }
        if (best[static_cast<std::size_t>(i) + 2] < residual) return;
        const Int value = terms_[static_cast<std::size_t>(i)];
        if (value <= residual) {
            chosen[depth++] = i;
            self(self, i - 2, residual - value);
            --depth;
        }
        self(self, i - 1, residual);
    };
    recurse(recurse, top, n);
}

PartitionSet PartitionEnumerator::enumerate(Int n, int min_index) const {
    PartitionSet out;
    out.n = n;
    search(n, min_index, [&](const int* chosen, std::size_t depth) {
        IndexPartition p;
        p.indices.assign(chosen, chosen + depth);
        std::reverse(p.indices.begin(), p.indices.end());
        out.partitions.push_back(std::move(p));
    });
    std::sort(out.partitions.begin(), out.partitions.end(), partition_order);
    return out;
}

std::size_t PartitionEnumerator::count(Int n, int min_index) const {
    std::size_t total = 0;
    search(n, min_index, [&](const int*, std::size_t) { ++total; });
    return total;
}

PartitionSet enumerate_partitions(Int n, const RecurrenceSpec& spec) {
    return PartitionEnumerator(spec, n).enumerate(n);
}

IndexPartition canonical_partition(Int n) {
    if (n < 1) throw ValidationError("canonical_partition requires n >= 1");
    const auto& lucas = lucas_table();
    IndexPartition out;
    Int residual = n;
    int i = kMaxLucasIndex;
    while (residual > 0) {
        // By value the Lucas terms run L_1 < L_0 < L_2 < L_3 < ...
        while (i >= 2 && lucas[static_cast<std::size_t>(i)] > residual) --i;
        int pick = i;
        if (i < 2) pick = residual >= lucas[0] ? 0 : 1;
        out.indices.push_back(pick);
        residual -= lucas[static_cast<std::size_t>(pick)];
        i = pick;
    }
    std::sort(out.indices.begin(), out.indices.end());
    return out;
}

IndexPartition fibonacci_zeckendorf(Int n) {
    if (n < 1) throw ValidationError("fibonacci_zeckendorf requires n >= 1");
    const auto& fib = fibonacci_table();
    IndexPartition out;
    Int residual = n;
    for (int i = kMaxFibonacciIndex; i >= 2 && residual > 0; --i) {
        if (fib[static_cast<std::size_t>(i)] <= residual) {
            out.indices.push_back(i);
            residual -= fib[static_cast<std::size_t>(i)];
        }
    }
    std::reverse(out.indices.begin(), out.indices.end());
    return out;
}

SumRangeReport achievable_sums(int m) {
    if (m < 0) throw ValidationError("achievable_sums requires m >= 0");
    if (m > kMaxAchievableSumsIndex) {
        throw CapacityError("achievable_sums: m = " + std::to_string(m) + " exceeds cap " +
                            std::to_string(kMaxAchievableSumsIndex));
    }
    const auto& lucas = lucas_table();
    // Every non-consecutive sum of A_m is at most max(L_m + L_{m-2} + ...,
    // L_{m-1} + L_{m-3} + ...) <= L_{m+1} + 1.
    const auto limit = static_cast<std::size_t>(lucas[static_cast<std::size_t>(m) + 1] + 1);
    std::vector<bool> seen(limit + 1, false);

    auto walk = [&](auto&& self, int i, Int sum) -> void {
        if (i < 0) {
            seen[static_cast<std::size_t>(sum)] = true;
            return;
        }
        self(self, i - 2, sum + lucas[static_cast<std::size_t>(i)]);
        self(self, i - 1, sum);
    };
    walk(walk, m, 0);

    SumRangeReport report;
    report.m = m;
    for (std::size_t s = 0; s < seen.size(); ++s) {
        if (seen[s]) report.achievable.push_back(static_cast<Int>(s));
    }
    const Int next = lucas[static_cast<std::size_t>(m) + 1];
    report.expected_description =
        m % 2 == 1 ? "0.." + std::to_string(next - 1)
                   : "0.." + std::to_string(next + 1) + " except " + std::to_string(next);
    return report;
}

std::vector<Int> predicted_sums(int m) {
    if (m < 0 || m >= kMaxLucasIndex) throw ValidationError("predicted_sums: m out of range");
    const Int next = lucas_table()[static_cast<std::size_t>(m) + 1];
    std::vector<Int> out;
    if (m % 2 == 1) {
        for (Int s = 0; s <= next - 1; ++s) out.push_back(s);
    } else {
        for (Int s = 0; s <= next + 1; ++s) {
            if (s != next) out.push_back(s);
        }
    }
    return out;
}

bool verify_lemma3(int m) {
    return achievable_sums(m).achievable == predicted_sums(m);
}

bool verify_lemma5(int m) {
    if (m < 0 || m > kMaxLemma5Index) {
        throw ValidationError("verify_lemma5: m must lie in [0, " + std::to_string(kMaxLemma5Index) +
                              "]");
    }
    const Int n = checked_add(lucas(2 * m + 1), 1);
    return PartitionEnumerator(RecurrenceSpec::lucas(), n).count(n) == 2;
}

PartitionCountScan scan_lucas_partition_counts(Int bound, unsigned workers) {
    if (bound < 1) throw ValidationError("scan bound must be >= 1");
    if (workers == 0) workers = worker_count();
    const PartitionEnumerator enumerator(RecurrenceSpec::lucas(), bound);

    PartitionCountScan init;
    init.min_count = std::numeric_limits<std::size_t>::max();

    auto chunk = [&](Int lo, Int hi) {
        PartitionCountScan part;
        part.min_count = std::numeric_limits<std::size_t>::max();
        for (Int n = lo; n <= hi; ++n) {
            const std::size_t c = enumerator.count(n);
            part.min_count = std::min(part.min_count, c);
            part.max_count = std::max(part.max_count, c);
            if (c == 2) ++part.two_partition_count;
            if ((c < 1 || c > 2) && !part.first_violation) part.first_violation = n;
        }
        return part;
    };
    auto combine = [](PartitionCountScan acc, PartitionCountScan next) {
        acc.min_count = std::min(acc.min_count, next.min_count);
        acc.max_count = std::max(acc.max_count, next.max_count);
        acc.two_partition_count += next.two_partition_count;
        if (!acc.first_violation) acc.first_violation = next.first_violation;
        return acc;
    };
    PartitionCountScan result = parallel_fold(Int{1}, bound, workers, init, chunk, combine);
    result.bound = bound;
    return result;
}

std::size_t max_partition_count(Int bound) {
    return scan_lucas_partition_counts(bound).max_count;
}

}  // namespace lucaszeck
