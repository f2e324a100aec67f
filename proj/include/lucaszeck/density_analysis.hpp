#pragma once

// Density of integers with two non-consecutive Lucas partitions.
//
// c(N) counts n in [1, N] with two partitions; beta(N) = c(N) / N tends to
// alpha = 1 / (1 + 3 phi) = (6 sqrt(5) - 10) / 20 = 0.1708203932...
// Every decimal here comes from exact integer arithmetic: alpha is
// irrational, so floor(alpha * K) = (isqrt(45 K^2) - 5K) div 10 for K >= 0.

#include <array>
#include <string>
#include <vector>

#include "lucaszeck/core_sequences.hpp"

namespace lucaszeck {

enum class CountMode { formula, enumeration };

/// Formula mode counts n >= 0 with 5 + 4n + 3 b_count(n) <= N; enumeration
/// mode counts m <= N with exactly two partitions (parallel, `workers` = 0
/// picks worker_count()).
Int c_of(Int bound, CountMode mode = CountMode::formula, unsigned workers = 0);

/// floor(alpha * k), exact. k >= 0.
Int floor_alpha_times(Int k);

/// alpha rounded to `precision` decimals (round half up), e.g. "0.17082".
inline constexpr int kMaxAlphaPrecision = 1000;
std::string alpha(int precision = 12);

/// num / den rounded half up to `places` decimals. num >= 0, den >= 1.
std::string rational_to_decimal(Int num, Int den, int places);

struct DensityReport {
    Int bound = 0;           // N
    Int c = 0;               // c(N)
    Int beta_numerator = 0;  // c / N in lowest terms
    Int beta_denominator = 1;
    std::string beta;       // c / N to 5 decimals
    std::string percent;    // 100 c / N to 3 decimals, with '%'
    std::string alpha_gap;  // |c / N - alpha| to 12 decimals
};

DensityReport beta_of(Int bound, CountMode mode = CountMode::formula, unsigned workers = 0);

/// |c / N - alpha| rounded to `precision` decimals, exact.
std::string alpha_gap(Int c, Int bound, int precision = 12);

/// |c(N) - (N - 1) / (4 + 3/phi)| against the +-1 estimate.
struct ErrorBoundReport {
    Int bound = 0;
    Int c = 0;
    std::string reference;  // (N - 1) alpha to 12 decimals
    double deviation = 0;   // c - (N - 1) alpha
    bool within_one = false;
    bool passed = false;    // within 1 + kErrorBoundSlack
};

/// Extra room beyond the stated error of 1; deviations in (1, 1.5] pass but
/// leave within_one false.
inline constexpr double kErrorBoundSlack = 0.5;

ErrorBoundReport error_bound_report(Int bound);
bool error_bound_check(Int bound);

/// The bounds of the published density table and its reference counts.
inline constexpr std::array<Int, 6> kReferenceBounds = {10, 100, 1'000, 10'000, 100'000, 1'000'000};
inline constexpr std::array<Int, 6> kReferenceCounts = {1, 17, 171, 1'708, 17'082, 170'820};

/// Rows "N<TAB>c<TAB>percent" with a header line, one per report.
std::string format_density_table(const std::vector<DensityReport>& rows);

}  // namespace lucaszeck
