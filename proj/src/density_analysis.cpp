#include "lucaszeck/density_analysis.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "lucaszeck/errors.hpp"
#include "lucaszeck/partition_engine.hpp"

namespace lucaszeck {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(int exponent) {
    cpp_int out = 1;
    for (int i = 0; i < exponent; ++i) out *= 10;
    return out;
}

// floor(alpha * k) for k >= 0. alpha = (sqrt(45) - 5) / 10 and sqrt(45 k^2)
// is irrational for k > 0, so the inner floor can be taken first.
cpp_int floor_alpha(const cpp_int& k) {
    const cpp_int root = boost::multiprecision::sqrt(cpp_int(45 * k * k));
    return (root - 5 * k) / 10;
}

// Digits of value / 10^places as "I.FFF".
std::string fixed_point(const cpp_int& value, int places) {
    const cpp_int scale = pow10(places);
    std::string out = cpp_int(value / scale).str();
    if (places > 0) {
        std::string frac = cpp_int(value % scale).str();
        out += '.';
        out.append(static_cast<std::size_t>(places) - frac.size(), '0');
        out += frac;
    }
    return out;
}

void check_precision(int precision) {
    if (precision < 0 || precision > kMaxAlphaPrecision) {
        throw ValidationError("precision must lie in [0, " + std::to_string(kMaxAlphaPrecision) + "]");
    }
}

}  // namespace

Int c_of(Int bound, CountMode mode, unsigned workers) {
    if (bound < 1) throw ValidationError("density bound N must be >= 1");
    if (mode == CountMode::enumeration) {
        return scan_lucas_partition_counts(bound, workers).two_partition_count;
    }
    // 5 + 4n + 3 b_count(n) is strictly increasing in n.
    Int count = 0;
    for (Int n = 0;; ++n) {
        const __int128 value = 5 + 4 * static_cast<__int128>(n) + 3 * static_cast<__int128>(b_count(n));
        if (value > bound) break;
        ++count;
    }
    return count;
}

Int floor_alpha_times(Int k) {
    if (k < 0) throw ValidationError("floor_alpha_times requires k >= 0");
    return static_cast<Int>(floor_alpha(cpp_int(k)));
}

std::string alpha(int precision) {
    check_precision(precision);
    // Round half up from one extra digit; alpha is irrational so no ties.
    const cpp_int extra = floor_alpha(pow10(precision + 1));
    return fixed_point((extra + 5) / 10, precision);
}

std::string rational_to_decimal(Int num, Int den, int places) {
    if (num < 0 || den < 1) throw ValidationError("rational_to_decimal needs num >= 0, den >= 1");
    check_precision(places);
    const cpp_int scaled = cpp_int(num) * pow10(places);
    const cpp_int rounded = (2 * scaled + den) / (2 * cpp_int(den));
    return fixed_point(rounded, places);
}

std::string alpha_gap(Int c, Int bound, int precision) {
    if (bound < 1 || c < 0) throw ValidationError("alpha_gap needs N >= 1, c >= 0");
    check_precision(precision);
    // gap * M = |c M - N alpha M| / N with M = 10^(precision + 1). With
    // X = N alpha M irrational, floor(|Y - X| / N) equals
    // floor((Y - floor(X) - 1) / N) if Y > X, else floor((floor(X) - Y) / N).
    const cpp_int scale = pow10(precision + 1);
    const cpp_int y = cpp_int(c) * scale;
    const cpp_int fx = floor_alpha(cpp_int(bound) * scale);
    const cpp_int floor_gap = y > fx ? cpp_int((y - fx - 1) / bound) : cpp_int((fx - y) / bound);
    return fixed_point((floor_gap + 5) / 10, precision);
}

DensityReport beta_of(Int bound, CountMode mode, unsigned workers) {
    DensityReport r;
    r.bound = bound;
    r.c = c_of(bound, mode, workers);
    const Int g = std::gcd(r.c, bound);
    r.beta_numerator = r.c / g;
    r.beta_denominator = bound / g;
    r.beta = rational_to_decimal(r.c, bound, 5);
    const __int128 hundred_c = static_cast<__int128>(r.c) * 100;
    if (hundred_c > std::numeric_limits<Int>::max()) throw OverflowError("100 * c(N) exceeds 64-bit range");
    r.percent = rational_to_decimal(static_cast<Int>(hundred_c), bound, 3) + "%";
    r.alpha_gap = alpha_gap(r.c, bound, 12);
    return r;
}

ErrorBoundReport error_bound_report(Int bound) {
    if (bound < 5) throw ValidationError("error_bound_check requires N >= 5");
    ErrorBoundReport r;
    r.bound = bound;
    r.c = c_of(bound);
    const cpp_int m = cpp_int(bound - 1);
    const cpp_int c = r.c;

    // (N-1) alpha is irrational, so the closed-interval tests reduce to floors:
    // |c - X| <= 1    <=>  c - 1 <= floor(X) <= c
    // |c - X| <= 1.5  <=>  2c - 3 <= floor(2X) <= 2c + 2
    const cpp_int fx = floor_alpha(m);
    r.within_one = fx >= c - 1 && fx <= c;
    const cpp_int f2x = floor_alpha(2 * m);
    r.passed = f2x >= 2 * c - 3 && f2x <= 2 * c + 2;

    constexpr int kDigits = 12;
    const cpp_int scaled = floor_alpha(m * pow10(kDigits + 1));
    r.reference = fixed_point((scaled + 5) / 10, kDigits);
    const cpp_int dev_scaled = c * pow10(kDigits) - (scaled + 5) / 10;
    r.deviation = static_cast<double>(dev_scaled.convert_to<long double>() / 1e12L);
    return r;
}

bool error_bound_check(Int bound) { return error_bound_report(bound).passed; }

std::string format_density_table(const std::vector<DensityReport>& rows) {
    std::ostringstream out;
    out << "N\tc\tpercent\n";
    for (const auto& r : rows) out << r.bound << '\t' << r.c << '\t' << r.percent << '\n';
    return out.str();
}

}  // namespace lucaszeck
