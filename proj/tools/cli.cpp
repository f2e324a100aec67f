#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "golden_table4.hpp"
#include "lucaszeck/core_sequences.hpp"
#include "lucaszeck/density_analysis.hpp"
#include "lucaszeck/errors.hpp"
#include "lucaszeck/fixed_term_sets.hpp"
#include "lucaszeck/partition_engine.hpp"

namespace lucaszeck::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// One line of output: the command, its inputs, its payload, and a status.
struct OutputRecord {
    std::string cmd;
    json inputs = json::object();
    json result = json::object();
    std::string status = "ok";
};

class Emitter {
public:
    Emitter(std::ostream& out, bool json_mode) : out_(out), json_(json_mode) {}

    bool json_mode() const { return json_; }

    void record(const OutputRecord& r) {
        json line;
        line["v"] = kSchemaVersion;
        line["cmd"] = r.cmd;
        line["inputs"] = r.inputs;
        line["result"] = r.result;
        line["status"] = r.status;
        out_ << line.dump() << '\n';
    }

    void row(const std::vector<std::string>& columns) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out_ << '\t';
            out_ << columns[i];
        }
        out_ << '\n';
    }

    void raw(std::string_view text) { out_ << text; }

private:
    std::ostream& out_;
    bool json_;
};

template <class T>
std::string join(const std::vector<T>& values, char sep = ',') {
    std::ostringstream s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s << sep;
        s << values[i];
    }
    return s.str();
}

struct SequenceChoice {
    std::string name;
    RecurrenceSpec spec;
    bool custom = false;
};

Int parse_int(std::string_view text) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ValidationError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

// lucas | fib | custom:p,q,a0,a1
SequenceChoice parse_sequence(const std::string& text) {
    if (text == "lucas") return {"lucas", RecurrenceSpec::lucas()};
    if (text == "fib" || text == "fibonacci") return {"fib", RecurrenceSpec::fibonacci()};
    constexpr std::string_view prefix = "custom:";
    if (text.rfind(prefix, 0) != 0) {
        throw ValidationError("--seq must be lucas, fib or custom:p,q,a0,a1");
    }
    std::vector<Int> parts;
    std::string_view rest = std::string_view(text).substr(prefix.size());
    while (true) {
        const auto comma = rest.find(',');
        parts.push_back(parse_int(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    if (parts.size() != 4) throw ValidationError("custom sequence needs exactly p,q,a0,a1");
    const RecurrenceSpec spec{parts[0], parts[1], parts[2], parts[3]};
    if (spec.p < 1 || spec.q < 1 || spec.a0 < 1 || spec.a1 < 1) {
        throw ValidationError("custom sequence needs p, q >= 1 and strictly positive seeds");
    }
    return {text, spec, true};
}

json partition_json(const IndexPartition& p, const RecurrenceSpec& spec) {
    json values = json::array();
    for (int i : p.indices) values.push_back(term(spec, i));
    return json{{"indices", p.indices}, {"values", values}};
}

void emit_partition_row(Emitter& e, Int n, const SequenceChoice& seq, const IndexPartition& p) {
    std::vector<Int> values;
    for (int i : p.indices) values.push_back(term(seq.spec, i));
    e.row({std::to_string(n), seq.name, p.empty() ? "-" : join(p.indices),
           p.empty() ? "-" : join(values)});
}

// ---- decompose -------------------------------------------------------------

struct DecomposeArgs {
    Int n = 0;
    std::string seq = "lucas";
    bool all = false;
    bool canonical = false;
};

int cmd_decompose(const DecomposeArgs& a, Emitter& e) {
    const SequenceChoice seq = parse_sequence(a.seq);
    std::vector<IndexPartition> partitions;
    if (a.all) {
        if (a.n < 0) throw ValidationError("n must be >= 0");
        partitions = enumerate_partitions(a.n, seq.spec).partitions;
    } else {
        if (a.n < 1) throw ValidationError("n must be >= 1 (use --all for 0)");
        if (seq.custom) {
            throw ValidationError("canonical form is defined for lucas and fib only; use --all");
        }
        partitions.push_back(seq.name == "lucas" ? canonical_partition(a.n)
                                                 : fibonacci_zeckendorf(a.n));
    }

    if (e.json_mode()) {
        OutputRecord r{"decompose"};
        r.inputs = {{"n", a.n}, {"seq", seq.name}, {"all", a.all}};
        json list = json::array();
        for (const auto& p : partitions) list.push_back(partition_json(p, seq.spec));
        r.result = {{"count", partitions.size()}, {"partitions", list}};
        e.record(r);
    } else {
        e.row({"n", "seq", "indices", "values"});
        for (const auto& p : partitions) emit_partition_row(e, a.n, seq, p);
    }
    return kOk;
}

// ---- sequences -------------------------------------------------------------

int emit_values(Emitter& e, const std::string& cmd, json inputs, const std::vector<Int>& values) {
    if (e.json_mode()) {
        OutputRecord r{cmd};
        r.inputs = std::move(inputs);
        r.result = {{"values", values}};
        e.record(r);
    } else {
        for (Int v : values) e.row({std::to_string(v)});
    }
    return kOk;
}

void require_count(Int count) {
    if (count < 1) throw ValidationError("--count must be >= 1");
}

// ---- density ---------------------------------------------------------------

struct DensityArgs {
    std::optional<Int> max;
    std::string mode = "formula";
    bool table4 = false;
};

std::vector<CountMode> modes_for(const std::string& mode) {
    if (mode == "formula") return {CountMode::formula};
    if (mode == "enum") return {CountMode::enumeration};
    return {CountMode::formula, CountMode::enumeration};
}

const char* mode_name(CountMode m) { return m == CountMode::formula ? "formula" : "enum"; }

json report_json(const DensityReport& r) {
    return json{{"N", r.bound},
                {"c", r.c},
                {"beta", std::to_string(r.beta_numerator) + "/" + std::to_string(r.beta_denominator)},
                {"beta_decimal", r.beta},
                {"percent", r.percent},
                {"alpha_gap", r.alpha_gap}};
}

int cmd_density(const DensityArgs& a, Emitter& e, std::ostream& err) {
    const auto modes = modes_for(a.mode);

    if (a.table4) {
        int code = kOk;
        std::vector<DensityReport> rows;
        for (Int bound : kReferenceBounds) {
            std::optional<Int> first;
            DensityReport report;
            for (CountMode m : modes) {
                report = beta_of(bound, m);
                if (first && *first != report.c) {
                    err << "density: formula and enum disagree at N=" << bound << '\n';
                    code = kVerificationFailed;
                }
                first = report.c;
            }
            rows.push_back(report);
        }
        const std::string table = format_density_table(rows);
        const bool match = table == kGoldenTable4;
        if (e.json_mode()) {
            OutputRecord r{"density"};
            r.inputs = {{"table4", true}, {"mode", a.mode}};
            json list = json::array();
            for (const auto& row : rows) list.push_back(report_json(row));
            r.result = {{"rows", list}, {"golden_match", match}};
            r.status = match && code == kOk ? "ok" : "mismatch";
            e.record(r);
        } else {
            e.raw(table);
        }
        if (!match) {
            err << "density: table differs from bundled golden file\n";
            return kGoldenMismatch;
        }
        return code;
    }

    if (!a.max) throw ValidationError("density needs --max N or --table4");
    std::optional<Int> first;
    int code = kOk;
    if (!e.json_mode()) e.row({"mode", "N", "c", "beta", "beta_decimal", "percent", "alpha_gap"});
    for (CountMode m : modes) {
        const DensityReport r = beta_of(*a.max, m);
        if (first && *first != r.c) {
            err << "density: formula and enum disagree at N=" << r.bound << '\n';
            code = kVerificationFailed;
        }
        first = r.c;
        if (e.json_mode()) {
            OutputRecord rec{"density"};
            rec.inputs = {{"max", *a.max}, {"mode", mode_name(m)}};
            rec.result = report_json(r);
            e.record(rec);
        } else {
            e.row({mode_name(m), std::to_string(r.bound), std::to_string(r.c),
                   std::to_string(r.beta_numerator) + "/" + std::to_string(r.beta_denominator),
                   r.beta, r.percent, r.alpha_gap});
        }
    }
    return code;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::optional<Int> max;
};

struct VerifyOutcome {
    bool passed = true;
    std::string detail;
    std::optional<Int> counterexample;
};

Int default_max(const std::string& suite) {
    if (suite == "lemma3") return 22;
    if (suite == "lemma5") return 10;
    if (suite == "theorem-m1") return 10'000;
    if (suite == "gaps") return 1'000;
    return 100'000;  // golden
}

VerifyOutcome verify_suite(const std::string& suite, Int max) {
    VerifyOutcome o;
    if (suite == "lemma3") {
        if (max < 0 || max > kMaxAchievableSumsIndex) {
            throw CapacityError("lemma3: --max must lie in [0, " +
                                std::to_string(kMaxAchievableSumsIndex) + "]");
        }
        for (int m = 0; m <= max; ++m) {
            if (!verify_lemma3(m)) return {false, "sum range differs at m=" + std::to_string(m), m};
        }
        o.detail = "m=0.." + std::to_string(max);
    } else if (suite == "lemma5") {
        if (max < 0 || max > kMaxLemma5Index) {
            throw CapacityError("lemma5: --max must lie in [0, " + std::to_string(kMaxLemma5Index) + "]");
        }
        // m = 0 is the one exception: L_1 + 1 = 2 = L_0 has a single partition.
        if (enumerate_partitions(2, RecurrenceSpec::lucas()).size() != 1) {
            return {false, "expected exactly one partition of L_1+1 = 2", 0};
        }
        for (int m = 1; m <= max; ++m) {
            if (!verify_lemma5(m)) return {false, "L_{2m+1}+1 lacks two partitions at m=" + std::to_string(m), m};
        }
        o.detail = "m=1.." + std::to_string(max) + " two partitions; m=0 one partition";
    } else if (suite == "theorem-m1") {
        const PartitionCountScan scan = scan_lucas_partition_counts(max);
        o.detail = "max_count=" + std::to_string(scan.max_count) +
                   " min_count=" + std::to_string(scan.min_count);
        if (scan.first_violation) {
            o.passed = false;
            o.counterexample = scan.first_violation;
        } else if (max >= 5 && scan.max_count != 2) {
            o.passed = false;
        }
    } else if (suite == "gaps") {
        if (max < 2) throw ValidationError("gaps: --max must be >= 2");
        const auto count = static_cast<std::size_t>(max);
        for (int k = 0; k <= 6; ++k) {
            if (!verify_gap_lemma(k, count)) return {false, "gap mismatch for k=" + std::to_string(k), k};
        }
        if (!verify_k_gap_lemma(count)) return {false, "gap mismatch for K", std::nullopt};
        o.detail = "k=0..6 and K, " + std::to_string(count) + " terms each";
    } else {
        if (max < 0) throw ValidationError("golden: --max must be >= 0");
        const std::string prefix = golden_prefix(max);
        Int bs = 0;
        for (Int n = 1; n <= max; ++n) {
            if (prefix[static_cast<std::size_t>(n - 1)] == 'B') ++bs;
            if (b_count(n) != bs) return {false, "b_count differs from prefix count", n};
        }
        for (int i = 2; fibonacci(i) <= max; ++i) {
            const char want = i % 2 == 0 ? 'B' : 'A';
            if (golden_char(fibonacci(i)) != want) {
                return {false, "golden_char differs at Fibonacci position", fibonacci(i)};
            }
        }
        o.detail = "n<=" + std::to_string(max);
    }
    return o;
}

int cmd_verify(const VerifyArgs& a, Emitter& e) {
    const Int max = a.max.value_or(default_max(a.suite));
    const VerifyOutcome o = verify_suite(a.suite, max);
    if (e.json_mode()) {
        OutputRecord r{"verify"};
        r.inputs = {{"suite", a.suite}, {"max", max}};
        r.result = {{"passed", o.passed}, {"detail", o.detail}};
        if (o.counterexample) r.result["counterexample"] = *o.counterexample;
        r.status = o.passed ? "ok" : "fail";
        e.record(r);
    } else {
        e.row({"suite", "status", "detail"});
        std::string detail = o.detail;
        if (o.counterexample) detail += " counterexample=" + std::to_string(*o.counterexample);
        e.row({a.suite, o.passed ? "PASS" : "FAIL", detail});
    }
    return o.passed ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-consecutive partitions over the Lucas and Fibonacci sequences", "lucaszeck"};
    app.require_subcommand(1);
    std::string format = "tsv";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    auto sub = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    DecomposeArgs dec;
    auto* decompose = sub("decompose", "Canonical or all non-consecutive partitions of n");
    decompose->add_option("n", dec.n, "Integer to partition")->required();
    decompose->add_option("--seq", dec.seq, "lucas, fib, or custom:p,q,a0,a1")->capture_default_str();
    auto* all_flag = decompose->add_flag("--all", dec.all, "List every partition");
    decompose->add_flag("--canonical", dec.canonical, "Canonical partition (default)")->excludes(all_flag);

    int zk = 0;
    Int zcount = 0;
    auto* zset = sub("zset", "First values whose canonical partition contains L_k");
    zset->add_option("k", zk)->required();
    zset->add_option("--count", zcount)->required();

    int qk = 0;
    Int qcount = 0;
    auto* qseq = sub("qseq", "First values whose smallest canonical summand is L_k (golden gaps)");
    qseq->add_option("k", qk)->required();
    qseq->add_option("--count", qcount)->required();

    Int kcount = 0;
    auto* kset = sub("kset", "First integers with two Lucas partitions");
    kset->add_option("--count", kcount)->required();

    DensityArgs den;
    auto* density = sub("density", "Count of integers <= N with two partitions");
    density->add_option("--max", den.max, "Bound N");
    density->add_option("--mode", den.mode)
        ->check(CLI::IsMember({"formula", "enum", "both"}))
        ->capture_default_str();
    density->add_flag("--table4", den.table4, "Reproduce the reference table and diff the golden file");

    VerifyArgs ver;
    auto* verify = sub("verify", "Run an exhaustive verification suite");
    verify->add_option("--suite", ver.suite)
        ->required()
        ->check(CLI::IsMember({"lemma3", "lemma5", "theorem-m1", "gaps", "golden"}));
    verify->add_option("--max", ver.max, "Bound (suite specific)");

    int term_index = 0;
    std::string term_seq = "lucas";
    auto* term_cmd = sub("term", "Sequence term a_i");
    term_cmd->add_option("i", term_index)->required();
    term_cmd->add_option("--seq", term_seq)->capture_default_str();

    int precision = 12;
    auto* alpha_cmd = sub("alpha", "Limiting density 1/(1+3 phi)");
    alpha_cmd->add_option("--precision", precision)->capture_default_str();

    Int golden_len = 0;
    auto* golden_cmd = sub("golden", "Prefix of the golden string");
    golden_cmd->add_option("length", golden_len)->required();

    int sums_m = 0;
    auto* sums_cmd = sub("sums", "Non-consecutive sums of L_0..L_m");
    sums_cmd->add_option("m", sums_m)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    Emitter e(out, format == "json");
    try {
        if (*decompose) return cmd_decompose(dec, e);
        if (*zset) {
            require_count(zcount);
            return emit_values(e, "zset", {{"k", zk}, {"count", zcount}},
                               z_set(zk, static_cast<std::size_t>(zcount)));
        }
        if (*qseq) {
            require_count(qcount);
            return emit_values(e, "qseq", {{"k", qk}, {"count", qcount}},
                               q_sequence(qk, static_cast<std::size_t>(qcount)).values);
        }
        if (*kset) {
            require_count(kcount);
            return emit_values(e, "kset", {{"count", kcount}},
                               k_set(static_cast<std::size_t>(kcount)).values);
        }
        if (*density) return cmd_density(den, e, err);
        if (*verify) return cmd_verify(ver, e);
        if (*term_cmd) {
            const SequenceChoice seq = parse_sequence(term_seq);
            return emit_values(e, "term", {{"i", term_index}, {"seq", seq.name}},
                               {term(seq.spec, term_index)});
        }
        if (*alpha_cmd) {
            const std::string value = alpha(precision);
            if (e.json_mode()) {
                OutputRecord r{"alpha"};
                r.inputs = {{"precision", precision}};
                r.result = {{"alpha", value}};
                e.record(r);
            } else {
                e.row({value});
            }
            return kOk;
        }
        if (*golden_cmd) {
            const std::string prefix = golden_prefix(golden_len);
            if (e.json_mode()) {
                OutputRecord r{"golden"};
                r.inputs = {{"length", golden_len}};
                r.result = {{"prefix", prefix}, {"b_count", b_count(golden_len)}};
                e.record(r);
            } else {
                e.row({prefix});
            }
            return kOk;
        }
        if (*sums_cmd) {
            const SumRangeReport report = achievable_sums(sums_m);
            const bool matches = report.achievable == predicted_sums(sums_m);
            if (e.json_mode()) {
                OutputRecord r{"sums"};
                r.inputs = {{"m", sums_m}};
                r.result = {{"achievable", report.achievable},
                            {"expected", report.expected_description},
                            {"matches", matches}};
                e.record(r);
            } else {
                e.row({join(report.achievable), report.expected_description,
                       matches ? "match" : "differs"});
            }
            return matches ? kOk : kVerificationFailed;
        }
    } catch (const OverflowError& ex) {
        err << "overflow: " << ex.what() << '\n';
        return kOverflow;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace lucaszeck::cli
