// senslab: construct Boolean function families, measure their sensitivity
// profiles exactly, certify witness-based lower bounds, and emit scaling
// tables.
//
// Exit status: 0 all requested checks pass, 1 a certificate or scan row
// failed, 2 configuration error, 3 budget exhausted (partial lower-bound
// results only).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "senslab/analyzers.hpp"
#include "senslab/certificates.hpp"
#include "senslab/constructions.hpp"
#include "senslab/errors.hpp"
#include "senslab/serialize.hpp"
#include "senslab/truth_table.hpp"
#include "senslab/util.hpp"

namespace {

using namespace senslab;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

struct CommonOptions {
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint64_t seed = 1;
    std::string measures = "s,s0,s1";
    std::size_t dense_limit = kDefaultDenseLimit;
    std::optional<std::size_t> block_cap;
    std::uint64_t node_cap = kDefaultNodeCap;
    std::string relation = "cube";
    std::string format;
    std::string out_path;
    std::string table_file;
    std::string pattern_file;
    std::string k_range;
};

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw invalid_parameter("cannot open output file '" + out_path + "'");
    }
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw invalid_parameter("cannot open input file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

FunctionDescriptor build_family(const CommonOptions& opt) {
    if (opt.family == "theorem31") return describe_theorem31(opt.n);
    if (opt.family == "theorem32") return describe_theorem32(opt.n);
    if (opt.family == "rubinstein") return describe_rubinstein(opt.k);
    if (opt.family == "auxiliary-g") return describe_auxiliary_g(opt.k);
    if (opt.family == "random") return describe_random(opt.n, opt.k, opt.seed);
    if (opt.family == "closure") {
        throw invalid_parameter(
            "family 'closure' loads from --pattern-file; pass that instead");
    }
    throw invalid_parameter(
        "unknown family '" + opt.family +
        "' (expected theorem31 | theorem32 | rubinstein | auxiliary-g | "
        "closure | random)");
}

/// Exactly one of --family, --table-file, --pattern-file.
FunctionDescriptor load_function(const CommonOptions& opt) {
    const int sources = (opt.family.empty() ? 0 : 1) +
                        (opt.table_file.empty() ? 0 : 1) +
                        (opt.pattern_file.empty() ? 0 : 1);
    if (sources != 1) {
        throw invalid_parameter(
            "specify exactly one function source: --family, --table-file, or "
            "--pattern-file");
    }
    if (!opt.table_file.empty()) {
        std::ifstream in(opt.table_file, std::ios::binary);
        if (!in) {
            throw invalid_parameter("cannot open table file '" +
                                    opt.table_file + "'");
        }
        TruthTable table = read_table_file(in, opt.dense_limit);
        FunctionDescriptor d;
        d.family = "table";
        d.n = table.arity();
        d.function = std::make_shared<TruthTable>(std::move(table));
        return d;
    }
    if (!opt.pattern_file.empty()) {
        return function_from_json(slurp(opt.pattern_file));
    }
    return build_family(opt);
}

std::vector<std::string> split_measures(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) out.push_back(token);
    }
    return out;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

MeasureReport witness_report(std::string measure, std::size_t value,
                             Word witness) {
    MeasureReport r;
    r.measure = std::move(measure);
    r.value = value;
    r.witness = std::move(witness);
    r.method = "witness";
    r.exhausted = true;  // lower bound, not an exhaustive maximum
    return r;
}

/// Lower-bound sensitivity reports when the arity rules out dense scans.
std::vector<MeasureReport> witness_path_reports(const FunctionDescriptor& d) {
    std::vector<MeasureReport> reports;
    const auto* pattern =
        dynamic_cast<const OrbitPattern*>(d.function.get());
    if (pattern != nullptr) {
        auto [w1, l1] = one_side_witness(*pattern);
        const ZeroSideTrace trace = zero_side_procedure(*pattern);
        if (l1 >= trace.sensitivity) {
            reports.push_back(witness_report("s", l1, w1));
        } else {
            reports.push_back(
                witness_report("s", trace.sensitivity, trace.flipped));
        }
        reports.push_back(witness_report("s0", trace.sensitivity,
                                         trace.flipped));
        reports.push_back(witness_report("s1", l1, w1));
        return reports;
    }

    // No certified procedure for this shape; probe deterministic samples.
    const std::size_t n = d.function->arity();
    std::mt19937_64 rng(1);
    std::vector<Word> samples;
    samples.push_back(Word(n));
    samples.push_back(Word::from_support(n, std::vector<std::size_t>{1, 2}));
    for (int i = 0; i < 32; ++i) {
        std::vector<std::size_t> ones;
        for (std::size_t pos = 1; pos <= n; ++pos) {
            if (uniform_below(rng, 2)) ones.push_back(pos);
        }
        samples.push_back(Word::from_support(n, ones));
    }
    std::optional<std::pair<std::size_t, Word>> best0, best1, best;
    for (const auto& x : samples) {
        const std::size_t s = sensitivity_at(*d.function, x);
        auto& side = d.function->evaluate(x) ? best1 : best0;
        if (!side || s > side->first) side = {s, x};
        if (!best || s > best->first) best = {s, x};
    }
    if (best) reports.push_back(witness_report("s", best->first, best->second));
    if (best0) {
        reports.push_back(witness_report("s0", best0->first, best0->second));
    }
    if (best1) {
        reports.push_back(witness_report("s1", best1->first, best1->second));
    }
    return reports;
}

int run_analyze(const CommonOptions& opt) {
    const FunctionDescriptor d = load_function(opt);
    const auto measures = split_measures(opt.measures);
    const std::size_t n = d.function->arity();

    std::optional<TruthTable> table;
    if (const auto* direct = dynamic_cast<const TruthTable*>(d.function.get())) {
        table = *direct;
    } else if (n <= opt.dense_limit) {
        table = build_truth_table(*d.function, opt.dense_limit);
    }

    std::vector<MeasureReport> reports;
    std::optional<GlobalSensitivity> global;
    std::vector<MeasureReport> fallback;
    const auto sensitivity_report = [&](const std::string& name)
        -> MeasureReport {
        if (table) {
            if (!global) global = global_sensitivity(*table);
            MeasureReport r = name == "s"    ? global->s
                              : name == "s0" ? global->s0
                                             : global->s1;
            r.dense_limit = opt.dense_limit;
            return r;
        }
        if (fallback.empty()) fallback = witness_path_reports(d);
        for (const auto& r : fallback) {
            if (r.measure == name) return r;
        }
        MeasureReport empty;
        empty.measure = name;
        empty.method = "witness";
        empty.exhausted = true;
        return empty;
    };

    for (const auto& name : measures) {
        if (name == "s" || name == "s0" || name == "s1") {
            reports.push_back(sensitivity_report(name));
        } else if (name == "bs" || name == "bsl") {
            const std::optional<std::size_t> cap =
                name == "bsl" ? std::optional<std::size_t>(
                                    opt.block_cap.value_or(1))
                              : opt.block_cap;
            if (table && n <= kDefaultBlockScanLimit) {
                MeasureReport r = global_block_sensitivity(
                    *table, cap, kDefaultBlockScanLimit, opt.node_cap);
                reports.push_back(std::move(r));
            } else {
                // Too large for the block scan: fall back to the best
                // sensitivity witness (bs >= s pointwise).
                MeasureReport s_report = sensitivity_report("s");
                MeasureReport r;
                r.measure = name == "bsl" ? "bs_l" : "bs";
                r.value = s_report.value;
                r.witness = s_report.witness;
                r.method = "witness";
                r.block_cap = cap;
                r.exhausted = true;
                reports.push_back(std::move(r));
            }
        } else if (name == "effective") {
            if (!table) {
                throw budget_exceeded(
                    "effective-variable scans need a dense table (raise "
                    "--dense-limit)");
            }
            MeasureReport r;
            r.measure = "effective_variables";
            r.value = effective_variables(*table).size();
            r.method = "exhaustive";
            r.dense_limit = opt.dense_limit;
            reports.push_back(std::move(r));
        } else if (name == "simon") {
            if (!table) {
                throw budget_exceeded(
                    "the logarithmic bound check needs a dense table (raise "
                    "--dense-limit)");
            }
            const SimonBoundReport simon = simon_bound_check(*table);
            MeasureReport r;
            r.measure = "simon_bound_holds";
            r.value = simon.applicable && simon.holds ? 1 : 0;
            r.method = "exhaustive";
            r.dense_limit = opt.dense_limit;
            r.exhausted = !simon.applicable;
            reports.push_back(std::move(r));
        } else {
            throw invalid_parameter(
                "unknown measure '" + name +
                "' (expected s | s0 | s1 | bs | bsl | effective | simon)");
        }
    }

    const std::string format = opt.format.empty() ? "plain" : opt.format;
    std::string text;
    if (format == "json") {
        text = measure_reports_to_json(reports);
    } else if (format == "csv") {
        text = measure_reports_to_csv(reports);
    } else if (format == "plain") {
        text = measure_reports_to_plain(reports);
    } else {
        throw invalid_parameter("unknown format '" + format + "'");
    }
    write_output(opt.out_path, text);

    const bool any_exhausted =
        std::any_of(reports.begin(), reports.end(),
                    [](const MeasureReport& r) { return r.exhausted; });
    return any_exhausted ? kExitBudget : kExitPass;
}

// ---------------------------------------------------------------------------
// certify
// ---------------------------------------------------------------------------

ClaimCertificate lemma42_certificate(const OrbitPattern& f) {
    const std::size_t k = f.minterm().support_size();
    auto [word, count] = one_side_witness(f);
    ClaimCertificate c;
    c.claim = "Lemma4.2";
    c.params = {{"n", static_cast<std::int64_t>(f.arity())},
                {"k", static_cast<std::int64_t>(k)}};
    c.relation = ">=";
    c.bound = static_cast<double>(k) / 2.0;
    c.measured = static_cast<std::int64_t>(count);
    c.witnesses.push_back(std::move(word));
    c.pass = 2 * count >= k;
    return c;
}

ClaimCertificate lemma43_certificate(const OrbitPattern& f,
                                     std::size_t family_size) {
    const std::size_t n = f.arity();
    const std::size_t k = f.minterm().support_size();
    ClaimCertificate c;
    c.claim = "Lemma4.3";
    c.params = {{"n", static_cast<std::int64_t>(n)},
                {"k", static_cast<std::int64_t>(k)}};
    c.relation = ">=";
    c.bound = static_cast<double>(n) / static_cast<double>(k * k);
    c.measured = static_cast<std::int64_t>(family_size);
    c.pass = family_size * k * k >= n;
    return c;
}

ClaimCertificate lemma44_certificate(const OrbitPattern& f,
                                     const ZeroSideTrace& trace) {
    ClaimCertificate c;
    c.claim = "Lemma4.4";
    c.params = {{"n", static_cast<std::int64_t>(f.arity())},
                {"k", static_cast<std::int64_t>(f.minterm().support_size())}};
    c.relation = ">=";
    c.bound = static_cast<double>(trace.disjoint_shifts.size());
    c.measured = static_cast<std::int64_t>(trace.sensitivity);
    c.witnesses.push_back(trace.flipped);
    c.pass = trace.sensitivity >= trace.disjoint_shifts.size();
    return c;
}

CertifyBundle certify_pattern(const FunctionDescriptor& d) {
    const auto* pattern = dynamic_cast<const OrbitPattern*>(d.function.get());
    if (pattern == nullptr) {
        throw invalid_parameter("family '" + d.family +
                                "' has no certificate procedures");
    }
    CertifyBundle bundle;
    bundle.family = d.family;
    bundle.params = {{"n", static_cast<std::int64_t>(d.n)}};
    if (d.k) bundle.params.emplace_back("k", static_cast<std::int64_t>(*d.k));
    if (d.seed) {
        bundle.params.emplace_back("seed", static_cast<std::int64_t>(*d.seed));
    }

    if ((d.family == "theorem31" || d.family == "theorem32") && d.k) {
        auto [a, b] = verify_claim33(d.n, *d.k);
        bundle.claims.push_back(std::move(a));
        bundle.claims.push_back(std::move(b));
    }

    const ZeroSideTrace trace = zero_side_procedure(*pattern);
    bundle.claims.push_back(lemma42_certificate(*pattern));
    bundle.claims.push_back(
        lemma43_certificate(*pattern, trace.disjoint_shifts.size()));
    bundle.claims.push_back(lemma44_certificate(*pattern, trace));
    bundle.composite = verify_theorem41(*pattern);
    bundle.trace = trace;

    bundle.all_pass = bundle.composite->pass;
    for (const auto& c : bundle.claims) bundle.all_pass &= c.pass;
    return bundle;
}

CertifyBundle certify_rubinstein(const CommonOptions& opt) {
    const std::size_t k = opt.k;
    const FunctionDescriptor d = describe_rubinstein(k);
    if (d.n > opt.dense_limit) {
        throw invalid_parameter(
            "rubinstein certification scans all words; k^2 must stay within "
            "--dense-limit");
    }
    const TruthTable table = build_truth_table(*d.function, opt.dense_limit);

    CertifyBundle bundle;
    bundle.family = "rubinstein";
    bundle.params = {{"n", static_cast<std::int64_t>(d.n)},
                     {"k", static_cast<std::int64_t>(k)}};

    const GlobalSensitivity global = global_sensitivity(table);
    ClaimCertificate s_cert;
    s_cert.claim = "Example2.13-s";
    s_cert.params = bundle.params;
    s_cert.relation = "==";
    s_cert.bound = static_cast<double>(2 * k);
    s_cert.measured = static_cast<std::int64_t>(global.s.value);
    if (global.s.witness) s_cert.witnesses.push_back(*global.s.witness);
    s_cert.pass = global.s.value == 2 * k;
    s_cert.exact = s_cert.pass;
    bundle.claims.push_back(std::move(s_cert));

    if (d.n <= kDefaultBlockScanLimit) {
        const MeasureReport bs = global_block_sensitivity(table);
        ClaimCertificate bs_cert;
        bs_cert.claim = "Example2.13-bs";
        bs_cert.params = bundle.params;
        bs_cert.relation = "==";
        bs_cert.bound = static_cast<double>(k * k / 2);
        bs_cert.measured = static_cast<std::int64_t>(bs.value);
        if (bs.witness) bs_cert.witnesses.push_back(*bs.witness);
        bs_cert.pass = !bs.exhausted && bs.value == k * k / 2;
        bs_cert.exact = bs_cert.pass;
        bundle.claims.push_back(std::move(bs_cert));
    }

    bundle.all_pass = true;
    for (const auto& c : bundle.claims) bundle.all_pass &= c.pass;
    return bundle;
}

int run_certify(const CommonOptions& opt) {
    CertifyBundle bundle = opt.family == "rubinstein"
                               ? certify_rubinstein(opt)
                               : certify_pattern(load_function(opt));

    const std::string format = opt.format.empty() ? "plain" : opt.format;
    std::string text;
    if (format == "json") {
        text = certify_bundle_to_json(bundle);
    } else if (format == "plain") {
        text = certify_bundle_to_plain(bundle);
    } else {
        throw invalid_parameter("unknown format '" + format +
                                "' (certify emits json or plain)");
    }
    write_output(opt.out_path, text);
    return bundle.all_pass ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// construct and scan
// ---------------------------------------------------------------------------

int run_construct(const CommonOptions& opt) {
    const FunctionDescriptor d = opt.pattern_file.empty()
                                     ? build_family(opt)
                                     : function_from_json(slurp(opt.pattern_file));
    write_output(opt.out_path, function_to_json(d));
    if (!opt.table_file.empty()) {
        if (d.n > opt.dense_limit) {
            throw invalid_parameter(
                "cannot write a truth table: arity " + std::to_string(d.n) +
                " exceeds --dense-limit " + std::to_string(opt.dense_limit));
        }
        std::ofstream out(opt.table_file, std::ios::binary);
        if (!out) {
            throw invalid_parameter("cannot open table file '" +
                                    opt.table_file + "'");
        }
        write_table_file(out, build_truth_table(*d.function, opt.dense_limit));
    }
    return kExitPass;
}

std::pair<std::size_t, std::size_t> parse_k_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t k = std::stoul(text);
            return {k, k};
        }
        const std::size_t lo = std::stoul(text.substr(0, dots));
        const std::size_t hi = std::stoul(text.substr(dots + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw invalid_parameter("unreadable k range '" + text +
                                "' (expected K or LO..HI)");
    }
}

int run_scan(const CommonOptions& opt) {
    const auto [lo, hi] = parse_k_range(opt.k_range);
    ScanRelation relation;
    if (opt.relation == "cube") {
        relation = ScanRelation::cube;
    } else if (opt.relation == "square") {
        relation = ScanRelation::square;
    } else {
        throw invalid_parameter("unknown relation '" + opt.relation +
                                "' (expected cube | square)");
    }
    const auto rows = scaling_scan(lo, hi, relation);

    const std::string format = opt.format.empty() ? "csv" : opt.format;
    std::string text;
    if (format == "csv") {
        text = scan_rows_to_csv(rows);
    } else if (format == "json") {
        text = scan_rows_to_json(rows);
    } else {
        throw invalid_parameter("unknown format '" + format +
                                "' (scan emits csv or json)");
    }
    write_output(opt.out_path, text);
    std::cerr << scan_summary(rows) << '\n';

    const bool all_pass = std::all_of(
        rows.begin(), rows.end(),
        [](const ScanRow& row) { return row.status == "pass"; });
    return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean function sensitivity laboratory"};
    app.require_subcommand(1);

    CommonOptions opt;

    const auto add_common = [&](CLI::App* cmd, bool with_measures,
                                bool range_k = false) {
        cmd->add_option("--family", opt.family,
                        "theorem31 | theorem32 | rubinstein | auxiliary-g | "
                        "closure | random");
        cmd->add_option("--n", opt.n, "arity");
        if (range_k) {
            cmd->add_option("--k", opt.k_range, "k range: K or LO..HI");
        } else {
            cmd->add_option("--k", opt.k, "family block/support parameter");
        }
        cmd->add_option("--seed", opt.seed, "seed for the random family");
        cmd->add_option("--dense-limit", opt.dense_limit,
                        "max arity for dense truth tables");
        cmd->add_option("--node-cap", opt.node_cap,
                        "node budget for the block packing search");
        cmd->add_option("--block-cap", opt.block_cap,
                        "max block size (turns bs into bs_l)");
        cmd->add_option("--format", opt.format, "json | csv | plain");
        cmd->add_option("--out", opt.out_path, "output path (default stdout)");
        cmd->add_option("--table-file", opt.table_file, "truth table file");
        cmd->add_option("--pattern-file", opt.pattern_file,
                        "pattern JSON file");
        if (with_measures) {
            cmd->add_option("--measures", opt.measures,
                            "comma list: s,s0,s1,bs,bsl,effective,simon");
        }
    };

    CLI::App* construct =
        app.add_subcommand("construct", "build a function and emit its JSON");
    add_common(construct, false);

    CLI::App* analyze =
        app.add_subcommand("analyze", "compute sensitivity measures");
    add_common(analyze, true);

    CLI::App* certify =
        app.add_subcommand("certify", "run witness certificates");
    add_common(certify, false);

    CLI::App* scan = app.add_subcommand(
        "scan", "witness scaling table over a k range");
    add_common(scan, false, true);
    scan->add_option("--relation", opt.relation, "cube | square");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (construct->parsed()) return run_construct(opt);
        if (analyze->parsed()) return run_analyze(opt);
        if (certify->parsed()) return run_certify(opt);
        if (scan->parsed()) return run_scan(opt);
        return kExitConfig;
    } catch (const invalid_parameter& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitConfig;
    }
}
