#include "senslab/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "senslab/errors.hpp"
#include "senslab/util.hpp"

namespace senslab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json group_to_json(const std::optional<GeneratedGroup>& group) {
    if (!group) return ordered_json{{"type", "none"}};
    if (group->generators().size() == 1) {
        const auto shift = group->generators().front().rotation_amount();
        if (shift && (group->degree() == 1 || *shift == 1)) {
            return ordered_json{{"type", "cyclic"}};
        }
    }
    ordered_json generators = ordered_json::array();
    for (const auto& g : group->generators()) {
        generators.push_back(g.image());
    }
    return ordered_json{{"type", "generated"}, {"generators", generators}};
}

std::optional<GeneratedGroup> group_from_json(const ordered_json& j,
                                              std::size_t n) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "none") return std::nullopt;
    if (type == "cyclic") return cyclic_group(n);
    if (type == "generated") {
        std::vector<Permutation> generators;
        for (const auto& image : j.at("generators")) {
            generators.emplace_back(image.get<std::vector<std::size_t>>());
        }
        return GeneratedGroup(n, std::move(generators));
    }
    throw invalid_parameter("unknown group type '" + type + "'");
}

ordered_json word_json(const Word& w) { return w.to_string(); }

ordered_json assignment_json(const PartialAssignment& p) {
    std::vector<std::size_t> support;
    std::vector<int> values;
    for (const auto& [pos, value] : p.entries()) {
        support.push_back(pos);
        values.push_back(value ? 1 : 0);
    }
    return ordered_json{{"support", support}, {"values", values}};
}

PartialAssignment assignment_from_parts(std::size_t n,
                                        const ordered_json& support,
                                        const ordered_json& values) {
    const auto positions = support.get<std::vector<std::size_t>>();
    const auto bits = values.get<std::vector<int>>();
    if (positions.size() != bits.size()) {
        throw invalid_parameter("support and values must have equal length");
    }
    std::vector<std::pair<std::size_t, bool>> entries;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        entries.emplace_back(positions[i], bits[i] != 0);
    }
    return PartialAssignment(n, entries);
}

ordered_json report_json(const MeasureReport& r) {
    ordered_json j;
    j["measure"] = r.measure;
    j["value"] = r.value;
    if (r.witness) j["witness"] = r.witness->to_string();
    j["method"] = r.method;
    ordered_json budget = ordered_json::object();
    if (r.dense_limit) budget["dense_limit"] = *r.dense_limit;
    if (r.block_cap) budget["block_cap"] = *r.block_cap;
    if (r.node_cap) budget["node_cap"] = *r.node_cap;
    j["budget"] = budget;
    j["exhausted"] = r.exhausted;
    return j;
}

ordered_json claim_json(const ClaimCertificate& c) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : c.params) params[key] = value;
    ordered_json j;
    j["claim"] = c.claim;
    j["params"] = params;
    j["relation"] = c.relation;
    j["bound"] = c.bound;
    j["measured"] = c.measured;
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : c.witnesses) witnesses.push_back(w.to_string());
    j["witnesses"] = witnesses;
    j["pass"] = c.pass;
    if (c.exact.has_value()) j["exact"] = *c.exact;
    return j;
}

ordered_json composite_json(const CompositeCertificate& c) {
    ordered_json j;
    j["claim"] = "Theorem4.1";
    j["n"] = c.n;
    j["support_size"] = c.support_size;
    j["s1_lower_bound"] = c.one_side_bound;
    j["s0_lower_bound"] = c.zero_side_bound;
    j["family_size"] = c.family_size;
    j["max_bound"] = c.max_bound;
    j["product_bound"] = c.product_bound;
    j["max_pass"] = c.max_pass;
    j["product_pass"] = c.product_pass;
    j["pass"] = c.pass;
    j["s1_witness"] = c.one_side_witness_word.to_string();
    j["s0_witness"] = c.zero_side_witness_word.to_string();
    return j;
}

ordered_json trace_json(const ZeroSideTrace& t) {
    ordered_json shifts = ordered_json::array();
    for (const auto& member : t.disjoint_shifts) {
        shifts.push_back(assignment_json(member));
    }
    ordered_json j;
    j["start"] = word_json(t.start);
    j["disjoint_shifts"] = shifts;
    j["disagreement"] = t.disagreement;
    j["kept"] = t.kept;
    j["flipped"] = word_json(t.flipped);
    j["sensitivity"] = t.sensitivity;
    j["forced_flips"] = t.forced_flip_count();
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

FunctionDescriptor describe_theorem31(std::size_t n) {
    auto f = theorem31_function(n);
    const std::size_t k = std::max<std::size_t>(8, icbrt(n));
    FunctionDescriptor d;
    d.family = "theorem31";
    d.n = n;
    d.k = k;
    d.pattern = f.minterm();
    d.group = f.group();
    d.function = std::make_shared<OrbitPattern>(std::move(f));
    return d;
}

FunctionDescriptor describe_theorem32(std::size_t n) {
    auto f = theorem32_function(n);
    FunctionDescriptor d;
    d.family = "theorem32";
    d.n = n;
    d.k = isqrt(n);
    d.pattern = f.minterm();
    d.group = f.group();
    d.function = std::make_shared<OrbitPattern>(std::move(f));
    return d;
}

FunctionDescriptor describe_rubinstein(std::size_t k) {
    auto f = rubinstein_cyclic(k);
    FunctionDescriptor d;
    d.family = "rubinstein";
    d.n = f.arity();
    d.k = k;
    d.function = std::make_shared<RubinsteinCyclic>(std::move(f));
    return d;
}

FunctionDescriptor describe_auxiliary_g(std::size_t k) {
    auto [matcher, spec] = auxiliary_g(k);
    FunctionDescriptor d;
    d.family = "auxiliary-g";
    d.n = spec.window_size();
    d.k = k;
    d.pattern = spec.fixed;
    d.function = std::make_shared<PatternMatcher>(std::move(matcher));
    return d;
}

FunctionDescriptor describe_random(std::size_t n, std::size_t k,
                                   std::uint64_t seed) {
    auto f = random_minterm_transitive(n, k, seed);
    FunctionDescriptor d;
    d.family = "random";
    d.n = n;
    d.k = k;
    d.seed = seed;
    d.pattern = f.minterm();
    d.group = f.group();
    d.function = std::make_shared<OrbitPattern>(std::move(f));
    return d;
}

FunctionDescriptor describe_closure(PartialAssignment pattern,
                                    GeneratedGroup group) {
    const std::size_t n = pattern.ambient_size();
    auto f = minterm_closure(pattern, group, n);
    FunctionDescriptor d;
    d.family = "closure";
    d.n = n;
    d.k = pattern.support_size();
    d.pattern = std::move(pattern);
    d.group = std::move(group);
    d.function = std::make_shared<OrbitPattern>(std::move(f));
    return d;
}

std::string function_to_json(const FunctionDescriptor& descriptor) {
    ordered_json j;
    j["family"] = descriptor.family;
    j["n"] = descriptor.n;
    if (descriptor.k) j["k"] = *descriptor.k;
    if (descriptor.seed) j["seed"] = *descriptor.seed;
    if (descriptor.pattern) {
        const ordered_json parts = assignment_json(*descriptor.pattern);
        j["support"] = parts.at("support");
        j["values"] = parts.at("values");
    }
    j["group"] = group_to_json(descriptor.group);
    return dump(j);
}

FunctionDescriptor function_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameter(std::string("malformed pattern JSON: ") +
                                e.what());
    }
    try {
        const std::string family = j.value("family", std::string("closure"));
        const std::size_t n = j.at("n").get<std::size_t>();
        if (family == "rubinstein") {
            return describe_rubinstein(j.at("k").get<std::size_t>());
        }
        if (!j.contains("support")) {
            throw invalid_parameter("pattern JSON needs a support field");
        }
        PartialAssignment pattern =
            assignment_from_parts(n, j.at("support"), j.at("values"));
        auto group = group_from_json(
            j.value("group", ordered_json{{"type", "cyclic"}}), n);
        if (!group) {
            FunctionDescriptor d;
            d.family = family;
            d.n = n;
            d.k = j.contains("k") ? std::optional<std::size_t>(
                                        j.at("k").get<std::size_t>())
                                  : std::nullopt;
            d.pattern = pattern;
            d.function = std::make_shared<PatternMatcher>(std::move(pattern));
            return d;
        }
        FunctionDescriptor d = describe_closure(std::move(pattern),
                                                std::move(*group));
        d.family = family;
        if (j.contains("k")) d.k = j.at("k").get<std::size_t>();
        if (j.contains("seed")) d.seed = j.at("seed").get<std::uint64_t>();
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_parameter(std::string("malformed pattern JSON: ") +
                                e.what());
    }
}

std::string measure_reports_to_json(std::span<const MeasureReport> reports) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return dump(ordered_json{{"reports", arr}});
}

std::string measure_reports_to_csv(std::span<const MeasureReport> reports) {
    std::ostringstream out;
    out << "measure,value,witness,method,exhausted\n";
    for (const auto& r : reports) {
        out << r.measure << ',' << r.value << ','
            << (r.witness ? r.witness->to_string() : std::string()) << ','
            << r.method << ',' << (r.exhausted ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string measure_reports_to_plain(std::span<const MeasureReport> reports) {
    std::ostringstream out;
    for (const auto& r : reports) {
        out << r.measure << (r.exhausted ? " >= " : " = ") << r.value;
        if (r.witness) {
            out << " (witness " << r.witness->to_string()
                << (r.exhausted ? ", lower bound" : "") << ")";
        } else if (r.exhausted) {
            out << " (lower bound)";
        }
        out << '\n';
    }
    return out.str();
}

std::string certify_bundle_to_json(const CertifyBundle& bundle) {
    ordered_json params = ordered_json::object();
    for (const auto& [key, value] : bundle.params) params[key] = value;
    ordered_json certificates = ordered_json::array();
    for (const auto& c : bundle.claims) certificates.push_back(claim_json(c));
    if (bundle.composite) {
        certificates.push_back(composite_json(*bundle.composite));
    }
    ordered_json j;
    j["family"] = bundle.family;
    j["params"] = params;
    j["certificates"] = certificates;
    if (bundle.trace) j["zero_side_trace"] = trace_json(*bundle.trace);
    j["all_pass"] = bundle.all_pass;
    return dump(j);
}

std::string certify_bundle_to_plain(const CertifyBundle& bundle) {
    std::ostringstream out;
    for (const auto& c : bundle.claims) {
        out << c.claim << ": " << c.measured << ' '
            << (c.pass ? "pass" : "FAIL") << '\n';
    }
    if (bundle.composite) {
        const auto& c = *bundle.composite;
        out << "Theorem4.1: s1 >= " << c.one_side_bound << ", s0 >= "
            << c.zero_side_bound << ' ' << (c.pass ? "pass" : "FAIL") << '\n';
    }
    out << (bundle.all_pass ? "all certificates pass"
                            : "certificate failures present")
        << '\n';
    return out.str();
}

std::string scan_rows_to_csv(std::span<const ScanRow> rows) {
    std::ostringstream out;
    out << "n,k,s1_witness,s0_witness,expected_s1,expected_s0,pass\n";
    for (const auto& row : rows) {
        out << row.n << ',' << row.k << ',';
        if (row.s1_witness) out << *row.s1_witness;
        out << ',';
        if (row.s0_witness) out << *row.s0_witness;
        out << ',' << row.expected_s1 << ',' << row.expected_s0 << ','
            << row.status << '\n';
    }
    return out.str();
}

std::string scan_rows_to_json(std::span<const ScanRow> rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json j;
        j["n"] = row.n;
        j["k"] = row.k;
        if (row.s1_witness) j["s1_witness"] = *row.s1_witness;
        if (row.s0_witness) j["s0_witness"] = *row.s0_witness;
        j["expected_s1"] = row.expected_s1;
        j["expected_s0"] = row.expected_s0;
        j["pass"] = row.status;
        arr.push_back(j);
    }
    return dump(ordered_json{{"rows", arr}});
}

std::string scan_summary(std::span<const ScanRow> rows) {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t error = 0;
    double max_dev_s1 = 0.0;
    double max_dev_s0 = 0.0;
    for (const auto& row : rows) {
        if (row.status == "pass") {
            ++pass;
        } else if (row.status == "fail") {
            ++fail;
        } else {
            ++error;
        }
        if (row.s1_witness && row.expected_s1 > 0) {
            const double dev = std::abs(
                static_cast<double>(*row.s1_witness) / row.expected_s1 - 1.0);
            max_dev_s1 = std::max(max_dev_s1, dev);
        }
        if (row.s0_witness && row.expected_s0 > 0) {
            const double dev = std::abs(
                static_cast<double>(*row.s0_witness) / row.expected_s0 - 1.0);
            max_dev_s0 = std::max(max_dev_s0, dev);
        }
    }
    std::ostringstream out;
    out << "rows=" << rows.size() << " pass=" << pass << " fail=" << fail
        << " error=" << error << " max_s1_deviation=" << max_dev_s1
        << " max_s0_deviation=" << max_dev_s0;
    return out.str();
}

void write_table_file(std::ostream& out, const TruthTable& table) {
    out << "n=" << table.arity() << '\n' << table.to_chars() << '\n';
}

TruthTable read_table_file(std::istream& in, std::size_t dense_limit) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("n=", 0) != 0) {
        throw invalid_parameter("table file must start with an n=<arity> line");
    }
    std::size_t n = 0;
    try {
        n = std::stoul(header.substr(2));
    } catch (const std::exception&) {
        throw invalid_parameter("unreadable arity in table file header");
    }
    std::string entries;
    if (!std::getline(in, entries)) {
        throw invalid_parameter("table file is missing the entries line");
    }
    return TruthTable::from_chars(n, entries, dense_limit);
}

}  // namespace senslab
