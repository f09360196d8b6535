#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "senslab/analyzers.hpp"
#include "senslab/boolean_function.hpp"
#include "senslab/certificates.hpp"
#include "senslab/constructions.hpp"
#include "senslab/group.hpp"
#include "senslab/truth_table.hpp"

namespace senslab {

/// A constructed function together with everything needed to rebuild it:
/// the family tag, its parameters, and (for pattern-based families) the
/// defining pattern and group. This is the unit the pattern JSON documents
/// describe.
struct FunctionDescriptor {
    std::string family;  // theorem31 | theorem32 | rubinstein | auxiliary-g |
                         // closure | random
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> seed;
    std::optional<PartialAssignment> pattern;
    std::optional<GeneratedGroup> group;  // nullopt: no closure (auxiliary-g)
    std::shared_ptr<const BooleanFunction> function;
};

FunctionDescriptor describe_theorem31(std::size_t n);
FunctionDescriptor describe_theorem32(std::size_t n);
FunctionDescriptor describe_rubinstein(std::size_t k);
FunctionDescriptor describe_auxiliary_g(std::size_t k);
FunctionDescriptor describe_random(std::size_t n, std::size_t k,
                                   std::uint64_t seed);
FunctionDescriptor describe_closure(PartialAssignment pattern,
                                    GeneratedGroup group);

/// Pattern document: {"family", "n", "k", "support", "values", "group"}.
/// Groups serialize as {"type": "cyclic"} or {"type": "generated",
/// "generators": [[images...], ...]}; pattern matchers use {"type": "none"}
/// and the rubinstein family carries no pattern at all.
std::string function_to_json(const FunctionDescriptor& descriptor);
FunctionDescriptor function_from_json(const std::string& text);

std::string measure_reports_to_json(std::span<const MeasureReport> reports);
std::string measure_reports_to_csv(std::span<const MeasureReport> reports);
std::string measure_reports_to_plain(std::span<const MeasureReport> reports);

struct CertifyBundle {
    std::string family;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::vector<ClaimCertificate> claims;
    std::optional<CompositeCertificate> composite;
    std::optional<ZeroSideTrace> trace;
    bool all_pass = false;
};

std::string certify_bundle_to_json(const CertifyBundle& bundle);
std::string certify_bundle_to_plain(const CertifyBundle& bundle);

/// CSV with header "n,k,s1_witness,s0_witness,expected_s1,expected_s0,pass".
std::string scan_rows_to_csv(std::span<const ScanRow> rows);
std::string scan_rows_to_json(std::span<const ScanRow> rows);
std::string scan_summary(std::span<const ScanRow> rows);

/// Truth-table file format: first line "n=<arity>", second line 2^n
/// characters of 0/1 ordered by word value with position 1 most significant,
/// newline-terminated.
void write_table_file(std::ostream& out, const TruthTable& table);
TruthTable read_table_file(std::istream& in,
                           std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace senslab
