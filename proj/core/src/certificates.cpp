#include "senslab/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "senslab/analyzers.hpp"
#include "senslab/constructions.hpp"
#include "senslab/errors.hpp"

namespace senslab {

namespace {

std::vector<std::size_t> one_positions(const PartialAssignment& p) {
    std::vector<std::size_t> out;
    for (const auto& [pos, value] : p.entries()) {
        if (value) out.push_back(pos);
    }
    return out;
}

Word pad_with_zeros(const PartialAssignment& p) {
    return Word::from_support(p.ambient_size(), one_positions(p));
}

Word pad_with_ones(const PartialAssignment& p) {
    std::vector<std::size_t> ones;
    for (std::size_t pos = 1; pos <= p.ambient_size(); ++pos) {
        if (!p.defines(pos) || p.value_at(pos)) ones.push_back(pos);
    }
    return Word::from_support(p.ambient_size(), ones);
}

bool supports_disjoint(std::span<const std::uint64_t> a,
                       std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] & b[i]) return false;
    }
    return true;
}

std::vector<PartialAssignment> greedy_from_orbit(
    const std::vector<PartialAssignment>& orbit, std::size_t n) {
    std::vector<PartialAssignment> family;
    std::vector<std::uint64_t> used((n + 63) / 64, 0);
    for (const auto& member : orbit) {
        if (!supports_disjoint(member.support_blocks(), used)) continue;
        const auto blocks = member.support_blocks();
        for (std::size_t i = 0; i < used.size(); ++i) used[i] |= blocks[i];
        family.push_back(member);
    }
    const std::size_t k = orbit.front().support_size();
    if (family.size() * k * k < n) {
        throw std::logic_error(
            "greedy disjoint family smaller than n/k^2; transitive counting "
            "argument violated");
    }
    return family;
}

}  // namespace

std::pair<Word, std::size_t> one_side_witness(const OrbitPattern& f) {
    const PartialAssignment& p = f.minterm();
    const Word zeros_padded = pad_with_zeros(p);
    const Word ones_padded = pad_with_ones(p);
    const std::size_t s_zeros = sensitivity_at(f, zeros_padded);
    const std::size_t s_ones = sensitivity_at(f, ones_padded);
    if (s_zeros >= s_ones) return {zeros_padded, s_zeros};
    return {ones_padded, s_ones};
}

std::vector<PartialAssignment> greedy_disjoint_shifts(
    const PartialAssignment& p, const GeneratedGroup& group) {
    if (!is_transitive(group)) {
        throw invalid_parameter("the group must be transitive");
    }
    if (p.support_size() == 0) {
        throw invalid_parameter("the pattern needs nonempty support");
    }
    return greedy_from_orbit(assignment_orbit(group, p), p.ambient_size());
}

std::vector<PartialAssignment> greedy_disjoint_shifts(const OrbitPattern& f) {
    if (f.cached_orbit()) {
        return greedy_from_orbit(*f.cached_orbit(), f.arity());
    }
    return greedy_from_orbit(assignment_orbit(f.group(), f.minterm()),
                             f.arity());
}

ZeroSideTrace zero_side_procedure(const OrbitPattern& f) {
    const std::size_t n = f.arity();
    const PartialAssignment& p = f.minterm();

    // A word of weight below wt(p) extends no shift (all shifts share the
    // pattern's weight); symmetrically for the zero count. One of the two
    // constant words therefore evaluates to 0.
    Word z(n);
    if (p.weight() == 0) {
        std::vector<std::size_t> all(n);
        for (std::size_t pos = 1; pos <= n; ++pos) all[pos - 1] = pos;
        z = Word::from_support(n, all);
    }
    if (f.evaluate(z)) {
        throw std::logic_error("constant start word unexpectedly evaluates to 1");
    }

    std::vector<PartialAssignment> family = greedy_disjoint_shifts(f);

    // Union of the disjoint family as one partial assignment.
    std::vector<std::pair<std::size_t, bool>> union_entries;
    for (const auto& member : family) {
        const auto entries = member.entries();
        union_entries.insert(union_entries.end(), entries.begin(),
                             entries.end());
    }
    const PartialAssignment family_union(n, union_entries);

    std::vector<std::size_t> disagreement;
    for (const auto& [pos, value] : family_union.entries()) {
        if (z.bit(pos) != value) disagreement.push_back(pos);
    }

    // Grow P in ascending position order until it is maximal: every
    // remaining disagreement position flips the value to 1. A full pass
    // without additions is exactly that check.
    Word current = z;
    std::vector<bool> in_kept(disagreement.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < disagreement.size(); ++t) {
            if (in_kept[t]) continue;
            const Word candidate = current.flipped(disagreement[t]);
            if (!f.evaluate(candidate)) {
                current = candidate;
                in_kept[t] = true;
                changed = true;
            }
        }
    }
    std::vector<std::size_t> kept;
    for (std::size_t t = 0; t < disagreement.size(); ++t) {
        if (in_kept[t]) kept.push_back(disagreement[t]);
    }

    ZeroSideTrace trace{std::move(z),     std::move(family),
                        std::move(disagreement), std::move(kept),
                        std::move(current),      0};
    trace.sensitivity = sensitivity_at(f, trace.flipped);

    if (trace.forced_flip_count() < trace.disjoint_shifts.size()) {
        throw std::logic_error(
            "fewer forced flips than disjoint shifts; packing argument "
            "violated");
    }
    return trace;
}

std::pair<ClaimCertificate, ClaimCertificate> verify_claim33(std::size_t n,
                                                             std::size_t k) {
    const OrbitPattern f = new_function(n, k);

    ClaimCertificate a;
    a.claim = "Claim3.3a";
    a.params = {{"n", static_cast<std::int64_t>(n)},
                {"k", static_cast<std::int64_t>(k)}};
    a.relation = "==";
    a.bound = static_cast<double>(6 * k - 2);
    const Word w1 = witness_one(n, k);
    a.measured = static_cast<std::int64_t>(sensitivity_at(f, w1));
    a.witnesses.push_back(w1);
    a.pass = f.evaluate(w1) &&
             a.measured == static_cast<std::int64_t>(6 * k - 2);
    a.exact = a.pass;

    ClaimCertificate b;
    b.claim = "Claim3.3b";
    b.params = a.params;
    b.relation = ">=";
    const std::size_t copies = n / (k * k);
    b.bound = static_cast<double>(copies);
    const ZeroWitness w0 = witness_zero(n, k);
    const auto sensitive = sensitive_positions(f, w0.word);
    b.measured = static_cast<std::int64_t>(sensitive.size());
    b.witnesses.push_back(w0.word);
    bool listed_ok = !f.evaluate(w0.word);
    for (std::size_t pos : w0.sensitive_positions) {
        listed_ok = listed_ok && std::binary_search(sensitive.begin(),
                                                    sensitive.end(), pos);
    }
    b.pass = listed_ok && sensitive.size() >= copies;
    b.exact = b.pass && sensitive.size() == copies;

    return {std::move(a), std::move(b)};
}

CompositeCertificate verify_theorem41(const OrbitPattern& f) {
    const std::uint64_t n = f.arity();
    const std::size_t support_size = f.minterm().support_size();

    auto [w1, l1] = one_side_witness(f);
    if (2 * l1 < support_size) {
        throw std::logic_error("one-side witness below half the support size");
    }

    ZeroSideTrace trace = zero_side_procedure(f);
    const std::uint64_t l0 = trace.sensitivity;

    const std::uint64_t best = std::max<std::uint64_t>(l0, l1);
    const unsigned __int128 cube =
        static_cast<unsigned __int128>(best) * best * best * 4;
    const unsigned __int128 scaled_product =
        static_cast<unsigned __int128>(l0) * l1 * 4;
    const bool max_pass = cube >= n;
    const bool product_pass = scaled_product * scaled_product >= n;

    return CompositeCertificate{
        static_cast<std::size_t>(n),
        support_size,
        l1,
        static_cast<std::size_t>(l0),
        trace.disjoint_shifts.size(),
        std::cbrt(static_cast<double>(n) / 4.0),
        std::sqrt(static_cast<double>(n)) / 4.0,
        max_pass,
        product_pass,
        max_pass && product_pass,
        std::move(w1),
        std::move(trace.flipped)};
}

std::vector<ScanRow> scaling_scan(std::size_t k_lo, std::size_t k_hi,
                                  ScanRelation relation) {
    if (k_lo < 1 || k_lo > k_hi) {
        throw invalid_parameter("k range must satisfy 1 <= lo <= hi");
    }
    std::vector<ScanRow> rows;
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        ScanRow row;
        row.k = k;
        row.n = relation == ScanRelation::cube ? k * k * k : k * k;
        row.expected_s1 = 6 * k - 2;
        row.expected_s0 = row.n / (k * k);
        try {
            const OrbitPattern f = new_function(row.n, k);
            row.s1_witness = sensitivity_at(f, witness_one(row.n, k));
            row.s0_witness =
                sensitivity_at(f, witness_zero(row.n, k).word);
            const bool ok = *row.s1_witness == row.expected_s1 &&
                            *row.s0_witness == row.expected_s0;
            row.status = ok ? "pass" : "fail";
        } catch (const invalid_parameter& e) {
            row.status = std::string("error ") + e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace senslab
