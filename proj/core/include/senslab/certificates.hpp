#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "senslab/orbit_pattern.hpp"
#include "senslab/partial_assignment.hpp"
#include "senslab/word.hpp"

namespace senslab {

/// A checked numerical claim: a measured quantity against an asserted bound.
struct ClaimCertificate {
    std::string claim;    // e.g. "Claim3.3a", "Lemma4.2"
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::string relation;  // "==" or ">="
    double bound = 0.0;
    std::int64_t measured = 0;
    std::vector<Word> witnesses;
    bool pass = false;
    std::optional<bool> exact;  // set when an exactness check also ran
};

/// One-sided witness for the defining pattern: the pattern padded with a
/// constant outside its support. Padding with zeros certifies one sensitive
/// position per pattern 1; padding with ones certifies one per pattern 0.
/// Returns the padding with the larger measured sensitivity (zeros on ties),
/// so the count is always at least half the support size.
std::pair<Word, std::size_t> one_side_witness(const OrbitPattern& f);

/// Greedy maximal family of pairwise support-disjoint orbit members, taken
/// in the deterministic orbit enumeration order. For a transitive group the
/// family size t always satisfies t * k^2 >= n with k the support size; a
/// smaller family indicates a bug and throws.
std::vector<PartialAssignment> greedy_disjoint_shifts(
    const PartialAssignment& p, const GeneratedGroup& group);
std::vector<PartialAssignment> greedy_disjoint_shifts(const OrbitPattern& f);

/// Record of the constructive zero-side procedure: starting from a word z
/// with f(z) = 0, T collects the positions where z disagrees with the union
/// of a greedy disjoint shift family, and P is a maximal subset of T whose
/// flip keeps the value 0. Every remaining position of T flips the value to
/// 1, so the sensitivity at z^P is at least |T \ P| >= family size.
struct ZeroSideTrace {
    Word start;                                   // z
    std::vector<PartialAssignment> disjoint_shifts;
    std::vector<std::size_t> disagreement;        // T, ascending
    std::vector<std::size_t> kept;                // P, ascending
    Word flipped;                                 // z^P
    std::size_t sensitivity = 0;                  // s(f, z^P)

    std::size_t forced_flip_count() const {       // |T \ P|
        return disagreement.size() - kept.size();
    }
};

ZeroSideTrace zero_side_procedure(const OrbitPattern& f);

/// Exact sensitivity checks of the window family witnesses: certificate A
/// asserts s(f, witness_one) == 6k - 2, certificate B asserts
/// s(f, witness_zero) >= floor(n / k^2) and records whether the exhaustive
/// per-bit check confirmed exact equality.
std::pair<ClaimCertificate, ClaimCertificate> verify_claim33(std::size_t n,
                                                             std::size_t k);

/// Composite lower-bound certificate for any pattern closure, combining the
/// one-side witness (L1) and the zero-side procedure (L0):
/// max(L0, L1) >= (n/4)^(1/3) and L0 * L1 >= sqrt(n)/4.
struct CompositeCertificate {
    std::size_t n = 0;
    std::size_t support_size = 0;
    std::size_t one_side_bound = 0;    // L1
    std::size_t zero_side_bound = 0;   // L0
    std::size_t family_size = 0;
    double max_bound = 0.0;            // (n/4)^(1/3)
    double product_bound = 0.0;        // sqrt(n)/4
    bool max_pass = false;
    bool product_pass = false;
    bool pass = false;
    Word one_side_witness_word;
    Word zero_side_witness_word;
};

CompositeCertificate verify_theorem41(const OrbitPattern& f);

/// Witness-sensitivity scaling table over a k range with n = k^3 (cube) or
/// n = k^2 (square). Parameter errors are recorded per row and the scan
/// continues.
enum class ScanRelation { cube, square };

struct ScanRow {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> s1_witness;
    std::optional<std::size_t> s0_witness;
    std::size_t expected_s1 = 0;  // 6k - 2
    std::size_t expected_s0 = 0;  // floor(n / k^2)
    std::string status;           // "pass", "fail", or "error ..."
};

std::vector<ScanRow> scaling_scan(std::size_t k_lo, std::size_t k_hi,
                                  ScanRelation relation);

}  // namespace senslab
