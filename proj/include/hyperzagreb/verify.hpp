#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hyperzagreb/enumerate.hpp"
#include "hyperzagreb/hypergraph.hpp"

namespace hyperzagreb {

/// `exploratory` marks checks run outside the asserted parameter range:
/// they report what exhaustive search finds without claiming it.
enum class Verdict { pass, fail, exploratory };

const char* verdict_name(Verdict v);

/// Outcome of one exhaustive cross-check of a closed-form claim.
struct VerifyReport {
    std::string check;          ///< stable identifier, e.g. "min-zagreb"
    int k = 0;
    int m = 0;
    std::optional<int> girth;   ///< set only for girth-restricted checks
    std::string expected;       ///< claimed value, "-" when no claim applies
    std::string observed;       ///< exhaustive value, "-" when the family is empty
    std::optional<bool> witness_matches;  ///< constructed witness found among the extremes
    int extremal_class_count = 0;         ///< isomorphism classes attaining the extreme
    Verdict verdict = Verdict::fail;
    long long millis = 0;
    std::string detail;
    std::optional<Hypergraph> witness;    ///< canonical form of the constructed witness

    bool passed() const { return verdict != Verdict::fail; }

    nlohmann::json to_json() const;

    /// "check,k,m,girth,expected,observed,verdict,millis"; fields never
    /// contain commas, absent values print as "-".
    std::string csv_row() const;
    static std::string csv_header();
};

/// Exhaustively checks that the least sum of squared degrees over connected
/// linear k-uniform bicyclic hypergraphs with m edges is 3km - 2n with
/// n = m(k-1) - 1, and that every minimizer has maximum degree 2.
VerifyReport verify_min(int k, int m, const EnumerationOptions& options = {});

/// Exhaustively checks the maximum over the two-cycle family with girth g
/// against its closed form and the constructed witness. Raises EmptyFamily
/// when m < 2g.
VerifyReport verify_b_family(int k, int m, int girth, const EnumerationOptions& options = {});

/// Exhaustively checks the maximum over the theta family with girth g.
/// Even g: asserted for m >= 3g/2, exploratory at m = 3g/2 - 1, EmptyFamily
/// below. Odd g: asserted for m >= (3g-1)/2, EmptyFamily below.
VerifyReport verify_c_family(int k, int m, int girth, const EnumerationOptions& options = {});

/// Exhaustively checks the overall bicyclic maximum against the girth-3
/// theta claim. Asserted for m >= 6; exploratory for m in {4, 5}.
VerifyReport verify_global(int k, int m, const EnumerationOptions& options = {});

/// Classifies every enumerated bicyclic class and cross-checks each
/// classification: the girth implied by the family parameters must match
/// the computed girth and the parameters must account for every edge.
VerifyReport verify_taxonomy(int k, int m, const EnumerationOptions& options = {});

}  // namespace hyperzagreb
