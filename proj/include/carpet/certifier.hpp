#pragma once

// Self-embedding checks: digit-level symmetry certificates, exact grid
// containment for axis-aligned maps, witness search, and the necessary
// conditions on obliqueness, scale and rotation angle.

#include "carpet/pattern.hpp"
#include "carpet/similitude.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace carpet {

struct SymmetryCertificate {
    RationalOrthogonal orthogonal = RationalOrthogonal::identity();
    Point2 per_digit_offset;     // c with O d + c in Lambda for every digit d
    Point2 global_translation;   // c / (n - 1)
    std::map<Digit, Digit> permutation;

    // z -> O z + c / (n - 1)
    RationalSimilitude map() const;
};

// psi(d) = O d + c on every digit; a certificate iff psi permutes Lambda.
// UnsupportedError when n != m.
std::optional<SymmetryCertificate> digit_symmetry_check(const CarpetPattern& pattern, const RationalOrthogonal& o,
                                                        const Point2& c);

// Every certificate whose orthogonal part is in
// enumerate_rational_orthogonals(max_hypotenuse), in that order. The offset
// is forced to mu - O mu, mu the centroid of Lambda.
std::vector<SymmetryCertificate> symmetry_search(const CarpetPattern& pattern, int max_hypotenuse);

// Exact centroid of the digit set.
Point2 digit_centroid(const CarpetPattern& pattern);

std::string format_certificate(const SymmetryCertificate& cert);

struct Witness {
    Point2 source;           // a point of K
    Point2 image;            // f(source), not in K
    std::vector<Digit> word; // source = phi_word(fixed point of tail)
    std::vector<Digit> tail;
};

enum class ContainmentStatus { certified, refuted, unknown };

std::string to_string(ContainmentStatus s);

struct ContainmentVerdict {
    ContainmentStatus status = ContainmentStatus::unknown;
    std::optional<Witness> witness;
    unsigned depth = 0;           // deepest split level reached
    std::size_t state_count = 0;  // distinct offset states explored
    std::string note;
};

inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

// Decides f(K) subset K for maps whose linear part is diag(n^-p, m^-q)
// times a signed permutation (a swap only when n == m) and whose translation
// has power-of-n (x) and power-of-m (y) denominators. PreconditionError for
// anything else. Certified answers are exact; refutations carry a witness
// checked by contains_point; unknown when the budget runs out or no witness
// is found for a failing state.
ContainmentVerdict grid_containment_certify(const CarpetPattern& pattern, const RationalSimilitude& f,
                                            std::size_t budget = kDefaultStateBudget);

// Tries f on the fixed points of every cylinder word of length 1..depth
// (shorter words first, then lexicographic). UnsupportedError for an
// irrational scale.
std::optional<Witness> refute_embedding(const CarpetPattern& pattern, const RationalSimilitude& f, unsigned depth);

struct PrefilterCheck {
    std::string name;
    bool applicable = false;
    bool ruled_out = false;
    std::string detail;
};

struct PrefilterReport {
    std::vector<PrefilterCheck> checks;  // non-obliqueness, log-commensurability, rotation-angle (Niven)
    bool ruled_out = false;
    bool isometry = false;  // informational: scale 1
    std::string verdict;    // "ruled out by <check>" or "passes prefilter"
};

// separation_depth is the level used to verify strong separation before the
// rotation-angle check.
PrefilterReport embedding_prefilter(const CarpetPattern& pattern, const RationalSimilitude& f,
                                    unsigned separation_depth = 3);

std::string format_prefilter(const PrefilterReport& report);

}  // namespace carpet
