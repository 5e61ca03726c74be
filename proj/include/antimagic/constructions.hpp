// Constructive antimagic labelings for K_{1,s} x P_n: one labeling family
// per parameter region, epsilon selection for the two general families, and
// the dispatcher that ties them to the search oracle for the exceptional
// and s = 1 regions.

#ifndef ANTIMAGIC_CONSTRUCTIONS_HPP
#define ANTIMAGIC_CONSTRUCTIONS_HPP

#include "antimagic/labeling.hpp"
#include "antimagic/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace antimagic {

enum class MethodTag {
    EvenS2,
    EvenGeneral,
    OddP3,
    OddP5,
    OddGeneral,
    TwoStars,
    SearchFallback,
};

std::string method_tag_name(MethodTag tag);

enum class PathParity { Even, Odd };

// The s-element subset of {1..2s} carried by the a_0-side pendant edges,
// with sum s(s+1)/2 + epsilon. Canonical rule: epsilon = q*s + r with
// 0 <= r < s gives {1..s-q-1} u {s-q+r} u {2s-q+1..2s}, the middle element
// omitted when q = s. Returned ascending.
std::vector<int> pendant_subset(int s, int epsilon);

// K_{1,2} x P_{2m+2}, m >= 1. Labels cover 1..8m+4.
EdgeLabeling label_even_s2(int m);

// K_{1,s} x P_{2m+2}, s >= 3, m >= 1, epsilon in 0..s^2. Labels cover
// 1..4ms+2s; the bijection holds for every epsilon, antimagicness only for
// suitable epsilon.
EdgeLabeling label_even_general(int s, int m, int epsilon);

// K_{1,s} x P_3, s >= 2. Labels cover 1..4s.
EdgeLabeling label_odd_p3(int s);

// K_{1,s} x P_5, s >= 2. Labels cover 1..8s.
EdgeLabeling label_odd_p5(int s);

// K_{1,s} x P_{2m+1}, s >= 2, m >= 3, epsilon in 0..s^2. Labels cover
// 1..4ms.
EdgeLabeling label_odd_general(int s, int m, int epsilon);

struct EpsilonSelection {
    int epsilon = 0;
    EdgeLabeling labeling;
    // True when no epsilon in {0,1,2,3} verified and the scan over 4..s^2
    // produced the winner.
    bool fallback_used = false;
};

// Tries epsilon = 0,1,2,3 in order against the verifier, then scans the
// rest of 0..s^2. Exhausting the range without a pass throws.
EpsilonSelection select_epsilon(int s, int m, PathParity parity);

// K_{1,s} x P_2 = 2K_{1,s}, s >= 3. Star A pendant edges take
// {1..s-1, 2s}, star B takes {s..2s-1}; hub weights s(s+3)/2 and
// s(3s-1)/2 differ whenever s != 2. Verification failure throws.
EdgeLabeling label_two_stars(int s);

struct ConstructionOutcome {
    enum class Kind { Antimagic, NotAntimagic, Unknown };

    Kind kind;
    std::optional<EdgeLabeling> labeling;          // Antimagic
    std::optional<MethodTag> method;               // Antimagic
    std::optional<int> epsilon;                    // Antimagic, general families
    std::optional<NonAntimagicCertificate> certificate; // NotAntimagic
    std::optional<SearchReport> budget_report;     // Unknown

    bool antimagic() const { return kind == Kind::Antimagic; }
};

// Case dispatch over (s, n). The exceptions (1,2), (1,3), (2,2) and the
// whole s = 1 region go through the search oracle; every other cell gets
// its constructive family. Antimagic outcomes are re-verified before
// return.
ConstructionOutcome construct(const ProductParams& p, const SearchBudget& budget);
ConstructionOutcome construct(const ProductParams& p);

} // namespace antimagic

#endif
