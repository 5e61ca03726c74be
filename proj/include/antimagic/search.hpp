// Exhaustive and backtracking search for antimagic labelings of small
// graphs: existence witnesses and soundly-pruned non-existence
// certificates.

#ifndef ANTIMAGIC_SEARCH_HPP
#define ANTIMAGIC_SEARCH_HPP

#include "antimagic/labeling.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace antimagic {

struct SearchBudget {
    enum class Mode { Exhaustive, Backtracking };

    std::int64_t max_nodes = 10'000'000;
    Mode mode = Mode::Backtracking;

    static SearchBudget exhaustive(std::int64_t max_nodes = 10'000'000) {
        return {max_nodes, Mode::Exhaustive};
    }
    static SearchBudget backtracking(std::int64_t max_nodes = 10'000'000) {
        return {max_nodes, Mode::Backtracking};
    }
};

// Record of a closed search space: no label assignment yields pairwise
// distinct vertex weights. assignments_examined counts leaves of the pruned
// search tree (complete assignments plus pruned branches); exhaustive is
// true only when the whole tree was closed.
struct NonAntimagicCertificate {
    std::string graph_fingerprint; // canonical "n;m;u-v,u-v,..." edge list
    std::int64_t assignments_examined = 0;
    bool exhaustive = false;
};

struct SearchReport {
    std::int64_t nodes_expanded = 0;
    std::int64_t assignments_examined = 0;
    bool budget_exhausted = false;
};

struct SearchResult {
    enum class Kind { Antimagic, NotAntimagic, Unknown };

    Kind kind;
    std::optional<EdgeLabeling> witness;            // Antimagic
    std::optional<NonAntimagicCertificate> certificate; // NotAntimagic
    SearchReport report;
};

std::string graph_fingerprint(const Graph& g);

// Backtracking assignment search. Edges are picked fail-first (the
// unassigned edge whose endpoints have the fewest unlabeled incident
// edges, ties to the lowest id), labels tried ascending; prunes on any
// collision between two finalized vertex weights. NotAntimagic only when
// the tree was fully closed; Unknown when max_nodes was hit first.
// Exhaustive mode rejects |E| > 12.
SearchResult find_antimagic(const Graph& g, const SearchBudget& b);

struct CrossValidationReport {
    ProductParams params;
    // Verdicts as reported by the dispatcher and by the direct search.
    SearchResult::Kind construct_kind = SearchResult::Kind::Unknown;
    SearchResult::Kind search_kind = SearchResult::Kind::Unknown;
    bool agree = false;
};

// Runs the constructive dispatcher and the direct search on the same
// graph; disagreement throws (it indicates a construction bug or an
// unsound prune).
CrossValidationReport cross_validate(const ProductParams& p, const SearchBudget& b);

} // namespace antimagic

#endif
