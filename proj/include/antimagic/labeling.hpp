// Edge labelings, vertex weights, and the antimagicness verifier.

#ifndef ANTIMAGIC_LABELING_HPP
#define ANTIMAGIC_LABELING_HPP

#include "antimagic/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace antimagic {

// Total mapping edge-id -> positive label, indexed by edge id. A labeling
// is valid when the labels form a bijection onto {1..|E|}; callers may
// hold invalid candidates (weights are still computable).
struct EdgeLabeling {
    std::vector<std::int64_t> labels;

    std::int64_t label(int edge_id) const {
        return labels[static_cast<size_t>(edge_id)];
    }
    int size() const { return static_cast<int>(labels.size()); }

    friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;
};

struct WeightMap {
    std::vector<std::int64_t> weights;

    std::int64_t weight(int vertex_id) const {
        return weights[static_cast<size_t>(vertex_id)];
    }
    std::vector<std::int64_t> sorted() const;

    friend bool operator==(const WeightMap&, const WeightMap&) = default;
};

// True iff the label multiset is exactly {1..|E|}. Throws when the labeling
// domain does not match the graph's edge set, naming missing/extra ids.
bool check_bijection(const Graph& g, const EdgeLabeling& l);

// Sum of incident labels per vertex; isolated vertices weigh 0.
WeightMap vertex_weights(const Graph& g, const EdgeLabeling& l);

struct AntimagicVerdict {
    bool pass = false;
    // When the bijection fails, a description of the defect; otherwise empty.
    std::string bijection_defect;
    // Lexicographically least pair of vertices sharing a weight, when the
    // failure is a weight collision.
    std::optional<std::pair<int, int>> collision;
    WeightMap weights;
};

// Pass iff check_bijection holds and all vertex weights are pairwise
// distinct. Fail reports the bijection defect or the first collision.
AntimagicVerdict is_antimagic_labeling(const Graph& g, const EdgeLabeling& l);

} // namespace antimagic

#endif
