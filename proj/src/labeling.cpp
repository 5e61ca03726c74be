#include "antimagic/labeling.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace antimagic {

std::vector<std::int64_t> WeightMap::sorted() const {
    std::vector<std::int64_t> out = weights;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void require_domain(const Graph& g, const EdgeLabeling& l) {
    if (l.size() == g.edge_count()) return;
    std::string msg = "labeling domain mismatch:";
    if (l.size() < g.edge_count()) {
        msg += " missing edge ids " + std::to_string(l.size()) + ".." +
               std::to_string(g.edge_count() - 1);
    } else {
        msg += " extra edge ids " + std::to_string(g.edge_count()) + ".." +
               std::to_string(l.size() - 1);
    }
    throw std::invalid_argument(msg);
}

std::string bijection_defect(const Graph& g, const EdgeLabeling& l) {
    const int e = g.edge_count();
    std::vector<int> count(static_cast<size_t>(e) + 1, 0);
    for (int id = 0; id < e; ++id) {
        std::int64_t lab = l.label(id);
        if (lab < 1 || lab > e)
            return "label " + std::to_string(lab) + " on edge " +
                   std::to_string(id) + " outside 1.." + std::to_string(e);
        ++count[static_cast<size_t>(lab)];
    }
    for (std::int64_t lab = 1; lab <= e; ++lab)
        if (count[static_cast<size_t>(lab)] > 1)
            return "label " + std::to_string(lab) + " used " +
                   std::to_string(count[static_cast<size_t>(lab)]) + " times";
    return {};
}

} // namespace

bool check_bijection(const Graph& g, const EdgeLabeling& l) {
    require_domain(g, l);
    return bijection_defect(g, l).empty();
}

WeightMap vertex_weights(const Graph& g, const EdgeLabeling& l) {
    require_domain(g, l);
    WeightMap wm;
    wm.weights.assign(static_cast<size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        wm.weights[static_cast<size_t>(e.u)] += l.label(e.id);
        wm.weights[static_cast<size_t>(e.v)] += l.label(e.id);
    }
    return wm;
}

AntimagicVerdict is_antimagic_labeling(const Graph& g, const EdgeLabeling& l) {
    require_domain(g, l);
    AntimagicVerdict verdict;
    verdict.weights = vertex_weights(g, l);

    std::string defect = bijection_defect(g, l);
    if (!defect.empty()) {
        verdict.pass = false;
        verdict.bijection_defect = std::move(defect);
        return verdict;
    }

    // Lexicographically least colliding pair: the two smallest ids of the
    // weight class whose smallest id is least among all collided classes.
    std::map<std::int64_t, std::pair<int, int>> classes; // weight -> two least ids
    std::optional<std::pair<int, int>> best;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto [it, inserted] =
            classes.try_emplace(verdict.weights.weight(v), v, -1);
        if (!inserted && it->second.second < 0) {
            it->second.second = v;
            if (!best || it->second < *best) best = it->second;
        }
    }
    if (best) {
        verdict.pass = false;
        verdict.collision = best;
        return verdict;
    }
    verdict.pass = true;
    return verdict;
}

} // namespace antimagic
